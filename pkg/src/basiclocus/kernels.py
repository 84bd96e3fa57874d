"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``BASICLOCUS_PURE=1`` to force the pure-Python path.
"""

import os

if os.environ.get("BASICLOCUS_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "python"

matmul = _impl.matmul
matvec = _impl.matvec
affine_mul = _impl.affine_mul
im_length = _impl.im_length
is_left_descent = _impl.is_left_descent
is_right_descent = _impl.is_right_descent
first_left_descent = _impl.first_left_descent
left_descents = _impl.left_descents
right_descents = _impl.right_descents

__all__ = [
    "BACKEND", "matmul", "matvec", "affine_mul", "im_length",
    "is_left_descent", "is_right_descent", "first_left_descent",
    "left_descents", "right_descents",
]
