import random

import pytest

from basiclocus import _kernels_py, kernels
from basiclocus.affweyl import from_word
from basiclocus.rootdata import get_root_datum

try:
    from basiclocus import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
@pytest.mark.parametrize("fam,rank", [("A", 3), ("B", 4), ("C", 3), ("D", 5), ("E", 6), ("F", 4), ("G", 2)])
def test_backends_agree(fam, rank):
    dt = get_root_datum(fam, rank)
    rng = random.Random(11)
    d = dt.dim
    elems = [from_word(dt, [rng.randrange(rank + 1) for _ in range(rng.randrange(20))]) for _ in range(80)]
    for a, b in zip(elems, elems[1:]):
        assert _kernels_py.affine_mul(d, a.lam, a.mat, b.lam, b.mat) == _kernels_c.affine_mul(d, a.lam, a.mat, b.lam, b.mat)
        assert _kernels_py.matmul(d, a.mat, b.mat) == _kernels_c.matmul(d, a.mat, b.mat)
        assert _kernels_py.matvec(d, a.mat, b.lam) == _kernels_c.matvec(d, a.mat, b.lam)
        assert (_kernels_py.im_length(d, a.lam, a.mat, dt.pos_fns, dt.rho_check)
                == _kernels_c.im_length(d, a.lam, a.mat, dt.pos_fns, dt.rho_check))
        args = (dt.affine_fns, dt.affine_ks, dt.rho_check)
        assert _kernels_py.left_descents(d, a.lam, a.mat, *args) == _kernels_c.left_descents(d, a.lam, a.mat, *args)
        assert _kernels_py.right_descents(d, a.lam, a.minv, *args) == _kernels_c.right_descents(d, a.lam, a.minv, *args)
        assert (_kernels_py.first_left_descent(d, a.lam, a.mat, *args)
                == _kernels_c.first_left_descent(d, a.lam, a.mat, *args))


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys
    code = ("from basiclocus import BACKEND; from basiclocus.eo import Quadruple, eo_set; "
            "q = Quadruple.build('C', 2, 'omega:2', 0); print(BACKEND, len(eo_set(q).records))")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True,
                         env={**os.environ, "BASICLOCUS_PURE": "1"})
    assert out.stdout.split() == ["python", "4"]
