"""Exact computations with basic loci of Coxeter type in extended affine Weyl groups."""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
