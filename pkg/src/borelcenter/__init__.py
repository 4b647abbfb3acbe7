"""Exact verification toolkit for Borel subalgebra centers and semi-centers."""

from .exactalg import Poly, Scalar
from .liealg import LieElem, Weight, adjoint_apply, bracket, poisson, weight_of

__all__ = [
    "Poly",
    "Scalar",
    "LieElem",
    "Weight",
    "adjoint_apply",
    "bracket",
    "poisson",
    "weight_of",
]

__version__ = "0.1.0"
