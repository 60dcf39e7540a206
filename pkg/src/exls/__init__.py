"""Exact computations with the exceptional Lie superalgebras E(5,10), E(4,4), E(1,6)
and K(1,6), and checks of the embeddings E(1,6) -> K(1,6) and E(1,6) -> E(5,10)."""

from .scalars import Scalar
from .series import PolySeries
from .grassmann import GrassElt
from .formcalc import DiffForm, VectorField
from .vfalgebras import E44Elt, E510Elt, bracket_e44, bracket_e510
from .e16k16 import E16Elt, K16Elt, bracket_e16, bracket_k16, op_A, op_iota
from .embeddings import Psi, psi
from .report import VerifyReport

__version__ = "0.1.0"

__all__ = [
    "Scalar", "PolySeries", "GrassElt", "DiffForm", "VectorField", "E44Elt", "E510Elt", "E16Elt",
    "K16Elt", "bracket_e44", "bracket_e510", "bracket_e16", "bracket_k16", "op_A", "op_iota", "psi",
    "Psi", "VerifyReport",
]
