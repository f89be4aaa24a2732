"""Exact quasimodular forms on SL(2, Z) and their Rankin-Cohen brackets.

Everything is computed over :class:`fractions.Fraction` in the polynomial
ring Q[E2, E4, E6]; q-expansions serve as an independent oracle.
"""

from fractions import Fraction

from .ring import DELTA, E2, E4, E6, GradedPoly, QuasiForm
from .brackets import BracketParams, bracket, rc_coeffs

__all__ = [
    "Fraction",
    "GradedPoly",
    "QuasiForm",
    "E2",
    "E4",
    "E6",
    "DELTA",
    "BracketParams",
    "bracket",
    "rc_coeffs",
]

__version__ = "0.1.0"
