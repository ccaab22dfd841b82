"""Exact DDT / LAT / autocorrelation (DLCT) tables of vectorial Boolean functions."""

from .gf2n import FieldSpec, default_modulus
from .tables import IndicatorReport, Spectrum, indicators
from .transforms import SignedTable
from .vbf import VBF, BooleanFunction

__all__ = [
    "BooleanFunction",
    "FieldSpec",
    "IndicatorReport",
    "SignedTable",
    "Spectrum",
    "VBF",
    "default_modulus",
    "indicators",
]
