"""Exact J-fraction convergents generating binom(x+n, n) and binom(x, n)."""

from .algebra import TruncatedSeries, XPoly, ZPoly, series_inverse
from .engine import (ComponentSequence, ConvergentPair, convergent, expand,
                     modulus_product, telescope_check)
from .variants import SEQ_V1, SEQ_V2, VariantId, sequence

__version__ = "0.1.0"

__all__ = [
    "ComponentSequence", "ConvergentPair", "SEQ_V1", "SEQ_V2", "TruncatedSeries",
    "VariantId", "XPoly", "ZPoly", "convergent", "expand", "modulus_product",
    "sequence", "series_inverse", "telescope_check",
]
