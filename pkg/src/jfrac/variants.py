"""The two concrete J-fractions generating binomial coefficients.

V1 generates binom(x+n, n) (coefficients of Conv_1(x, -z)), V2 generates
binom(x, n) (coefficients of Conv_2(x, z)).  Both share the ab sequence and
differ only in c.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import ONE, XPoly, ZPoly, binom_x
from .engine import ComponentSequence, modulus_product


class VariantId(enum.IntEnum):
    V1 = 1
    V2 = 2

    @classmethod
    def parse(cls, v) -> "VariantId":
        if isinstance(v, cls):
            return v
        s = str(v).upper().lstrip("V")
        try:
            return cls(int(s))
        except ValueError:
            raise ValueError(f"unknown variant {v!r}; expected 1 or 2") from None


@lru_cache(maxsize=None)
def component_c(v: VariantId, i: int) -> XPoly:
    if i < 1:
        raise ValueError("component index starts at 1")
    scale = Fraction(-1, (2 * i - 1) * (2 * i - 3))
    if VariantId(v) is VariantId.V1:
        return XPoly.linear(1 + 2 * (i - 2) * i, -1) * scale
    return XPoly.linear(2 * (i - 1) ** 2, 1) * scale


@lru_cache(maxsize=None)
def component_ab(i: int) -> XPoly:
    if i < 1:
        raise ValueError("component index starts at 1")
    if i == 1:
        return XPoly()
    if i == 2:
        return XPoly((0, 1)) * XPoly.linear(1) * Fraction(-1, 2)
    return (XPoly.linear(2 - i) * XPoly.linear(i - 1)
            * Fraction(-1, 4 * (2 * i - 3) ** 2))


SEQ_V1 = ComponentSequence("V1", lambda i: component_c(VariantId.V1, i), component_ab)
SEQ_V2 = ComponentSequence("V2", lambda i: component_c(VariantId.V2, i), component_ab)


def sequence(v) -> ComponentSequence:
    return SEQ_V1 if VariantId.parse(v) is VariantId.V1 else SEQ_V2


def _ratio(h: int, i: int) -> Fraction:
    # h!/(h-i)! * (2h-1-i)!/(2h-1)!  ==  binom(h, i) / binom(2h-1, i)
    return Fraction(comb(h, i), comb(2 * h - 1, i))


def numerator_closed(v, h: int) -> ZPoly:
    """Closed form of P_{v,h}; h = 0 gives the empty sum."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    v = VariantId.parse(v)
    coeffs = []
    for n in range(h):
        scale = Fraction(comb(h - 1, n), comb(2 * h - 1, n))
        if v is VariantId.V1:
            coeffs.append(binom_x(n - h, n) * (scale * (-1) ** n))
        else:
            coeffs.append(binom_x(h, n) * scale)
    return ZPoly(coeffs)


def denominator_closed(v, h: int) -> ZPoly:
    """Closed form of Q_{v,h}, h >= 0."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h == 0:
        return ZPoly((ONE,))
    v = VariantId.parse(v)
    if v is VariantId.V1:
        return ZPoly(binom_x(h, i) * _ratio(h, i) for i in range(h + 1))
    return ZPoly(binom_x(i - h, i) * (_ratio(h, i) * (-1) ** i) for i in range(h + 1))


@lru_cache(maxsize=None)
def lam(h: int) -> XPoly:
    """lambda_h(x) = ab_2 * ... * ab_h (identical for both variants)."""
    if h < 2:
        raise ValueError("lambda_h is defined for h >= 2")
    return modulus_product(SEQ_V1, 2, h)


def lam_closed(h: int) -> XPoly:
    """(-1)^(h-1)/2 * binom(x+h-1, h-1) binom(x, h-1) / binom(2h-3, h-2)^2."""
    if h < 2:
        raise ValueError("lambda_h is defined for h >= 2")
    scale = Fraction((-1) ** (h - 1), 2 * comb(2 * h - 3, h - 2) ** 2)
    return binom_x(h - 1, h - 1) * binom_x(0, h - 1) * scale


def k_coeff(v, r: int, p: int) -> XPoly:
    """Coefficients of the addition formulas.

    V1: (-1)^(p-r) binom(x+p, p-r) binom(2r, r) / binom(p+r, r)
    V2: binom(x-r, p-r) binom(2r, r) / binom(p+r, r)
    """
    if not 0 <= r <= p:
        raise ValueError(f"need 0 <= r <= p, got r={r}, p={p}")
    scale = Fraction(comb(2 * r, r), comb(p + r, r))
    if VariantId.parse(v) is VariantId.V1:
        return binom_x(p, p - r) * (scale * (-1) ** (p - r))
    return binom_x(-r, p - r) * scale
