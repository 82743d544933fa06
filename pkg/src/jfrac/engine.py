"""Generic Jacobi-type continued fraction (J-fraction) convergents.

A J-fraction

    1 / (1 - c_1 z - ab_2 z^2 / (1 - c_2 z - ab_3 z^2 / (1 - c_3 z - ...)))

is described by two component sequences i -> c_i, i -> ab_i of XPoly values.
Its h-th convergent P_h/Q_h satisfies the three-term recurrence

    P_h = (1 - c_h z) P_{h-1} - ab_h z^2 P_{h-2}      (same for Q)

with P_0 = 0, P_1 = 1, Q_0 = 1, Q_1 = 1 - c_1 z.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (ONE, ZERO, TruncatedSeries, XPoly, ZPoly, series_inverse,
                      series_mul)


@dataclass(frozen=True, eq=False)
class ComponentSequence:
    """The sequences {c_i} and {ab_i}, i >= 1, of a J-fraction."""

    name: str
    c: Callable[[int], XPoly]
    ab: Callable[[int], XPoly]
    _cache: list = field(default_factory=list, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False,
                                  compare=False)


@dataclass(frozen=True)
class ConvergentPair:
    h: int
    p: ZPoly
    q: ZPoly

    def degrees_ok(self) -> bool:
        """deg_z P_h = h-1 and deg_z Q_h = h (vacuous for h = 0)."""
        if self.h == 0:
            return self.p.is_zero() and self.q == ZPoly((ONE,))
        return self.p.degree() == self.h - 1 and self.q.degree() == self.h


def _step(seq: ComponentSequence, h: int, prev: ConvergentPair,
          prev2: ConvergentPair) -> ConvergentPair:
    lin = ZPoly((ONE, -seq.c(h)))
    quad = ZPoly((ZERO, ZERO, seq.ab(h)))
    return ConvergentPair(h, lin * prev.p - quad * prev2.p,
                          lin * prev.q - quad * prev2.q)


def convergent(seq: ComponentSequence, h: int) -> ConvergentPair:
    """The h-th convergent (P_h, Q_h); results are cached per sequence."""
    if h < 0:
        raise ValueError(f"convergent level must be >= 0, got {h}")
    cache = seq._cache
    if h < len(cache):
        return cache[h]
    with seq._lock:
        if not cache:
            cache.append(ConvergentPair(0, ZPoly(), ZPoly((ONE,))))
            cache.append(ConvergentPair(1, ZPoly((ONE,)), ZPoly((ONE, -seq.c(1)))))
        while len(cache) <= h:
            k = len(cache)
            cache.append(_step(seq, k, cache[k - 1], cache[k - 2]))
    return cache[h]


def expand(conv: ConvergentPair, n_terms: int, negate_z: bool = False) -> TruncatedSeries:
    """Coefficients [z^0..z^n_terms] of P/Q, or of P(-z)/Q(-z) when negate_z."""
    inv = series_inverse(conv.q, n_terms)
    coeffs = series_mul(conv.p.coeffs, inv.coeffs, n_terms)
    if negate_z:
        coeffs = [c if n % 2 == 0 else -c for n, c in enumerate(coeffs)]
    return TruncatedSeries(tuple(coeffs), n_terms)


def modulus_product(seq: ComponentSequence, lo: int, hi: int) -> XPoly:
    """ab_lo * ab_{lo+1} * ... * ab_hi."""
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= from <= to, got from={lo}, to={hi}")
    out = ONE
    for i in range(lo, hi + 1):
        out = out * seq.ab(i)
    return out


def determinant(seq: ComponentSequence, h: int) -> ZPoly:
    """P_h Q_{h-1} - P_{h-1} Q_h."""
    if h < 1:
        raise ValueError("determinant needs h >= 1")
    a, b = convergent(seq, h), convergent(seq, h - 1)
    return a.p * b.q - b.p * a.q


def telescope_check(seq: ComponentSequence, h: int, alternating: bool = False) -> bool:
    """Check P_h Q_{h-1} - P_{h-1} Q_h == ab_2 ... ab_h z^(2h-2) exactly.

    With ``alternating=True`` the right side carries an extra (-1)^(h-1);
    that form only agrees for odd h and is kept for comparison.
    """
    if h < 2:
        raise ValueError("telescope_check needs h >= 2")
    rhs = modulus_product(seq, 2, h)
    if alternating and (h - 1) % 2:
        rhs = -rhs
    return determinant(seq, h) == ZPoly((rhs,)).shift(2 * h - 2)
