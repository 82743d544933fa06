"""Verifiers for the exact identities satisfied by the two J-fractions.

Every check is a structural equality of canonical polynomials; nothing is
sampled at random points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .algebra import ONE, XPoly, ZERO, binom_x, divide_exact, render_xpoly
from .engine import convergent, expand
from .variants import (VariantId, component_ab, component_c, denominator_closed,
                       k_coeff, lam, numerator_closed, sequence)


@dataclass
class IdentityReport:
    identity_id: str
    params: list[tuple[str, int]]
    holds: bool
    lhs: str
    rhs: str
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.notes:
            d["notes"] = self.notes
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _report(identity_id, params, lhs: XPoly, rhs: XPoly, **notes) -> IdentityReport:
    ls, rs = render_xpoly(lhs), render_xpoly(rhs)
    return IdentityReport(identity_id, list(params), ls == rs, ls, rs, dict(notes))


def binom_poly(v, n: int) -> XPoly:
    """binom(x+n, n) for V1, binom(x, n) for V2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if VariantId.parse(v) is VariantId.V1:
        return binom_x(n, n)
    return binom_x(0, n)


def _render_list(ps) -> str:
    return "[" + ", ".join(render_xpoly(p) for p in ps) + "]"


def verify_enumeration(v, h: int, n_max: int) -> IdentityReport:
    """Series coefficients of the h-th convergent against binom_poly.

    ``holds`` covers the proven range n <= h; the range h < n < 2h is
    reported under ``notes`` and never affects ``holds``.
    """
    v = VariantId.parse(v)
    if h < 2:
        raise ValueError("enumeration is stated for h >= 2")
    if not 0 <= n_max <= 2 * h - 1:
        raise ValueError(f"n_max must lie in [0, {2 * h - 1}]")
    series = expand(convergent(sequence(v), h), n_max, negate_z=v is VariantId.V1)
    expected = [binom_poly(v, n) for n in range(n_max + 1)]
    mismatches = [n for n in range(n_max + 1) if series[n] != expected[n]]
    proven = [n for n in mismatches if n <= h]
    notes = {"proven_range": [0, min(h, n_max)]}
    if n_max > h:
        notes["remark_range"] = [h + 1, n_max]
        notes["remark_holds"] = not [n for n in mismatches if n > h]
    if mismatches:
        notes["mismatches"] = mismatches
    return IdentityReport(f"enumeration_v{int(v)}", [("h", h), ("n_max", n_max)],
                          not proven, _render_list(series), _render_list(expected), notes)


def exact_sum(v, n: int) -> XPoly:
    """Right-hand side of the finite-sum formula for binom_poly(v, n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = VariantId.parse(v)
    out = ONE if n == 0 else ZERO
    for i in range(1, n + 1):
        scale = Fraction(comb(n, i), comb(2 * n - 1, i)) * (-1) ** (i + 1)
        if v is VariantId.V1:
            term = binom_x(n, i) * binom_x(n - i, n - i)
        else:
            term = binom_x(i - n, i) * binom_x(0, n - i)
        out = out + term * scale
    return out


def alt_coefficient_identity(n: int, h: int) -> IdentityReport:
    """Numerator coefficient of P_{1,h}(x,-z) as a convolution with Q_{1,h}."""
    if h < 1 or not 0 <= n <= h - 1:
        raise ValueError("need h >= 1 and 0 <= n <= h-1")
    lhs = binom_x(n - h, n) * (Fraction(comb(h - 1, n), comb(2 * h - 1, n)) * (-1) ** n)
    rhs = ZERO
    for i in range(n + 1):
        scale = Fraction(comb(h, i), comb(2 * h - 1, i)) * (-1) ** (n - i)
        rhs = rhs + binom_x(n - i, n - i) * binom_x(h, i) * scale
    return _report("alt_coefficient", [("n", n), ("h", h)], lhs, rhs)


def finite_difference_series(v, h: int, n: int) -> list[XPoly]:
    """Coefficients 0..n from the order-h recurrence of the closed forms.

    Orientation matches the enumeration theorems: z -> -z for V1.
    """
    v = VariantId.parse(v)
    if h < 2 or n < 0:
        raise ValueError("need h >= 2 and n >= 0")
    num, den = numerator_closed(v, h), denominator_closed(v, h)
    if v is VariantId.V1:
        num, den = num.negate_z(), den.negate_z()
    out: list[XPoly] = []
    for k in range(n + 1):
        acc = num.coeff(k) if k < h else ZERO
        for i in range(1, min(k, h) + 1):
            acc = acc - den.coeff(i) * out[k - i]
        out.append(acc)
    return out


def finite_difference_coeff(v, h: int, n: int) -> XPoly:
    return finite_difference_series(v, h, n)[n]


def hypergeometric_zero_sum(n: int) -> Fraction:
    """sum_k binom(n,k)^2 (-1)^k k! (2n-1-k)! / (2n-1)!  (vanishes for n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    top = factorial(2 * n - 1)
    return sum((Fraction(comb(n, k) ** 2 * (-1) ** k * factorial(k) * factorial(2 * n - 1 - k), top)
                for k in range(n + 1)), Fraction(0))


def addition_rhs(v, p: int, q: int) -> XPoly:
    out = k_coeff(v, 0, p) * k_coeff(v, 0, q)
    for i in range(1, min(p, q) + 1):
        # k_{i,p} vanishes once i exceeds p or q
        out = out + lam(i + 1) * k_coeff(v, i, p) * k_coeff(v, i, q)
    return out


def addition_check(v, p: int, q: int) -> IdentityReport:
    if p < 0 or q < 0:
        raise ValueError("p, q must be nonnegative")
    v = VariantId.parse(v)
    if v is VariantId.V1:
        lhs = binom_x(p + q, p + q) * (-1) ** (p + q)
    else:
        lhs = binom_x(0, p + q)
    return _report(f"addition_v{int(v)}", [("p", p), ("q", q)], lhs, addition_rhs(v, p, q))


def _moment(v: VariantId, p: int, unsigned: bool) -> XPoly:
    if v is VariantId.V2:
        return binom_x(0, p)
    return binom_x(p, p) * (1 if unsigned else (-1) ** p)


def ktilde_table(seed, c, ab, r_max: int, p_max: int) -> dict[tuple[int, int], XPoly]:
    """Solve the lower-triangular matrix recurrence for k~_{r,p}, r <= p.

    Column r is filled for p in [r, p_max - r]:
        k~_{0,p}   = seed(p)
        k~_{1,p}   = (k~_{0,p+1} - c(1) k~_{0,p}) / ab(2)
        k~_{r+1,p} = (k~_{r,p+1} - k~_{r-1,p} - c(r+1) k~_{r,p}) / ab(r+2)
    Each division must be exact; a remainder raises ValueError.
    """
    table: dict[tuple[int, int], XPoly] = {}
    for p in range(p_max + 1):
        table[0, p] = seed(p)
    for r in range(r_max):
        for p in range(r + 1, p_max - r):
            acc = table[r, p + 1] - c(r + 1) * table[r, p]
            if r >= 1:
                acc = acc - table[r - 1, p]
            table[r + 1, p] = divide_exact(acc, ab(r + 2))
    return table


def ktilde_via_recurrence(r: int, p: int, variant=VariantId.V1, unsigned: bool = False) -> XPoly:
    """k~_{r,p} from the matrix recurrence seeded by the series moments.

    Default seeds are the coefficients of Conv_v(x, z), which reproduce
    k_coeff exactly.  ``unsigned=True`` (V1 only) seeds binom(x+p, p) and runs
    the recurrence for the z -> -z fraction (c_i -> -c_i); its values are
    (-1)^(p-r) k_coeff(V1, r, p).
    """
    if not 0 <= r <= p:
        raise ValueError(f"need 0 <= r <= p, got r={r}, p={p}")
    v = VariantId.parse(variant)
    if unsigned and v is not VariantId.V1:
        raise ValueError("the unsigned convention applies to V1 only")
    sign = -1 if unsigned else 1

    def c(i):
        return component_c(v, i) * sign

    table = ktilde_table(lambda k: _moment(v, k, unsigned), c, component_ab, r, p + r)
    return table[r, p]
