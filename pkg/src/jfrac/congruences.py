"""Integer congruences derived from the convergents, evaluated at integer x.

Both sides of every congruence are computed as exact rationals.  A residue
is only formed when the value is an integer; non-integral sides make a case
inapplicable instead of being rounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from ._parallel import pmap
from .algebra import format_rational
from .oracle import binom_int
from .variants import VariantId, lam


class NonIntegralError(ArithmeticError):
    """A congruence side evaluated to a non-integer rational."""


def lambda_at(h: int, x0: int) -> Fraction:
    if h < 2:
        raise ValueError("lambda_h is defined for h >= 2")
    return lam(h)(x0)


def is_admissible(h: int, m: int, x0: int) -> bool:
    value = lambda_at(m, x0)
    return value.denominator == 1 and value.numerator % h == 0


def find_admissible(h: int, x0: int, m_max: int) -> list[int]:
    """All m in [h, m_max] with lambda_m(x0) an integer divisible by h.

    m with lambda_m(x0) == 0 are included; callers flag them as degenerate.
    """
    if h < 2:
        raise ValueError("modulus h must be >= 2")
    if m_max < h:
        raise ValueError(f"m_max={m_max} is below h={h}")
    return [m for m in range(h, m_max + 1) if is_admissible(h, m, x0)]


def _ratio(m: int, i: int) -> Fraction:
    # m!/(m-i)! * (2m-1-i)!/(2m-1)!
    if i > m:
        return Fraction(0)
    return Fraction(comb(m, i), comb(2 * m - 1, i))


def corollary_rhs(v, m: int, x0: int, n: int) -> Fraction:
    """Right side of the mod-h congruence built from the m-th convergent."""
    v = VariantId.parse(v)
    total = Fraction(0)
    for i in range(1, min(n, m) + 1):
        if v is VariantId.V1:
            term = binom_int(x0 + m, i) * binom_int(x0 + n - i, n - i)
        else:
            term = binom_int(x0 - m + i, i) * binom_int(x0, n - i)
        total += term * _ratio(m, i) * (-1) ** (i + 1)
    if n < m:
        top = binom_int(x0 + n - m, n) if v is VariantId.V1 else binom_int(x0 + m, n)
        total += top * Fraction(comb(m - 1, n), comb(2 * m - 1, n))
    return total


def binom_value(v, x0: int, n: int) -> int:
    if VariantId.parse(v) is VariantId.V1:
        return binom_int(x0 + n, n)
    return binom_int(x0, n)


def _residue(value: Fraction, h: int) -> int | None:
    if value.denominator != 1:
        return None
    return value.numerator % h


@dataclass
class CongruenceCase:
    variant: VariantId
    h: int
    m: int
    x: int
    n: int
    lhs: Fraction
    rhs: Fraction
    lam: Fraction
    lhs_mod: int | None
    rhs_mod: int | None
    admissible: bool
    degenerate: bool
    applicable: bool
    in_hypothesis: bool
    holds: bool

    def to_dict(self) -> dict:
        return {
            "variant": int(self.variant),
            "h": self.h,
            "m": self.m,
            "x": self.x,
            "n": self.n,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "lambda": format_rational(self.lam),
            "lhs_mod": self.lhs_mod,
            "rhs_mod": self.rhs_mod,
            "admissible": self.admissible,
            "degenerate": self.degenerate,
            "applicable": self.applicable,
            "in_hypothesis": self.in_hypothesis,
            "holds": self.holds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def congruence_check(v, h: int, m: int, x0: int, n: int, strict: bool = False) -> CongruenceCase:
    """Evaluate the congruence with modulus h at level m, x = x0.

    Admissibility (lambda_m(x0) integral and divisible by h) is recomputed
    here.  Non-integral sides give ``applicable=False, holds=False``, or raise
    NonIntegralError when ``strict``.
    """
    v = VariantId.parse(v)
    if h < 2:
        raise ValueError("modulus h must be >= 2")
    if m < h:
        raise ValueError(f"level m={m} is below h={h}")
    if x0 < 0 or n < 0:
        raise ValueError("x0 and n must be nonnegative")
    lhs = Fraction(binom_value(v, x0, n))
    rhs = corollary_rhs(v, m, x0, n)
    if strict and rhs.denominator != 1:
        raise NonIntegralError(f"right side {rhs} is not an integer at x={x0}, n={n}, m={m}")
    value = lambda_at(m, x0)
    lm, rm = _residue(lhs, h), _residue(rhs, h)
    applicable = lm is not None and rm is not None
    return CongruenceCase(
        variant=v, h=h, m=m, x=x0, n=n, lhs=lhs, rhs=rhs, lam=value,
        lhs_mod=lm, rhs_mod=rm,
        admissible=value.denominator == 1 and value.numerator % h == 0,
        degenerate=value == 0,
        applicable=applicable,
        in_hypothesis=0 <= x0 <= h,
        holds=applicable and lm == rm,
    )


# -- conjectured exact congruences ------------------------------------------

def _general_rhs(v: VariantId, h: int, x0: int, n: int) -> Fraction:
    total = Fraction(0)
    for i in range(1, h + 1):
        if v is VariantId.V1:
            term = binom_int(x0 + h, i) * binom_int(x0 + n - i, n - i)
        else:
            term = binom_int(x0 - h + i, i) * binom_int(x0, n - i)
        total += term * _ratio(h, i) * (-1) ** (i + 1)
    if v is VariantId.V1:
        total += int(n == 0)
    elif n < h:
        total += binom_int(x0 + h, n) * Fraction(comb(h - 1, n), comb(2 * h - 1, n))
    return total


def _rising(x0: int, lo: int, hi: int) -> int:
    """(x0+lo)(x0+lo+1)...(x0+hi)."""
    out = 1
    for a in range(lo, hi + 1):
        out *= x0 + a
    return out


def _iv(cond: bool) -> int:
    return 1 if cond else 0


# Displayed special cases, coefficients transcribed term by term.
# Each entry maps (x, n) to the right-hand side as an exact rational.
_V1_DISPLAYED: dict[int, Callable[[int, int], Fraction]] = {
    2: lambda x, n: (Fraction(2 * (x + 2), 3) * binom_int(x + n - 1, n - 1)
                     - Fraction(_rising(x, 1, 2), 6) * binom_int(x + n - 2, n - 2)),
    3: lambda x, n: (Fraction(3 * (x + 3), 5) * binom_int(x + n - 1, n - 1)
                     - Fraction(3 * _rising(x, 2, 3), 20) * binom_int(x + n - 2, n - 2)
                     + Fraction(_rising(x, 1, 3), 60) * binom_int(x + n - 3, n - 3)),
    4: lambda x, n: (Fraction(4 * (x + 4), 7) * binom_int(x + n - 1, n - 1)
                     - Fraction(_rising(x, 3, 4), 7) * binom_int(x + n - 2, n - 2)
                     + Fraction(2 * _rising(x, 2, 4), 105) * binom_int(x + n - 3, n - 3)
                     - Fraction(_rising(x, 1, 4), 840) * binom_int(x + n - 4, n - 4)),
    5: lambda x, n: (Fraction(5 * (x + 5), 9) * binom_int(x + n - 1, n - 1)
                     - Fraction(5 * _rising(x, 4, 5), 56) * binom_int(x + n - 2, n - 2)
                     + Fraction(5 * _rising(x, 3, 5), 252) * binom_int(x + n - 3, n - 3)
                     - Fraction(5 * _rising(x, 2, 5), 3024) * binom_int(x + n - 4, n - 4)
                     + Fraction(_rising(x, 1, 5), 15120) * binom_int(x + n - 5, n - 5)),
}

_V2_DISPLAYED: dict[int, Callable[[int, int], Fraction]] = {
    2: lambda x, n: (Fraction(2 * (x - 1), 3) * binom_int(x, n - 1)
                     - Fraction(_rising(x, -1, 0), 6) * binom_int(x, n - 2)
                     + Fraction((n - 2) * (n - 3), 6) * binom_int(x + 2, n) * _iv(n <= 1)),
    3: lambda x, n: (Fraction(3 * (x - 2), 5) * binom_int(x, n - 1)
                     - Fraction(3 * _rising(x, -2, -1), 20) * binom_int(x, n - 2)
                     + Fraction(_rising(x, -2, 0), 60) * binom_int(x, n - 3)
                     - Fraction((n - 3) * (n - 4) * (n - 5), 60) * binom_int(x + 3, n) * _iv(n <= 2)),
    4: lambda x, n: (Fraction(4 * (x - 3), 7) * binom_int(x, n - 1)
                     - Fraction(_rising(x, -3, -2), 7) * binom_int(x, n - 2)
                     + Fraction(2 * _rising(x, -3, -1), 105) * binom_int(x, n - 3)
                     - Fraction(_rising(x, -3, 0), 840) * binom_int(x, n - 4)
                     + Fraction((n - 4) * (n - 5) * (n - 6) * (n - 7), 840)
                     * binom_int(x + 4, n) * _iv(n <= 3)),
    5: lambda x, n: (Fraction(5 * (x - 4), 9) * binom_int(x, n - 1)
                     - Fraction(5 * _rising(x, -4, -3), 36) * binom_int(x, n - 2)
                     + Fraction(5 * _rising(x, -4, -2), 252) * binom_int(x, n - 3)
                     - Fraction(5 * _rising(x, -4, -1), 3024) * binom_int(x, n - 4)
                     - Fraction(_rising(x, -4, 0), 15120) * binom_int(x, n - 5)
                     - Fraction((n - 5) * (n - 6) * (n - 7) * (n - 8) * (n - 9), 15120)
                     * binom_int(x + 5, n) * _iv(n <= 4)),
}


def conjecture_rhs(v, h: int, x0: int, n: int, form: str = "general") -> Fraction:
    v = VariantId.parse(v)
    if form == "general":
        return _general_rhs(v, h, x0, n)
    if form == "displayed":
        table = _V1_DISPLAYED if v is VariantId.V1 else _V2_DISPLAYED
        if h not in table:
            raise ValueError(f"no displayed special case for modulus {h}")
        rhs = table[h](x0, n)
        if v is VariantId.V1:
            rhs += int(n == 0)
        return Fraction(rhs)
    raise ValueError(f"unknown form {form!r}; expected 'general' or 'displayed'")


@dataclass
class ConjectureFailure:
    x: int
    n: int
    kind: str  # "mismatch" or "nonintegral"
    in_hypothesis: bool

    def to_dict(self) -> dict:
        return {"x": self.x, "n": self.n, "kind": self.kind,
                "in_hypothesis": self.in_hypothesis}


@dataclass
class ConjectureReport:
    variant: VariantId
    h: int
    form: str
    grid: tuple[int, int]
    points: int
    failures: list[ConjectureFailure] = field(default_factory=list)

    @property
    def pass_rate(self) -> Fraction:
        if not self.points:
            return Fraction(1)
        return Fraction(self.points - len(self.failures), self.points)

    def to_dict(self) -> dict:
        return {
            "variant": int(self.variant),
            "h": self.h,
            "form": self.form,
            "grid": {"x_max": self.grid[0], "n_max": self.grid[1]},
            "points": self.points,
            "failures": [f.to_dict() for f in self.failures],
            "mismatches": sum(f.kind == "mismatch" for f in self.failures),
            "nonintegral": sum(f.kind == "nonintegral" for f in self.failures),
            "pass_rate": format_rational(self.pass_rate),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _scan_point(args) -> ConjectureFailure | None:
    v, h, form, x0, n = args
    lhs = binom_value(v, x0, n)
    rhs = conjecture_rhs(v, h, x0, n, form)
    in_hyp = n < h if v is VariantId.V1 else True
    if rhs.denominator != 1:
        return ConjectureFailure(x0, n, "nonintegral", in_hyp)
    if (lhs - rhs.numerator) % h:
        return ConjectureFailure(x0, n, "mismatch", in_hyp)
    return None


def conjecture_scan(v, h: int, x_max: int, n_max: int, form: str = "general") -> ConjectureReport:
    """Evaluate a conjectured congruence over an integer grid.

    V1 grids stop at x = h-1 (the conjecture is stated for x < h); points
    with n >= h are scanned but marked outside the stated hypothesis.
    The report is descriptive: failures are data, not errors.
    """
    v = VariantId.parse(v)
    if h < 2:
        raise ValueError("modulus h must be >= 2")
    if x_max < 0 or n_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    xs = range(0, (min(x_max, h - 1) if v is VariantId.V1 else x_max) + 1)
    grid = [(v, h, form, x0, n) for x0 in xs for n in range(n_max + 1)]
    results = pmap(_scan_point, grid)
    failures = sorted((f for f in results if f is not None), key=lambda f: (f.x, f.n))
    return ConjectureReport(v, h, form, (x_max, n_max), len(grid), failures)
