"""Exact polynomial arithmetic over the rationals.

Two layers are used throughout the package:

  XPoly  dense univariate polynomial in the indeterminate x, Fraction coefficients
  ZPoly  dense polynomial in the series variable z whose coefficients are XPoly

Both are immutable and normalized at construction (no zero trailing
coefficients; the zero polynomial stores an empty tuple), so equality is
structural.  Rationals are ``fractions.Fraction``, which already keeps
numerator/denominator reduced with a positive denominator.

Canonical text (used by golden tests, reports and the CLI) lists terms in
increasing power, e.g. ``1 + (1/3 - 1/3*x)*z - 1/6*x*z^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class XPoly:
    """Polynomial in x over Q; ``coeffs[k]`` is the coefficient of x**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "XPoly":
        return cls((c,))

    @classmethod
    def linear(cls, a: Scalar, b: Scalar = 1) -> "XPoly":
        """The polynomial ``b*x + a``."""
        return cls((a, b))

    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x0: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def eval(self, x0: Scalar) -> Fraction:
        return self(x0)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == XPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, Fraction)):
            return XPoly(c * other for c in self.coeffs)
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "XPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"XPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return render_xpoly(self)


def _as_xpoly(v) -> XPoly | None:
    if isinstance(v, XPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return XPoly.const(v)
    return None


ZERO = XPoly()
ONE = XPoly.const(1)
X = XPoly((0, 1))


def divide_exact(a: XPoly, b: XPoly) -> XPoly:
    """Return ``a / b``, raising ``ValueError`` unless the remainder is zero."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree()
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        if rem:
            raise ValueError(f"{a} is not divisible by {b}")
        return XPoly()
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        t = rem[k + db] / lead
        quot[k] = t
        if t:
            for j, bc in enumerate(b.coeffs):
                rem[k + j] -= t * bc
    if any(rem[:db]):
        raise ValueError(f"{a} is not divisible by {b}")
    return XPoly(quot)


def falling(a: int, n: int) -> XPoly:
    """(x+a)(x+a-1)...(x+a-n+1) as an XPoly; 1 when n == 0."""
    out = ONE
    for j in range(n):
        out = out * XPoly.linear(a - j)
    return out


def binom_x(a: int, n: int) -> XPoly:
    """Symbolic binomial binom(x+a, n), expanded as a degree-n polynomial.

    Zero for n < 0 (the empty binomial).
    """
    if n < 0:
        return XPoly()
    return falling(a, n) * Fraction(1, factorial(n))


class ZPoly:
    """Polynomial in z whose coefficients are XPoly; ``coeffs[n]`` is [z^n]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[XPoly, Scalar]] = ()):
        cs = []
        for c in coeffs:
            cx = _as_xpoly(c)
            if cx is None:
                raise TypeError(f"cannot use {c!r} as a z-coefficient")
            cs.append(cx)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[XPoly, ...] = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> XPoly:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return ZERO

    def negate_z(self) -> "ZPoly":
        """Substitute z -> -z."""
        return ZPoly(c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs))

    def shift(self, k: int) -> "ZPoly":
        """Multiply by z**k."""
        if not self.coeffs:
            return self
        return ZPoly([ZERO] * k + list(self.coeffs))

    def eval_x(self, x0: Scalar) -> list[Fraction]:
        """Coefficient list in z after specializing x = x0."""
        return [c(x0) for c in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "ZPoly":
        return ZPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "ZPoly":
        other = _as_zpoly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "ZPoly":
        other = _as_zpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ZPoly":
        other = _as_zpoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ZPoly":
        if isinstance(other, (int, Fraction, XPoly)):
            return ZPoly(c * other for c in self.coeffs)
        if not isinstance(other, ZPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ZPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"ZPoly({render_zpoly(self)!r})"

    def __str__(self):
        return render_zpoly(self)


def _as_zpoly(v) -> ZPoly | None:
    if isinstance(v, ZPoly):
        return v
    if isinstance(v, (int, Fraction, XPoly)):
        return ZPoly((v,))
    return None


Z = ZPoly((0, 1))


@dataclass(frozen=True)
class TruncatedSeries:
    """First ``order + 1`` coefficients of a power series in z."""

    coeffs: tuple[XPoly, ...]
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("a series of order N carries N+1 coefficients")

    def __getitem__(self, n: int) -> XPoly:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


def series_inverse(q: ZPoly, n_terms: int) -> TruncatedSeries:
    """Coefficients s_0..s_N of 1/q, i.e. q*s == 1 (mod z^(N+1)).

    Only denominators normalized to q(x, 0) == 1 are accepted; every
    convergent denominator produced by this package has that form.
    """
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    if q.coeff(0) != ONE:
        raise ValueError(f"series_inverse needs constant term 1, got {q.coeff(0)}")
    s = [ONE]
    for n in range(1, n_terms + 1):
        acc = ZERO
        for i in range(1, min(n, q.degree()) + 1):
            qi = q.coeffs[i]
            if not qi.is_zero():
                acc = acc + qi * s[n - i]
        s.append(-acc)
    return TruncatedSeries(tuple(s), n_terms)


def series_mul(a: Sequence[XPoly], b: Sequence[XPoly], n_terms: int) -> list[XPoly]:
    """Truncated Cauchy product, coefficients 0..n_terms."""
    out = []
    for n in range(n_terms + 1):
        acc = ZERO
        for i in range(n + 1):
            if i < len(a) and n - i < len(b):
                acc = acc + a[i] * b[n - i]
        out.append(acc)
    return out


# -- canonical rendering ---------------------------------------------------

def format_rational(r: Scalar) -> str:
    """Always ``num/den`` (JSON fields use this form)."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def _monomial(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _term(c: Fraction, mono: str) -> str:
    """Body of a term with a nonnegative coefficient c."""
    if not mono:
        return str(c)
    if c == 1:
        return mono
    return f"{c}*{mono}"


def _join(signed_bodies: list[tuple[bool, str]]) -> str:
    parts = []
    for idx, (neg, body) in enumerate(signed_bodies):
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def render_xpoly(p: XPoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = [(c < 0, _term(abs(c), _monomial(var, k)))
             for k, c in enumerate(p.coeffs) if c != 0]
    return _join(terms)


def render_zpoly(p: ZPoly) -> str:
    if p.is_zero():
        return "0"
    nonzero = [(n, c) for n, c in enumerate(p.coeffs) if not c.is_zero()]
    terms = []
    for n, c in nonzero:
        zmono = _monomial("z", n)
        support = [(k, a) for k, a in enumerate(c.coeffs) if a != 0]
        if len(support) == 1:
            k, a = support[0]
            xmono = _monomial("x", k)
            mono = "*".join(m for m in (xmono, zmono) if m)
            terms.append((a < 0, _term(abs(a), mono)))
        else:
            inner = render_xpoly(c)
            if n == 0 and len(nonzero) == 1:
                terms.append((False, inner))
            else:
                terms.append((False, f"({inner})*{zmono}" if zmono else f"({inner})"))
    return _join(terms)
