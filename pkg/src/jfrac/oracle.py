"""Independent ground truth on plain integers.

Nothing here touches the polynomial classes or the J-fraction engine.
"""

from __future__ import annotations

from math import comb, factorial

from .variants import VariantId


def binom_int(a: int, b: int) -> int:
    """binom(a, b) for any integer a, via a(a-1)...(a-b+1)/b!; 0 when b < 0."""
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    num = 1
    for j in range(b):
        num *= a - j
    return num // factorial(b)


def _truncated_mul(a: list[int], b: list[int], n_terms: int) -> list[int]:
    out = [0] * (n_terms + 1)
    for i, ai in enumerate(a[: n_terms + 1]):
        if ai:
            for j, bj in enumerate(b[: n_terms + 1 - i]):
                out[i + j] += ai * bj
    return out


def ogf_series(v, x0: int, n_terms: int) -> list[int]:
    """Coefficients of (1-z)^-(x0+1) (V1) or (1+z)^x0 (V2) by repeated products."""
    if x0 < 0:
        raise ValueError("x0 must be a nonnegative integer")
    if VariantId.parse(v) is VariantId.V1:
        factor, power = [1] * (n_terms + 1), x0 + 1
    else:
        factor, power = [1, 1], x0
    series = [1] + [0] * n_terms
    for _ in range(power):
        series = _truncated_mul(series, factor, n_terms)
    return series


def ogf_cross_check(v, x0: int, n_terms: int) -> bool:
    series = ogf_series(v, x0, n_terms)
    if VariantId.parse(v) is VariantId.V1:
        expected = [binom_int(x0 + n, n) for n in range(n_terms + 1)]
    else:
        expected = [binom_int(x0, n) for n in range(n_terms + 1)]
    return series == expected


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def lucas_residue(n: int, m: int, p: int) -> int:
    """binom(n, m) mod p as the product of base-p digit binomials."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0 or m < 0:
        raise ValueError("Lucas' theorem needs nonnegative n, m")
    out = 1
    while n or m:
        out = out * comb(n % p, m % p) % p
        if out == 0:
            return 0
        n //= p
        m //= p
    return out
