from fractions import Fraction

import pytest
import sympy as sp

from jfrac.algebra import XPoly, ZPoly

SX, SZ = sp.symbols("x z")

ACCEPTANCE_LINES: list[str] = []


def zpoly_from_text(text: str) -> ZPoly:
    """Parse a sympy-syntax expression in x, z into a ZPoly."""
    expr = sp.expand(sp.sympify(text, locals={"x": SX, "z": SZ}))
    if expr == 0:
        return ZPoly()
    poly = sp.Poly(expr, SZ, SX)
    dz = poly.degree(SZ)
    grid = [[Fraction(0)] * (poly.degree(SX) + 1) for _ in range(dz + 1)]
    for (i, j), c in poly.terms():
        grid[i][j] = Fraction(int(c.p), int(c.q))
    return ZPoly(XPoly(row) for row in grid)


def xpoly_from_text(text: str) -> XPoly:
    return zpoly_from_text(text).coeff(0)


@pytest.fixture
def zparse():
    return zpoly_from_text


@pytest.fixture
def xparse():
    return xpoly_from_text


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
