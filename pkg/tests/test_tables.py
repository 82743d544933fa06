from math import factorial

import pytest

from jfrac.engine import convergent
from jfrac.variants import SEQ_V1, SEQ_V2

from tables import P1, P2, Q1, Q2, SCALED_P1, SCALED_P1_TYPO_ROWS, SCALED_Q1


def _cases(table, seq):
    return [pytest.param(seq, h, text, id=f"{seq.name}-h{h}") for h, text in table.items()]


@pytest.mark.parametrize("seq,h,text", _cases(P1, SEQ_V1) + _cases(P2, SEQ_V2))
def test_numerator_tables(zparse, seq, h, text):
    got = convergent(seq, h).p
    assert got == zparse(text)
    assert str(got) == str(zparse(text))


@pytest.mark.parametrize("seq,h,text", _cases(Q1, SEQ_V1) + _cases(Q2, SEQ_V2))
def test_denominator_tables(zparse, seq, h, text):
    got = convergent(seq, h).q
    assert got == zparse(text)
    assert str(got) == str(zparse(text))


@pytest.mark.parametrize("h", sorted(set(SCALED_P1) - SCALED_P1_TYPO_ROWS))
def test_scaled_numerators(zparse, h):
    scale = factorial(2 * h - 1) if h else 1
    assert convergent(SEQ_V1, h).p * scale == zparse(SCALED_P1[h])


def test_scaled_numerator_typo_row_differs(zparse):
    # the printed h = 3 row has its linear term written with z^2
    h = 3
    got = convergent(SEQ_V1, h).p * factorial(2 * h - 1)
    assert got != zparse(SCALED_P1[h])
    assert got == zparse(SCALED_P1[h].replace("(x-2)*z**2 +", "(x-2)*z +", 1))


@pytest.mark.parametrize("h", sorted(SCALED_Q1))
def test_scaled_denominators(zparse, h):
    assert convergent(SEQ_V1, h).q * factorial(2 * h - 1) == zparse(SCALED_Q1[h])
