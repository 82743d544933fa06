import json
from fractions import Fraction as F

import pytest

from jfrac.congruences import (NonIntegralError, binom_value, congruence_check,
                               conjecture_rhs, conjecture_scan, corollary_rhs,
                               find_admissible, lambda_at)
from jfrac.oracle import binom_int
from jfrac.variants import VariantId, lam

V1, V2 = VariantId.V1, VariantId.V2


def test_lambda_at_values():
    assert lambda_at(2, 2) == -3
    # x(x+1)(x-1)(x+2)/72 at x = 2: 2*3*1*4/72
    assert lambda_at(3, 2) == F(1, 3)
    assert lambda_at(2, 0) == 0
    with pytest.raises(ValueError):
        lambda_at(1, 3)


def test_lambda_at_agrees_with_polynomial_eval():
    for h in range(2, 10):
        for x0 in range(-5, 15):
            assert lambda_at(h, x0) == lam(h)(x0)


def test_find_admissible():
    # lambda_3(2) = 1/3 is not an integer, so 3 is not admissible
    assert find_admissible(3, 2, 3) == []
    assert find_admissible(2, 0, 5) == [2, 3, 4, 5]
    assert all(lambda_at(m, 0) == 0 for m in range(2, 6))
    with pytest.raises(ValueError):
        find_admissible(5, 1, 4)


def test_find_admissible_includes_integral_multiples():
    for h in range(2, 6):
        for x0 in range(0, 12):
            for m in find_admissible(h, x0, 10):
                v = lambda_at(m, x0)
                assert v.denominator == 1 and v.numerator % h == 0


def test_congruence_examples():
    c = congruence_check(V1, 3, 3, 2, 4)
    assert c.lhs == binom_int(6, 4) == 15
    assert c.lhs_mod == 0 and c.rhs_mod == 0 and c.holds
    assert not c.admissible  # lambda_3(2) = 1/3
    c = congruence_check(V1, 2, 2, 1, 0)
    assert c.lhs == 1 and c.rhs == 1 and c.holds
    c = congruence_check(V2, 3, 3, 2, 1)
    assert c.lhs == binom_int(2, 1)
    assert c.rhs == corollary_rhs(V2, 3, 2, 1)
    assert c.holds == (c.lhs_mod == c.rhs_mod)


def test_congruence_preconditions():
    with pytest.raises(ValueError):
        congruence_check(V1, 1, 2, 0, 0)
    with pytest.raises(ValueError):
        congruence_check(V1, 3, 2, 0, 0)
    with pytest.raises(ValueError):
        congruence_check(V1, 2, 2, -1, 0)


def test_nonintegral_side_is_flagged_or_raised():
    cases = [congruence_check(v, 2, m, x0, n)
             for v in (V1, V2) for m in (2, 3) for x0 in range(4) for n in range(8)]
    bad = [c for c in cases if c.rhs.denominator != 1]
    assert bad
    for c in bad:
        assert not c.applicable and not c.holds and c.rhs_mod is None
        with pytest.raises(NonIntegralError):
            congruence_check(c.variant, c.h, c.m, c.x, c.n, strict=True)


def test_residues_in_range_and_consistent():
    for v in (V1, V2):
        for h in (2, 3, 5):
            for x0 in range(6):
                for n in range(10):
                    c = congruence_check(v, h, h, x0, n)
                    if c.applicable:
                        assert 0 <= c.lhs_mod < h and 0 <= c.rhs_mod < h
                        assert c.holds == ((c.lhs - c.rhs).numerator % h == 0)


@pytest.mark.parametrize("v", [V1, V2])
def test_corollary_rhs_is_exact_below_2m(v):
    for m in range(2, 7):
        for x0 in range(0, 8):
            for n in range(2 * m):
                assert corollary_rhs(v, m, x0, n) == binom_value(v, x0, n)


def test_case_json_schema():
    d = json.loads(congruence_check(V1, 3, 3, 2, 4).to_json())
    assert d["lhs"] == "15/1" and d["lambda"] == "1/3"
    assert {"lhs_mod", "rhs_mod", "admissible", "holds", "degenerate",
            "applicable", "in_hypothesis"} <= set(d)


def test_conjecture_scan_v1_h2():
    rep = conjecture_scan(V1, 2, 1, 10)
    assert rep.points == 22
    assert [(f.x, f.n, f.kind) for f in rep.failures] == [(0, 1, "nonintegral")]
    assert rep.pass_rate == F(21, 22)


def test_conjecture_scan_n0_trivial():
    rep = conjecture_scan(V1, 5, 4, 0)
    assert rep.points == 5 and rep.failures == []


def test_conjecture_scan_v2_h3_report():
    rep = conjecture_scan(V2, 3, 10, 10)
    d = rep.to_dict()
    assert d["points"] == 121
    assert d["mismatches"] + d["nonintegral"] == len(d["failures"])
    assert [(f["x"], f["n"]) for f in d["failures"]] == sorted(
        (f["x"], f["n"]) for f in d["failures"])


def test_conjecture_scan_failures_are_exact():
    rep = conjecture_scan(V2, 3, 6, 8)
    failed = {(f.x, f.n) for f in rep.failures}
    for x0 in range(7):
        for n in range(9):
            rhs = conjecture_rhs(V2, 3, x0, n)
            ok = rhs.denominator == 1 and (binom_int(x0, n) - rhs.numerator) % 3 == 0
            assert ((x0, n) in failed) != ok


def test_conjecture_scan_deterministic():
    a = conjecture_scan(V1, 4, 25, 25).to_json()
    assert a == conjecture_scan(V1, 4, 25, 25).to_json()


@pytest.mark.parametrize("h", [2, 3, 4])
def test_v1_displayed_agrees_with_general(h):
    for x0 in range(h):
        for n in range(15):
            assert conjecture_rhs(V1, h, x0, n, "displayed") == conjecture_rhs(V1, h, x0, n)


def test_v1_displayed_mod5_typo():
    # printed 5/56 on the second term; the general sum has 5/36
    diffs = [(x0, n) for x0 in range(5) for n in range(12)
             if conjecture_rhs(V1, 5, x0, n, "displayed") != conjecture_rhs(V1, 5, x0, n)]
    assert diffs
    assert all(n >= 2 for _, n in diffs)


def test_v2_displayed_mod5_sign():
    # the x(x-1)...(x-4)/15120 term carries a printed minus sign
    diffs = [(x0, n) for x0 in range(12) for n in range(12)
             if conjecture_rhs(V2, 5, x0, n, "displayed") != conjecture_rhs(V2, 5, x0, n)]
    assert diffs
    assert all(n >= 5 and x0 >= 5 for x0, n in diffs)


def test_conjecture_rhs_rejects_unknown():
    with pytest.raises(ValueError):
        conjecture_rhs(V1, 6, 0, 0, "displayed")
    with pytest.raises(ValueError):
        conjecture_rhs(V1, 2, 0, 0, "other")


@pytest.mark.parametrize("h", [2, 3, 4])
def test_v2_displayed_agrees_with_general(h):
    for x0 in range(12):
        for n in range(14):
            assert conjecture_rhs(V2, h, x0, n, "displayed") == conjecture_rhs(V2, h, x0, n)
