import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from balancedq.asymptotics import (
    anr,
    approx_count,
    approx_ln_count,
    approx_redundancy,
    bivariate_spec,
    gaussian_count,
    gaussian_ln_count,
    gaussian_spec,
    joint_gaussian_count,
    joint_gaussian_ln_count,
    stirling_ln_factorial,
)
from balancedq.counting import KINDS, exact_count
from balancedq.errors import InfeasibleParamsError


def test_stirling_values():
    assert stirling_ln_factorial(0) == 0.0
    assert abs(stirling_ln_factorial(1) - (-0.0810615)) < 1e-6
    for n in (5, 10, 50, 200):
        # the plain Stirling form undershoots ln n! by about 1/(12n)
        err = math.lgamma(n + 1) - stirling_ln_factorial(n)
        assert 0 < err < 1 / (12 * n) + 1e-12
    with pytest.raises(ValueError):
        stirling_ln_factorial(-1)


def test_gaussian_spec_moments():
    s = gaussian_spec(12, 5, "charge")
    assert s.mu == 0
    assert math.isclose(s.sigma2, 12 * 24 / 12)
    s = gaussian_spec(8, 4, "half")
    assert math.isclose(s.sigma2, 8 / 4)
    s = gaussian_spec(9, 5, "unit")
    assert math.isclose(s.sigma2, 9 * 4 / 5)


def test_gaussian_count_near_exact():
    # the density estimate is close but not equal at small n
    approx = gaussian_count(gaussian_spec(4, 3, "charge"), 0)
    assert abs(approx - 19.788) < 5e-3
    exact = exact_count("cb", 4, 3)
    assert abs(approx / exact - 1) < 0.05


def test_gaussian_ln_count_consistency():
    spec = gaussian_spec(20, 4, "charge")
    assert math.isclose(math.exp(gaussian_ln_count(spec, 0)), gaussian_count(spec, 0))
    assert gaussian_count(spec, 2) < gaussian_count(spec, 0)


APPROX_FROZEN = {
    # (kind, n, q) -> approximate count, from the closed forms
    ("cb", 4, 3): 19.7884,
    ("cpb", 10, 4): 66754.4214,
}


def test_approx_count_frozen():
    for (kind, n, q), want in APPROX_FROZEN.items():
        assert abs(approx_count(kind, n, q) - want) < 5e-3


def test_approx_redundancy_table_rows():
    rows = {
        10: 1.9867,
        100: 3.6477,
        1000: 5.3086,
    }
    for n, want in rows.items():
        assert abs(approx_redundancy("cpb", n, 4) - want) < 5e-5


def test_approx_matches_exact_at_large_n():
    for q in (2, 3, 4, 5, 6):
        for kind in KINDS:
            n = 240 if kind != "sb" else 240 - (240 % q)
            exact = exact_count(kind, n, q)
            ratio = math.exp(approx_ln_count(kind, n, q) - math.log(exact))
            assert abs(ratio - 1) < 0.02, (kind, q, ratio)


def test_approx_infeasible():
    with pytest.raises(InfeasibleParamsError):
        approx_ln_count("cb", 3, 4)
    with pytest.raises(InfeasibleParamsError):
        approx_ln_count("sb", 5, 3)
    with pytest.raises(InfeasibleParamsError):
        approx_ln_count("cb", 0, 3)


def test_anr_values():
    assert anr("cb", 2) == Fraction(1, 2)
    assert anr("pb", 7) == Fraction(1, 2)
    assert anr("cpb", 2) == Fraction(1, 2)
    assert anr("cpb", 3) == Fraction(1, 2)
    assert anr("cpb", 4) == 1
    assert anr("cpb", 9) == 1
    assert anr("sb", 2) == Fraction(1, 2)
    assert anr("sb", 5) == 2
    for q in range(2, 10):
        assert anr("sb", q) == Fraction(q - 1, 2)


def test_redundancy_is_affine_in_log_n():
    # slope between two lengths must equal the asymptotic coefficient
    for q in (2, 3, 4, 5, 6, 7):
        for kind in KINDS:
            if kind == "sb":
                n1, n2 = 10 * q, 1000 * q
            elif q % 2 == 0:
                n1, n2 = 10, 1000
            else:
                n1, n2 = 11, 1001
            r1 = approx_redundancy(kind, n1, q)
            r2 = approx_redundancy(kind, n2, q)
            slope = (r2 - r1) / (math.log(n2, q) - math.log(n1, q))
            assert abs(slope - float(anr(kind, q))) < 1e-12, (kind, q)


def test_bivariate_spec_values():
    s = bivariate_spec(20, 4)
    assert s.mu1 == 0 and s.mu2 == 0
    assert math.isclose(s.sigma1**2, 20 * 15 / 12)
    assert math.isclose(s.sigma2**2, 20 / 4)
    assert math.isclose(s.rho**2, 0.8)
    s = bivariate_spec(20, 5)
    assert math.isclose(s.rho**2, 0.9)
    assert math.isclose(s.sigma2**2, 20 * 4 / 5)


def test_bivariate_spec_degenerate():
    with pytest.raises(InfeasibleParamsError):
        bivariate_spec(10, 2)
    with pytest.raises(InfeasibleParamsError):
        bivariate_spec(10, 3)


def test_joint_gaussian_matches_cpb_approx():
    for q in (4, 5, 6, 7):
        for n in (8, 40, 200):
            spec = bivariate_spec(n, q)
            lhs = joint_gaussian_ln_count(spec, 0, 0)
            rhs = approx_ln_count("cpb", n, q)
            assert math.isclose(lhs, rhs, rel_tol=1e-12), (q, n)


def test_joint_gaussian_count_positive():
    spec = bivariate_spec(16, 5)
    assert joint_gaussian_count(spec, 0, 0) > 0
    assert joint_gaussian_count(spec, 1, 1) < joint_gaussian_count(spec, 0, 0)


@given(st.sampled_from(KINDS), st.integers(2, 7), st.integers(1, 40))
@settings(deadline=None, max_examples=60)
def test_approx_ln_monotone_in_n(kind, q, step):
    # feasible lengths only; the count grows with n so its log does too
    if kind == "sb":
        n1, n2 = step * q, (step + 1) * q
    elif q % 2 == 0:
        n1, n2 = 2 * step, 2 * step + 2
    else:
        n1, n2 = step, step + 1
    assert approx_ln_count(kind, n2, q) > approx_ln_count(kind, n1, q)
