"""Two-variable extended hypergeometric functions."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from exthyp.appell import (
    AppellParams,
    f1_finite_sum,
    f1_integral,
    f1_series,
    f1_transform,
    f2_integral,
    f2_recursion,
    f2_series,
    f2_single_integral,
    f2_transform,
)
from exthyp.extbeta import RegPair
from exthyp.hyp import ext_2f1
from exthyp.kernel import EXP_KERNEL
from exthyp.results import DomainError

R0 = RegPair()


def P1(alpha, b1, b2, g1, reg=R0):
    return AppellParams(alpha, b1, b2, g1, math.nan, reg, EXP_KERNEL)


def P2(alpha, b1, b2, g1, g2, reg=R0):
    return AppellParams(alpha, b1, b2, g1, g2, reg, EXP_KERNEL)


def test_f1_classical_oracle():
    got = f1_series(P1(1.0, 0.5, 0.5, 2.0), 0.2, 0.4)
    want = oracles.appell_f1(1.0, 0.5, 0.5, 2.0, 0.2, 0.4)
    assert abs(got.value - want) <= 1e-10 * (1 + abs(want))


def test_f1_equal_argument_collapse():
    # equal arguments collapse onto the Gauss-level function with summed
    # numerator parameters
    r = RegPair(0.1, 0.2)
    got = f1_series(P1(1.0, 0.5, 0.5, 2.0, r), 0.3, 0.3)
    want = ext_2f1(EXP_KERNEL, 1.0, 1.0, 2.0, 0.3, r)
    assert abs(got.value - want.value) <= 1e-9 * (1 + abs(want.value))


def test_f1_second_parameter_zero_drops_axis():
    r = RegPair(0.2, 0.1)
    got = f1_series(P1(0.8, 1.1, 0.0, 2.2, r), 0.25, 0.7)
    want = ext_2f1(EXP_KERNEL, 1.1, 0.8, 2.2, 0.25, r)
    assert abs(got.value - want.value) <= 1e-10 * (1 + abs(want.value))


def test_f1_argument_symmetry():
    p = P1(0.9, 0.6, 1.4, 2.3, RegPair(0.15, 0.25))
    a = f1_series(p, 0.2, 0.45).value
    q = P1(0.9, 1.4, 0.6, 2.3, RegPair(0.15, 0.25))
    b = f1_series(q, 0.45, 0.2).value
    assert abs(a - b) <= 1e-10 * (1 + abs(a))


def test_f1_series_vs_integral_grid():
    for reg in (R0, RegPair(0.2, 0.2), RegPair(0.0, 0.2), RegPair(0.2, 0.0)):
        for x in (-0.3, 0.1, 0.4):
            for y in (-0.2, 0.3, 0.5):
                p = P1(1.0, 0.5, 0.5, 2.0, reg)
                s = f1_series(p, x, y)
                i = f1_integral(p, x, y)
                assert abs(s.value - i.value) <= 1e-8 * (1 + abs(s.value))


def test_f1_integral_outside_series_domain():
    p = P1(1.0, 0.5, 0.5, 2.0, RegPair(0.1, 0.1))
    got = f1_integral(p, 0.2, -3.0)
    assert got.converged
    # map back into the series domain through the argument transformation
    _, _, proof = f1_transform(p, 0.2, -3.0)
    assert abs(got.value - proof.value) <= 1e-8 * (1 + abs(got.value))


def test_f1_transform_classical_picks_proof_variant():
    p = P1(1.0, 0.7, 0.9, 2.3)
    lhs, printed, proof = f1_transform(p, 0.3, 0.5)
    assert abs(lhs.value - proof.value) <= 1e-9 * (1 + abs(lhs.value))
    assert abs(lhs.value - printed.value) > 1e-3


def test_f1_transform_extended_proof_variant():
    p = P1(1.0, 0.7, 0.9, 2.3, RegPair(0.2, 0.1))
    lhs, printed, proof = f1_transform(p, 0.3, 0.5)
    assert abs(lhs.value - proof.value) <= 1e-8 * (1 + abs(lhs.value))


def test_f2_classical_oracle():
    got = f2_series(P2(1.0, 0.5, 0.5, 1.5, 1.5), 0.25, 0.25)
    want = oracles.appell_f2(1.0, 0.5, 0.5, 1.5, 1.5, 0.25, 0.25)
    assert abs(got.value - want) <= 1e-9 * (1 + abs(want))


def test_f2_zero_second_argument():
    # the dropped axis leaves its zeroth coefficient ratio behind
    r = RegPair(0.1, 0.3)
    got = f2_series(P2(1.0, 0.8, 0.7, 1.9, 2.1, r), 0.3, 0.0)
    from exthyp.corefn import beta_classical
    from exthyp.extbeta import BetaArgs, ext_beta

    ratio0 = (ext_beta(EXP_KERNEL, BetaArgs(0.7, 1.4), r, tol=1e-13).value
              / beta_classical(0.7, 1.4))
    want = ratio0 * ext_2f1(EXP_KERNEL, 1.0, 0.8, 1.9, 0.3, r).value
    assert abs(got.value - want) <= 1e-9 * (1 + abs(want))
    # at zero regularization the reduction is exact on the nose
    got0 = f2_series(P2(1.0, 0.8, 0.7, 1.9, 2.1), 0.3, 0.0)
    want0 = ext_2f1(EXP_KERNEL, 1.0, 0.8, 1.9, 0.3)
    assert abs(got0.value - want0.value) <= 1e-9 * (1 + abs(want0.value))


def test_f2_symmetry_under_axis_swap():
    r = RegPair(0.2, 0.4)
    a = f2_series(P2(0.9, 0.6, 1.1, 1.8, 2.4, r), 0.2, 0.35).value
    b = f2_series(P2(0.9, 1.1, 0.6, 2.4, 1.8, r), 0.35, 0.2).value
    assert abs(a - b) <= 1e-10 * (1 + abs(a))


def test_f2_series_vs_double_integral():
    for reg in (R0, RegPair(0.2, 0.2)):
        p = P2(1.0, 0.5, 0.5, 1.5, 1.5, reg)
        s = f2_series(p, 0.25, 0.25)
        i = f2_integral(p, 0.25, 0.25)
        assert abs(s.value - i.value) <= 1e-8 * (1 + abs(s.value))


def test_f2_single_integral_matches_series():
    p = P2(1.0, 0.6, 0.7, 2.0, 2.2, RegPair(0.1, 0.2))
    s = f2_series(p, 0.2, 0.3)
    one = f2_single_integral(p, 0.2, 0.3)
    assert abs(s.value - one.value) <= 1e-8 * (1 + abs(s.value))


def test_f2_single_integral_matches_double():
    p = P2(1.0, 0.6, 0.7, 2.0, 2.2, RegPair(0.1, 0.2))
    two = f2_integral(p, 0.2, 0.3)
    one = f2_single_integral(p, 0.2, 0.3)
    assert abs(two.value - one.value) <= 1e-8 * (1 + abs(two.value))


def test_f2_single_integral_domain_guard():
    with pytest.raises(DomainError):
        f2_single_integral(P2(1.0, 0.6, 0.7, 2.0, 2.2), 0.5, 0.6)


@pytest.mark.parametrize("which", ["x", "y", "xy"])
def test_f2_transforms_equal_reg(which):
    p = P2(1.0, 0.5, 0.6, 1.8, 2.1, RegPair(0.2, 0.2))
    lhs, rhs = f2_transform(p, 0.2, 0.25, which)
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))


def test_f2_transform_general_pair():
    p = P2(1.0, 0.5, 0.6, 1.8, 2.1, RegPair(0.1, 0.4))
    lhs, rhs = f2_transform(p, 0.2, 0.25, "xy_general")
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))


def test_f2_transform_general_reduces_to_equal_pair_form():
    p = P2(1.0, 0.5, 0.6, 1.8, 2.1, RegPair(0.3, 0.3))
    _, a = f2_transform(p, 0.2, 0.25, "xy")
    _, b = f2_transform(p, 0.2, 0.25, "xy_general")
    assert abs(a.value - b.value) <= 1e-10 * (1 + abs(a.value))


def test_f2_transform_needs_equal_pair():
    with pytest.raises(DomainError):
        f2_transform(P2(1.0, 0.5, 0.6, 1.8, 2.1, RegPair(0.1, 0.4)),
                     0.2, 0.25, "x")


def test_f2_recursion_gamma_shift():
    p = P2(1.0, 0.5, 0.6, 1.9, 2.0)
    for n in (1, 2):
        lhs, rhs = f2_recursion(p, n, "gamma2_shift", 0.2, 0.3)
        assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))
    pr = P2(1.0, 0.5, 0.6, 1.9, 2.0, RegPair(0.1, 0.1))
    lhs, rhs = f2_recursion(pr, 1, "gamma2_shift", 0.2, 0.3)
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))


def test_f2_recursion_beta_shift_proof_wins():
    p = P2(1.0, 0.5, 0.6, 1.9, 2.4, RegPair(0.1, 0.1))
    for n in (1, 2):
        lhs, rhs = f2_recursion(p, n, "beta2_shift", 0.2, 0.3)
        assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))
    lhs, rhs = f2_recursion(p, 1, "beta2_shift", 0.2, 0.3, variant="printed")
    assert abs(lhs.value - rhs.value) > 1e-4


def test_f2_recursion_degenerate():
    p = P2(1.0, 0.5, 0.6, 1.9, 2.0)
    lhs, rhs = f2_recursion(p, 0, "gamma2_shift", 0.2, 0.3)
    assert abs(lhs.value - rhs.value) <= 1e-12 * (1 + abs(lhs.value))


def test_finite_sum_log_closed_form():
    out = f1_finite_sum(EXP_KERNEL, 0, 0, 0.3, 0.6)
    want = (math.log(1.0 - 0.6) - math.log(1.0 - 0.3)) / (0.3 - 0.6)
    assert abs(out["direct"].value - want) <= 1e-9
    assert abs(out["proof"].value - want) <= 1e-9


@pytest.mark.parametrize("s,t", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_finite_sum_proof_variant_wins(s, t):
    for reg in (R0, RegPair(0.1, 0.1)):
        out = f1_finite_sum(EXP_KERNEL, s, t, 0.25, 0.55, reg)
        d, p = out["direct"].value, out["proof"].value
        assert abs(d - p) <= 1e-8 * (1 + abs(d))
    if (s, t) != (0, 0):
        out = f1_finite_sum(EXP_KERNEL, s, t, 0.25, 0.55)
        assert abs(out["direct"].value - out["printed"].value) > 1e-6


def test_lemma1_expansion():
    from exthyp.appell import lemma1_expand

    for (s, t, u, x, y) in [(1, 1, 0.5, 0.2, 0.6), (2, 1, 0.3, 0.1, 0.7),
                            (1, 3, 0.9, -0.4, 0.5)]:
        lhs, rhs = lemma1_expand(s, t, u, x, y)
        assert abs(lhs - rhs) <= 1e-12 * (1 + abs(lhs))


@given(st.integers(1, 4), st.integers(1, 4), st.floats(0.01, 0.99),
       st.floats(-0.8, 0.8), st.floats(-0.8, 0.8))
@settings(max_examples=60, derandomize=True, deadline=None)
def test_lemma1_expansion_property(s, t, u, x, y):
    from hypothesis import assume

    from exthyp.appell import lemma1_expand

    assume(abs(x - y) > 0.05)
    lhs, rhs = lemma1_expand(s, t, u, x, y)
    assert abs(lhs - rhs) <= 1e-9 * (1 + abs(lhs))
