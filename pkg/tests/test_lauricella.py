"""r-variable extended hypergeometric functions of types D and A."""

import pytest

import oracles
from exthyp.corefn import beta_classical
from exthyp.extbeta import BetaArgs, RegPair, ext_beta
from exthyp.hyp import ext_2f1
from exthyp.kernel import EXP_KERNEL
from exthyp.lauricella import (
    IntervalProductParams,
    LauricellaParams,
    fa_integral,
    fa_partial_series,
    fa_series,
    fa_single_integral,
    fd_equal_arguments,
    fd_integral,
    fd_laplace_product,
    fd_series,
    fd_summation_unit,
    interval_product_integral,
    multinomial_exponential_identity,
)
from exthyp.results import DomainError

R0 = RegPair()


def PD(alpha, betas, gamma, xs, reg=R0):
    return LauricellaParams(alpha, tuple(betas), (gamma,), tuple(xs), reg,
                            EXP_KERNEL)


def PA(alpha, betas, gammas, xs, reg=R0):
    return LauricellaParams(alpha, tuple(betas), tuple(gammas), tuple(xs),
                            reg, EXP_KERNEL)


def test_fd_single_variable_reduction():
    r = RegPair(0.2, 0.1)
    got = fd_series(PD(1.0, [0.7], 2.2, [0.3], r))
    want = ext_2f1(EXP_KERNEL, 0.7, 1.0, 2.2, 0.3, r)
    assert abs(got.value - want.value) <= 1e-10 * (1 + abs(want.value))


def test_fd_classical_oracle():
    got = fd_series(PD(0.9, [0.4, 0.6, 0.8], 2.5, [0.2, -0.15, 0.3]))
    want = oracles.lauricella_fd(0.9, [0.4, 0.6, 0.8], 2.5, [0.2, -0.15, 0.3])
    assert abs(got.value - want) <= 1e-8 * (1 + abs(want))


def test_fd_equal_arguments_collapse():
    r = RegPair(0.1, 0.2)
    lhs, rhs = fd_equal_arguments(PD(1.0, [0.5, 0.7, 0.3], 2.4,
                                     [0.3, 0.3, 0.3], r))
    assert abs(lhs.value - rhs.value) <= 1e-9 * (1 + abs(lhs.value))


def test_fd_permutation_symmetry():
    r = RegPair(0.15, 0.05)
    a = fd_series(PD(0.8, [0.5, 1.2], 2.1, [0.25, -0.4], r)).value
    b = fd_series(PD(0.8, [1.2, 0.5], 2.1, [-0.4, 0.25], r)).value
    assert abs(a - b) <= 1e-10 * (1 + abs(a))


def test_fd_axis_deletion_is_exact():
    # shared coefficient: dropping a zero argument changes nothing at all
    r = RegPair(0.3, 0.2)
    a = fd_series(PD(0.8, [0.5, 1.2, 0.9], 2.1, [0.25, -0.4, 0.0], r)).value
    b = fd_series(PD(0.8, [0.5, 1.2], 2.1, [0.25, -0.4], r)).value
    assert abs(a - b) <= 1e-12 * (1 + abs(a))


def test_fd_series_vs_integral():
    for reg in (R0, RegPair(0.2, 0.2)):
        p = PD(1.0, [0.5, 0.5], 2.0, [0.2, 0.4], reg)
        s = fd_series(p)
        i = fd_integral(p)
        assert abs(s.value - i.value) <= 1e-9 * (1 + abs(s.value))
    p3 = PD(1.1, [0.4, 0.5, 0.6], 2.6, [0.15, -0.25, 0.1], RegPair(0.1, 0.3))
    s3 = fd_series(p3)
    i3 = fd_integral(p3)
    assert abs(s3.value - i3.value) <= 1e-9 * (1 + abs(s3.value))


def test_fd_constant_when_betas_vanish():
    r = RegPair(0.2, 0.4)
    got = fd_series(PD(1.0, [0.0, 0.0], 2.0, [0.3, 0.6], r))
    want = (ext_beta(EXP_KERNEL, BetaArgs(1.0, 1.0), r).value
            / beta_classical(1.0, 1.0))
    assert abs(got.value - want) <= 1e-11 * (1 + abs(want))


def test_fd_unit_argument_summation():
    # classical single-variable case recovers the gamma-quotient sum
    lhs, rhs = fd_summation_unit(PD(1.0, [1.0], 4.0, [1.0]))
    assert abs(lhs.value - rhs.value) <= 1e-10 * (1 + abs(lhs.value))
    assert abs(lhs.value - oracles.gauss_sum(1.0, 1.0, 4.0)) <= 1e-9
    # regularized two-variable case
    lhs, rhs = fd_summation_unit(PD(0.9, [0.5, 0.6], 2.1, [1.0, 1.0],
                                    RegPair(0.2, 0.1)))
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))
    # degenerate: no linear factors at all
    lhs, rhs = fd_summation_unit(PD(0.9, [0.0], 2.1, [1.0], RegPair(0.2, 0.1)))
    assert abs(lhs.value - rhs.value) <= 1e-10 * (1 + abs(lhs.value))


def test_interval_product_unit_interval():
    tp = IntervalProductParams(0.0, 1.0, 1.1, 0.9,
                               ((-0.3, 1.0, -0.7), (-0.5, 1.0, -1.2)),
                               RegPair(0.1, 0.2), EXP_KERNEL)
    lhs, rhs = interval_product_integral(tp)
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))


def test_interval_product_shifted_interval():
    tp = IntervalProductParams(1.0, 3.0, 0.8, 1.3, ((0.2, 0.5, -0.9),),
                               RegPair(0.3, 0.4), EXP_KERNEL)
    lhs, rhs = interval_product_integral(tp)
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))


def test_interval_product_constant_factor():
    # f = 0 makes the linear factor constant: reduces to a regularized beta
    tp = IntervalProductParams(0.0, 1.0, 1.2, 1.4, ((0.0, 2.0, -0.8),),
                               RegPair(0.1, 0.1), EXP_KERNEL)
    lhs, rhs = interval_product_integral(tp)
    want = 2.0 ** -0.8 * ext_beta(EXP_KERNEL, BetaArgs(1.2, 1.4),
                                  RegPair(0.1, 0.1)).value
    assert abs(lhs.value - want) <= 1e-9 * (1 + abs(want))
    assert abs(rhs.value - want) <= 1e-9 * (1 + abs(want))


def test_fd_laplace_product_r1():
    p = PD(0.9, [1.1], 2.3, [0.2], RegPair(0.1, 0.2))
    lhs, rhs = fd_laplace_product(p)
    assert abs(lhs.value - rhs.value) <= 1e-7 * (1 + abs(lhs.value))


def test_fd_laplace_product_r2():
    p = PD(0.8, [0.9, 1.2], 2.5, [0.15, 0.2], RegPair(0.1, 0.1))
    lhs, rhs = fd_laplace_product(p)
    assert abs(lhs.value - rhs.value) <= 1e-6 * (1 + abs(lhs.value))


def test_multinomial_exponential_identity():
    lhs, rhs = multinomial_exponential_identity((0.2, 0.3))
    assert abs(lhs - rhs) <= 1e-12 * (1 + abs(rhs))
    lhs, rhs = multinomial_exponential_identity((0.1, 0.2, 0.15))
    assert abs(lhs - rhs) <= 1e-12 * (1 + abs(rhs))


def test_fa_single_variable_reduction():
    r = RegPair(0.2, 0.1)
    got = fa_series(PA(1.0, [0.7], [2.2], [0.3], r))
    want = ext_2f1(EXP_KERNEL, 1.0, 0.7, 2.2, 0.3, r)
    assert abs(got.value - want.value) <= 1e-10 * (1 + abs(want.value))


def test_fa_classical_oracle():
    got = fa_series(PA(0.9, [0.4, 0.6], [1.8, 2.1], [0.2, 0.25]))
    want = oracles.lauricella_fa(0.9, [0.4, 0.6], [1.8, 2.1], [0.2, 0.25])
    assert abs(got.value - want) <= 1e-9 * (1 + abs(want))
    got3 = fa_series(PA(1.1, [0.4, 0.6, 0.5], [1.8, 2.1, 1.9],
                        [0.15, 0.2, 0.1]))
    want3 = oracles.lauricella_fa(1.1, [0.4, 0.6, 0.5], [1.8, 2.1, 1.9],
                                  [0.15, 0.2, 0.1])
    assert abs(got3.value - want3) <= 1e-8 * (1 + abs(want3))


def test_fa_permutation_symmetry():
    r = RegPair(0.1, 0.25)
    a = fa_series(PA(0.9, [0.4, 0.6], [1.8, 2.1], [0.2, 0.25], r)).value
    b = fa_series(PA(0.9, [0.6, 0.4], [2.1, 1.8], [0.25, 0.2], r)).value
    assert abs(a - b) <= 1e-10 * (1 + abs(a))


def test_fa_zero_arguments_coefficient_product():
    r = RegPair(0.2, 0.3)
    got = fa_series(PA(1.3, [0.5, 0.8], [1.6, 2.0], [0.0, 0.0], r))
    want = 1.0
    for b, g in ((0.5, 1.6), (0.8, 2.0)):
        want *= (ext_beta(EXP_KERNEL, BetaArgs(b, g - b), r).value
                 / beta_classical(b, g - b))
    assert abs(got.value - want) <= 1e-11 * (1 + abs(want))


def test_fa_series_vs_integral():
    p = PA(1.0, [0.6, 0.7], [1.8, 2.1], [0.2, 0.25], RegPair(0.1, 0.1))
    s = fa_series(p)
    i = fa_integral(p)
    assert abs(s.value - i.value) <= 1e-7 * (1 + abs(s.value))
    p1 = PA(1.0, [0.6], [1.8], [0.35], RegPair(0.2, 0.3))
    assert abs(fa_series(p1).value - fa_integral(p1).value) <= 1e-9


def test_fa_integral_printed_normalization_fails():
    p = PA(1.0, [0.6, 0.7], [1.8, 2.1], [0.2, 0.25], RegPair(0.1, 0.1))
    s = fa_series(p)
    i = fa_integral(p, variant="printed")
    assert abs(s.value - i.value) > 1e-2


def test_fa_single_integral_infinite_upper():
    for reg in (R0, RegPair(0.1, 0.2)):
        p = PA(1.0, [0.8, 0.7], [2.0, 2.2], [0.3, 0.2], reg)
        series, integral = fa_single_integral(p)
        assert abs(series.value - integral.value) <= 1e-6 * (1 + abs(series.value))


def test_fa_single_integral_classical_r1():
    p = PA(1.0, [0.8], [2.0], [0.3])
    series, integral = fa_single_integral(p)
    want = oracles.hyp2f1(1.0, 0.8, 2.0, 0.3)
    assert abs(integral.value - want) <= 1e-7 * (1 + abs(want))


def test_fa_single_integral_unit_upper_fails():
    p = PA(1.0, [0.8, 0.7], [2.0, 2.2], [0.3, 0.2], RegPair(0.1, 0.2))
    series, integral = fa_single_integral(p, upper=1.0)
    assert abs(series.value - integral.value) / (1 + abs(series.value)) > 1e-2


def test_fa_partial_series():
    p = PA(1.0, [0.6, 0.7], [1.8, 2.1], [0.2, 0.25], RegPair(0.1, 0.1))
    lhs, rhs = fa_partial_series(p)
    assert abs(lhs.value - rhs.value) <= 1e-8 * (1 + abs(lhs.value))
    p3 = PA(0.9, [0.5, 0.6, 0.7], [1.7, 1.9, 2.2], [0.1, 0.15, 0.2],
            RegPair(0.05, 0.1))
    lhs, rhs = fa_partial_series(p3)
    assert abs(lhs.value - rhs.value) <= 1e-7 * (1 + abs(lhs.value))


def test_fa_partial_series_zero_last_argument():
    r = RegPair(0.1, 0.1)
    p = PA(1.0, [0.6, 0.7], [1.8, 2.1], [0.2, 0.0], r)
    lhs, rhs = fa_partial_series(p)
    assert abs(lhs.value - rhs.value) <= 1e-10 * (1 + abs(lhs.value))


def test_domain_guards():
    with pytest.raises(DomainError):
        fa_series(PA(1.0, [0.6, 0.7], [1.8, 2.1], [0.6, 0.5]))
    with pytest.raises(DomainError):
        fd_series(PD(1.0, [0.5], 2.0, [1.2]))
    with pytest.raises(DomainError):
        fd_series(PD(1.0, [0.5, 0.5, 0.5, 0.5, 0.5], 3.0, [0.1] * 5))
    with pytest.raises(DomainError):
        fa_integral(PA(1.0, [0.5] * 3, [1.5] * 3, [0.1] * 3))
