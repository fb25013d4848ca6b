"""Regularization kernels: coefficients, evaluation, decay, parsing."""

import math

import numpy as np
import pytest

from exthyp.kernel import (
    EXP_KERNEL,
    kummer_kernel,
    parse_kernel,
    theta_coeff,
    theta_eval,
    theta_eval_arr,
)
from exthyp.corefn import gammaln_real
from exthyp.results import DomainError

KUM = kummer_kernel(1.0, 2.0)
KUM2 = kummer_kernel(1.5, 2.0)


def test_coefficients():
    assert theta_coeff(EXP_KERNEL, 7) == 1.0
    assert theta_coeff(KUM, 1) == 0.5
    for k in (EXP_KERNEL, KUM, KUM2):
        assert theta_coeff(k, 0) == 1.0


def test_exp_eval():
    assert theta_eval(EXP_KERNEL, 0.0).value == 1.0
    assert abs(theta_eval(EXP_KERNEL, -1.0).value - math.exp(-1.0)) < 1e-16


def test_kummer_eval_closed_form():
    # 1F1(1;2;z) = (e^z - 1)/z
    got = theta_eval(KUM, -1.0).value
    assert abs(got - (1.0 - math.exp(-1.0))) < 1e-13


def test_exp_multiplicativity():
    for z1 in (-2.0, 0.3, -7.5):
        for z2 in (-1.0, 0.9):
            lhs = theta_eval(EXP_KERNEL, z1 + z2).value
            rhs = theta_eval(EXP_KERNEL, z1).value * theta_eval(EXP_KERNEL, z2).value
            assert abs(lhs - rhs) <= 1e-12 * abs(lhs)


@pytest.mark.parametrize("k", [EXP_KERNEL, KUM, KUM2])
def test_monotone_decay_to_zero(k):
    zs = -np.arange(1.0, 51.0)
    vals = theta_eval_arr(k, zs)
    assert np.all(vals > 0)
    assert np.all(np.diff(vals) < 0)  # decreasing along z = -1, -2, ...
    # exponential kernel decays superexponentially, confluent one like |z|^-a
    floor = 1e-20 if k is EXP_KERNEL else 50.0 ** -k.a * 2.0
    assert vals[-1] < vals[0] * floor


@pytest.mark.parametrize("k", [EXP_KERNEL, KUM, KUM2])
def test_taylor_sum_converges(k):
    for z in (-0.8, 0.5, 0.95):
        acc = 0.0
        fact = 1.0
        for l in range(31):
            if l:
                fact *= l
            acc += theta_coeff(k, l) * z ** l / fact
        want = theta_eval(k, z).value
        assert abs(acc - want) <= 1e-10 * (1 + abs(want))


def test_asymptotic_constants():
    assert EXP_KERNEL.asymptotic_amplitude == 1.0
    assert EXP_KERNEL.asymptotic_exponent == 0.0
    k = kummer_kernel(1.5, 2.0)
    want = math.exp(gammaln_real(2.0) - gammaln_real(1.5))
    assert abs(k.asymptotic_amplitude - want) < 1e-13
    assert k.asymptotic_exponent == -0.5


def test_kummer_large_argument_amplitude():
    # Theta(z) ~ M0 * z^omega * e^z as z -> +inf
    k = KUM2
    z = 80.0
    approx = k.asymptotic_amplitude * z ** k.asymptotic_exponent * math.exp(z)
    got = theta_eval(k, z).value
    assert abs(got - approx) <= 2e-2 * abs(got)


def test_parse_kernel():
    assert parse_kernel("exp") is EXP_KERNEL
    k = parse_kernel("kummer:1.5,2.0")
    assert k.a == 1.5 and k.c == 2.0
    with pytest.raises(DomainError):
        parse_kernel("kummer:1.5")
    with pytest.raises(DomainError):
        parse_kernel("gauss")
    with pytest.raises(DomainError):
        kummer_kernel(-1.0, 2.0)


def test_vectorized_matches_scalar_across_regimes():
    zs = np.array([-1e6, -500.0, -150.0, -20.0, -0.5, 0.0, 3.0])
    vals = theta_eval_arr(KUM2, zs)
    for z, v in zip(zs, vals):
        assert abs(v - theta_eval(KUM2, float(z)).value) <= 1e-12 * (1 + abs(v))
