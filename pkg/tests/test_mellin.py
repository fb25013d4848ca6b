"""Contour evaluation against series/integral routes."""

import math

import pytest

import oracles
from exthyp.extbeta import RegPair
from exthyp.hyp import ext_2f1, pfq_spec
from exthyp.kernel import EXP_KERNEL
from exthyp.mellin import ContourSpec, default_contour, mb_eval
from exthyp.results import DomainError

R0 = RegPair()


def test_gauss_level_log_point():
    spec = pfq_spec(EXP_KERNEL, (1.0, 1.0), (2.0,))
    got = mb_eval(spec, -0.5)
    want = 2.0 * math.log(1.5)  # -ln(1-z)/z at z = -1/2
    assert abs(got.value - want) <= 1e-8 * (1 + abs(want))


@pytest.mark.parametrize("z", [-0.25, -0.5, -1.0])
def test_gauss_level_classical_grid(z):
    spec = pfq_spec(EXP_KERNEL, (0.8, 1.1), (2.4,))
    got = mb_eval(spec, z)
    want = oracles.hyp2f1(0.8, 1.1, 2.4, z)
    assert abs(got.value - want) <= 1e-6 * (1 + abs(want))


@pytest.mark.parametrize("z", [-0.25, -0.5, -1.0])
def test_confluent_level_classical_grid(z):
    spec = pfq_spec(EXP_KERNEL, (0.9,), (2.1,))
    got = mb_eval(spec, z)
    want = oracles.hyp1f1(0.9, 2.1, z)
    assert abs(got.value - want) <= 1e-6 * (1 + abs(want))


def test_extended_gauss_against_series():
    r = RegPair(0.2, 0.3)
    spec = pfq_spec(EXP_KERNEL, (0.8, 1.1), (2.4,), r)
    got = mb_eval(spec, -0.4)
    want = ext_2f1(EXP_KERNEL, 0.8, 1.1, 2.4, -0.4, r)
    assert abs(got.value - want.value) <= 1e-6 * (1 + abs(want.value))


def test_extended_gauss_confluent_kernel():
    from exthyp.kernel import kummer_kernel

    r = RegPair(0.2, 0.3)
    spec = pfq_spec(kummer_kernel(1.0, 2.0), (0.8, 1.1), (2.4,), r)
    got = mb_eval(spec, -0.4)
    from exthyp.hyp import pfq_series

    want = pfq_series(spec, -0.4)
    assert abs(got.value - want.value) <= 1e-6 * (1 + abs(want.value))


def test_extended_confluent_against_series():
    r = RegPair(0.15, 0.25)
    spec = pfq_spec(EXP_KERNEL, (0.9,), (2.1,), r)
    got = mb_eval(spec, -0.5)
    from exthyp.hyp import pfq_series

    want = pfq_series(spec, -0.5)
    assert abs(got.value - want.value) <= 1e-6 * (1 + abs(want.value))


def test_contour_shift_invariance():
    spec = pfq_spec(EXP_KERNEL, (0.8, 1.1), (2.4,))
    base = default_contour(spec)
    a = mb_eval(spec, -0.5, base)
    b = mb_eval(spec, -0.5, ContourSpec(base.abscissa * 1.5,
                                        base.half_height, base.step))
    assert abs(a.value - b.value) <= 2.0 * max(a.abs_err_est, b.abs_err_est,
                                               1e-12)


def test_step_refinement_within_estimate():
    spec = pfq_spec(EXP_KERNEL, (0.8, 1.1), (2.4,))
    coarse = mb_eval(spec, -0.5, ContourSpec(0.2, 40.0, 0.1))
    fine = mb_eval(spec, -0.5, ContourSpec(0.2, 40.0, 0.05))
    assert abs(coarse.value - fine.value) <= max(coarse.abs_err_est, 1e-13)


def test_surplus_lower_branch_tail_guard():
    # reciprocal gammas of surplus lower parameters cancel the exponential
    # decay along the line; the tail test must refuse rather than mis-sum
    spec = pfq_spec(EXP_KERNEL, (0.9,), (1.7, 2.1))
    with pytest.raises(DomainError):
        mb_eval(spec, -0.6)


def test_guards():
    spec = pfq_spec(EXP_KERNEL, (0.8, 1.1), (2.4,))
    with pytest.raises(DomainError):
        mb_eval(spec, 0.5)
    with pytest.raises(DomainError):
        mb_eval(spec, -0.5, ContourSpec(0.8))  # on the pole ladder at 0.8
    with pytest.raises(DomainError):
        ContourSpec(0.2, 1.0, 0.5)  # too few steps