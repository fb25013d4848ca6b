"""One-dimensional contour evaluation of the extended series.

The series is regenerated from a vertical-line integral whose integrand
carries the regularized beta ratios continued to complex first arguments,
gamma factors for the Pochhammer slots, and (-z)**(-s).  The abscissa must
keep the right-half-plane poles (at the paired upper parameters when the
regularization vanishes, and at the leading upper parameter) on its right
and the origin-ladder poles on its left.

Only negative real arguments are evaluated (single-valued power on the real
branch).  The trapezoid refines by step halving and widens the strip when
the tail has not decayed.  Surplus lower parameters contribute reciprocal
gamma factors that cancel the exponential decay along the line, so the
vertical-line trapezoid covers the p = q and p = q+1 branches; the p < q
branch fails its tail test honestly.  Multi-contour analogues for the two-
and r-variable functions exist on paper but are documented only; this
module is their one-dimensional numeric stand-in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corefn import beta_classical, ln_gamma, ln_gamma_arr
from .extbeta import ext_beta_complex_many
from .hyp import PfqSpec
from .results import DomainError, EvalResult

_POLE_GAP = 1e-3


@dataclass(frozen=True)
class ContourSpec:
    """Vertical path Re(s) = c0, |Im(s)| <= T, trapezoid step h."""

    abscissa: float
    half_height: float = 40.0
    step: float = 0.05

    def __post_init__(self):
        if not (self.half_height > 0.0 and self.step > 0.0):
            raise DomainError("contour needs positive height and step")
        ratio = self.half_height / self.step
        if abs(ratio - round(ratio)) > 1e-9 or ratio < 100:
            raise DomainError("half_height/step must be an integer >= 100")


def default_contour(spec: PfqSpec) -> ContourSpec:
    """Abscissa 0.25 * min(leading upper, 1), clamped under every pole.

    With zero regularization the continued beta ratios contribute poles at
    the paired upper parameters, so those clamp the abscissa as well.
    """
    bounds = [1.0]
    if spec.p == spec.q + 1:
        bounds.append(spec.upper[0][0])
    if spec.reg.is_zero:
        bounds.extend(a for a, _k, _w in spec.pairs())
    c0 = 0.25 * min(bounds)
    if c0 <= 0.0:
        raise DomainError("no admissible abscissa for these parameters")
    return ContourSpec(c0)


def _pole_distance(spec: PfqSpec, c0: float) -> float:
    """Distance from the abscissa to the nearest real-axis pole ladder."""
    if c0 <= 0.0:
        return 0.0
    dists = [c0]  # origin ladder s = 0, -1, ...
    ladders = []
    if spec.p == spec.q + 1:
        ladders.append(spec.upper[0][0])
    if spec.reg.is_zero:
        ladders.extend(a for a, _k, _w in spec.pairs())
    for a in ladders:
        # increasing ladder a, a+1, ...
        dists.append(a - c0 if c0 < a else min(abs(c0 - (a + k))
                                               for k in (math.floor(c0 - a),
                                                         math.ceil(c0 - a))))
    return min(dists)


def mb_eval(spec: PfqSpec, z: float, contour: ContourSpec | None = None,
            tol: float = 1e-6) -> EvalResult:
    """Contour evaluation at a negative real argument.

    All shift multipliers must be 1.  The error estimate combines the
    step-halving difference with the integrand magnitude at the strip ends;
    the strip is doubled (up to three times) while the tail test fails.
    """
    if z >= 0.0:
        raise DomainError("contour path implemented for z < 0 only")
    if any(k != 1 for _a, k in spec.upper):
        raise DomainError("contour path needs all shift multipliers 1")
    spec.validate()
    if contour is None:
        contour = default_contour(spec)
    c0 = contour.abscissa
    if _pole_distance(spec, c0) < _POLE_GAP:
        raise DomainError(f"abscissa {c0} within {_POLE_GAP} of a pole")

    pairs = spec.pairs()
    surplus_lowers = spec.lower[:spec.surplus]
    lognz = math.log(-z)

    def integrand(s: np.ndarray) -> np.ndarray:
        log_phi = np.zeros_like(s)
        log_phi = log_phi + ln_gamma_arr(s) - s * lognz
        if spec.p == spec.q + 1:
            a1 = spec.upper[0][0]
            log_phi = log_phi + ln_gamma_arr(a1 - s) - ln_gamma(complex(a1))
        for b in surplus_lowers:
            log_phi = log_phi + ln_gamma(complex(b)) - ln_gamma_arr(b - s)
        phi = np.exp(log_phi)
        for a, _k, width in pairs:
            if spec.reg.is_zero:
                ratio = np.exp(ln_gamma_arr(a - s) + ln_gamma(complex(width))
                               - ln_gamma_arr(a + width - s)
                               - math.log(beta_classical(a, width)))
            else:
                vals, _err, _n, ok = ext_beta_complex_many(
                    spec.kernel, a - s, width, spec.reg, tol=tol * 1e-3)
                if not ok:
                    raise DomainError("regularized beta batch on the contour "
                                      "did not converge")
                ratio = vals / beta_classical(a, width)
            phi = phi * ratio
        return phi

    T, h = contour.half_height, contour.step
    tail_mag = math.inf
    for _widen in range(4):
        n = int(round(T / h))
        tau = np.arange(-2 * n, 2 * n + 1) * (h / 2.0)
        s = c0 + 1j * tau
        phi = integrand(s)
        tail_mag = float(np.max(np.abs(phi[[0, -1]])))
        if tail_mag <= tol * 1e-3:
            break
        T *= 2.0
    else:
        raise DomainError("contour tail did not decay; widen the strip")

    fine = float(np.sum(phi).real) * (h / 2.0) / (2.0 * math.pi)
    coarse = float(np.sum(phi[::2]).real) * h / (2.0 * math.pi)
    err = abs(fine - coarse) + tail_mag
    return EvalResult(fine, err, tau.size, err <= tol, "mellin_barnes")
