"""Kernel-regularized gamma and beta functions.

The regularized beta integral weights t**(alpha-1) (1-t)**(beta-1) on (0,1)
by Theta(-b/t - d/(1-t)); the regularized gamma weights t**(z-1) on the half
line by Theta(-t - b/t).  With the exponential kernel the weight vanishes
superexponentially at the touched endpoints, so the usual positivity
constraints on the exponents can be dropped wherever the adjacent
regularization parameter is positive; with the confluent kernel the decay is
only algebraic of order a, so the relaxation is limited to exponents > -a.

All quadrature-backed values are computed in a single overflow-safe
exponential where possible, and batches of shifted first arguments share one
refinement of the node grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernel as kernelmod
from .corefn import beta_classical
from .kernel import EXP_VARIANT, KernelSpec
from .quadrature import (
    MAX_LEVEL,
    integrate_halfline,
    integrate_unit_batch,
    integrate_unit2,
    unit_new_nodes,
)
from .results import DomainError, EvalResult

_BIG_EXPONENT = 600.0


@dataclass(frozen=True)
class RegPair:
    """Nonnegative regularization parameters (b, d)."""

    b: float = 0.0
    d: float = 0.0

    def __post_init__(self):
        if not (self.b >= 0.0 and self.d >= 0.0):
            raise DomainError(f"regularization parameters must be >= 0, "
                              f"got ({self.b}, {self.d})")

    @property
    def is_zero(self) -> bool:
        return self.b == 0.0 and self.d == 0.0

    def swapped(self) -> "RegPair":
        return RegPair(self.d, self.b)


@dataclass(frozen=True)
class BetaArgs:
    alpha: float
    beta: float


_log_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _unit_logs(level: int) -> tuple[np.ndarray, np.ndarray]:
    cached = _log_cache.get(level)
    if cached is None:
        t, tc, _ = unit_new_nodes(level)
        cached = (np.log(t), np.log(tc))
        _log_cache[level] = cached
    return cached


_theta_cache: dict[tuple, np.ndarray] = {}


def _unit_theta(k: KernelSpec, reg: RegPair, level: int) -> np.ndarray:
    """Confluent-kernel values on the level's new unit nodes (cached)."""
    key = (k.a, k.c, reg.b, reg.d, level)
    cached = _theta_cache.get(key)
    if cached is None:
        t, tc, _ = unit_new_nodes(level)
        with np.errstate(over="ignore", under="ignore"):
            arg = -(reg.b / t + reg.d / tc)
            cached = kernelmod.theta_eval_arr(k, arg)
        _theta_cache[key] = cached
    return cached


def _min_exponent(k: KernelSpec, reg_component: float) -> float:
    """Lower bound (exclusive) for a beta exponent on its endpoint."""
    if reg_component > 0.0:
        return -k.decay_order
    return 0.0


def check_beta_domain(k: KernelSpec, alpha: float, beta: float,
                      reg: RegPair) -> None:
    if not alpha > _min_exponent(k, reg.b):
        raise DomainError(
            f"first argument {alpha} out of range for b={reg.b} "
            f"({k.label()} kernel)")
    if not beta > _min_exponent(k, reg.d):
        raise DomainError(
            f"second argument {beta} out of range for d={reg.d} "
            f"({k.label()} kernel)")


def safe_theta_product(k: KernelSpec, powexp: np.ndarray, arg: np.ndarray,
                        theta: np.ndarray | None = None) -> np.ndarray:
    """exp(powexp) * Theta(arg) without intermediate overflow."""
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        if k.variant == EXP_VARIANT:
            return np.exp(powexp + arg)
        if theta is None:
            theta = kernelmod.theta_eval_arr(k, arg)
        big = powexp > _BIG_EXPONENT
        out = np.exp(np.where(big, 0.0, powexp)) * theta
        if np.any(big):
            out[big] = np.exp(powexp[big]
                              + kernelmod.log_theta_neg_asym(k, arg[big]))
        return out


def ext_beta(k: KernelSpec, args: BetaArgs, reg: RegPair = RegPair(),
             tol: float = 1e-12) -> EvalResult:
    """Regularized beta value by unit-interval quadrature."""
    check_beta_domain(k, args.alpha, args.beta, reg)
    alpha, beta = args.alpha, args.beta

    def f(t, tc):
        with np.errstate(over="ignore", under="ignore"):
            powexp = (alpha - 1.0) * np.log(t) + (beta - 1.0) * np.log(tc)
            arg = -(reg.b / t + reg.d / tc)
        return safe_theta_product(k, powexp, arg)

    q = integrate_unit2(f, tol)
    return EvalResult(q.value, q.abs_err_est, q.nodes_used, q.converged,
                      "quadrature")


def ext_beta_shifted_batch_arrays(k: KernelSpec, alpha0: float, count: int,
                                  beta: float, reg: RegPair = RegPair(),
                                  kstep: int = 1, tol: float = 1e-13):
    """Values of the regularized beta at first arguments alpha0 + kstep*m.

    One node grid serves the whole family.  Returns (values, errs,
    nodes_used, converged) as arrays/scalars.
    """
    check_beta_domain(k, alpha0, beta, reg)
    if kstep < 0:
        raise DomainError("batch stride must be >= 0")

    levels_seen = []

    def f0(t, tc):
        level = len(levels_seen)
        levels_seen.append(level)
        lt, ltc = _unit_logs(level)
        with np.errstate(over="ignore", under="ignore"):
            powexp = (alpha0 - 1.0) * lt + (beta - 1.0) * ltc
            arg = -(reg.b / t + reg.d / tc)
        theta = (_unit_theta(k, reg, level)
                 if k.variant != EXP_VARIANT else None)
        return safe_theta_product(k, powexp, arg, theta)

    return integrate_unit_batch(f0, count, tol, kstep=kstep)


def ext_beta_shifted_batch(k: KernelSpec, alpha0: float, count: int,
                           beta: float, reg: RegPair = RegPair(),
                           kstep: int = 1,
                           tol: float = 1e-13) -> list[EvalResult]:
    values, errs, nodes, ok = ext_beta_shifted_batch_arrays(
        k, alpha0, count, beta, reg, kstep, tol)
    return [EvalResult(float(v), float(e), nodes, ok, "quadrature")
            for v, e in zip(values, errs)]


def ext_beta_ratio_batch(k: KernelSpec, alpha0: float, count: int,
                         beta: float, reg: RegPair, kstep: int = 1,
                         tol: float = 1e-13):
    """Batch of regularized-beta values divided by the classical beta.

    These ratios are the per-term coefficients of every extended series.
    Returns (ratios, err_bound, converged).
    """
    values, errs, _, ok = ext_beta_shifted_batch_arrays(
        k, alpha0, count, beta, reg, kstep, tol)
    norm = beta_classical(alpha0, beta)
    return values / norm, float(np.max(errs)) / norm, ok


def ext_gamma(k: KernelSpec, z: float, b: float = 0.0,
              tol: float = 1e-12) -> EvalResult:
    """Regularized gamma value by half-line quadrature."""
    if b < 0.0:
        raise DomainError("regularization parameter must be >= 0")
    lo = 0.0 if b == 0.0 else -k.decay_order
    if not z > lo:
        raise DomainError(f"argument {z} too small for b={b}")
    if not z < k.decay_order:
        raise DomainError(
            f"{k.label()} kernel decays like t**-{k.decay_order} at "
            f"infinity; the integral needs z < {k.decay_order}")

    def f(t):
        with np.errstate(over="ignore", under="ignore"):
            powexp = (z - 1.0) * np.log(t)
            arg = -(t + b / t)
        return safe_theta_product(k, powexp, arg)

    q = integrate_halfline(f, tol)
    return EvalResult(q.value, q.abs_err_est, q.nodes_used, q.converged,
                      "quadrature")


def check_beta_domain_complex(k: KernelSpec, alpha: complex, beta: float,
                              reg: RegPair) -> None:
    if not alpha.real > _min_exponent(k, reg.b):
        raise DomainError(
            f"Re(first argument) = {alpha.real} out of range for b={reg.b}")
    if not beta > _min_exponent(k, reg.d):
        raise DomainError(f"second argument {beta} out of range for d={reg.d}")


def ext_beta_complex_many(k: KernelSpec, alphas: np.ndarray, beta: float,
                          reg: RegPair = RegPair(), tol: float = 1e-12,
                          max_level: int = MAX_LEVEL):
    """Vectorized regularized beta over an array of complex first arguments.

    All first arguments share one quadrature grid; convergence is judged on
    the worst member.  Returns (values, err, nodes_used, converged).
    """
    alphas = np.asarray(alphas, dtype=complex)
    for a in (alphas.real.min(), alphas.real.max()):
        check_beta_domain_complex(k, complex(a), beta, reg)

    totals = None
    prev = None
    err = math.inf
    nodes = 0
    converged = False
    for level in range(max_level + 1):
        t, tc, w = unit_new_nodes(level)
        lt, ltc = _unit_logs(level)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            arg = -(reg.b / t + reg.d / tc)
            base = np.log(w) + (beta - 1.0) * ltc
            if k.variant == EXP_VARIANT:
                base = base + arg
            else:
                theta = _unit_theta(k, reg, level)
                if np.any(theta <= 0.0):
                    raise DomainError(
                        "confluent kernel not positive on the grid; "
                        "complex-batch path needs c > a")
                base = base + np.log(theta)
            s = np.zeros(alphas.shape, dtype=complex)
            for i0 in range(0, alphas.size, 256):
                blk = alphas[i0:i0 + 256]
                e = np.exp(base[None, :] + (blk[:, None] - 1.0) * lt[None, :])
                s[i0:i0 + 256] = e.sum(axis=1)
        nodes += t.size
        h = 2.0 ** -level if level else 1.0
        totals = h * s if totals is None else 0.5 * totals + h * s
        if level >= 1:
            err = float(np.max(np.abs(totals - prev)))
        if level >= 3 and err <= tol:
            converged = True
            break
        prev = totals.copy()
    return totals, err, nodes, converged


def ext_beta_complex(k: KernelSpec, alpha: complex, beta: float,
                     reg: RegPair = RegPair(),
                     tol: float = 1e-12) -> EvalResult:
    """Regularized beta with a complex first argument (real path)."""
    values, err, nodes, ok = ext_beta_complex_many(
        k, np.array([alpha]), beta, reg, tol)
    return EvalResult(complex(values[0]), err, nodes, ok, "quadrature")
