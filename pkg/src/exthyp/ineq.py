"""Hardy-Hilbert machinery with exponentially regularized kernels.

The bilinear form weights f(x) g(y) by a homogeneous two-factor kernel times
an exponential regularization in y/x and x/y.  Its sharp-style constant is a
product of two weight-function normalizations, each a regularized Gauss
value by way of two half-line integral identities.  Verification is against
a closed family of nonnegative test functions whose decay is known, so all
truncation errors are boundable; the sharpness of the constant itself is
not asserted.

Everything here fixes the exponential kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corefn import beta_classical
from .extbeta import RegPair
from .hyp import ext_2f1
from .kernel import EXP_KERNEL
from .quadrature import halfline_grid, unit_grid
from .results import DomainError, EvalResult


@dataclass(frozen=True)
class HilbertParams:
    """Exponent pair, kernel exponents, scale pair, and weight offsets."""

    p: float
    q: float
    s1: float
    s2: float
    alpha1: float
    alpha2: float
    A1: float
    A2: float
    ptilde: float = 0.0
    qtilde: float = 0.0

    def __post_init__(self):
        if not (self.p > 1.0 and self.q > 1.0):
            raise DomainError("needs p > 1 and q > 1")
        if 1.0 / self.p + 1.0 / self.q < 1.0 - 1e-12:
            raise DomainError("needs 1/p + 1/q >= 1")
        if not self.s1 + self.s2 > 0.0:
            raise DomainError("needs s1 + s2 > 0")
        if not (self.alpha1 > 0.0 and self.alpha2 > 0.0):
            raise DomainError("needs positive scale pair")
        if not 0.5 < self.alpha1 / self.alpha2 < 2.0:
            raise DomainError("needs 1/2 < alpha1/alpha2 < 2")
        if not (self.ptilde >= 0.0 and self.qtilde >= 0.0):
            raise DomainError("needs nonnegative regularization offsets")
        lo1 = (1.0 - self.s1 - self.s2) / self.pprime
        lo2 = (1.0 - self.s1 - self.s2) / self.qprime
        if not lo1 < self.A1 < 1.0 / self.pprime:
            raise DomainError(f"A1 must lie in ({lo1}, {1.0 / self.pprime})")
        if not lo2 < self.A2 < 1.0 / self.qprime:
            raise DomainError(f"A2 must lie in ({lo2}, {1.0 / self.qprime})")

    @property
    def pprime(self) -> float:
        return self.p / (self.p - 1.0)

    @property
    def qprime(self) -> float:
        return self.q / (self.q - 1.0)

    @property
    def lam(self) -> float:
        return 1.0 / self.pprime + 1.0 / self.qprime


def classical_point() -> HilbertParams:
    """The plain 1/(x+y) kernel with constant pi."""
    return HilbertParams(2.0, 2.0, 1.0, 0.0, 1.0, 1.0, 0.25, 0.25, 0.0, 0.0)


def midpoint_params(p: float, q: float, s1: float, s2: float,
                    alpha1: float, alpha2: float, ptilde: float = 0.0,
                    qtilde: float = 0.0) -> HilbertParams:
    """Parameters with both weight offsets at their interval midpoints."""
    pprime = p / (p - 1.0)
    qprime = q / (q - 1.0)
    A1 = (2.0 - s1 - s2) / (2.0 * pprime)
    A2 = (2.0 - s1 - s2) / (2.0 * qprime)
    return HilbertParams(p, q, s1, s2, alpha1, alpha2, A1, A2, ptilde, qtilde)


def lemma2_identity(which: str, a: float, b_par: float, c: float,
                    alpha: float, gamma: float, ptilde: float, qtilde: float,
                    tol: float = 1e-10) -> tuple[EvalResult, EvalResult]:
    """Half-line rational-exponential integral against its closed form.

    which = "a": scale gamma in the exponential, argument (gamma-alpha)/gamma
    and leading parameter a on the right; which = "b": the alpha-scaled
    mirror with leading parameter c.
    """
    if which not in ("a", "b"):
        raise DomainError(f"unknown identity {which!r}")
    if not (a + c > b_par > 0.0):
        raise DomainError("needs a + c > b > 0")
    if not (alpha > 0.0 and gamma > 0.0):
        raise DomainError("needs positive scale parameters")
    if not (ptilde >= 0.0 and qtilde >= 0.0):
        raise DomainError("needs nonnegative offsets")
    scale = gamma if which == "a" else alpha

    def f(x):
        with np.errstate(over="ignore", under="ignore"):
            e = (b_par - 1.0) * np.log(x) - c * np.log1p(gamma * x) \
                - a * np.log1p(alpha * x)
            if qtilde > 0.0:
                e = e - scale * qtilde * x
            if ptilde > 0.0:
                e = e - (ptilde / scale) / x
            return np.exp(e)

    from .quadrature import integrate_halfline

    q = integrate_halfline(f, tol * 1e-2)
    lhs = EvalResult(q.value, q.abs_err_est, q.nodes_used, q.converged,
                     "quadrature")
    pref = (math.exp(ptilde + qtilde) * scale ** -b_par
            * beta_classical(b_par, c + a - b_par))
    if which == "a":
        fval = ext_2f1(EXP_KERNEL, a, b_par, c + a, (gamma - alpha) / gamma,
                       RegPair(ptilde, qtilde), tol)
    else:
        fval = ext_2f1(EXP_KERNEL, c, b_par, c + a, (alpha - gamma) / alpha,
                       RegPair(ptilde, qtilde), tol)
    rhs = EvalResult(pref * fval.value, abs(pref) * fval.abs_err_est,
                     fval.terms_or_nodes, fval.converged, fval.method)
    return lhs, rhs


def weight_norm_f(hp: HilbertParams, ptilde: float, qtilde: float,
                  tol: float = 1e-10) -> float:
    """Normalization constant of the x-side weight function."""
    qp = hp.qprime
    bb = 1.0 - qp * hp.A2
    f = ext_2f1(EXP_KERNEL, hp.s2, bb, hp.s1 + hp.s2,
                (hp.alpha1 - hp.alpha2) / hp.alpha1,
                RegPair(ptilde, qtilde), tol)
    return (hp.alpha1 ** (hp.A2 - 1.0 / qp)
            * beta_classical(bb, hp.s1 + hp.s2 + qp * hp.A2 - 1.0) ** (1.0 / qp)
            * f.value ** (1.0 / qp))


def weight_norm_g(hp: HilbertParams, ptilde: float, qtilde: float,
                  tol: float = 1e-10) -> float:
    """Normalization constant of the y-side weight function."""
    pp = hp.pprime
    bb = 1.0 - pp * hp.A1
    f = ext_2f1(EXP_KERNEL, hp.s1, bb, hp.s1 + hp.s2,
                (hp.alpha1 - hp.alpha2) / hp.alpha1,
                RegPair(ptilde, qtilde), tol)
    return (hp.alpha1 ** (-hp.s1 / pp)
            * hp.alpha2 ** ((1.0 - hp.s2) / pp - hp.A1)
            * beta_classical(bb, hp.s1 + hp.s2 + pp * hp.A1 - 1.0) ** (1.0 / pp)
            * f.value ** (1.0 / pp))


def weight_F(hp: HilbertParams, x: float, tol: float = 1e-10) -> EvalResult:
    """Closed form of the x-side weight: power law times its normalization."""
    if x <= 0.0:
        raise DomainError("needs x > 0")
    qp = hp.qprime
    v = (math.exp((hp.ptilde + hp.qtilde) / qp)
         * weight_norm_f(hp, hp.ptilde, hp.qtilde, tol)
         * x ** ((1.0 - hp.s1 - hp.s2) / qp - hp.A2))
    return EvalResult(v, abs(v) * 1e-11, 1, True, "series")


def weight_G(hp: HilbertParams, y: float, tol: float = 1e-10) -> EvalResult:
    """Closed form of the y-side weight."""
    if y <= 0.0:
        raise DomainError("needs y > 0")
    pp = hp.pprime
    v = (math.exp((hp.ptilde + hp.qtilde) / pp)
         * weight_norm_g(hp, hp.ptilde, hp.qtilde, tol)
         * y ** ((1.0 - hp.s1 - hp.s2) / pp - hp.A1))
    return EvalResult(v, abs(v) * 1e-11, 1, True, "series")


def weight_F_quadrature(hp: HilbertParams, x: float,
                        tol: float = 1e-10) -> float:
    """Direct half-line evaluation of the x-side weight (verification path)."""
    qp = hp.qprime

    def f(y):
        with np.errstate(over="ignore", under="ignore"):
            e = (-qp * hp.A2 * np.log(y)
                 - hp.s1 * np.log(x + hp.alpha1 * y)
                 - hp.s2 * np.log(x + hp.alpha2 * y))
            if hp.qtilde > 0.0:
                e = e - hp.alpha1 * hp.qtilde * y / x
            if hp.ptilde > 0.0:
                e = e - (hp.ptilde / hp.alpha1) * x / y
            return np.exp(e)

    from .quadrature import integrate_halfline

    q = integrate_halfline(f, tol)
    return q.value ** (1.0 / qp)


def weight_G_quadrature(hp: HilbertParams, y: float,
                        tol: float = 1e-10) -> float:
    """Direct half-line evaluation of the y-side weight.

    The x/y offset term carries alpha2 inverted and the y/x term alpha2
    multiplied (the form the closed-form derivation actually uses).
    """
    pp = hp.pprime

    def f(x):
        with np.errstate(over="ignore", under="ignore"):
            e = (-pp * hp.A1 * np.log(x)
                 - hp.s1 * np.log(x + hp.alpha1 * y)
                 - hp.s2 * np.log(x + hp.alpha2 * y))
            if hp.qtilde > 0.0:
                e = e - (hp.qtilde / hp.alpha2) * x / y
            if hp.ptilde > 0.0:
                e = e - hp.ptilde * hp.alpha2 * y / x
            return np.exp(e)

    from .quadrature import integrate_halfline

    q = integrate_halfline(f, tol)
    return q.value ** (1.0 / pp)


def hilbert_constant(hp: HilbertParams, tol: float = 1e-10) -> float:
    """Product of the two weight normalizations at lifted offsets."""
    return (weight_norm_f(hp, hp.qprime * hp.ptilde, hp.qprime * hp.qtilde,
                          tol)
            * weight_norm_g(hp, hp.pprime * hp.ptilde,
                            hp.pprime * hp.qtilde, tol))


@dataclass(frozen=True)
class TestFunction:
    """Closed nonnegative family with analytically known decay.

    exp_decay(k): x^k e^-x on (0, inf); bump(a, b): smooth compact bump on
    [a, b]; power_cut(sigma, X): x^sigma on (0, X].  The amplitude scales
    the whole function (zero amplitude gives the identically-zero case).
    """

    tag: str
    params: tuple[float, ...] = ()
    amplitude: float = 1.0

    def support_top(self) -> float:
        if self.tag == "exp_decay":
            return math.inf
        if self.tag == "bump":
            return self.params[1]
        if self.tag == "power_cut":
            return self.params[1]
        raise DomainError(f"unknown test function {self.tag!r}")

    def log_values(self, x: np.ndarray) -> np.ndarray:
        """log f(x) with -inf outside the support (amplitude excluded)."""
        x = np.asarray(x, dtype=float)
        with np.errstate(over="ignore", under="ignore", divide="ignore",
                         invalid="ignore"):
            if self.tag == "exp_decay":
                k = self.params[0]
                return k * np.log(x) - x
            if self.tag == "bump":
                a, b = self.params
                u = (x - a) / (b - a)
                inside = (u > 0.0) & (u < 1.0)
                out = np.full_like(x, -math.inf)
                uu = u[inside]
                out[inside] = 4.0 - 1.0 / (uu * (1.0 - uu))
                return out
            if self.tag == "power_cut":
                sigma, top = self.params
                out = np.where(x <= top, sigma * np.log(x), -math.inf)
                return out
        raise DomainError(f"unknown test function {self.tag!r}")

    def __call__(self, x: np.ndarray) -> np.ndarray:
        if self.amplitude == 0.0:
            return np.zeros_like(np.asarray(x, dtype=float))
        return self.amplitude * np.exp(self.log_values(x))

    def norm_exponent_at_zero(self, power: float) -> float:
        """Exponent of f(x)^power near x = 0 (for norm-finiteness checks)."""
        if self.tag == "exp_decay":
            return self.params[0] * power
        if self.tag == "power_cut":
            return self.params[0] * power
        return 0.0  # bump vanishes to all orders at its support edges


def exp_decay(k: float, amplitude: float = 1.0) -> TestFunction:
    return TestFunction("exp_decay", (float(k),), amplitude)


def bump(a: float, b: float, amplitude: float = 1.0) -> TestFunction:
    if not 0.0 <= a < b:
        raise DomainError("needs 0 <= a < b")
    return TestFunction("bump", (float(a), float(b)), amplitude)


def power_cut(sigma: float, top: float, amplitude: float = 1.0) -> TestFunction:
    if top <= 0.0 or sigma < 0.0:
        raise DomainError("needs top > 0 and sigma >= 0")
    return TestFunction("power_cut", (float(sigma), float(top)), amplitude)


def parse_test_function(text: str) -> TestFunction:
    """CLI syntax: exp_decay:k | bump:a,b | power_cut:sigma,X | zero."""
    text = text.strip()
    if text == "zero":
        return exp_decay(0.0, amplitude=0.0)
    if ":" not in text:
        raise DomainError(f"bad test-function syntax {text!r}")
    tag, rest = text.split(":", 1)
    vals = [float(v) for v in rest.split(",")]
    if tag == "exp_decay" and len(vals) == 1:
        return exp_decay(vals[0])
    if tag == "bump" and len(vals) == 2:
        return bump(vals[0], vals[1])
    if tag == "power_cut" and len(vals) == 2:
        return power_cut(vals[0], vals[1])
    raise DomainError(f"bad test-function syntax {text!r}")


def _axis_nodes(level: int, top: float):
    """(nodes, log-weights) for a support (0, top)."""
    if math.isinf(top):
        g = halfline_grid(level)
        return g.nodes, np.log(g.weights)
    g = unit_grid(level)
    return g.nodes * top, np.log(g.weights * top)


def _weighted_norm(h: TestFunction, exponent: float, power: float,
                   tol: float = 1e-11, max_level: int = 9) -> float:
    """(int x^exponent f(x)^power dx)^(1/power) with finiteness checks."""
    if h.amplitude == 0.0:
        return 0.0
    if exponent + h.norm_exponent_at_zero(power) <= -1.0:
        raise DomainError("weighted norm diverges at the origin")
    top = h.support_top()
    prev = None
    value = None
    for level in range(2, max_level + 1):
        x, logw = _axis_nodes(level, top)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            e = logw + exponent * np.log(x) + power * h.log_values(x)
            s = float(np.exp(e).sum())
        if prev is not None and abs(s - prev) <= tol * (1.0 + abs(s)) \
                and level >= 4:
            value = s
            break
        prev = s
        value = s
    return abs(h.amplitude) * value ** (1.0 / power)


@dataclass(frozen=True)
class HilbertReport:
    constant: float
    lhs: float
    rhs: float
    margin: float
    holds: bool
    lhs_equiv: float
    rhs_equiv: float
    margin_equiv: float
    holds_equiv: bool


def _kernel_log_rows(hp: HilbertParams, x: np.ndarray, lx: np.ndarray,
                     y: np.ndarray) -> np.ndarray:
    """log of the row sums int K(x, y_j) f(x) dx (blocked, shift-stabilized)."""
    lam = hp.lam
    acoef = hp.alpha1 * hp.qtilde + hp.alpha2 * hp.ptilde
    bcoef = acoef / (hp.alpha1 * hp.alpha2)
    out = np.empty(y.size)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        for j0 in range(0, y.size, 256):
            blk = slice(j0, min(j0 + 256, y.size))
            yb = y[blk]
            ek = (lx[None, :]
                  - lam * hp.s1 * np.log(x[None, :] + hp.alpha1 * yb[:, None])
                  - lam * hp.s2 * np.log(x[None, :] + hp.alpha2 * yb[:, None]))
            if acoef > 0.0:
                ek = ek - (acoef * yb[:, None] / x[None, :]
                           + bcoef * x[None, :] / yb[:, None])
            m = ek.max(axis=1)
            safe = np.isfinite(m)
            sums = np.exp(ek - np.where(safe, m, 0.0)[:, None]).sum(axis=1)
            out[blk] = np.where(safe, m + np.log(sums), -math.inf)
    return out


def hilbert_check(hp: HilbertParams, f: TestFunction, g: TestFunction,
                  tol: float = 1e-8, max_level: int = 8) -> HilbertReport:
    """Evaluate both inequalities on a test pair.

    The bilinear form and the single-function equivalent form are computed
    by iterated double-exponential quadrature over the supports (the
    equivalent form's outer variable always runs over the whole half line);
    right sides use the closed constant and the weighted norms.
    """
    qp, pp = hp.qprime, hp.pprime
    vexp = (qp / pp) * (hp.s1 + hp.s2 - 1.0) + qp * (hp.A1 - hp.A2)

    lhs = 0.0
    if f.amplitude != 0.0 and g.amplitude != 0.0:
        prev = None
        for level in range(2, max_level + 1):
            x, logwx = _axis_nodes(level, f.support_top())
            y, logwy = _axis_nodes(level, g.support_top())
            with np.errstate(over="ignore", under="ignore",
                             invalid="ignore"):
                lx = logwx + f.log_values(x)
                log_rows = _kernel_log_rows(hp, x, lx, y)
                total = float(np.exp(logwy + g.log_values(y)
                                     + log_rows).sum())
            if prev is not None and level >= 4 \
                    and abs(total - prev) <= tol * (1.0 + abs(total)):
                lhs = total
                break
            prev = total
            lhs = total
        lhs *= f.amplitude * g.amplitude

    lhs_equiv = 0.0
    if f.amplitude != 0.0:
        prev = None
        for level in range(2, max_level + 1):
            x, logwx = _axis_nodes(level, f.support_top())
            y, logwy = _axis_nodes(level, math.inf)
            with np.errstate(over="ignore", under="ignore",
                             invalid="ignore"):
                lx = logwx + f.log_values(x)
                log_rows = _kernel_log_rows(hp, x, lx, y)
                inner_tot = float(np.exp(logwy + vexp * np.log(y)
                                         + qp * log_rows).sum())
            if prev is not None and level >= 4 \
                    and abs(inner_tot - prev) <= tol * (1.0 + abs(inner_tot)):
                lhs_equiv = inner_tot
                break
            prev = inner_tot
            lhs_equiv = inner_tot
        lhs_equiv = f.amplitude * lhs_equiv ** (1.0 / qp)

    const = hilbert_constant(hp)
    wf = (hp.p / qp) * (1.0 - hp.s1 - hp.s2) + hp.p * (hp.A1 - hp.A2)
    wg = (hp.q / pp) * (1.0 - hp.s1 - hp.s2) + hp.q * (hp.A2 - hp.A1)
    fnorm = _weighted_norm(f, wf, hp.p)
    gnorm = _weighted_norm(g, wg, hp.q)
    pref = math.exp(2.0 * (hp.ptilde + hp.qtilde)) * const
    rhs = pref * fnorm * gnorm
    rhs_equiv = pref * fnorm
    slack = 1.0 + 1e-9
    return HilbertReport(
        constant=const,
        lhs=lhs,
        rhs=rhs,
        margin=rhs - lhs,
        holds=lhs <= rhs * slack,
        lhs_equiv=lhs_equiv,
        rhs_equiv=rhs_equiv,
        margin_equiv=rhs_equiv - lhs_equiv,
        holds_equiv=lhs_equiv <= rhs_equiv * slack,
    )
