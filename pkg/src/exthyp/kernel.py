"""Regularization kernels inserted into the Euler-type integrals.

Two closed variants: the plain exponential, and the confluent hypergeometric
kernel with parameters (a, c).  Both have unit zeroth Taylor coefficient and
exponential-type growth on the right half line; on the left half line the
exponential kernel decays superexponentially while the confluent kernel
decays only algebraically (like |z|^-a), which is what drives the tighter
domain rules in the extended-beta module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import corefn
from .results import DomainError, EvalResult

EXP_VARIANT = "exp"
KUMMER_VARIANT = "kummer"


@dataclass(frozen=True)
class KernelSpec:
    variant: str
    a: float = math.nan
    c: float = math.nan

    def __post_init__(self):
        if self.variant not in (EXP_VARIANT, KUMMER_VARIANT):
            raise DomainError(f"unknown kernel variant {self.variant!r}")
        if self.variant == KUMMER_VARIANT:
            if not (self.a > 0.0 and self.c > 0.0):
                raise DomainError("confluent kernel needs a > 0 and c > 0")

    @property
    def asymptotic_amplitude(self) -> float:
        """M0 in the large-argument law M0 * z**omega * exp(z)."""
        if self.variant == EXP_VARIANT:
            return 1.0
        return math.exp(corefn.gammaln_real(self.c) - corefn.gammaln_real(self.a))

    @property
    def asymptotic_exponent(self) -> float:
        return 0.0 if self.variant == EXP_VARIANT else self.a - self.c

    @property
    def decay_order(self) -> float:
        """Algebraic decay rate at -infinity: Theta(z) ~ |z|^-decay_order.

        Infinite for the exponential kernel.
        """
        return math.inf if self.variant == EXP_VARIANT else self.a

    def label(self) -> str:
        if self.variant == EXP_VARIANT:
            return "exp"
        return f"kummer:{self.a:g},{self.c:g}"


EXP_KERNEL = KernelSpec(EXP_VARIANT)


def kummer_kernel(a: float, c: float) -> KernelSpec:
    return KernelSpec(KUMMER_VARIANT, float(a), float(c))


def parse_kernel(text: str) -> KernelSpec:
    """Parse the CLI/config syntax: "exp" or "kummer:a,c"."""
    text = text.strip()
    if text == "exp":
        return EXP_KERNEL
    if text.startswith("kummer:"):
        parts = text[len("kummer:"):].split(",")
        if len(parts) != 2:
            raise DomainError(f"bad kernel syntax {text!r}; want kummer:a,c")
        return kummer_kernel(float(parts[0]), float(parts[1]))
    raise DomainError(f"bad kernel syntax {text!r}; want 'exp' or 'kummer:a,c'")


def theta_coeff(k: KernelSpec, l: int) -> float:
    """Taylor coefficient kappa_l of the kernel; kappa_0 = 1 always."""
    if l < 0:
        raise DomainError("coefficient index must be nonnegative")
    if k.variant == EXP_VARIANT:
        return 1.0
    return corefn.pochhammer(k.a, l) / corefn.pochhammer(k.c, l)


def theta_eval_arr(k: KernelSpec, z: np.ndarray) -> np.ndarray:
    """Vectorized kernel evaluation over a real array."""
    z = np.asarray(z, dtype=float)
    if k.variant == EXP_VARIANT:
        return np.exp(z)
    return corefn.kummer_1f1_arr(k.a, k.c, z)


def theta_eval(k: KernelSpec, z: float) -> EvalResult:
    """Kernel value at a real point with an error estimate."""
    if k.variant == EXP_VARIANT:
        v = math.exp(z)
        return EvalResult(v, abs(v) * 2e-16, 1, True, "series")
    return corefn.kummer_1f1(k.a, k.c, z)


def log_theta_neg_asym(k: KernelSpec, z: np.ndarray) -> np.ndarray:
    """log Theta(z) for z <= -200 (confluent kernel), algebraic branch.

    Only valid where the leading amplitude Gamma(c)/Gamma(c-a) is positive;
    used to combine overflowing power prefactors with the tiny kernel value.
    """
    w = -np.asarray(z, dtype=float)
    g = np.exp(complex(corefn.ln_gamma(complex(k.c))
                       - corefn.ln_gamma(complex(k.c - k.a))))
    amp = g.real
    if amp <= 0.0:
        raise DomainError("confluent kernel is not positive in the far tail")
    s = np.ones_like(w)
    term = np.ones_like(w)
    for j in range(1, 25):
        term = term * (k.a + j - 1) * (k.a - k.c + j) / (j * w)
        s = s + term
    return math.log(amp) - k.a * np.log(w) + np.log(np.maximum(s, 1e-300))
