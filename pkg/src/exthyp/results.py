"""Shared result container and exception types."""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Arguments violate a function's domain of definition/convergence."""


class KernelMismatchError(DomainError):
    """Operation requires a specific regularization kernel."""


class NonFiniteSampleError(ValueError):
    """A quadrature integrand returned NaN/Inf at an interior node."""


class ConvergenceError(RuntimeError):
    """Iteration ran out of budget before meeting the tolerance."""


@dataclass(frozen=True)
class EvalResult:
    """Value of a function evaluation plus accuracy diagnostics.

    ``abs_err_est`` is an absolute error estimate; ``terms_or_nodes`` counts
    series terms or quadrature nodes depending on ``method``.
    """

    value: float | complex
    abs_err_est: float
    terms_or_nodes: int
    converged: bool
    method: str

    def expect(self) -> float | complex:
        """Return the value, raising if the evaluation did not converge."""
        if not self.converged:
            raise ConvergenceError(
                f"evaluation did not converge (method={self.method}, "
                f"err~{self.abs_err_est:.3g})"
            )
        return self.value
