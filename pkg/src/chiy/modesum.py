"""Numerical check that the truncated determinant product over Fourier modes
converges to the closed-form per-eigenvalue factor of the chi_y integrand.

For one curvature eigenvalue ``omega`` and twist ``q = e^{i delta}`` (so
``y = -q``) the truncated product is

    e^{i delta/2} (omega/2pi - i delta)
        * prod_{n=1}^N [1 + (omega/4pi - i delta/2)^2 / (n pi)^2]
                     / [1 + (omega/4pi)^2 / (n pi)^2]

and its limit is ``(omega/2pi) / sinh(omega/4pi) * (e^{omega/4pi} + y e^{-omega/4pi}) / 2``.
Products are accumulated as sums of complex logarithms.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

#: Below this |omega| the removable singularity is replaced by its limit.
OMEGA_EPS = 1e-12
#: Default bound on |omega|.
OMEGA_CAP = 10.0
#: Errors at or below this level are treated as exact convergence (round-off floor).
EXACT_FLOOR = 1e-13


def _check_real(value, what: str) -> float:
    if isinstance(value, complex) or np.iscomplexobj(value):
        raise ValueError(f"{what} must be real, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return value


def closed_form_factor(omega: float, delta: float) -> complex:
    omega = _check_real(omega, "omega")
    delta = _check_real(delta, "delta")
    y = -cmath.exp(1j * delta)
    if abs(omega) < OMEGA_EPS:
        return 1 + y
    t = omega / (4 * math.pi)
    return (omega / (2 * math.pi)) / math.sinh(t) * (math.exp(t) + y * math.exp(-t)) / 2


def _mode_log_sum(omega: float, delta: float, n: np.ndarray) -> complex:
    a = omega / (4 * math.pi)
    b = a - 0.5j * delta
    npi2 = (n * math.pi) ** 2
    return complex(np.sum(np.log1p(b * b / npi2)) - np.sum(np.log1p(a * a / npi2)))


def truncated_factor(omega: float, delta: float, n_max: int, cap: float = OMEGA_CAP) -> complex:
    """Mode product truncated after ``n_max`` modes for a single eigenvalue."""
    omega = _check_real(omega, "omega")
    delta = _check_real(delta, "delta")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if abs(omega) > cap:
        raise ValueError(f"|omega| = {abs(omega)} exceeds cap {cap}")
    prefactor = cmath.exp(0.5j * delta) * (omega / (2 * math.pi) - 1j * delta)
    if prefactor == 0:
        return 0j
    n = np.arange(1, n_max + 1, dtype=float)
    return prefactor * cmath.exp(_mode_log_sum(omega, delta, n))


def sinh_partial_product(x: float, n_max: int) -> float:
    """``x * prod_{n=1}^N (1 + (x / n pi)^2)``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if x == 0:
        return 0.0
    n = np.arange(1, n_max + 1, dtype=float)
    return x * math.exp(float(np.sum(np.log1p((x / (n * math.pi)) ** 2))))


def sin_partial_product(x: float, n_max: int) -> float:
    """``x * prod_{n=1}^N (1 - (x / n pi)^2)``, the partial product for ``sin x``."""
    n = np.arange(1, n_max + 1, dtype=float)
    return x * float(np.prod(1 - (x / (n * math.pi)) ** 2))


@dataclass(frozen=True)
class ModeSumConfig:
    omegas: Sequence[float]
    delta: float
    n_max: int
    cap: float = OMEGA_CAP
    richardson: bool = False

    def __post_init__(self):
        omegas = tuple(_check_real(w, "omega") for w in self.omegas)
        for w in omegas:
            if abs(w) > self.cap:
                raise ValueError(f"|omega| = {abs(w)} exceeds cap {self.cap}")
        delta = _check_real(self.delta, "delta")
        if not 0 <= delta < 2 * math.pi:
            raise ValueError(f"delta must lie in [0, 2pi), got {delta}")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "delta", delta)


def _error(value: complex, target: complex) -> tuple[float, float]:
    """Absolute error and the error used for convergence: relative, or
    absolute where the target vanishes."""
    abs_err = abs(value - target)
    if abs(target) < EXACT_FLOOR:
        return abs_err, abs_err
    return abs_err, abs_err / abs(target)


def _ratio(err_n: float, err_2n: float) -> Optional[float]:
    if err_n <= EXACT_FLOOR and err_2n <= EXACT_FLOOR:
        return None
    if err_2n == 0:
        return math.inf
    return err_n / err_2n


@dataclass(frozen=True)
class FactorCheck:
    """Truncated product at ``N`` and ``2N`` against the closed form.

    ``ratio`` is ``error_n / error_2n``; ``None`` means both errors are at
    the round-off floor (the truncation is exact for that input).
    """

    omega: Optional[float]
    truncated_n: complex
    truncated_2n: complex
    closed: complex
    abs_error_n: float
    error_n: float
    abs_error_2n: float
    error_2n: float
    ratio: Optional[float]
    extrapolated: Optional[complex] = None

    @classmethod
    def build(cls, omega, t_n, t_2n, closed, richardson=False):
        abs_n, err_n = _error(t_n, closed)
        abs_2n, err_2n = _error(t_2n, closed)
        return cls(
            omega, t_n, t_2n, closed, abs_n, err_n, abs_2n, err_2n,
            _ratio(err_n, err_2n),
            2 * t_2n - t_n if richardson else None,
        )

    def ratio_ok(self, lo: float = 1.7, hi: float = 2.3) -> bool:
        return self.ratio is None or lo <= self.ratio <= hi


@dataclass(frozen=True)
class ConvergenceReport:
    n_max: int
    delta: float
    factors: list = field(default_factory=list)
    product: Optional[FactorCheck] = None

    def format_table(self) -> str:
        rows = [f"delta={self.delta:.6g}  N={self.n_max}",
                f"{'omega':>8} {'closed':>26} {'err(N)':>10} {'err(2N)':>10} {'ratio':>7}"]
        for f in self.factors + [self.product]:
            label = "product" if f.omega is None else f"{f.omega:8.4g}"
            ratio = "exact" if f.ratio is None else f"{f.ratio:7.4f}"
            rows.append(f"{label:>8} {f.closed:>26.10g} {f.error_n:10.3e} {f.error_2n:10.3e} {ratio:>7}")
        return "\n".join(rows)


def convergence_report(cfg: ModeSumConfig) -> ConvergenceReport:
    """Compare the truncated products at ``N`` and ``2N`` with the closed
    form, eigenvalue by eigenvalue and for their product."""
    n = cfg.n_max
    factors = []
    prod_n, prod_2n, prod_closed = 1 + 0j, 1 + 0j, 1 + 0j
    for w in cfg.omegas:
        t_n = truncated_factor(w, cfg.delta, n, cfg.cap)
        t_2n = truncated_factor(w, cfg.delta, 2 * n, cfg.cap)
        closed = closed_form_factor(w, cfg.delta)
        factors.append(FactorCheck.build(w, t_n, t_2n, closed, cfg.richardson))
        prod_n *= t_n
        prod_2n *= t_2n
        prod_closed *= closed
    total = FactorCheck.build(None, prod_n, prod_2n, prod_closed, cfg.richardson)
    return ConvergenceReport(n, cfg.delta, factors, total)


def taylor_coefficients_fd(delta: float, h: float = 1e-3) -> tuple[complex, complex, complex]:
    """Value, first derivative and half the second derivative of
    ``closed_form_factor`` in the variable ``x = omega / 2pi`` at ``x = 0``,
    by central differences."""
    def f(x):
        return closed_form_factor(2 * math.pi * x, delta)

    f0, fp, fm = f(0.0), f(h), f(-h)
    return f0, (fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (2 * h * h)


DEFAULT_GRID_OMEGAS = (0.0, 0.5, 1.0, 2.0)
DEFAULT_GRID_DELTAS = (0.0, math.pi / 2, math.pi, 3 * math.pi / 2)
