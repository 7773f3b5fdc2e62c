"""The chi_y-genus from Chern numbers.

Per Chern root ``x`` the genus uses the factor

    Q_y(x) = x (1 + y e^{-x}) / (1 - e^{-x}),

which is ``(Omega/2pi) / sinh(Omega/4pi) * (e^{Omega/4pi} + y e^{-Omega/4pi}) / 2``
rewritten with ``x = Omega/2pi``: with ``t = x/2`` the latter equals
``2t (e^{2t} + y) / (e^{2t} - 1)``. Multiplying the factor over all roots,
rewriting in Chern classes and reading off the weight-``d`` part against the
Chern numbers gives ``chi_y``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Union

from .algebra import USeries, YPoly, exp_neg_x, useries_mul, useries_recip, ypoly_eval
from .symfunc import GradedPoly, Partition, graded_exp, partitions, power_sums_in_chern


@dataclass(frozen=True)
class ChernData:
    """Dimension plus Chern numbers ``c_lambda[M]`` for partitions of ``dim``.

    Missing partitions are read as zero.
    """

    dim: int
    chern_numbers: Mapping[Partition, int] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dim must be nonnegative, got {self.dim}")
        clean = {}
        for lam, value in self.chern_numbers.items():
            lam = Partition(lam)
            if lam.weight != self.dim:
                raise ValueError(f"partition {lam.to_key()!r} has weight {lam.weight} != dim {self.dim}")
            clean[lam] = int(value)
        object.__setattr__(self, "chern_numbers", clean)

    def __getitem__(self, lam) -> int:
        return self.chern_numbers.get(Partition(lam), 0)

    @property
    def top_chern_number(self) -> int:
        return self[(self.dim,) if self.dim else ()]

    def same_numbers(self, other: "ChernData") -> bool:
        keys = set(self.chern_numbers) | set(other.chern_numbers)
        return self.dim == other.dim and all(self[k] == other[k] for k in keys)


@dataclass(frozen=True)
class HodgeTable:
    """Hodge numbers ``b[(i, j)]`` for ``0 <= i, j <= dim``; missing entries are zero."""

    dim: int
    b: Mapping[tuple, int] = field(default_factory=dict)

    def __getitem__(self, ij) -> int:
        return self.b.get(tuple(ij), 0)

    def is_kahler_symmetric(self) -> bool:
        d = self.dim
        return all(
            self[i, j] == self[j, i] == self[d - i, d - j]
            for i in range(d + 1)
            for j in range(d + 1)
        )


@dataclass(frozen=True)
class GenusPoly:
    """``chi_y`` as coefficients ``a_0..a_dim`` of ``y**0..y**dim``."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        coeffs = coeffs + (Fraction(0),) * (self.dim + 1 - len(coeffs))
        if len(coeffs) != self.dim + 1:
            raise ValueError(f"y-degree exceeds dimension {self.dim}: {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_ypoly(cls, dim: int, p: YPoly) -> "GenusPoly":
        if p.degree > dim:
            raise ValueError(f"y-degree {p.degree} exceeds dimension {dim}")
        return cls(dim, p.coeffs)

    def as_ypoly(self) -> YPoly:
        return YPoly(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __mul__(self, other: "GenusPoly") -> "GenusPoly":
        return GenusPoly.from_ypoly(self.dim + other.dim, self.as_ypoly() * other.as_ypoly())

    def __str__(self):
        return str(self.as_ypoly())


def chi_factor(order: int) -> USeries:
    """``x (1 + y e^{-x}) / (1 - e^{-x})`` to ``x**order``."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    # (1 - e^{-x}) / x has x^k coefficient (-1)^k / (k+1)!
    shifted = USeries([Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)], order)
    twisted = USeries.one(order) + exp_neg_x(order) * YPoly.y()
    return useries_mul(useries_recip(shifted), twisted)


def _series_log(s: USeries) -> USeries:
    # log of a series with constant term exactly 1
    if s[0] != YPoly.const(1):
        raise ValueError("log needs constant term 1")
    u = s - USeries.one(s.order)
    out = USeries([], s.order)
    power = USeries.one(s.order)
    for k in range(1, s.order + 1):
        power = useries_mul(power, u)
        out = out + power * Fraction((-1) ** (k + 1), k)
    return out


@lru_cache(maxsize=None)
def genus_class(d: int) -> GradedPoly:
    """``prod_{i=1}^d Q_y(x_i)`` as a polynomial in ``c_1..c_d`` up to weight ``d``.

    ``Q_y(0) = 1 + y`` is not a unit, so the log is taken of
    ``S(x) = Q_y((1+y) x) / (1+y)``, whose ``x^k`` coefficient is
    ``q_k (1+y)**(k-1)``: polynomial in ``y`` with constant term 1. The weight-``w``
    part of the product of ``Q_y`` is ``(1+y)**(d-w)`` times that of ``S``.
    """
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d == 0:
        return GradedPoly.one(0)
    q = chi_factor(d)
    one_plus_y = YPoly((1, 1))
    assert q[0] == one_plus_y
    s = USeries([YPoly.const(1)] + [q[k] * one_plus_y ** (k - 1) for k in range(1, d + 1)], d)
    log_s = _series_log(s)

    exponent = GradedPoly(d)
    for k, pk in enumerate(power_sums_in_chern(d), start=1):
        exponent = exponent + pk * log_s[k]
    rescaled = graded_exp(exponent)

    return GradedPoly(
        d,
        {lam: c * one_plus_y ** (d - lam.weight) for lam, c in rescaled.terms.items()},
    )


def chi_y(data: ChernData) -> GenusPoly:
    """Pair the top-weight part of :func:`genus_class` with the Chern numbers."""
    d = data.dim
    for lam in data.chern_numbers:
        if lam.weight != d or (lam and max(lam) > d):
            raise ValueError(f"partition {lam.to_key()!r} does not index a Chern number in dim {d}")
    top = genus_class(d).component(d)
    total = YPoly()
    for lam, coeff in top.terms.items():
        n = data[lam]
        if n:
            total = total + coeff * n
    return GenusPoly.from_ypoly(d, total)


def chi_from_hodge(h: HodgeTable) -> GenusPoly:
    """``sum_{i,j} (-1)**i y**j b_{i,j}`` straight from a Hodge table."""
    coeffs = [sum((-1) ** i * h[i, j] for i in range(h.dim + 1)) for j in range(h.dim + 1)]
    return GenusPoly(h.dim, coeffs)


Which = Union[str, int, Fraction]


def specialize(g: GenusPoly, which: Which) -> Fraction:
    """Evaluate ``chi_y`` at ``y = 0`` (``"todd"``), ``-1`` (``"euler"``),
    ``1`` (``"signature"``) or at an arbitrary rational ``y``."""
    points = {"todd": 0, "euler": -1, "signature": 1}
    if isinstance(which, str):
        try:
            y0 = points[which]
        except KeyError:
            raise ValueError(f"unknown specialization {which!r}") from None
    else:
        y0 = which
    return ypoly_eval(g.as_ypoly(), Fraction(y0))


def serre_symmetry_defect(g: GenusPoly) -> GenusPoly:
    """Coefficientwise ``a_j - (-1)**d a_{d-j}``; zero whenever
    ``chi_y = (-y)**d chi_{1/y}``."""
    d = g.dim
    return GenusPoly(d, [g.coeffs[j] - (-1) ** d * g.coeffs[d - j] for j in range(d + 1)])


def chern_partitions(d: int) -> list[Partition]:
    """Partitions indexing the Chern numbers of a ``d``-fold."""
    return list(partitions(d))
