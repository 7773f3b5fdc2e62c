"""Partitions, the weight-truncated ring of Chern classes, Newton identities
and a brute-force symmetrization oracle.

Chern classes are identified with the elementary symmetric polynomials of
the Chern roots: ``c_k = e_k(x_1, ..., x_d)``. A monomial
``c_{l1} c_{l2} ... c_{lr}`` is indexed by the partition ``(l1, ..., lr)``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterator, Mapping

from .algebra import Scalar, USeries, YPoly

#: Largest number of roots the brute-force oracle will expand.
BRUTE_FORCE_MAX_DIM = 6


class SymmetrizationError(ArithmeticError):
    """Raised when an expansion that must be symmetric turns out not to be."""


class Partition(tuple):
    """A nonincreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def __add__(self, other) -> "Partition":
        # Multiplying the monomials c_lambda * c_mu merges the parts.
        return Partition(tuple(self) + tuple(other))

    def to_key(self) -> str:
        return ",".join(str(p) for p in self)

    @classmethod
    def from_key(cls, key: str) -> "Partition":
        """Parse ``"2,1,1"``. Parts may come in any order; blanks are rejected."""
        key = key.strip()
        if not key:
            return cls(())
        try:
            parts = [int(tok) for tok in key.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition key {key!r}") from None
        if any(p <= 0 for p in parts):
            raise ValueError(f"malformed partition key {key!r}: parts must be positive")
        return cls(parts)

    def __repr__(self):
        return f"Partition({list(self)})"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with parts at most ``max_part``, in reverse
    lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for p in gen(n, max_part):
        yield Partition(p)


class GradedPoly:
    """Polynomial in ``c_1..c_d`` truncated above weight ``d``.

    ``terms`` maps partitions to nonzero :class:`YPoly` coefficients.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        clean: dict[Partition, YPoly] = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = c if isinstance(c, YPoly) else YPoly.const(c)
            if lam and max(lam) > dim:
                raise ValueError(f"part of {lam} exceeds dimension {dim}")
            if lam.weight > dim or c.is_zero():
                continue
            clean[lam] = clean.get(lam, YPoly()) + c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if not v.is_zero()})

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoly is immutable")

    @classmethod
    def one(cls, dim: int) -> "GradedPoly":
        return cls(dim, {Partition(): 1})

    @classmethod
    def chern(cls, k: int, dim: int) -> "GradedPoly":
        """The single class ``c_k`` (``c_0 = 1``)."""
        return cls(dim, {Partition((k,) if k else ()): 1})

    def coeff(self, lam) -> YPoly:
        return self.terms.get(Partition(lam), YPoly())

    def component(self, weight: int) -> "GradedPoly":
        return GradedPoly(self.dim, {k: v for k, v in self.terms.items() if k.weight == weight})

    def constant(self) -> YPoly:
        return self.coeff(())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "GradedPoly") -> None:
        if not isinstance(other, GradedPoly):
            raise TypeError(f"expected GradedPoly, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, YPoly)):
            other = GradedPoly(self.dim, {Partition(): other})
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, YPoly()) + v
        return GradedPoly(self.dim, terms)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.dim, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, YPoly)):
            return GradedPoly(self.dim, {k: v * other for k, v in self.terms.items()})
        return graded_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "GradedPoly":
        return GradedPoly(self.dim, {k: v / scalar for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "GradedPoly":
        result = GradedPoly.one(self.dim)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        return f"GradedPoly(dim={self.dim}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for lam in sorted(self.terms, key=lambda p: (p.weight, tuple(-x for x in p))):
            mono = "*".join(f"c{p}" for p in lam) or "1"
            chunks.append(f"({self.terms[lam]})*{mono}")
        return " + ".join(chunks)


def graded_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """Product in the Chern ring, dropping every term of weight above ``dim``."""
    a._check(b)
    out: dict[Partition, YPoly] = {}
    for la, ca in a.terms.items():
        for lb, cb in b.terms.items():
            if la.weight + lb.weight > a.dim:
                continue
            lam = la + lb
            out[lam] = out.get(lam, YPoly()) + ca * cb
    return GradedPoly(a.dim, out)


def graded_exp(a: GradedPoly) -> GradedPoly:
    """``sum_k a**k / k!`` for ``a`` without a weight-0 term."""
    if not a.constant().is_zero():
        raise ValueError("graded_exp needs an argument with zero constant term")
    result = GradedPoly.one(a.dim)
    power = GradedPoly.one(a.dim)
    for k in range(1, a.dim + 1):
        power = power * a
        if power.is_zero():
            break
        result = result + power / factorial(k)
    return result


def graded_log(a: GradedPoly) -> GradedPoly:
    """``sum_k (-1)**(k+1) (a-1)**k / k`` for ``a`` with constant term 1."""
    if a.constant() != YPoly.const(1):
        raise ValueError("graded_log needs an argument with constant term 1")
    u = a - 1
    result = GradedPoly(a.dim)
    power = GradedPoly.one(a.dim)
    for k in range(1, a.dim + 1):
        power = power * u
        if power.is_zero():
            break
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def power_sums_in_chern(d: int) -> list[GradedPoly]:
    """``[p_1, ..., p_d]`` written in Chern classes through Newton's identities.

    ``p_k = sum_{i=1}^{k-1} (-1)**(i-1) c_i p_{k-i} + (-1)**(k-1) k c_k``.
    """
    ps: list[GradedPoly] = []
    for k in range(1, d + 1):
        pk = GradedPoly.chern(k, d) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            pk = pk + GradedPoly.chern(i, d) * ps[k - i - 1] * (-1) ** (i - 1)
        ps.append(pk)
    return ps


def power_sum_in_chern(k: int, d: int) -> GradedPoly:
    """The power sum ``x_1**k + ... + x_d**k`` as a polynomial in ``c_1..c_d``."""
    if not 1 <= k <= d:
        raise ValueError(f"power sum index {k} out of range 1..{d}")
    return power_sums_in_chern(d)[k - 1]


def elementary_from_power_sums(ps: list[GradedPoly]) -> list[GradedPoly]:
    """Inverse Newton recurrence: ``e_k = (1/k) sum_{i=1}^k (-1)**(i-1) e_{k-i} p_i``.

    Returns ``[e_0, e_1, ..., e_n]`` for ``n = len(ps)``.
    """
    if not ps:
        return []
    d = ps[0].dim
    es = [GradedPoly.one(d)]
    for k in range(1, len(ps) + 1):
        acc = GradedPoly(d)
        for i in range(1, k + 1):
            acc = acc + es[k - i] * ps[i - 1] * (-1) ** (i - 1)
        es.append(acc / k)
    return es


# --- brute-force oracle -------------------------------------------------------
# Multivariate polynomials in the roots are dicts: exponent tuple -> YPoly.

def _poly_mul(a: dict, b: dict, max_deg: int) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > max_deg:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, YPoly()) + ca * cb
    return {e: c for e, c in out.items() if not c.is_zero()}


def _elementary(k: int, d: int) -> dict:
    out = {}
    for idx in combinations(range(d), k):
        e = [0] * d
        for i in idx:
            e[i] = 1
        out[tuple(e)] = YPoly.const(1)
    return out


def brute_force_class(factor: USeries, d: int) -> GradedPoly:
    """Expand ``prod_{i=1}^d factor(x_i)`` in ``d`` explicit roots and rewrite
    it in Chern classes by leading-term elimination.

    Independent of the log/exp route used by the genus engine: it never
    divides by anything but integers and never touches power sums.
    """
    if d < 0 or d > BRUTE_FORCE_MAX_DIM:
        raise ValueError(f"brute-force oracle supports 0 <= d <= {BRUTE_FORCE_MAX_DIM}, got {d}")
    if factor.order < d:
        raise ValueError(f"factor order {factor.order} is below dimension {d}")

    poly: dict = {(0,) * d: YPoly.const(1)}
    for i in range(d):
        single = {}
        for k in range(d + 1):
            if not factor[k].is_zero():
                e = [0] * d
                e[i] = k
                single[tuple(e)] = factor[k]
        poly = _poly_mul(poly, single, d)

    elem = [None] + [_elementary(k, d) for k in range(1, d + 1)]
    result: dict[Partition, YPoly] = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        if any(lead[i] < lead[i + 1] for i in range(d - 1)):
            raise SymmetrizationError(f"expansion is not symmetric at exponent {lead}")
        parts = []
        mono: dict = {(0,) * d: YPoly.const(1)}
        for k in range(1, d + 1):
            mult = lead[k - 1] - (lead[k] if k < d else 0)
            parts += [k] * mult
            for _ in range(mult):
                mono = _poly_mul(mono, elem[k], d)
        lam = Partition(parts)
        result[lam] = result.get(lam, YPoly()) + c
        for e, ce in mono.items():
            v = poly.get(e, YPoly()) - c * ce
            if v.is_zero():
                poly.pop(e, None)
            else:
                poly[e] = v
    return GradedPoly(d, result)
