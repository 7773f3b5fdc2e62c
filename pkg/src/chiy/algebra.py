"""Exact coefficient arithmetic: rationals, polynomials in ``y`` and
truncated power series in ``x`` with polynomial-in-``y`` coefficients.

Rationals are :class:`fractions.Fraction`; they are always stored in lowest
terms with a positive denominator, which is all the genus engine needs.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class YPoly:
    """Polynomial in the formal variable ``y`` over the rationals.

    ``coeffs[j]`` is the coefficient of ``y**j``; trailing zeros are
    dropped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("YPoly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "YPoly":
        return cls((c,))

    @classmethod
    def y(cls) -> "YPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree in ``y``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    @staticmethod
    def _lift(other) -> "YPoly":
        if isinstance(other, YPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return YPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return YPoly(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        return YPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return YPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return YPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division by a nonzero rational scalar only.
        if isinstance(other, YPoly):
            if not other.is_constant() or other.is_zero():
                raise ValueError("YPoly can only be divided by a nonzero constant")
            other = other.constant()
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("division of YPoly by zero")
        return YPoly(c / other for c in self.coeffs)

    def __pow__(self, n: int) -> "YPoly":
        if n < 0:
            raise ValueError("negative power of YPoly")
        result, base = YPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, y0: Scalar):
        return ypoly_eval(self, y0)

    def __repr__(self):
        return f"YPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def ypoly_eval(p: YPoly, y0):
    """Horner evaluation of ``p`` at ``y0``.

    Exact for rational ``y0``; complex or float ``y0`` gives a float/complex
    result, which the numerical cross-checks rely on.
    """
    acc = Fraction(0) if isinstance(y0, (int, Fraction)) else 0
    for c in reversed(p.coeffs):
        acc = acc * y0 + (c if isinstance(y0, (int, Fraction)) else float(c))
    return acc


class USeries:
    """Power series in ``x`` truncated after ``x**order``.

    Coefficients are :class:`YPoly`. Two series only combine when their
    orders agree; nothing ever silently extends the order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [c if isinstance(c, YPoly) else YPoly.const(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [YPoly()] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("USeries is immutable")

    @classmethod
    def one(cls, order: int) -> "USeries":
        return cls([1], order)

    def __getitem__(self, k: int) -> YPoly:
        return self.coeffs[k]

    def _check(self, other: "USeries") -> None:
        if not isinstance(other, USeries):
            raise TypeError(f"expected USeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"series order mismatch: {self.order} != {other.order}")

    def __add__(self, other: "USeries") -> "USeries":
        self._check(other)
        return USeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "USeries":
        return USeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, YPoly)):
            return USeries([a * other for a in self.coeffs], self.order)
        return useries_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def substitute_y(self, y0: Scalar) -> "USeries":
        return USeries([YPoly.const(ypoly_eval(c, y0)) for c in self.coeffs], self.order)

    def scale_x(self, factor: YPoly | Scalar) -> "USeries":
        """Return the series of ``f(factor * x)``."""
        factor = YPoly._lift(factor)
        out, power = [], YPoly.const(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return USeries(out, self.order)

    def __repr__(self):
        return f"USeries(order={self.order}, coeffs=[{', '.join(str(c) for c in self.coeffs)}])"


def useries_mul(a: USeries, b: USeries) -> USeries:
    """Cauchy product of two series of equal order, truncated to that order."""
    a._check(b)
    n = a.order
    out = []
    for k in range(n + 1):
        acc = YPoly()
        for i in range(k + 1):
            if not a.coeffs[i].is_zero() and not b.coeffs[k - i].is_zero():
                acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return USeries(out, n)


def useries_recip(a: USeries) -> USeries:
    """Multiplicative inverse of ``a`` to its order.

    The constant term must be a nonzero rational; a constant term that
    depends on ``y`` is not a unit in ``Q[y][[x]]`` and is rejected.
    """
    c0 = a.coeffs[0]
    if c0.is_zero() or not c0.is_constant():
        raise ValueError(f"constant term {c0} is not invertible")
    inv0 = 1 / c0.constant()
    out = [YPoly.const(inv0)]
    for k in range(1, a.order + 1):
        acc = YPoly()
        for i in range(1, k + 1):
            acc = acc + a.coeffs[i] * out[k - i]
        out.append(-acc * inv0)
    return USeries(out, a.order)


def exp_neg_x(order: int) -> USeries:
    """Taylor series of ``exp(-x)`` to ``x**order``."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    return USeries([Fraction((-1) ** k, factorial(k)) for k in range(order + 1)], order)
