"""Truncated formal power series in t with polynomial coefficients.

A series stores its raw t^n coefficients c_0..c_N (polynomials in x, y).
The exponential-generating-function view a_n = c_n * [n]! is provided by
:func:`egf_coefficient`; keeping raw coefficients makes the reciprocal
recursion and Cauchy products simple.

The constructors accept ``q=None`` to mean the classical (undeformed)
case, where [n]! is the ordinary factorial and the triangular weight is
1.  That single switch turns every q-generating function here into its
classical counterpart.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .poly import Poly2
from .qcore import QParam, q_factorial, gauss_exponent

ArgLike = Union[Poly2, Fraction, int]


def _factorial(q: QParam | None, n: int) -> Fraction:
    if q is None:
        return Fraction(math.factorial(n))
    return q_factorial(q, n)


def _triangular(q: QParam | None, n: int) -> Fraction:
    if q is None:
        return Fraction(1)
    return gauss_exponent(q, n)


class Series:
    """Immutable truncated power series with Poly2 coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Poly2 | Fraction | int]):
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self.coeffs = tuple(
            c if isinstance(c, Poly2) else Poly2.const(c) for c in coeffs
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([Poly2.one()] + [Poly2.zero()] * order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Series(order={self.order}, coeffs={list(self.coeffs)!r})"

    # -- arithmetic (results truncate to the smaller order) -----------

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other: "Series | Fraction | int") -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for i in range(n + 1):
            acc = Poly2.zero()
            for k in range(i + 1):
                acc = acc + self.coeffs[k] * other.coeffs[i - k]
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Series":
        """Multiplicative inverse up to the truncation order.

        Requires a nonzero constant t^0 coefficient.
        """
        c0 = self.coeffs[0]
        if not c0.is_constant or c0.is_zero:
            raise ValueError(
                "series reciprocal requires a nonzero constant t^0 coefficient"
            )
        inv0 = 1 / c0.constant_term()
        out = [Poly2.const(inv0)]
        for n in range(1, self.order + 1):
            acc = Poly2.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(acc * -inv0)
        return Series(out)

    def int_power(self, exponent: int) -> "Series":
        """Integer power; negative exponents go through the reciprocal."""
        base = self if exponent >= 0 else self.reciprocal()
        n = abs(exponent)
        out = Series.one(self.order)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale_arg(self, c: Fraction | int) -> "Series":
        """Substitute t -> c t: the t^n coefficient picks up c^n."""
        c = Fraction(c)
        return Series([coef * c ** n for n, coef in enumerate(self.coeffs)])

    def egf_coefficient(self, n: int, q: QParam | None) -> Poly2:
        """The n-th coefficient in the [n]!-weighted (EGF) view: c_n * [n]!."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n] * _factorial(q, n)


def eq_series(q: QParam | None, arg: ArgLike, order: int) -> Series:
    """The small exponential e(t * arg): raw coefficients arg^n / [n]!.

    With q=None this is the classical exp(t * arg).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    arg = arg if isinstance(arg, Poly2) else Poly2.const(arg)
    return Series(
        [arg ** n * (1 / _factorial(q, n)) for n in range(order + 1)]
    )


def Eq_series(q: QParam | None, arg: ArgLike, order: int) -> Series:
    """The big exponential E(t * arg): raw coefficients q^{n(n-1)/2} arg^n / [n]!."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    arg = arg if isinstance(arg, Poly2) else Poly2.const(arg)
    return Series(
        [
            arg ** n * (_triangular(q, n) / _factorial(q, n))
            for n in range(order + 1)
        ]
    )
