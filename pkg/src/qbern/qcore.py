"""Exact q-arithmetic primitives over rational numbers.

Everything here is a pure function of a rational deformation parameter q
and small integer indices.  All results are exact ``fractions.Fraction``
values; no floating point is used anywhere in this module.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction


class QParamError(ValueError):
    """Raised for deformation parameters outside the admissible domain."""


@dataclass(frozen=True)
class QParam:
    """A validated rational deformation parameter q, with q not in {0, 1}.

    Values outside (0, 1) are admissible (every implemented identity is a
    formal polynomial identity) but trigger a warning, since the usual
    analytic setting assumes 0 < q < 1.
    """

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value == 1:
            raise QParamError("q = 1 is excluded: q-integers divide by 1 - q")
        if self.value == 0:
            raise QParamError("q = 0 is excluded")
        if not self.in_principal_range:
            warnings.warn(
                f"q = {self.value} lies outside (0, 1); identities remain "
                "exact but the classical analytic regime does not apply",
                stacklevel=2,
            )

    @property
    def in_principal_range(self) -> bool:
        """True when 0 < q < 1."""
        return 0 < self.value < 1

    def power(self, k: int) -> Fraction:
        return self.value ** k

    def __str__(self) -> str:
        return str(self.value)


def q_number(q: QParam, a: int) -> Fraction:
    """The q-integer [a] = (1 - q^a) / (1 - q)."""
    if a < 0:
        raise ValueError(f"q_number requires a >= 0, got {a}")
    return (1 - q.value ** a) / (1 - q.value)


def q_factorial(q: QParam, n: int) -> Fraction:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError(f"q_factorial requires n >= 0, got {n}")
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= q_number(q, k)
    return out


def q_binomial(q: QParam, n: int, k: int) -> Fraction:
    """Gaussian binomial coefficient, as a ratio of q-factorials.

    Out-of-range (k < 0 or k > n) is an error on purpose: silent zeros
    hide index bugs in identity checkers.
    """
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial requires 0 <= k <= n, got n={n}, k={k}")
    return q_factorial(q, n) / (q_factorial(q, k) * q_factorial(q, n - k))


def q_shifted_factorial(q: QParam, a: Fraction, n: int) -> Fraction:
    """(a; q)_n = prod_{j=0}^{n-1} (1 - q^j a), empty product for n = 0."""
    if n < 0:
        raise ValueError(f"q_shifted_factorial requires n >= 0, got {n}")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(n):
        out *= 1 - q.power(j) * a
    return out


def gauss_exponent(q: QParam, k: int) -> Fraction:
    """The triangular weight q^{k(k-1)/2}."""
    if k < 0:
        raise ValueError(f"gauss_exponent requires k >= 0, got {k}")
    return q.power(k * (k - 1) // 2)


def q_pair_power(q: QParam, a: Fraction, b: Fraction, n: int) -> Fraction:
    """Scalar q-analogue of (a + b)^n.

    Sum over k of [n choose k] q^{k(k-1)/2} a^{n-k} b^k.
    """
    if n < 0:
        raise ValueError(f"q_pair_power requires n >= 0, got {n}")
    a = Fraction(a)
    b = Fraction(b)
    out = Fraction(0)
    for k in range(n + 1):
        out += q_binomial(q, n, k) * gauss_exponent(q, k) * a ** (n - k) * b ** k
    return out
