"""The special-function families.

Generalized Bernoulli and Euler polynomials of integer order (in the
q-deformed and classical flavours), Stirling numbers of the second kind
(q and classical), the Phillips q-Bernstein basis, and the generalized
binomial-coefficient polynomial.

Tables are built once from their generating functions; independent
triangular recurrences for the number sequences act as anti-bug oracles
(the two computation paths share no series code).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .poly import Poly2, X, Y, symbolic_pair_power
from .qcore import QParam, q_binomial, q_factorial, q_number
from .series import Series, Eq_series, eq_series, _factorial

Kind = Literal["q_bernoulli", "q_euler"]


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    order_alpha: int
    q: QParam | None  # None selects the classical (q -> 1) family

    def __post_init__(self) -> None:
        if self.kind not in ("q_bernoulli", "q_euler"):
            raise ValueError(f"unknown family kind {self.kind!r}")


@dataclass(frozen=True)
class PolyTable:
    """Polynomials of one family, indexed 0..max_n."""

    spec: FamilySpec
    max_n: int
    entries: tuple[Poly2, ...]

    def __getitem__(self, n: int) -> Poly2:
        return self.entries[n]


def _kernel(kind: Kind, q: QParam | None, alpha: int, order: int) -> Series:
    """(t / (e(t) - 1))^alpha or (2 / (e(t) + 1))^alpha, truncated."""
    if kind == "q_bernoulli":
        # (e(t) - 1)/t has raw coefficients 1/[n+1]!; invert and raise.
        base = Series([Fraction(1) / _factorial(q, n + 1) for n in range(order + 1)])
    else:
        # (e(t) + 1)/2
        base = Series(
            [Fraction(1)]
            + [Fraction(1, 2) / _factorial(q, n) for n in range(1, order + 1)]
        )
    return base.int_power(-alpha)


def family_series(spec: FamilySpec, order: int) -> Series:
    """The full bivariate generating series kernel^alpha * e(tx) * E(ty)."""
    q = spec.q
    kern = _kernel(spec.kind, q, spec.order_alpha, order)
    return kern * eq_series(q, X, order) * Eq_series(q, Y, order)


def family_table(spec: FamilySpec, max_n: int) -> PolyTable:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    s = family_series(spec, max_n)
    entries = tuple(s.egf_coefficient(n, spec.q) for n in range(max_n + 1))
    return PolyTable(spec, max_n, entries)


def q_bernoulli_table(q: QParam, alpha: int, max_n: int) -> PolyTable:
    return family_table(FamilySpec("q_bernoulli", alpha, q), max_n)


def q_euler_table(q: QParam, alpha: int, max_n: int) -> PolyTable:
    return family_table(FamilySpec("q_euler", alpha, q), max_n)


def classical_bernoulli_table(alpha: int, max_n: int) -> PolyTable:
    """Classical order-alpha Bernoulli polynomials, bivariate in (x + y).

    Entry n is B_n^{(alpha)}(x + y) expanded as a polynomial; substitute
    y = 0 for the usual univariate polynomial.
    """
    return family_table(FamilySpec("q_bernoulli", alpha, None), max_n)


def classical_euler_table(alpha: int, max_n: int) -> PolyTable:
    return family_table(FamilySpec("q_euler", alpha, None), max_n)


def classical_bernoulli_poly(n: int, alpha: int = 1) -> Poly2:
    """B_n^{(alpha)}(x) as a polynomial in x."""
    return classical_bernoulli_table(alpha, n)[n].substitute("y", 0)


def classical_euler_poly(n: int, alpha: int = 1) -> Poly2:
    """E_n^{(alpha)}(x) as a polynomial in x."""
    return classical_euler_table(alpha, n)[n].substitute("y", 0)


def q_number_sequence(spec: FamilySpec, max_n: int) -> list[Fraction]:
    """The number sequence: table entries evaluated at (0, 0)."""
    table = family_table(spec, max_n)
    return [table[n].evaluate(0, 0) for n in range(max_n + 1)]


def q_bernoulli_numbers_recurrence(q: QParam, max_n: int) -> list[Fraction]:
    """Independent oracle for the first-order q-Bernoulli numbers.

    Multiplying the defining generating function through by (e(t) - 1)
    gives the triangular system
        sum_{k=0}^{m-1} [m choose k] b_k = [m = 1],
    which determines b_0 = 1, b_1 = -1/[2], ...
    """
    out: list[Fraction] = []
    for m in range(1, max_n + 2):
        acc = sum(
            (q_binomial(q, m, k) * out[k] for k in range(m - 1)), Fraction(0)
        )
        rhs = Fraction(1) if m == 1 else Fraction(0)
        out.append((rhs - acc) / q_binomial(q, m, m - 1))
    return out[: max_n + 1]


def q_euler_numbers_recurrence(q: QParam, max_n: int) -> list[Fraction]:
    """Independent oracle for the first-order q-Euler numbers.

    From (e(t) + 1) times the generating function being 2:
        e_0 = 1,  e_m = -(1/2) sum_{k=0}^{m-1} [m choose k] e_k.
    """
    out = [Fraction(1)]
    for m in range(1, max_n + 1):
        acc = sum(
            (q_binomial(q, m, k) * out[k] for k in range(m)), Fraction(0)
        )
        out.append(-acc / 2)
    return out


# -- Stirling numbers ------------------------------------------------


def q_stirling2(q: QParam, m: int, k: int) -> Fraction:
    """q-Stirling number of the second kind.

    [m]! times the t^m coefficient of (e(t) - 1)^k / [k]!.
    """
    if m < 0 or k < 0:
        raise ValueError("q_stirling2 requires m, k >= 0")
    if m < k:
        return Fraction(0)
    em1 = Series(
        [Poly2.zero()]
        + [Poly2.const(1 / q_factorial(q, n)) for n in range(1, m + 1)]
    )
    coeff = em1.int_power(k).coeffs[m].constant_term()
    return coeff * q_factorial(q, m) / q_factorial(q, k)


def classical_stirling2(n: int, k: int) -> Fraction:
    """Classical Stirling number of the second kind, by the recurrence
    S(n, k) = k S(n-1, k) + S(n-1, k-1)."""
    if n < 0 or k < 0:
        raise ValueError("classical_stirling2 requires n, k >= 0")
    if k > n:
        return Fraction(0)
    row = [Fraction(1)]  # S(0, 0)
    for i in range(1, n + 1):
        new = [Fraction(0)]
        for j in range(1, i + 1):
            above = row[j] if j < len(row) else Fraction(0)
            new.append(j * above + row[j - 1])
        row = new
    return row[k]


# -- Bernstein basis and binomial polynomial -------------------------


def q_bernstein(q: QParam, n: int, k: int) -> Poly2:
    """Phillips q-Bernstein basis polynomial x^k (1 - x)^{n-k}_q, in x."""
    if not 0 <= k <= n:
        raise ValueError(f"q_bernstein requires 0 <= k <= n, got n={n}, k={k}")
    # fix the first slot to 1 before rewriting the second slot as -x
    pair = symbolic_pair_power(q, n - k).substitute("x", 1).compose("y", -X)
    return Poly2.monomial(k, 0, 1) * pair


def classical_bernstein(n: int, k: int) -> Poly2:
    """Classical Bernstein basis polynomial x^k (1 - x)^{n-k}."""
    if not 0 <= k <= n:
        raise ValueError(f"classical_bernstein requires 0 <= k <= n")
    return Poly2.monomial(k, 0, 1) * (Poly2.one() - X) ** (n - k)


def binomial_poly(j: int) -> Poly2:
    """The degree-j polynomial z (z-1) ... (z-j+1) / j!, written in x."""
    if j < 0:
        raise ValueError("binomial_poly requires j >= 0")
    out = Poly2.one()
    for i in range(j):
        out = out * (X - Poly2.const(i))
    return out * Fraction(1, math.factorial(j))


def falling_binomial(z: Fraction, j: int) -> Fraction:
    """Binomial coefficient with arbitrary rational upper argument."""
    if j < 0:
        raise ValueError("falling_binomial requires j >= 0")
    z = Fraction(z)
    out = Fraction(1)
    for i in range(j):
        out *= z - i
    return out / math.factorial(j)


# -- classical-limit studies -----------------------------------------


def classical_limit_errors(
    kind: Kind,
    alpha: int,
    n: int,
    x: Fraction,
    q_seq: list[QParam],
) -> list[Fraction]:
    """|family_n,q(x, 0) - classical_n(x)| along a sequence of q values."""
    x = Fraction(x)
    classical = family_table(FamilySpec(kind, alpha, None), n)[n].evaluate(x, 0)
    out = []
    for q in q_seq:
        val = family_table(FamilySpec(kind, alpha, q), n)[n].evaluate(x, 0)
        out.append(abs(val - classical))
    return out


def is_monotone_decreasing(errors: list[Fraction]) -> bool:
    """Strictly decreasing except that exact zeros may repeat."""
    for a, b in zip(errors, errors[1:]):
        if not (b < a or a == b == 0):
            return False
    return True
