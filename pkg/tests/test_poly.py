from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qbern.poly import Poly2, X, Y, symbolic_pair_power
from qbern.qcore import QParam, q_number, q_pair_power

Q2 = QParam(F(1, 2))


def difference_quotient(p, var, q):
    """(f(qv) - f(v)) / ((q - 1) v), the defining form of the q-derivative."""
    diff = p.scale_var(var, q.value) - p
    out = []
    for (dx, dy), c in diff.terms():
        d = dx if var == "x" else dy
        assert d >= 1  # constants cancel in the difference
        nk = (dx - 1, dy) if var == "x" else (dx, dy - 1)
        out.append((nk, c / (q.value - 1)))
    return Poly2(out)


class TestArithmetic:
    def test_add_cancels(self):
        assert (X + (-X)).is_zero

    def test_mul_identity(self):
        assert (X + Y) * Poly2.one() == X + Y

    def test_difference_of_squares(self):
        assert (X + Y) * (X - Y) == X**2 - Y**2

    def test_scalar_ops(self):
        assert 2 * X == X + X
        assert F(1, 2) * (X + Y) - F(1, 2) * X == F(1, 2) * Y

    def test_no_zero_terms_stored(self):
        p = (X + Y) - X - Y
        assert p._terms == {}


class TestEvaluation:
    def test_point(self):
        assert (X**2 + Y).evaluate(2, 3) == 7

    def test_origin_gives_constant_term(self):
        p = X**2 * Y + 3 * X + Poly2.const(F(5, 7))
        assert p.evaluate(0, 0) == F(5, 7)

    def test_zero_poly(self):
        assert Poly2.zero().evaluate(11, -4) == 0


class TestSubstitution:
    def test_const(self):
        assert (X * Y).substitute("y", -1) == -X

    def test_scale_x(self):
        assert (X**2).scale_var("x", 2) == 4 * X**2

    def test_scale_y(self):
        assert (Y**2).scale_var("y", F(1, 2)) == F(1, 4) * Y**2

    def test_compose(self):
        # x -> (x + y) in x^2 gives the full square
        assert (X**2).compose("x", X + Y) == X**2 + 2 * X * Y + Y**2

    def test_compose_keeps_other_variable(self):
        p = X**2 * Y + Y
        assert p.compose("y", -X) == -(X**3) - X


class TestJackson:
    def test_cube(self):
        assert (X**3).jackson("x", Q2) == F(7, 4) * X**2

    def test_constant(self):
        assert Poly2.const(5).jackson("x", Q2).is_zero
        assert Poly2.const(5).jackson("y", Q2).is_zero

    def test_mixed_term(self):
        assert (X * Y**2).jackson("y", Q2) == F(3, 2) * X * Y

    def test_linear(self):
        p = 2 * X + 3 * Y + Poly2.one()
        assert p.jackson("x", Q2) == Poly2.const(2)

    @pytest.mark.parametrize("var", ["x", "y"])
    def test_monomial_leibniz(self, var):
        v = X if var == "x" else Y
        for m in range(6):
            for n in range(6 - m):
                if m + n == 0:
                    continue
                lhs = (v**m * v**n).jackson(var, Q2)
                assert lhs == q_number(Q2, m + n) * v ** (m + n - 1)


class TestSymbolicPairPower:
    def test_degree_zero(self):
        assert symbolic_pair_power(Q2, 0) == Poly2.one()

    def test_degree_one(self):
        assert symbolic_pair_power(Q2, 1) == X + Y

    def test_degree_two(self):
        expected = X**2 + F(3, 2) * X * Y + F(1, 2) * Y**2
        assert symbolic_pair_power(Q2, 2) == expected

    def test_scalar_oracle(self):
        points = [(F(0), F(1)), (F(1, 2), F(-1)), (F(2, 3), F(3, 5)), (F(-1), F(4))]
        for q in (Q2, QParam(F(1, 3)), QParam(F(3, 4))):
            for n in range(11):
                p = symbolic_pair_power(q, n)
                for x0, y0 in points:
                    assert p.evaluate(x0, y0) == q_pair_power(q, x0, y0, n)


small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def polys(draw, max_degree=6):
    n_terms = draw(st.integers(0, 5))
    terms = []
    for _ in range(n_terms):
        dx = draw(st.integers(0, max_degree))
        dy = draw(st.integers(0, max_degree - dx))
        terms.append(((dx, dy), draw(small_fractions)))
    return Poly2(terms)


@given(a=polys(), b=polys(), c=polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(p=polys(), var=st.sampled_from(["x", "y"]))
def test_jackson_matches_difference_quotient(p, var):
    for q in (Q2, QParam(F(2, 3))):
        assert p.jackson(var, q) == difference_quotient(p, var, q)


@given(a=polys(), b=polys(), var=st.sampled_from(["x", "y"]))
def test_jackson_additivity(a, b, var):
    assert (a + b).jackson(var, Q2) == a.jackson(var, Q2) + b.jackson(var, Q2)
