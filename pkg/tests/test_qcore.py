import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qbern.qcore import (
    QParam,
    QParamError,
    gauss_exponent,
    q_binomial,
    q_factorial,
    q_number,
    q_pair_power,
    q_shifted_factorial,
)

Q2 = QParam(F(1, 2))
SAMPLE_QS = [QParam(F(1, 2)), QParam(F(1, 3)), QParam(F(3, 4)), QParam(F(2, 5))]


class TestQParam:
    def test_rejects_one(self):
        with pytest.raises(QParamError):
            QParam(F(1))

    def test_rejects_zero(self):
        with pytest.raises(QParamError):
            QParam(F(0))

    def test_principal_range_flag(self):
        assert Q2.in_principal_range
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert not QParam(F(3, 2)).in_principal_range

    def test_warns_outside_unit_interval(self):
        with pytest.warns(UserWarning):
            QParam(F(-1, 2))


class TestQNumber:
    def test_zero(self):
        assert q_number(Q2, 0) == 0

    def test_one(self):
        assert q_number(Q2, 1) == 1

    def test_three(self):
        # 1 + 1/2 + 1/4
        assert q_number(Q2, 3) == F(7, 4)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            q_number(Q2, -1)


class TestQFactorial:
    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (3, F(21, 8))])
    def test_values(self, n, expected):
        assert q_factorial(Q2, n) == expected


class TestQBinomial:
    @pytest.mark.parametrize(
        "n,k,expected",
        [(5, 0, 1), (2, 1, F(3, 2)), (4, 2, F(35, 16))],
    )
    def test_values(self, n, k, expected):
        assert q_binomial(Q2, n, k) == expected

    def test_gaussian_polynomial_form(self):
        # [4 2]_q is the polynomial 1 + q + 2q^2 + q^3 + q^4
        q = F(1, 2)
        assert q_binomial(Q2, 4, 2) == 1 + q + 2 * q**2 + q**3 + q**4

    @pytest.mark.parametrize("n,k", [(3, -1), (3, 4), (0, 1)])
    def test_out_of_range_is_an_error(self, n, k):
        with pytest.raises(ValueError):
            q_binomial(Q2, n, k)

    def test_symmetry(self):
        for q in SAMPLE_QS:
            for n in range(13):
                for k in range(n + 1):
                    assert q_binomial(q, n, k) == q_binomial(q, n, n - k)

    def test_pascal_recurrence(self):
        for q in SAMPLE_QS:
            for n in range(1, 13):
                for k in range(1, n):
                    assert q_binomial(q, n, k) == q_binomial(q, n - 1, k - 1) + q.power(
                        k
                    ) * q_binomial(q, n - 1, k)


class TestQShiftedFactorial:
    def test_empty_product(self):
        assert q_shifted_factorial(Q2, F(3), 0) == 1

    def test_vanishing_first_factor(self):
        assert q_shifted_factorial(Q2, F(1), 2) == 0

    def test_direct_product(self):
        assert q_shifted_factorial(Q2, F(2), 2) == 0
        assert q_shifted_factorial(Q2, F(1, 2), 2) == F(1, 2) * F(3, 4)

    def test_binomial_formula(self):
        # (a; q)_n = sum_k [n k] q^{k(k-1)/2} (-1)^k a^k
        for q in SAMPLE_QS:
            for n in range(11):
                for a in (F(0), F(1), F(1, 2), F(-2)):
                    rhs = sum(
                        q_binomial(q, n, k)
                        * gauss_exponent(q, k)
                        * (-1) ** k
                        * a**k
                        for k in range(n + 1)
                    )
                    assert q_shifted_factorial(q, a, n) == rhs


class TestGaussExponent:
    @pytest.mark.parametrize("k,expected", [(0, 1), (1, 1), (3, F(1, 8))])
    def test_values(self, k, expected):
        assert gauss_exponent(Q2, k) == expected


class TestQPairPower:
    def test_telescoping(self):
        assert q_pair_power(Q2, F(1), F(-1), 2) == 0

    def test_zero_second_argument(self):
        for n in range(6):
            assert q_pair_power(Q2, F(3, 7), F(0), n) == F(3, 7) ** n

    def test_direct_sum(self):
        assert q_pair_power(Q2, F(1, 2), F(-1), 1) == F(-1, 2)

    def test_matches_shifted_factorial(self):
        # (1 + (-a))^n_q = (a; q)_n
        for q in SAMPLE_QS:
            for n in range(8):
                for a in (F(1, 3), F(-2), F(5, 7)):
                    assert q_pair_power(q, F(1), -a, n) == q_shifted_factorial(q, a, n)


@st.composite
def q_params(draw):
    num = draw(st.integers(min_value=1, max_value=9))
    den = draw(st.integers(min_value=2, max_value=10))
    if num >= den:
        num = den - 1
    return QParam(F(num, den))


@given(q=q_params(), n=st.integers(0, 10), k=st.integers(0, 10))
def test_symmetry_property(q, n, k):
    if k > n:
        n, k = k, n
    assert q_binomial(q, n, k) == q_binomial(q, n, n - k)


@given(
    q=q_params(),
    a=st.fractions(min_value=-3, max_value=3),
    b=st.fractions(min_value=-3, max_value=3),
)
def test_pair_power_degenerates_without_second_slot(q, a, b):
    assert q_pair_power(q, a, b, 0) == 1
    assert q_pair_power(q, a, b, 1) == a + b
