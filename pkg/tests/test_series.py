from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from oracles import partitions_into, pascal_gaussian
from qgoellnitz.series import (
    GOELLNITZ_15,
    MARKER_A,
    MARKER_B,
    MarkerExponents,
    NO_MARKERS,
    QPolynomial,
    Translation,
    TruncatedSeries,
    add,
    apply_dilation,
    euler_quadruple_product,
    invert,
    mul,
    pochhammer,
    qbinomial,
    qbinomial_poly,
    triangular,
)
from strategies import series

N = 12


def q_series(coeffs, truncation=N):
    return TruncatedSeries.from_q_coefficients(coeffs, truncation)


def test_triangular():
    assert [triangular(n) for n in (-1, 0, 1, 4)] == [0, 0, 1, 10]
    with pytest.raises(ValueError):
        triangular(-2)


def test_add_examples():
    assert add(q_series([1, 1]), q_series([1, -1])) == q_series([2])
    s = q_series([3, 0, -1])
    assert add(s, TruncatedSeries.zero(N)) == s
    top = TruncatedSeries.monomial(N, N)
    assert add(top, top).coefficient(N) == 2


def test_zero_coefficients_are_pruned():
    s = add(q_series([1, 1]), q_series([-1, -1]))
    assert s.is_zero() and len(s) == 0
    assert TruncatedSeries({(0, NO_MARKERS): 0}, 3).is_zero()


def test_terms_above_truncation_are_dropped():
    s = TruncatedSeries({(2, NO_MARKERS): 1, (9, NO_MARKERS): 5}, 4)
    assert list(s.terms()) == [(2, NO_MARKERS, 1)]


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries({(-1, NO_MARKERS): 1}, 4)


def test_truncation_mismatch():
    with pytest.raises(ValueError):
        add(q_series([1], 3), q_series([1], 4))
    with pytest.raises(ValueError):
        mul(q_series([1], 3), q_series([1], 4))
    with pytest.raises(ValueError):
        q_series([1], 3) == q_series([1], 4)


def test_mul_examples():
    geometric = q_series([1] * (N + 1))
    assert mul(q_series([1, -1]), geometric) == TruncatedSeries.one(N)
    aq = TruncatedSeries.monomial(N, 1, MARKER_A)
    bq = TruncatedSeries.monomial(N, 1, MARKER_B)
    assert list(mul(aq, bq).terms()) == [(2, MarkerExponents(1, 1, 0, 0), 1)]
    s = q_series([2, 0, 5])
    assert mul(s, TruncatedSeries.one(N)) == s


def test_invert_examples():
    assert invert(q_series([1, -1])) == q_series([1] * (N + 1))
    assert invert(TruncatedSeries.one(N)) == TruncatedSeries.one(N)
    s = mul(q_series([1, -1]), q_series([1, 0, -1]))
    assert invert(s).coefficient(4) == 3


def test_invert_negative_unit():
    s = q_series([-1, 1])
    assert mul(s, invert(s)) == TruncatedSeries.one(N)


@pytest.mark.parametrize("bad", [
    q_series([2, 1]),
    q_series([0, 1]),
    TruncatedSeries.monomial(N, 0, MARKER_A),
])
def test_invert_rejects_non_units(bad):
    with pytest.raises(ValueError):
        invert(bad)


def test_pochhammer_examples():
    assert pochhammer(5, 0, N) == TruncatedSeries.one(N)
    assert pochhammer(1, 2, N) == q_series([1, -1, -1, 1])
    assert pochhammer(2, -1, N) == q_series([1] * (N + 1))


def test_pochhammer_vanishing_and_zero_divisor():
    assert pochhammer(0, 3, N).is_zero()
    assert pochhammer(-2, 4, N).is_zero()
    with pytest.raises(ZeroDivisionError):
        pochhammer(1, -1, N)


def test_pochhammer_negative_exponent_factor():
    # (q^0; q)_{-2} = 1/((1-q^{-1})(1-q^{-2})) = q^3/((1-q)(1-q^2))
    s = pochhammer(0, -2, N)
    expected = mul(TruncatedSeries.monomial(N, 3), invert(pochhammer(1, 2, N)))
    assert s == expected


def test_pochhammer_marker_base():
    s = pochhammer(1, 2, N, markers=MARKER_A)
    # (1 - Aq)(1 - Aq^2)
    assert s.coefficient(1, MARKER_A) == -1
    assert s.coefficient(2, MARKER_A) == -1
    assert s.coefficient(3, MarkerExponents(2, 0, 0, 0)) == 1
    with pytest.raises(ValueError):
        pochhammer(1, -1, N, markers=MARKER_A)


@given(st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_step(e, n):
    step = q_series([1] + [0] * (e + n - 1) + [-1]) if e + n else TruncatedSeries.zero(N)
    assert pochhammer(e, n + 1, N) == mul(pochhammer(e, n, N), step)


@given(st.integers(1, 10), st.integers(1, 5))
def test_pochhammer_negative_order_inverts(e, n):
    # both factors are power series only when e > n
    assume(e > n)
    assert mul(pochhammer(e, -n, N), pochhammer(e - n, n, N)) == TruncatedSeries.one(N)


def test_qbinomial_examples():
    assert qbinomial(5, -1, N).is_zero()
    assert qbinomial(1, 1, N) == q_series([1, 1])
    assert qbinomial(2, 2, N) == q_series([1, 1, 2, 1, 1])


@pytest.mark.parametrize("m", range(9))
def test_qbinomial_matches_pascal_oracle(m):
    for n in range(9):
        assert qbinomial_poly(m, n) == QPolynomial.from_dense(pascal_gaussian(m + n, n))
        assert qbinomial_poly(m, n).value_at_one() == comb(m + n, n)
        assert qbinomial_poly(m, n).max_degree == n * m


def test_qbinomial_laurent_branch():
    # (q^{m+1})_n / (q)_n read literally, below the polynomial range
    p = qbinomial_poly(-3, 1)
    assert p == QPolynomial({-2: -1, -1: -1})
    assert qbinomial_poly(-1, 2).is_zero()
    with pytest.raises(ValueError):
        qbinomial(-3, 1, N)


def test_euler_quadruple_examples():
    s = euler_quadruple_product(N)
    assert s.q_coefficients() == [1] + [0] * N
    assert s.q_coefficients(MARKER_A)[1:] == [1] * N
    assert s.coefficient(3, MarkerExponents(1, 1, 0, 0)) == 2


def test_euler_single_marker_slice():
    s = euler_quadruple_product(N)
    for i in range(4):
        rhs = mul(TruncatedSeries.monomial(N, triangular(i)), invert(pochhammer(1, i, N)))
        assert s.q_coefficients(MarkerExponents(i, 0, 0, 0)) == rhs.q_coefficients()


def test_dilation_examples():
    a = TruncatedSeries.monomial(40, 1, MARKER_A)
    assert list(apply_dilation(a, GOELLNITZ_15, 40).terms()) == [(7, MARKER_A, 1)]
    b = TruncatedSeries.monomial(40, 1, MARKER_B)
    assert list(apply_dilation(b, GOELLNITZ_15, 40).terms()) == [(11, MARKER_B, 1)]
    s = q_series([1, 2, 3])
    assert apply_dilation(s, Translation(1), N) == s


def test_dilation_negative_degree():
    s = TruncatedSeries.monomial(N, 0, MARKER_A)
    with pytest.raises(ValueError):
        apply_dilation(s, GOELLNITZ_15, N)
    with pytest.raises(ValueError):
        Translation(0)


@given(series(), st.integers(1, 3), st.integers(1, 3),
       st.lists(st.integers(0, 2), min_size=4, max_size=4),
       st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_dilation_is_a_monoid_action(s, m1, m2, r1, r2):
    t1, t2 = Translation(m1, tuple(r1)), Translation(m2, tuple(r2))
    out = 60
    twice = apply_dilation(apply_dilation(s, t1, out), t2, out)
    assert twice == apply_dilation(s, t1.then(t2), out)


def test_inverse_qfactorial_counts_partitions():
    s = invert(pochhammer(1, 3, 20))
    assert s.q_coefficients() == [partitions_into(n, (1, 2, 3)) for n in range(21)]


@given(series(), series())
def test_sub_is_add_neg(a, b):
    assert a - b == add(a, -b)


def test_polynomial_arithmetic():
    p = QPolynomial({0: 1, 1: 1})
    assert p * p == QPolynomial({0: 1, 1: 2, 2: 1})
    assert (p - p).is_zero()
    assert p.shift(-3).min_degree == -3
    assert not p.shift(-3).is_polynomial()
    with pytest.raises(ValueError):
        p.shift(-1).to_series(4)
