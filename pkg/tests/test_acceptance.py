"""One test per acceptance criterion, at the stated bounds.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import time
from collections import Counter
from math import comb

from hypothesis import given, settings, strategies as st

from oracles import naive_g2_counts
from qgoellnitz.classical import (
    Theorem1Rules,
    order_isomorphism_check,
    verify_theorem1,
    verify_theorem_g,
    verify_transport_15,
    verify_transport_6,
)
from qgoellnitz.colored import (
    GapRules,
    compare_symbols,
    fiber,
    g2_counter,
    verify_theorem2,
)
from qgoellnitz.identities import (
    bounded_limit_check,
    full_product_check,
    reduction_check,
    three_way_check,
    verify_bounded_goellnitz,
    verify_bounded_schur,
    verify_goellnitz_identity,
    verify_key_identity,
    verify_schur_identity,
)
from qgoellnitz.series import QPolynomial, TruncatedSeries, mul, pochhammer, qbinomial_poly
from strategies import colored_parts, series

THOUSAND = settings(max_examples=1000, deadline=None)


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def assert_pass(report):
    assert report.passed, report.line()


def test_criterion_01_theorem2_with_naive_oracle():
    start = time.perf_counter()
    assert_pass(verify_theorem2(25, 3))
    naive = naive_g2_counts(15, cap=3)
    counter = g2_counter(15)
    covered = 0
    for target in ((i, j, k, l) for i in range(4) for j in range(4)
                   for k in range(4) for l in range(4)):
        for f in fiber(target):
            vec = counter.vector(f)
            for n in range(16):
                expected = naive.get((n, tuple(f)), 0)
                assert vec[n] == expected, (n, f)
                covered += expected
    # every partition the oracle found was compared against some cell
    assert covered == sum(naive.values()) > 0
    elapsed = time.perf_counter() - start
    assert elapsed <= 120, f"{elapsed:.1f}s"


def test_criterion_02_theorem1():
    report, elapsed = timed(verify_theorem1, 300)
    assert_pass(report)
    assert report.cells_checked == 301
    assert elapsed <= 60, f"{elapsed:.1f}s"


def test_criterion_03_theorem_g():
    report = verify_theorem_g(150)
    assert_pass(report)
    assert report.cells_checked == 151


def test_criterion_04_key_identity():
    report, elapsed = timed(verify_key_identity, 3, 40)
    assert_pass(report)
    assert report.cells_checked == 4 ** 4 * 41
    assert elapsed <= 300, f"{elapsed:.1f}s"
    assert_pass(three_way_check(3, 30))


def test_criterion_05_three_and_two_parameter_identities():
    assert_pass(verify_goellnitz_identity(5, 50))
    assert_pass(verify_schur_identity(8, 60))


def test_criterion_06_reductions():
    report = reduction_check(3, 40)
    assert_pass(report)
    assert report.cells_checked > 0


def test_criterion_07_bounded_identities():
    assert_pass(verify_bounded_schur(8))
    report = verify_bounded_goellnitz(6)
    assert_pass(report)
    assert report.cells_checked == 7 ** 5
    assert_pass(bounded_limit_check(30, 30, 25, 3))


def test_criterion_08_quadruple_product():
    assert_pass(full_product_check(30))


def test_criterion_09_order_isomorphism():
    report = order_isomorphism_check(15)
    assert_pass(report)
    assert report.details["images"] == [7, 11, 13, 14, 18, 20, 21, 22, 24, 25, 26, 27, 28, 29, 33]


def test_criterion_10_transport():
    assert_pass(verify_transport_15(120))
    assert_pass(verify_transport_6(100))


# criterion 11: four property suites, 1000 cases each

_runs: Counter = Counter()


@THOUSAND
@given(series(), series(), series())
def _ring_laws(a, b, c):
    _runs["ring"] += 1
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)
    assert mul(a, TruncatedSeries.one(a.truncation)) == a
    assert a + TruncatedSeries.zero(a.truncation) == a


@THOUSAND
@given(st.integers(0, 40), st.integers(0, 40))
def _q_pascal(m, n):
    _runs["pascal"] += 1
    shift = QPolynomial.monomial
    whole = qbinomial_poly(m, n)
    if m >= 1 and n >= 1:
        # [m+n, n] = [m+n-1, n-1] + q^n [m+n-1, n], and the mirrored form
        assert whole == qbinomial_poly(m, n - 1) + shift(n) * qbinomial_poly(m - 1, n)
        assert whole == qbinomial_poly(m - 1, n) + shift(m) * qbinomial_poly(m, n - 1)
    elif m + n > 0:
        assert whole == QPolynomial.monomial(0)
    assert whole.value_at_one() == comb(m + n, n)


@THOUSAND
@given(st.integers(0, 30), st.integers(0, 30), st.integers(1, 12))
def _pochhammer_recurrences(e, n, k):
    _runs["pochhammer"] += 1
    N = 30
    step = TruncatedSeries.one(N) - TruncatedSeries.monomial(N, e + n)
    assert pochhammer(e, n + 1, N) == mul(pochhammer(e, n, N), step)
    if e > k:
        assert mul(pochhammer(e, -k, N), pochhammer(e - k, k, N)) == TruncatedSeries.one(N)


@THOUSAND
@given(colored_parts(40), colored_parts(40), colored_parts(40))
def _order_totality(x, y, z):
    _runs["order"] += 1
    cmp = compare_symbols
    assert (cmp(x, y) == 0) == (x == y)
    assert cmp(x, y) == -cmp(y, x)
    if cmp(x, y) < 0 and cmp(y, z) < 0:
        assert cmp(x, z) < 0


def test_criterion_11_property_suites():
    _runs.clear()
    for suite in (_ring_laws, _q_pascal, _pochhammer_recurrences, _order_totality):
        suite()
    for name in ("ring", "pascal", "pochhammer", "order"):
        assert _runs[name] >= 1000, (name, _runs[name])


def test_criterion_12_mutation_sensitivity():
    dropped = verify_key_identity(3, 40, linear_correction=False)
    assert not dropped.passed and dropped.counterexample is not None
    weakened = verify_theorem2(25, 3, GapRules(bound_without_a1=3))
    assert not weakened.passed and weakened.counterexample is not None
    gap = verify_theorem1(300, Theorem1Rules(multiple_gap=45))
    assert not gap.passed and gap.counterexample is not None
