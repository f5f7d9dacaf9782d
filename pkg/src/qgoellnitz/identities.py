"""q-series sides of the partition theorems and their coefficient checks.

The fiber sums (left-hand sides) are accumulated on dense coefficient lists:
each summand is a monomial-times-brace divided by a run of (1 - q^m)
factors, which is a handful of O(N) passes.  The product sides go through
the sparse series type instead, so the two sides of every check are computed
along different routes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .classical import p1_refined
from .colored import FreqVector, FreqVectorA, G2Counter, fiber, fiber_a
from .report import Checker, VerificationReport
from .series import (
    GOELLNITZ_15,
    MarkerExponents,
    QPolynomial,
    TruncatedSeries,
    apply_dilation,
    divide_by_qfactorial,
    euler_quadruple_product,
    invert,
    mul,
    pochhammer,
    qbinomial_poly,
    triangular as T,
)


def _bounds(bound, dims: int) -> tuple[int, ...]:
    if isinstance(bound, int):
        return (bound,) * dims
    bound = tuple(bound)
    if len(bound) != dims:
        raise ValueError(f"expected {dims} bounds, got {bound}")
    return bound


def _box(bound, dims: int):
    return product(*(range(b + 1) for b in _bounds(bound, dims)))


def _summand(exponent: int, brace: Iterable[tuple[int, int]],
             denominators: Sequence[int], N: int) -> list[int]:
    """q^exponent * brace / prod (q)_x as a dense list of length N+1.

    ``brace`` is a list of (power, coeff) pairs.
    """
    out = [0] * (N + 1)
    if exponent > N:
        return out
    for power, coeff in brace:
        if exponent + power <= N:
            out[exponent + power] += coeff
    for x in denominators:
        out = divide_by_qfactorial(out, x)
    return out


def _accumulate(total: list[int], part: list[int]) -> None:
    for d, c in enumerate(part):
        if c:
            total[d] += c


# right-hand sides


@lru_cache(maxsize=None)
def _inverse_poch(n: int, N: int) -> TruncatedSeries:
    return invert(pochhammer(1, n, N))


def rhs_product(counts: Sequence[int], N: int) -> TruncatedSeries:
    """q^{sum T_x} / prod (q)_x over the given counts."""
    out = TruncatedSeries.monomial(N, sum(T(x) for x in counts))
    for x in counts:
        out = mul(out, _inverse_poch(x, N))
    return out


def rhs_quadruple(target, N: int) -> TruncatedSeries:
    return rhs_product(tuple(MarkerExponents(*target)), N)


# the four-parameter key identity


def key_summand(f: FreqVector, N: int, *, linear_correction: bool = True) -> list[int]:
    """Dense coefficients of one fiber cell of the four-parameter sum."""
    a, b, c, d, ab, ac, ad, bc, bd, cd, Q = f
    tau = f.tau
    exponent = (T(tau) + T(ab) + T(ac) + T(ad) + T(bc) + T(bd) + T(cd)
                + 4 * T(Q - 1) + 3 * Q + 2 * Q * tau)
    if linear_correction:
        exponent -= bc + bd + cd
    s = a + bc + bd + Q
    brace = [(0, 1), (a, -1), (s, 1), (s + b, -1), (s + b + cd, 1)]
    return _summand(exponent, brace, f, N)


def lhs_key_identity(target, N: int, *, linear_correction: bool = True) -> TruncatedSeries:
    total = [0] * (N + 1)
    for f in fiber(MarkerExponents(*target)):
        _accumulate(total, key_summand(f, N, linear_correction=linear_correction))
    return TruncatedSeries.from_q_coefficients(total, N)


def _key_cell(args) -> tuple[tuple[int, ...], list[int], list[int]]:
    target, N, linear_correction = args
    lhs = lhs_key_identity(target, N, linear_correction=linear_correction)
    rhs = rhs_quadruple(target, N)
    return target, lhs.q_coefficients(), rhs.q_coefficients()


def _run_cells(worker, cells: list, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(worker, cells, chunksize=max(1, len(cells) // (4 * jobs)))
    else:
        yield from map(worker, cells)


def verify_key_identity(ijkl_max=3, N: int = 40, *, jobs: int = 1,
                        linear_correction: bool = True) -> VerificationReport:
    check = Checker("key26")
    cells = [(t, N, linear_correction) for t in _box(ijkl_max, 4)]
    for target, lhs, rhs in _run_cells(_key_cell, cells, jobs):
        cell = dict(zip("ijkl", target))
        if not check.compare_sequences(cell, lhs, rhs):
            break
    return check.report()


# the three-parameter (Goellnitz) and two-parameter (Schur) identities


def goellnitz_summand(cell: FreqVectorA, N: int) -> list[int]:
    a, b, c, ab, ac, bc = cell
    tau = a + b + c + ab + ac + bc
    exponent = T(tau) + T(ab) + T(ac) + T(bc - 1)
    brace = [(0, 1), (a, -1), (a + bc, 1)]
    return _summand(exponent, brace, cell, N)


def lhs_goellnitz(target, N: int) -> TruncatedSeries:
    total = [0] * (N + 1)
    for cell in fiber_a(target):
        _accumulate(total, goellnitz_summand(cell, N))
    return TruncatedSeries.from_q_coefficients(total, N)


def _goellnitz_cell(args):
    target, N = args
    return target, lhs_goellnitz(target, N).q_coefficients(), rhs_product(target, N).q_coefficients()


def verify_goellnitz_identity(ijk_max=5, N: int = 50, *, jobs: int = 1) -> VerificationReport:
    check = Checker("goellnitz32")
    cells = [(t, N) for t in _box(ijk_max, 3)]
    for target, lhs, rhs in _run_cells(_goellnitz_cell, cells, jobs):
        if not check.compare_sequences(dict(zip("ijk", target)), lhs, rhs):
            break
    return check.report()


def schur_fiber(target) -> Iterable[tuple[int, int, int]]:
    """(a, b, ab) with i = a + ab, j = b + ab."""
    i, j = target
    for ab in range(min(i, j) + 1):
        yield i - ab, j - ab, ab


def schur_summand(cell: tuple[int, int, int], N: int) -> list[int]:
    a, b, ab = cell
    return _summand(T(a + b + ab) + T(ab), [(0, 1)], cell, N)


def lhs_schur(target, N: int) -> TruncatedSeries:
    total = [0] * (N + 1)
    for cell in schur_fiber(target):
        _accumulate(total, schur_summand(cell, N))
    return TruncatedSeries.from_q_coefficients(total, N)


def verify_schur_identity(ij_max=8, N: int = 60) -> VerificationReport:
    check = Checker("schur33")
    for target in _box(ij_max, 2):
        lhs = lhs_schur(target, N).q_coefficients()
        rhs = rhs_product(target, N).q_coefficients()
        if not check.compare_sequences(dict(zip("ij", target)), lhs, rhs):
            break
    return check.report()


def reduction_check(ijk_max=3, N: int = 40) -> VerificationReport:
    """Summand-by-summand: the four-parameter cell with d = ad = bd = cd = Q = 0
    equals the three-parameter cell, and the three-parameter cell with
    c = ac = bc = 0 equals the two-parameter cell."""
    check = Checker("reduction")
    bounds = _bounds(ijk_max, 3)
    for target in _box(bounds, 3):
        for cell in fiber_a(target):
            if not check.compare_sequences(
                {"level": "4->3", **cell._asdict()},
                key_summand(cell.lift(), N), goellnitz_summand(cell, N),
            ):
                return check.report()
    for target in _box(bounds[:2], 2):
        for a, b, ab in schur_fiber(target):
            cell = FreqVectorA(a=a, b=b, ab=ab)
            if not check.compare_sequences(
                {"level": "3->2", "a": a, "b": b, "ab": ab},
                goellnitz_summand(cell, N), schur_summand((a, b, ab), N),
            ):
                return check.report()
    return check.report()


def slice_check(ijk_max=3, N: int = 40) -> VerificationReport:
    """Setting any one of i, j, k, l to zero in the four-parameter sum gives
    the three-parameter sum in the remaining letters."""
    check = Checker("slices")
    for position in range(4):
        for target in _box(ijk_max, 3):
            full = list(target)
            full.insert(position, 0)
            lhs = lhs_key_identity(full, N).q_coefficients()
            rhs = lhs_goellnitz(target, N).q_coefficients()
            if not check.compare_sequences(dict(zip("ijkl", full)), lhs, rhs):
                return check.report()
    return check.report()


def three_way_check(ijkl_max=3, n_max: int = 30, N: int | None = None) -> VerificationReport:
    """Per target and n <= n_max: sum-side coefficient, product-side
    coefficient and the direct count of difference-condition partitions all
    agree."""
    N = n_max if N is None else N
    counter = G2Counter(n_max)
    check = Checker("three-way")
    for target in _box(ijkl_max, 4):
        cell = dict(zip("ijkl", target))
        lhs = lhs_key_identity(target, N).q_coefficients()[: n_max + 1]
        rhs = rhs_quadruple(target, N).q_coefficients()[: n_max + 1]
        counts = counter.fiber_vector(target)
        if not (check.compare_sequences({**cell, "sides": "sum/product"}, lhs, rhs)
                and check.compare_sequences({**cell, "sides": "sum/count"}, lhs, counts)):
            break
    return check.report()


# bounded (polynomial) identities


def gaussian(top: int, bottom: int) -> QPolynomial:
    """[top choose bottom] in the (q^{m+1})_n/(q)_n convention."""
    return qbinomial_poly(top - bottom, bottom)


def bounded_schur(L: int, M: int, i: int, j: int) -> tuple[QPolynomial, QPolynomial]:
    lhs = QPolynomial()
    for k in range(min(i, j) + 1):
        term = (gaussian(M - i - j + k, k) * gaussian(M - j, i - k)
                * gaussian(L - i, j - k))
        lhs = lhs + term.shift(T(i + j - k) + T(k))
    rhs = (gaussian(L, j) * gaussian(M - j, i)).shift(T(i) + T(j))
    return lhs, rhs


@lru_cache(maxsize=1 << 16)
def _gaussian_product(pairs: tuple[tuple[int, int], ...]) -> QPolynomial:
    """Product of [top choose bottom] over (top, bottom) pairs."""
    if len(pairs) == 1:
        return gaussian(*pairs[0])
    half = len(pairs) // 2
    left = _gaussian_product(pairs[:half])
    if left.is_zero():
        return left
    return left * _gaussian_product(pairs[half:])


def bounded_goellnitz(L: int, M: int, i: int, j: int, k: int) -> tuple[QPolynomial, QPolynomial]:
    lhs = QPolynomial()
    for a, b, c, ab, ac, bc in fiber_a((i, j, k)):
        tau = a + b + c + ab + ac + bc
        exponent = T(tau) + T(ab) + T(ac) + T(bc - 1)
        shared = _gaussian_product((
            (L - tau + b, b), (M - tau + c, c), (L - tau, ab), (M - tau, ac),
        ))
        if shared.is_zero():
            continue
        first = _gaussian_product(((L - tau + a, a), (M - tau, bc))).shift(bc)
        second = _gaussian_product(((L - tau + a - 1, a - 1), (M - tau, bc - 1)))
        lhs = lhs + (shared * (first + second)).shift(exponent)
    rhs = QPolynomial()
    for t in range(min(i, j, k) + 1):
        exponent = t * (M + 2) - T(t) + T(i - t) + T(j - t) + T(k - t)
        rhs = rhs + _gaussian_product((
            (L - t, t), (L - 2 * t, i - t), (L - i - t, j - t), (M - i - j, k - t),
        )).shift(exponent)
    return lhs, rhs


def _poly_counterexample(check: Checker, cell: dict, lhs: QPolynomial, rhs: QPolynomial) -> bool:
    if lhs == rhs:
        check.cells += 1
        return True
    degrees = sorted({e for e, _ in lhs.items()} | {e for e, _ in rhs.items()})
    for e in degrees:
        if lhs.coefficient(e) != rhs.coefficient(e):
            return check.compare(cell, lhs.coefficient(e), rhs.coefficient(e), degree=e)
    raise AssertionError("unequal polynomials with equal coefficients")  # pragma: no cover


def verify_bounded_schur(lm_max: int = 8, ij_max: int | None = None) -> VerificationReport:
    ij_max = lm_max if ij_max is None else ij_max
    check = Checker("bounded43")
    for L, M in _box(lm_max, 2):
        for i, j in _box(ij_max, 2):
            lhs, rhs = bounded_schur(L, M, i, j)
            if not _poly_counterexample(check, {"L": L, "M": M, "i": i, "j": j}, lhs, rhs):
                return check.report()
    return check.report()


def verify_bounded_goellnitz(lm_max: int = 6, ijk_max: int | None = None) -> VerificationReport:
    ijk_max = lm_max if ijk_max is None else ijk_max
    check = Checker("bounded44")
    for L, M in _box(lm_max, 2):
        for i, j, k in _box(ijk_max, 3):
            lhs, rhs = bounded_goellnitz(L, M, i, j, k)
            cell = {"L": L, "M": M, "i": i, "j": j, "k": k}
            if not _poly_counterexample(check, cell, lhs, rhs):
                return check.report()
    return check.report()


def _head(p: QPolynomial, degree: int) -> list[int]:
    return [p.coefficient(e) for e in range(degree + 1)]


def bounded_limit_check(L: int = 30, M: int = 30, degree: int = 25,
                        max_index: int = 3) -> VerificationReport:
    """With large bounds both bounded identities agree, up to ``degree``,
    with their unbounded counterparts (sides and all)."""
    check = Checker("bounded-limit")
    for i, j in _box(max_index, 2):
        lhs, rhs = bounded_schur(L, M, i, j)
        cell = {"identity": "bounded43", "L": L, "M": M, "i": i, "j": j}
        if not (check.compare_sequences({**cell, "side": "lhs"}, _head(lhs, degree),
                                        lhs_schur((i, j), degree).q_coefficients())
                and check.compare_sequences({**cell, "side": "rhs"}, _head(rhs, degree),
                                            rhs_product((i, j), degree).q_coefficients())):
            return check.report()
    for i, j, k in _box(max_index, 3):
        lhs, rhs = bounded_goellnitz(L, M, i, j, k)
        cell = {"identity": "bounded44", "L": L, "M": M, "i": i, "j": j, "k": k}
        if not (check.compare_sequences({**cell, "side": "lhs"}, _head(lhs, degree),
                                        lhs_goellnitz((i, j, k), degree).q_coefficients())
                and check.compare_sequences({**cell, "side": "rhs"}, _head(rhs, degree),
                                            rhs_product((i, j, k), degree).q_coefficients())):
            return check.report()
    return check.report()


# the quadruple product and the mod-15 dilation


def marker_summed_rhs(N: int) -> TruncatedSeries:
    """sum over (i,j,k,l) of A^i B^j C^k D^l q^{T_i+..+T_l}/((q)_i..(q)_l)."""
    top = 0
    while T(top + 1) <= N:
        top += 1
    out = TruncatedSeries.zero(N)
    for target in _box(top, 4):
        if sum(T(x) for x in target) <= N:
            out = out + rhs_quadruple(target, N).with_markers(target)
    return out


def full_product_check(N: int = 30) -> VerificationReport:
    check = Checker("product41")
    lhs = marker_summed_rhs(N)
    rhs = euler_quadruple_product(N)
    keys = sorted({(d, m) for d, m, _ in lhs.terms()} | {(d, m) for d, m, _ in rhs.terms()})
    for d, m in keys:
        if not check.compare({"N": N}, lhs.coefficient(d, m), rhs.coefficient(d, m),
                             degree=d, markers=m):
            break
    return check.report()


def theorem1_genfunc_check(N: int = 150) -> VerificationReport:
    """Dilate the marker-refined product side by q -> q^15, A -> A q^-8,
    B -> B q^-4, C -> C q^-2, D -> D q^-1 and compare with mod-15
    distinct-part counts refined by residue class."""
    check = Checker("dilation")
    # a term q^d A^i.. lands at >= 7d, so degree N // 7 of the input suffices
    source = marker_summed_rhs(N // 7)
    dilated = apply_dilation(source, GOELLNITZ_15, N)
    expected = p1_refined(N)
    keys = sorted({(d, m) for d, m, _ in dilated.terms()} | set(expected))
    for d, m in keys:
        if not check.compare({"N": N}, dilated.coefficient(d, m), expected.get((d, m), 0),
                             degree=d, markers=m):
            break
    return check.report()
