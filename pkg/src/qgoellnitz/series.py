"""Truncated formal power series in q with four marker variables A, B, C, D.

A series is a sparse map ``(q_degree, MarkerExponents) -> int``.  Only the
q-degree is truncated; marker exponents are left alone.  Coefficients are
Python ints, so nothing ever overflows.

Besides the series type this module holds the q-analogues everything else is
built from: triangular numbers, q-Pochhammer symbols, Gaussian binomials, the
quadruple product and the dilation/translation substitution.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class MarkerExponents(NamedTuple):
    """Exponents of the markers A, B, C, D in a monomial."""

    i: int = 0
    j: int = 0
    k: int = 0
    l: int = 0  # noqa: E741

    def __add__(self, other):  # type: ignore[override]
        return MarkerExponents(
            self.i + other.i, self.j + other.j, self.k + other.k, self.l + other.l
        )


NO_MARKERS = MarkerExponents()
MARKER_A = MarkerExponents(1, 0, 0, 0)
MARKER_B = MarkerExponents(0, 1, 0, 0)
MARKER_C = MarkerExponents(0, 0, 1, 0)
MARKER_D = MarkerExponents(0, 0, 0, 1)


def _as_markers(m) -> MarkerExponents:
    m = MarkerExponents(*m)
    if min(m) < 0:
        raise ValueError(f"marker exponents must be nonnegative, got {tuple(m)}")
    return m


def triangular(n: int) -> int:
    """T_n = n(n+1)/2, defined for n >= -1 (T_{-1} = 0)."""
    if n < -1:
        raise ValueError(f"triangular number undefined for n={n} < -1")
    return n * (n + 1) // 2


class TruncatedSeries:
    """Immutable sparse series, exact up to and including q^truncation."""

    __slots__ = ("_terms", "_truncation")

    def __init__(self, terms: Mapping | Iterable = (), truncation: int = 0):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[tuple[int, MarkerExponents], int] = defaultdict(int)
        for (degree, markers), coeff in items:
            if degree < 0:
                raise ValueError(f"negative q-degree {degree}")
            if degree > truncation:
                continue
            store[(degree, _as_markers(markers))] += coeff
        self._terms = {key: c for key, c in store.items() if c}
        self._truncation = truncation

    # construction helpers

    @classmethod
    def _raw(cls, terms: dict, truncation: int) -> "TruncatedSeries":
        # trusted path: terms already pruned, keyed by MarkerExponents, in range
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._truncation = truncation
        return obj

    @classmethod
    def zero(cls, truncation: int) -> "TruncatedSeries":
        return cls({}, truncation)

    @classmethod
    def one(cls, truncation: int) -> "TruncatedSeries":
        return cls.monomial(truncation)

    @classmethod
    def monomial(cls, truncation: int, degree: int = 0, markers=NO_MARKERS,
                 coeff: int = 1) -> "TruncatedSeries":
        return cls({(degree, markers): coeff}, truncation)

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int], truncation: int,
                            markers=NO_MARKERS) -> "TruncatedSeries":
        """Build ``sum coeffs[d] q^d`` (times a marker monomial)."""
        markers = _as_markers(markers)
        return cls(
            {(d, markers): c for d, c in enumerate(coeffs) if c}, truncation
        )

    # access

    @property
    def truncation(self) -> int:
        return self._truncation

    def terms(self) -> Iterator[tuple[int, MarkerExponents, int]]:
        """Yield ``(degree, markers, coeff)`` in sorted order."""
        for (d, m) in sorted(self._terms):
            yield d, m, self._terms[(d, m)]

    def coefficient(self, degree: int, markers=NO_MARKERS) -> int:
        return self._terms.get((degree, MarkerExponents(*markers)), 0)

    def q_coefficients(self, markers=NO_MARKERS) -> list[int]:
        """Dense list of q-coefficients attached to one marker monomial."""
        markers = MarkerExponents(*markers)
        out = [0] * (self._truncation + 1)
        for (d, m), c in self._terms.items():
            if m == markers:
                out[d] = c
        return out

    def marker_monomials(self) -> set[MarkerExponents]:
        return {m for (_, m) in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self._truncation != other._truncation:
            raise ValueError(
                f"truncation mismatch: {self._truncation} vs {other._truncation}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(self._truncation, coeff=other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(
            {key: -c for key, c in self._terms.items()}, self._truncation
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(self._truncation, coeff=other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TruncatedSeries.zero(self._truncation)
            return TruncatedSeries._raw(
                {key: c * other for key, c in self._terms.items()},
                self._truncation,
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        n = self._truncation
        return TruncatedSeries._raw(
            {(d + k, m): c for (d, m), c in self._terms.items() if d + k <= n}, n
        )

    def with_markers(self, markers) -> "TruncatedSeries":
        """Multiply by the marker monomial A^i B^j C^k D^l."""
        markers = _as_markers(markers)
        return TruncatedSeries._raw(
            {(d, m + markers): c for (d, m), c in self._terms.items()},
            self._truncation,
        )

    def truncate(self, truncation: int) -> "TruncatedSeries":
        """Explicit re-truncation to a lower degree."""
        if truncation > self._truncation:
            raise ValueError("cannot raise the truncation of a series")
        return TruncatedSeries._raw(
            {key: c for key, c in self._terms.items() if key[0] <= truncation},
            truncation,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TruncatedSeries.monomial(self._truncation, coeff=other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._truncation, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"TruncatedSeries(0, N={self._truncation})"
        parts = []
        for d, m, c in self.terms():
            mono = "".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip("ABCD", m) if e
            )
            q = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            body = "*".join(x for x in (mono, q) if x)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return f"TruncatedSeries({' + '.join(parts)}, N={self._truncation})"


def add(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    s1._check_compatible(s2)
    out = dict(s1._terms)
    for key, c in s2._terms.items():
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return TruncatedSeries._raw(out, s1._truncation)


def _by_degree(s: TruncatedSeries) -> dict[int, list[tuple[MarkerExponents, int]]]:
    groups: dict[int, list] = defaultdict(list)
    for (d, m), c in s._terms.items():
        groups[d].append((m, c))
    return groups


def mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product; terms above the truncation are discarded."""
    s1._check_compatible(s2)
    n = s1._truncation
    right = sorted(_by_degree(s2).items())
    out: dict = defaultdict(int)
    for (d1, m1), c1 in s1._terms.items():
        for d2, group in right:
            d = d1 + d2
            if d > n:
                break
            for m2, c2 in group:
                out[(d, m1 + m2)] += c1 * c2
    return TruncatedSeries._raw({k: c for k, c in out.items() if c}, n)


def invert(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse up to truncation.

    The q-degree-0 part of ``s`` must be exactly +1 or -1 (no markers).
    """
    groups = _by_degree(s)
    head = groups.get(0, [])
    if len(head) != 1 or head[0][0] != NO_MARKERS or head[0][1] not in (1, -1):
        raise ValueError("series is not invertible: constant part must be +-1")
    c0 = head[0][1]
    n = s.truncation
    layers: list[dict[MarkerExponents, int]] = [{NO_MARKERS: c0}]
    for d in range(1, n + 1):
        acc: dict = defaultdict(int)
        for e in range(1, d + 1):
            g = groups.get(e)
            if not g:
                continue
            for m2, c2 in layers[d - e].items():
                for m1, c1 in g:
                    acc[m1 + m2] += c1 * c2
        layers.append({m: -c0 * c for m, c in acc.items() if c})
    return TruncatedSeries._raw(
        {(d, m): c for d, layer in enumerate(layers) for m, c in layer.items()}, n
    )


# dense kernels on q-coefficient lists


def divide_one_minus_q_power(coeffs: list[int], m: int) -> list[int]:
    """Divide a dense q-series by (1 - q^m), m >= 1, keeping its length."""
    out = list(coeffs)
    for d in range(m, len(out)):
        out[d] += out[d - m]
    return out


def multiply_one_minus_q_power(coeffs: list[int], m: int) -> list[int]:
    """Multiply a dense q-series by (1 - q^m), m >= 0, keeping its length."""
    if m == 0:
        return [0] * len(coeffs)
    out = list(coeffs)
    for d in range(len(out) - 1, m - 1, -1):
        out[d] -= out[d - m]
    return out


def divide_by_qfactorial(coeffs: list[int], n: int) -> list[int]:
    """Divide a dense q-series by (q;q)_n."""
    for m in range(1, n + 1):
        coeffs = divide_one_minus_q_power(coeffs, m)
    return coeffs


@lru_cache(maxsize=None)
def _inverse_qfactorial(n: int, truncation: int) -> tuple[int, ...]:
    seed = [1] + [0] * truncation
    return tuple(divide_by_qfactorial(seed, n))


def inverse_qfactorial(n: int, truncation: int) -> list[int]:
    """Dense coefficients of 1/(q;q)_n up to q^truncation."""
    return list(_inverse_qfactorial(n, truncation))


def pochhammer(base_power: int, n: int, truncation: int, markers=NO_MARKERS,
               coeff: int = 1) -> TruncatedSeries:
    """(c X q^e; q)_n truncated at q^truncation.

    With the default ``markers``/``coeff`` this is the pure (q^e; q)_n.
    n > 0 is the finite product, n == 0 is 1 and n < 0 is the inverted product
    prod_{j=1}^{-n} (1 - q^{e-j})^{-1}.  A marker-bearing base is only
    supported for n >= 0.
    """
    markers = _as_markers(markers)
    e, N = base_power, truncation
    if n == 0:
        return TruncatedSeries.one(N)
    pure = markers == NO_MARKERS and coeff == 1
    if n < 0:
        if not pure:
            raise ValueError("negative-order Pochhammer needs a pure q-power base")
        coeffs = [1] + [0] * N
        sign, offset = 1, 0
        for j in range(1, -n + 1):
            p = e - j
            if p == 0:
                raise ZeroDivisionError(
                    f"(q^{e}; q)_{n} has the factor 1 - q^0 = 0 in its denominator"
                )
            if p > 0:
                coeffs = divide_one_minus_q_power(coeffs, p)
            else:
                # 1/(1 - q^{-r}) = -q^r / (1 - q^r)
                sign, offset = -sign, offset - p
                coeffs = divide_one_minus_q_power(coeffs, -p)
        coeffs = [0] * min(offset, N + 1) + coeffs[: max(N + 1 - offset, 0)]
        return TruncatedSeries.from_q_coefficients([sign * c for c in coeffs], N)
    if pure:
        if e <= 0 <= e + n - 1:
            return TruncatedSeries.zero(N)
        if e < 0:
            raise ValueError("(q^e; q)_n with negative exponents is not a power series")
        coeffs = [1] + [0] * N
        for j in range(n):
            coeffs = multiply_one_minus_q_power(coeffs, e + j)
        return TruncatedSeries.from_q_coefficients(coeffs, N)
    if e < 0:
        raise ValueError("negative q-exponent in a marker-bearing base")
    if e == 0 and markers == NO_MARKERS:
        raise ValueError("constant base is not supported")
    out = TruncatedSeries.one(N)
    for j in range(n):
        factor = TruncatedSeries(
            {(0, NO_MARKERS): 1, (e + j, markers): -coeff}, N
        )
        out = mul(out, factor)
    return out


class QPolynomial:
    """Exact Laurent polynomial in q (negative exponents allowed).

    Stored densely as the exponent of the first coefficient plus a tuple of
    coefficients with nonzero ends.
    """

    __slots__ = ("_offset", "_coeffs")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        coeffs = {e: c for e, c in (coeffs or {}).items() if c}
        if not coeffs:
            self._offset, self._coeffs = 0, ()
            return
        lo, hi = min(coeffs), max(coeffs)
        self._offset = lo
        self._coeffs = tuple(coeffs.get(e, 0) for e in range(lo, hi + 1))

    @classmethod
    def _dense(cls, offset: int, coeffs: Sequence[int]) -> "QPolynomial":
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        obj = cls.__new__(cls)
        obj._offset = offset + lo if hi > lo else 0
        obj._coeffs = tuple(coeffs[lo:hi])
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls._dense(exponent, (coeff,))

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], offset: int = 0) -> "QPolynomial":
        return cls._dense(offset, tuple(coeffs))

    def coefficient(self, exponent: int) -> int:
        idx = exponent - self._offset
        if 0 <= idx < len(self._coeffs):
            return self._coeffs[idx]
        return 0

    def items(self) -> list[tuple[int, int]]:
        return [(self._offset + d, c) for d, c in enumerate(self._coeffs) if c]

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int | None:
        return self._offset if self._coeffs else None

    @property
    def max_degree(self) -> int | None:
        return self._offset + len(self._coeffs) - 1 if self._coeffs else None

    def is_polynomial(self) -> bool:
        """True when no negative powers of q occur."""
        return not self._coeffs or self._offset >= 0

    def value_at_one(self) -> int:
        return sum(self._coeffs)

    def shift(self, k: int) -> "QPolynomial":
        if not self._coeffs:
            return self
        obj = QPolynomial.__new__(QPolynomial)
        obj._offset = self._offset + k
        obj._coeffs = self._coeffs
        return obj

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._offset, other._offset)
        hi = max(self._offset + len(self._coeffs), other._offset + len(other._coeffs))
        out = [0] * (hi - lo)
        for src in (self, other):
            base = src._offset - lo
            for d, c in enumerate(src._coeffs):
                out[base + d] += c
        return QPolynomial._dense(lo, out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial._dense(self._offset, tuple(-c for c in self._coeffs))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial._dense(self._offset, tuple(c * other for c in self._coeffs))
        if not self._coeffs or not other._coeffs:
            return QPolynomial()
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for s, y in enumerate(b):
            if y:
                for t, x in enumerate(a, s):
                    out[t] += x * y
        return QPolynomial._dense(self._offset + other._offset, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._offset == other._offset and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._offset, self._coeffs))

    def to_series(self, truncation: int) -> TruncatedSeries:
        if not self.is_polynomial():
            raise ValueError("Laurent polynomial has negative powers of q")
        return TruncatedSeries({(e, NO_MARKERS): c for e, c in self.items()}, truncation)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "QPolynomial(0)"
        return "QPolynomial(" + " + ".join(f"{c}*q^{e}" for e, c in self.items()) + ")"


@lru_cache(maxsize=None)
def _gaussian_dense(m: int, n: int) -> tuple[int, ...]:
    # (q^{m+1}; q)_n / (q; q)_n for m, n >= 0: a polynomial of degree n*m
    size = n * m + 1
    coeffs = [1] + [0] * (size + n * (n + 1) // 2 + n * m)
    for j in range(n):
        coeffs = multiply_one_minus_q_power(coeffs, m + 1 + j)
    coeffs = divide_by_qfactorial(coeffs, n)
    if any(coeffs[size:]):
        raise ArithmeticError("inexact Gaussian division")  # pragma: no cover
    return tuple(coeffs[:size])


@lru_cache(maxsize=None)
def qbinomial_poly(m: int, n: int) -> QPolynomial:
    """Gaussian binomial [m+n choose n] = (q^{m+1})_n / (q)_n as an exact
    Laurent polynomial.

    Zero for n < 0.  For -n <= m < 0 the numerator contains 1 - q^0, so the
    value is zero; for m < -n it is a genuine Laurent polynomial.
    """
    if n < 0:
        return QPolynomial()
    if n == 0:
        return QPolynomial.monomial(0)
    if m >= 0:
        return QPolynomial.from_dense(_gaussian_dense(m, n))
    if m >= -n:
        return QPolynomial()
    # all numerator exponents negative: pull out -q^{m+1+j} from each factor
    reflected = QPolynomial.from_dense(_gaussian_dense(-m - n - 1, n))
    return reflected.shift(n * m + triangular(n)) * (-1) ** n


def qbinomial(m: int, n: int, truncation: int) -> TruncatedSeries:
    """[m+n choose n] as a truncated series.

    Raises ValueError when the value has negative powers of q (m < -n); use
    :func:`qbinomial_poly` for the Laurent case.
    """
    return qbinomial_poly(m, n).to_series(truncation)


def euler_quadruple_product(truncation: int) -> TruncatedSeries:
    """prod_{m>=1} (1+Aq^m)(1+Bq^m)(1+Cq^m)(1+Dq^m) truncated at q^truncation."""
    N = truncation
    out = TruncatedSeries.one(N)
    for marker in (MARKER_A, MARKER_B, MARKER_C, MARKER_D):
        # (-X q; q)_N
        out = mul(out, pochhammer(1, N, N, markers=marker, coeff=-1))
    return out


@dataclass(frozen=True)
class Translation:
    """q -> q^modulus together with X -> X q^shift for each marker X."""

    modulus: int
    shifts: tuple[int, int, int, int] = (0, 0, 0, 0)

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if len(self.shifts) != 4:
            raise ValueError("need one shift per marker")
        object.__setattr__(self, "shifts", tuple(int(s) for s in self.shifts))

    def image_degree(self, degree: int, markers) -> int:
        return self.modulus * degree + sum(s * e for s, e in zip(self.shifts, markers))

    def then(self, other: "Translation") -> "Translation":
        """Composite of applying ``self`` first and ``other`` second."""
        return Translation(
            self.modulus * other.modulus,
            tuple(other.modulus * r + s for r, s in zip(self.shifts, other.shifts)),
        )


GOELLNITZ_15 = Translation(15, (-8, -4, -2, -1))
GOELLNITZ_6 = Translation(6, (-4, -2, -1, 0))


def apply_dilation(s: TruncatedSeries, t: Translation, truncation: int) -> TruncatedSeries:
    """Substitute q -> q^M, X -> X q^{r_X}; drop terms above ``truncation``.

    Only terms below q^{truncation} of the output are meaningful if the input
    was truncated too early; choosing the input truncation is the caller's job.
    """
    out = {}
    for (d, m), c in s._terms.items():
        e = t.image_degree(d, m)
        if e < 0:
            raise ValueError(f"dilation sends q^{d}*{tuple(m)} to negative degree {e}")
        if e <= truncation:
            out[(e, m)] = c
    return TruncatedSeries._raw(out, truncation)
