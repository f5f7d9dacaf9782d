"""Weighted words over four primary letters: colors, colored parts, the gap
conditions of the four-parameter Goellnitz-type theorem and its three-color
specialisation, and counters for both sides of those theorems.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, NamedTuple, Sequence

from .report import Checker, VerificationReport
from .series import MarkerExponents, triangular


class Color(Enum):
    """The eleven admissible colors, declared in increasing tie-break order.

    Ternary colors (ABC, ABD, ACD, BCD) are deliberately absent.
    """

    ABCD = "ABCD"
    AB = "AB"
    AC = "AC"
    AD = "AD"
    A = "A"
    BC = "BC"
    BD = "BD"
    B = "B"
    CD = "CD"
    C = "C"
    D = "D"

    @property
    def letters(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def kind(self) -> str:
        return {1: "primary", 2: "secondary", 4: "quaternary"}[len(self.value)]

    @property
    def is_primary(self) -> bool:
        return len(self.value) == 1

    @property
    def is_quaternary(self) -> bool:
        return self is Color.ABCD

    @property
    def min_weight(self) -> int:
        # 1 for primaries, 2 for secondaries, 4 for the quaternary color
        return len(self.value)


_RANK = {c: r for r, c in enumerate(Color)}

ALL_COLORS: tuple[Color, ...] = tuple(Color)
PRIMARY_COLORS = (Color.A, Color.B, Color.C, Color.D)
NONQUATERNARY_COLORS: tuple[Color, ...] = tuple(c for c in Color if c is not Color.ABCD)
# the alphabet of the three-color specialisation (D and everything with D removed)
THREE_COLOR_ALPHABET: tuple[Color, ...] = tuple(
    c for c in Color if "D" not in c.value
)


def may_follow(larger: Color, smaller: Color) -> bool:
    """Whether ``larger_{n+1}`` may sit directly above ``smaller_n``."""
    if larger is smaller and larger.is_primary:
        return True
    return larger.rank > smaller.rank


@dataclass(frozen=True)
class ColoredPart:
    color: Color
    weight: int

    def __post_init__(self):
        if self.weight < self.color.min_weight:
            raise ValueError(
                f"{self.color.value} parts need weight >= {self.color.min_weight}, "
                f"got {self.weight}"
            )

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.weight, self.color.rank)

    def __lt__(self, other: "ColoredPart") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.color.value}_{self.weight}"

    @classmethod
    def parse(cls, text: str) -> "ColoredPart":
        m = re.fullmatch(r"\s*([A-D]+)_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse colored part {text!r}")
        return cls(Color(m.group(1)), int(m.group(2)))


def compare_symbols(x: ColoredPart, y: ColoredPart) -> int:
    """-1 if x < y, 1 if x > y, 0 for the same symbol."""
    kx, ky = x.sort_key, y.sort_key
    return (kx > ky) - (kx < ky)


@dataclass(frozen=True)
class ColoredPartition:
    """Colored parts listed in strictly decreasing symbol order."""

    parts: tuple[ColoredPart, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for x, y in zip(self.parts, self.parts[1:]):
            if compare_symbols(x, y) <= 0:
                raise ValueError(f"parts not strictly decreasing at {x}, {y}")

    @classmethod
    def from_parts(cls, parts) -> "ColoredPartition":
        return cls(tuple(sorted(parts, key=lambda p: p.sort_key, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "ColoredPartition":
        tokens = [t for t in re.split(r"[\s,+()\[\]]+", text) if t]
        return cls.from_parts(ColoredPart.parse(t) for t in tokens)

    @property
    def total(self) -> int:
        return sum(p.weight for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.parts)) + ")"


class FreqVector(NamedTuple):
    """Number of parts in each color.  ``ab`` is a count, not a product."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    ab: int = 0
    ac: int = 0
    ad: int = 0
    bc: int = 0
    bd: int = 0
    cd: int = 0
    Q: int = 0

    @property
    def tau(self) -> int:
        """Number of nonquaternary parts."""
        return sum(self) - self.Q

    def of(self, color: Color) -> int:
        return self[_FIELD_INDEX[color]]

    def minimal_total(self) -> int:
        """Smallest weight a partition with these frequencies could have."""
        total = 0
        for color in Color:
            f = self.of(color)
            total += f * color.min_weight + triangular(f - 1)
        return total


_FIELD_INDEX = {
    Color.A: 0, Color.B: 1, Color.C: 2, Color.D: 3,
    Color.AB: 4, Color.AC: 5, Color.AD: 6,
    Color.BC: 7, Color.BD: 8, Color.CD: 9, Color.ABCD: 10,
}


def freq_vector(p: ColoredPartition) -> FreqVector:
    counts = [0] * 11
    for part in p:
        counts[_FIELD_INDEX[part.color]] += 1
    return FreqVector(*counts)


def constraints_image(f: FreqVector) -> MarkerExponents:
    """Letter multiplicities (i, j, k, l) of a frequency vector."""
    return MarkerExponents(
        f.a + f.ab + f.ac + f.ad + f.Q,
        f.b + f.ab + f.bc + f.bd + f.Q,
        f.c + f.ac + f.bc + f.cd + f.Q,
        f.d + f.ad + f.bd + f.cd + f.Q,
    )


def fiber(target) -> Iterator[FreqVector]:
    """All frequency vectors whose letter multiplicities equal ``target``.

    Lexicographic in (Q, ab, ac, ad, bc, bd, cd).
    """
    i, j, k, l = target
    for Q in range(min(i, j, k, l) + 1):
        i1, j1, k1, l1 = i - Q, j - Q, k - Q, l - Q
        for ab in range(min(i1, j1) + 1):
            for ac in range(min(i1 - ab, k1) + 1):
                for ad in range(min(i1 - ab - ac, l1) + 1):
                    a = i1 - ab - ac - ad
                    for bc in range(min(j1 - ab, k1 - ac) + 1):
                        for bd in range(min(j1 - ab - bc, l1 - ad) + 1):
                            b = j1 - ab - bc - bd
                            for cd in range(min(k1 - ac - bc, l1 - ad - bd) + 1):
                                c = k1 - ac - bc - cd
                                d = l1 - ad - bd - cd
                                yield FreqVector(a, b, c, d, ab, ac, ad, bc, bd, cd, Q)


@dataclass(frozen=True)
class GapRules:
    """Parameters of the quaternary conditions.

    Defaults are the theorem as stated; other values exist so that tests can
    check the verifiers notice a wrong rule.
    """

    quaternary_gap: int = 4
    bound_with_a1: int = 3
    bound_without_a1: int = 4
    bound_per_part: int = 2

    def least_quaternary(self, tau: int, has_a1: bool) -> int:
        base = self.bound_with_a1 if has_a1 else self.bound_without_a1
        return base + self.bound_per_part * tau


DEFAULT_RULES = GapRules()


def is_valid_p2(p: ColoredPartition) -> bool:
    """Only primary colors, and parts of one color pairwise distinct."""
    seen = set()
    for part in p:
        if not part.color.is_primary:
            return False
        if (part.color, part.weight) in seen:
            return False
        seen.add((part.color, part.weight))
    return True


def is_valid_g2(p: ColoredPartition, rules: GapRules = DEFAULT_RULES) -> bool:
    nonq = [x for x in p if not x.color.is_quaternary]
    quat = [x.weight for x in p if x.color.is_quaternary]
    for larger, smaller in zip(nonq, nonq[1:]):
        gap = larger.weight - smaller.weight
        if gap < 1:
            return False
        if gap == 1 and not may_follow(larger.color, smaller.color):
            return False
    for w1, w2 in zip(quat, quat[1:]):
        if w1 - w2 < rules.quaternary_gap:
            return False
    if quat:
        has_a1 = ColoredPart(Color.A, 1) in nonq
        if quat[-1] < rules.least_quaternary(len(nonq), has_a1):
            return False
    return True


def is_valid_ga(p: ColoredPartition) -> bool:
    """Three-color side: colors A, B, C, AB, AC, BC with the same gap rule."""
    return all(x.color in THREE_COLOR_ALPHABET for x in p) and is_valid_g2(p)


# counting the sum-of-distinct-parts side


@lru_cache(maxsize=None)
def distinct_parts_exact(m: int, parts: int) -> int:
    """Partitions of m into exactly ``parts`` distinct positive parts."""
    if parts == 0:
        return 1 if m == 0 else 0
    if m < triangular(parts):
        return 0
    # remove 1 from every part; a part equal to 1 disappears
    return distinct_parts_exact(m - parts, parts) + distinct_parts_exact(m - parts, parts - 1)


def p2_vector(target, n_max: int) -> list[int]:
    """[P(n; i, j, k, l) for n = 0..n_max]."""
    out = [1] + [0] * n_max
    for count in target:
        one = [distinct_parts_exact(m, count) for m in range(n_max + 1)]
        out = _convolve(out, one, n_max)
    return out


def count_p2(n: int, target) -> int:
    if n < 0:
        return 0
    return p2_vector(MarkerExponents(*target), n)[n]


# counting the difference-condition side


def _convolve(u: Sequence[int], v: Sequence[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for s, x in enumerate(u):
        if x:
            for t in range(0, n_max + 1 - s):
                if v[t]:
                    out[s + t] += x * v[t]
    return out


_NONQ_INDEX = {c: idx for idx, c in enumerate(NONQUATERNARY_COLORS)}
_A_INDEX = _NONQ_INDEX[Color.A]


class G2Counter:
    """Counts difference-condition partitions of every n <= n_max per
    frequency vector, memoising shared suffixes across queries.

    Nonquaternary parts occupy distinct weights, so they are placed weight by
    weight remembering only the color used at the previous weight.  The
    quaternary parts only see the number of nonquaternary parts and whether
    A_1 occurs, so they are counted separately and convolved in.
    """

    def __init__(self, n_max: int, rules: GapRules = DEFAULT_RULES):
        self.n_max = n_max
        self.rules = rules
        self._zero = (0,) * (n_max + 1)
        self._one = (1,) + (0,) * n_max
        self._suffix_memo: dict = {}
        self._quat_memo: dict = {}
        self._vector_memo: dict = {}

    def _suffix(self, w: int, prev: int | None, rem: tuple[int, ...]) -> tuple[int, ...]:
        key = (w, prev, rem)
        hit = self._suffix_memo.get(key)
        if hit is not None:
            return hit
        k = sum(rem)
        if k == 0:
            out = self._one
        elif k * w + triangular(k - 1) > self.n_max:
            out = self._zero
        else:
            acc = list(self._suffix(w + 1, None, rem))
            prev_color = None if prev is None else NONQUATERNARY_COLORS[prev]
            for idx, left in enumerate(rem):
                if not left:
                    continue
                color = NONQUATERNARY_COLORS[idx]
                if w < color.min_weight:
                    continue
                if prev_color is not None and not may_follow(color, prev_color):
                    continue
                sub = self._suffix(w + 1, idx, rem[:idx] + (left - 1,) + rem[idx + 1:])
                for t in range(self.n_max + 1 - w):
                    if sub[t]:
                        acc[t + w] += sub[t]
            out = tuple(acc)
        self._suffix_memo[key] = out
        return out

    def nonquaternary(self, f: FreqVector) -> tuple[list[int], list[int]]:
        """Counts by total of the nonquaternary parts, split into
        (containing A_1, not containing A_1)."""
        rem = tuple(f.of(c) for c in NONQUATERNARY_COLORS)
        everything = self._suffix(1, None, rem)
        if rem[_A_INDEX] == 0:
            return [0] * (self.n_max + 1), list(everything)
        reduced = rem[:_A_INDEX] + (rem[_A_INDEX] - 1,) + rem[_A_INDEX + 1:]
        rest = self._suffix(2, _A_INDEX, reduced)
        with_a1 = [0] + list(rest[: self.n_max])
        return with_a1, [x - y for x, y in zip(everything, with_a1)]

    def quaternary(self, count: int, least: int) -> tuple[int, ...]:
        """Counts by total of ``count`` quaternary weights, each >= least and
        pairwise at least the quaternary gap apart."""
        least = max(least, Color.ABCD.min_weight)
        key = (count, least)
        hit = self._quat_memo.get(key)
        if hit is not None:
            return hit
        if count == 0:
            out = self._one
        else:
            gap = self.rules.quaternary_gap
            acc = [0] * (self.n_max + 1)
            x = least
            while count * x + gap * triangular(count - 1) <= self.n_max:
                sub = self.quaternary(count - 1, x + gap)
                for t in range(self.n_max + 1 - x):
                    if sub[t]:
                        acc[t + x] += sub[t]
                x += 1
            out = tuple(acc)
        self._quat_memo[key] = out
        return out

    def vector(self, f: FreqVector) -> list[int]:
        """[G(n; f) for n = 0..n_max]."""
        f = FreqVector(*f)
        hit = self._vector_memo.get(f)
        if hit is not None:
            return list(hit)
        with_a1, without_a1 = self.nonquaternary(f)
        if f.Q == 0:
            out = [x + y for x, y in zip(with_a1, without_a1)]
        else:
            tau = f.tau
            out = [0] * (self.n_max + 1)
            for has_a1, nonq in ((True, with_a1), (False, without_a1)):
                if not any(nonq):
                    continue
                quat = self.quaternary(f.Q, self.rules.least_quaternary(tau, has_a1))
                for n, v in enumerate(_convolve(nonq, quat, self.n_max)):
                    out[n] += v
        self._vector_memo[f] = tuple(out)
        return out

    def count(self, n: int, f: FreqVector) -> int:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside 0..{self.n_max}")
        return self.vector(f)[n]

    def fiber_vector(self, target) -> list[int]:
        """[sum over the fiber of target of G(n; f) for n = 0..n_max]."""
        out = [0] * (self.n_max + 1)
        for f in fiber(target):
            for n, v in enumerate(self.vector(f)):
                out[n] += v
        return out


@lru_cache(maxsize=16)
def g2_counter(n_max: int, rules: GapRules = DEFAULT_RULES) -> G2Counter:
    return G2Counter(n_max, rules)


def count_g2(n: int, f: FreqVector, rules: GapRules = DEFAULT_RULES) -> int:
    if n < 0:
        return 0
    return g2_counter(n, rules).count(n, FreqVector(*f))


def _box(bound, dims: int) -> Iterator[tuple[int, ...]]:
    if isinstance(bound, int):
        bound = (bound,) * dims
    if len(bound) != dims:
        raise ValueError(f"expected {dims} bounds, got {bound}")
    return product(*(range(b + 1) for b in bound))


def verify_theorem2(n_max: int, ijkl_max=3, rules: GapRules = DEFAULT_RULES) -> VerificationReport:
    """P(n; i,j,k,l) == sum over the fiber of G(n; f), for every n <= n_max
    and every (i,j,k,l) <= ijkl_max."""
    counter = G2Counter(n_max, rules)
    check = Checker("thm2")
    for target in _box(ijkl_max, 4):
        check.compare_sequences(
            {"i": target[0], "j": target[1], "k": target[2], "l": target[3]},
            counter.fiber_vector(target), p2_vector(target, n_max),
        )
        if check.failed:
            break
    return check.report()


# three-color specialisation


class FreqVectorA(NamedTuple):
    a: int = 0
    b: int = 0
    c: int = 0
    ab: int = 0
    ac: int = 0
    bc: int = 0

    def lift(self) -> FreqVector:
        return FreqVector(a=self.a, b=self.b, c=self.c, ab=self.ab, ac=self.ac, bc=self.bc)


def fiber_a(target) -> Iterator[FreqVectorA]:
    """(a, b, c, ab, ac, bc) with i = a+ab+ac, j = b+ab+bc, k = c+ac+bc."""
    i, j, k = target
    for ab in range(min(i, j) + 1):
        for ac in range(min(i - ab, k) + 1):
            for bc in range(min(j - ab, k - ac) + 1):
                yield FreqVectorA(i - ab - ac, j - ab - bc, k - ac - bc, ab, ac, bc)


def count_pa(n: int, target) -> int:
    i, j, k = target
    return count_p2(n, (i, j, k, 0))


def count_ga(n: int, f: FreqVectorA) -> int:
    return count_g2(n, FreqVectorA(*f).lift())


def verify_theorem_a(n_max: int, ijk_max=3) -> VerificationReport:
    counter = G2Counter(n_max)
    check = Checker("thmA")
    for target in _box(ijk_max, 3):
        g = [0] * (n_max + 1)
        for f in fiber_a(target):
            g = [x + y for x, y in zip(g, counter.vector(f.lift()))]
        check.compare_sequences(
            {"i": target[0], "j": target[1], "k": target[2]},
            g, p2_vector((*target, 0), n_max),
        )
        if check.failed:
            break
    return check.report()


# explicit enumeration


def _weight(part: ColoredPart) -> int:
    return part.weight


def iter_valid_g2(limit: int, *, size: Callable[[ColoredPart], int] | None = None,
                  colors: Sequence[Color] = ALL_COLORS,
                  rules: GapRules = DEFAULT_RULES) -> Iterator[ColoredPartition]:
    """Every valid difference-condition partition whose total ``size`` is at
    most ``limit``.

    ``size`` defaults to the weight.  It must be nondecreasing along the symbol
    order and at least the weight, which holds for the weight itself and for
    the residue-class substitutions.
    """
    size = size or _weight
    nonq_colors = [c for c in colors if not c.is_quaternary]
    symbols = [
        ColoredPart(c, w)
        for w in range(1, limit + 1)
        for c in nonq_colors
        if w >= c.min_weight
    ]
    sizes = [size(s) for s in symbols]
    first_at_weight: dict[int, int] = {}
    for idx, s in enumerate(symbols):
        first_at_weight.setdefault(s.weight, idx)
    use_quaternary = Color.ABCD in colors
    a1 = ColoredPart(Color.A, 1)

    def quaternary_sets(least: int, budget: int) -> Iterator[list[ColoredPart]]:
        yield []
        w = max(least, Color.ABCD.min_weight)
        while w <= limit:
            part = ColoredPart(Color.ABCD, w)
            s = size(part)
            if s > budget:
                break
            for rest in quaternary_sets(w + rules.quaternary_gap, budget - s):
                yield [part] + rest
            w += 1

    def nonquaternary_chains(chain: list[ColoredPart], total: int):
        yield chain, total
        if chain:
            start = first_at_weight.get(chain[-1].weight + 1, len(symbols))
        else:
            start = 0
        for idx in range(start, len(symbols)):
            sym = symbols[idx]
            if total + sizes[idx] > limit:
                break
            if chain and sym.weight == chain[-1].weight + 1 and not may_follow(
                sym.color, chain[-1].color
            ):
                continue
            yield from nonquaternary_chains(chain + [sym], total + sizes[idx])

    for chain, total in nonquaternary_chains([], 0):
        if not use_quaternary:
            yield ColoredPartition(tuple(reversed(chain)))
            continue
        least = rules.least_quaternary(len(chain), bool(chain) and chain[0] == a1)
        for quat in quaternary_sets(least, limit - total):
            yield ColoredPartition.from_parts(chain + quat)


def iter_valid_p2(n: int, colors: Sequence[Color] = PRIMARY_COLORS) -> Iterator[ColoredPartition]:
    """Partitions of exactly n into primary-colored parts, distinct per color."""
    symbols = [ColoredPart(c, w) for w in range(1, n + 1) for c in colors]

    def build(start: int, left: int, chosen: list[ColoredPart]):
        if left == 0:
            yield ColoredPartition(tuple(reversed(chosen)))
            return
        for idx in range(start, len(symbols)):
            sym = symbols[idx]
            if sym.weight > left:
                break
            yield from build(idx + 1, left - sym.weight, chosen + [sym])

    yield from build(0, n, [])
