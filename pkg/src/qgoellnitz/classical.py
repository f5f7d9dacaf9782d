"""Ordinary integer partitions obtained from the colored theorems by the
residue-class substitutions: the mod-15 theorem and Goellnitz's mod-6
theorem.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator, Sequence

from .colored import (
    ALL_COLORS,
    NONQUATERNARY_COLORS,
    THREE_COLOR_ALPHABET,
    Color,
    ColoredPart,
    iter_valid_g2,
)
from .report import Checker, VerificationReport
from .series import MarkerExponents

OFFSETS_15 = {
    Color.A: 8, Color.B: 4, Color.C: 2, Color.D: 1,
    Color.AB: 12, Color.AC: 10, Color.AD: 9,
    Color.BC: 6, Color.BD: 5, Color.CD: 3,
    Color.ABCD: 15,
}
OFFSETS_6 = {
    Color.A: 4, Color.B: 2, Color.C: 1,
    Color.AB: 6, Color.AC: 5, Color.BC: 3,
}

# residues of the four primary colors
P1_RESIDUES = (7, 11, 13, 14)
PG_RESIDUES = (2, 4, 5)
# 2^0, 2^1, 2^2, 2^3: the residues of the dropped ternary colors
EXCLUDED_RESIDUES_15 = (1, 2, 4, 8)


def substitute_15(p: ColoredPart) -> int:
    return 15 * p.weight - OFFSETS_15[p.color]


def substitute_6(p: ColoredPart) -> int:
    try:
        offset = OFFSETS_6[p.color]
    except KeyError:
        raise ValueError(f"color {p.color.value} has no mod-6 image") from None
    return 6 * p.weight - offset


def color_of_15(m: int) -> Color:
    """Inverse of substitute_15 on colors: the color owning residue m mod 15."""
    r = (-m) % 15 or 15
    for color, off in OFFSETS_15.items():
        if off == r:
            return color
    raise ValueError(f"{m} lies in a ternary residue class")


def letters_15(m: int) -> MarkerExponents:
    color = color_of_15(m)
    return MarkerExponents(*(int(x in color.letters) for x in "ABCD"))


# the order-isomorphism claim


def order_isomorphism_check(count: int = 15) -> VerificationReport:
    """The first ``count`` nonquaternary symbols, in symbol order, map under
    substitute_15 onto the ascending positive integers that avoid residues
    0, 1, 2, 4, 8 mod 15 and are coprime to 15 when below 15.  Also checks
    monotonicity of the full map (quaternary included) and the coprimality
    split primary/secondary."""
    if count < 1:
        raise ValueError("count must be >= 1")
    check = Checker("order15")
    symbols = []
    w = 1
    while len(symbols) < count:
        symbols += [ColoredPart(c, w) for c in NONQUATERNARY_COLORS if w >= c.min_weight]
        w += 1
    symbols = symbols[:count]
    images = [substitute_15(s) for s in symbols]
    expected = []
    m = 1
    while len(expected) < count:
        if m % 15 and is_admissible_g1_part(m):
            expected.append(m)
        m += 1
    for idx, (got, want) in enumerate(zip(images, expected)):
        if not check.compare({"position": idx, "symbol": str(symbols[idx])}, got, want):
            return check.report(images=images)
    for s, m in zip(symbols, images):
        coprime = gcd(m, 15) == 1
        if not check.compare({"symbol": str(s), "image": m, "test": "coprime"},
                             int(coprime), int(s.color.is_primary)):
            return check.report(images=images)
    # every symbol up to the weight reached, quaternary included
    full = sorted(
        (ColoredPart(c, v) for v in range(1, w + 1) for c in ALL_COLORS if v >= c.min_weight),
        key=lambda s: s.sort_key,
    )
    full_images = [substitute_15(s) for s in full]
    for x, y, mx, my in zip(full, full[1:], full_images, full_images[1:]):
        if not check.compare({"symbols": f"{x}<{y}", "test": "monotone"}, int(mx < my), 1):
            break
    return check.report(images=images)


# the sum-of-distinct-parts sides


def distinct_parts_vector(parts: Sequence[int], n_max: int) -> list[int]:
    """Coefficients of prod (1 + q^m) over the given parts, up to q^n_max."""
    out = [1] + [0] * n_max
    for m in parts:
        for n in range(n_max, m - 1, -1):
            out[n] += out[n - m]
    return out


def p1_parts(n_max: int) -> list[int]:
    return [m for m in range(1, n_max + 1) if m % 15 in P1_RESIDUES]


def pg_parts(n_max: int) -> list[int]:
    return [m for m in range(1, n_max + 1) if m % 6 in PG_RESIDUES]


def p1_vector(n_max: int) -> list[int]:
    return distinct_parts_vector(p1_parts(n_max), n_max)


def count_p1(n: int) -> int:
    if n < 0:
        return 0
    return p1_vector(n)[n]


def p1_refined(n_max: int) -> dict[tuple[int, MarkerExponents], int]:
    """P-side counts of the mod-15 theorem refined by how many parts fall in
    each class 7, 11, 13, 14: ``{(n, markers): count}``."""
    table: dict = {(0, MarkerExponents()): 1}
    for m in p1_parts(n_max):
        bump = MarkerExponents(*(int(m % 15 == r) for r in P1_RESIDUES))
        for (n, mk), c in list(table.items()):
            if n + m <= n_max:
                key = (n + m, mk + bump)
                table[key] = table.get(key, 0) + c
    return table


def pg_vector(n_max: int) -> list[int]:
    return distinct_parts_vector(pg_parts(n_max), n_max)


def count_pg(n: int) -> int:
    if n < 0:
        return 0
    return pg_vector(n)[n]


# the difference-condition sides


@dataclass(frozen=True)
class Theorem1Rules:
    nonmultiple_gap: int = 15
    multiple_gap: int = 60
    bound_with_7: int = 30
    bound_without_7: int = 45
    bound_per_part: int = 30

    def least_multiple(self, tau: int, has_7: bool) -> int:
        base = self.bound_with_7 if has_7 else self.bound_without_7
        return base + self.bound_per_part * tau


DEFAULT_T1_RULES = Theorem1Rules()


def is_admissible_g1_part(m: int) -> bool:
    if m < 1 or m % 15 in EXCLUDED_RESIDUES_15:
        return False
    if m % 15 and gcd(m, 15) > 1 and m <= 15:
        return False
    return True


def is_valid_g1(parts: Sequence[int], rules: Theorem1Rules = DEFAULT_T1_RULES) -> bool:
    parts = sorted(parts, reverse=True)
    if not all(is_admissible_g1_part(m) for m in parts):
        return False
    nonmult = [m for m in parts if m % 15]
    mult = [m for m in parts if m % 15 == 0]
    for x, y in zip(nonmult, nonmult[1:]):
        gap = x - y
        if gap < rules.nonmultiple_gap:
            return False
        if gap == rules.nonmultiple_gap and gcd(x, 15) != 1:
            return False
    for x, y in zip(mult, mult[1:]):
        if x - y < rules.multiple_gap:
            return False
    if mult and mult[-1] < rules.least_multiple(len(nonmult), 7 in nonmult):
        return False
    return True


def _shifted_add(acc: list[int], vec: Sequence[int], by: int) -> None:
    for t in range(len(acc) - by):
        if vec[t]:
            acc[t + by] += vec[t]


def chain_vectors(parts: Sequence[int], n_max: int, gap: int,
                  tight_ok: Callable[[int], bool], max_len: int) -> list[dict[int, list[int]]]:
    """Counts of increasing chains from ``parts`` with consecutive differences
    >= gap, where a difference of exactly ``gap`` is allowed only if
    ``tight_ok(larger)``.

    Returns ``chains[k][x]``: totals (by n <= n_max) of chains of k parts
    whose smallest part is x.
    """
    allowed = sorted(set(parts))
    top = n_max + 1
    chains: list[dict[int, list[int]]] = [{}]
    one = {x: [0] * top for x in allowed}
    for x in allowed:
        one[x][x] = 1
    chains.append(one)
    for k in range(2, max_len + 1):
        prev = chains[k - 1]
        # tail[x] = sum of prev[y] over allowed y >= x
        tail: dict[int, list[int]] = {}
        running = [0] * top
        for x in reversed(allowed):
            running = [a + b for a, b in zip(running, prev[x])]
            tail[x] = running
        nxt = {}
        for x in allowed:
            acc = [0] * top
            above = [y for y in allowed if y > x + gap]
            if above:
                _shifted_add(acc, tail[above[0]], x)
            if x + gap in prev and tight_ok(x + gap):
                _shifted_add(acc, prev[x + gap], x)
            nxt[x] = acc
        if not any(any(v) for v in nxt.values()):
            break
        chains.append(nxt)
    return chains


def g1_vector(n_max: int, rules: Theorem1Rules = DEFAULT_T1_RULES) -> list[int]:
    """[G(n) for n = 0..n_max] for the mod-15 difference conditions."""
    nonmult = [m for m in range(1, n_max + 1) if m % 15 and is_admissible_g1_part(m)]
    chains = chain_vectors(
        nonmult, n_max, rules.nonmultiple_gap,
        lambda m: gcd(m, 15) == 1, max_len=n_max // 7 + 1,
    )
    top = n_max + 1
    multiples = [m for m in range(15, n_max + 1, 15)]
    memo: dict[int, list[int]] = {}

    def multiple_sets(least: int) -> list[int]:
        # sets of multiples of 15, all >= least, pairwise >= multiple_gap apart
        if least in memo:
            return memo[least]
        acc = [1] + [0] * n_max
        for x in multiples:
            if x >= least:
                _shifted_add(acc, multiple_sets(x + rules.multiple_gap), x)
        memo[least] = acc
        return acc

    out = [0] * top
    for tau, level in enumerate(chains):
        if tau == 0:
            groups = [(False, [1] + [0] * n_max)]
        else:
            with_7 = level.get(7, [0] * top)
            without_7 = [0] * top
            for x, vec in level.items():
                if x != 7:
                    without_7 = [a + b for a, b in zip(without_7, vec)]
            groups = [(True, with_7), (False, without_7)]
        for has_7, vec in groups:
            mult = multiple_sets(rules.least_multiple(tau, has_7))
            for s, a in enumerate(vec):
                if a:
                    _shifted_add(out, [a * v for v in mult], s)
    return out


def count_g1(n: int, rules: Theorem1Rules = DEFAULT_T1_RULES) -> int:
    if n < 0:
        return 0
    return g1_vector(n, rules)[n]


def iter_g1(n: int, rules: Theorem1Rules = DEFAULT_T1_RULES) -> Iterator[tuple[int, ...]]:
    """Valid mod-15 difference-condition partitions of exactly n, largest
    part first."""
    candidates = [m for m in range(1, n + 1) if is_admissible_g1_part(m)]

    def build(start: int, left: int, chosen: list[int]):
        if left == 0:
            if is_valid_g1(chosen, rules):
                yield tuple(sorted(chosen, reverse=True))
            return
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if m > left:
                break
            if chosen and not _g1_prefix_ok(chosen, m, rules):
                continue
            yield from build(idx + 1, left - m, chosen + [m])

    yield from build(0, n, [])


def _g1_prefix_ok(chosen: list[int], m: int, rules: Theorem1Rules) -> bool:
    # chosen is increasing; only the local gap conditions are pruned here
    same_kind = [x for x in chosen if (x % 15 == 0) == (m % 15 == 0)]
    if not same_kind:
        return True
    gap = m - same_kind[-1]
    if m % 15 == 0:
        return gap >= rules.multiple_gap
    if gap < rules.nonmultiple_gap:
        return False
    return gap > rules.nonmultiple_gap or gcd(m, 15) == 1


def verify_theorem1(n_max: int, rules: Theorem1Rules = DEFAULT_T1_RULES) -> VerificationReport:
    check = Checker("thm1")
    check.compare_sequences({"n_max": n_max}, g1_vector(n_max, rules), p1_vector(n_max))
    return check.report()


def verify_theorem1_refined(n_max: int) -> VerificationReport:
    """Both sides of the mod-15 theorem refined by letter multiplicities:
    P-side by residue class, G-side by the colors the parts came from."""
    check = Checker("thm1-refined")
    p_table = p1_refined(n_max)
    for n in range(n_max + 1):
        g = Counter()
        for parts in iter_g1(n):
            g[sum((letters_15(m) for m in parts), MarkerExponents())] += 1
        keys = sorted({mk for (m, mk) in p_table if m == n} | set(g))
        for mk in keys:
            if not check.compare({"n": n}, g.get(mk, 0), p_table.get((n, mk), 0),
                                 degree=n, markers=mk):
                return check.report()
    return check.report()


def is_valid_gg(parts: Sequence[int]) -> bool:
    """Parts never 1 or 3, consecutive differences >= 6 with equality only
    at parts congruent to 2, 4, 5 mod 6."""
    parts = sorted(parts, reverse=True)
    if any(m < 1 or m in (1, 3) for m in parts):
        return False
    for x, y in zip(parts, parts[1:]):
        if x - y < 6:
            return False
        if x - y == 6 and x % 6 not in PG_RESIDUES:
            return False
    return True


def gg_vector(n_max: int) -> list[int]:
    parts = [m for m in range(2, n_max + 1) if m != 3]
    chains = chain_vectors(parts, n_max, 6, lambda m: m % 6 in PG_RESIDUES,
                           max_len=n_max // 2 + 1)
    out = [1] + [0] * n_max
    for level in chains[1:]:
        for vec in level.values():
            out = [a + b for a, b in zip(out, vec)]
    return out


def count_gg(n: int) -> int:
    if n < 0:
        return 0
    return gg_vector(n)[n]


def verify_theorem_g(n_max: int) -> VerificationReport:
    check = Checker("thmG")
    check.compare_sequences({"n_max": n_max}, gg_vector(n_max), pg_vector(n_max))
    return check.report()


# transport from the colored theorems


def transported_g1_vector(n_max: int) -> list[int]:
    """Colored partitions valid for the four-color theorem, counted by the
    sum of their mod-15 images."""
    out = [0] * (n_max + 1)
    for p in iter_valid_g2(n_max, size=substitute_15):
        out[sum(substitute_15(x) for x in p)] += 1
    return out


def transported_gg_vector(n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for p in iter_valid_g2(n_max, size=substitute_6, colors=THREE_COLOR_ALPHABET):
        out[sum(substitute_6(x) for x in p)] += 1
    return out


def verify_transport_15(n_max: int) -> VerificationReport:
    check = Checker("transport15")
    check.compare_sequences({"n_max": n_max}, transported_g1_vector(n_max), g1_vector(n_max))
    return check.report()


def verify_transport_6(n_max: int) -> VerificationReport:
    check = Checker("transport6")
    check.compare_sequences({"n_max": n_max}, transported_gg_vector(n_max), gg_vector(n_max))
    return check.report()
