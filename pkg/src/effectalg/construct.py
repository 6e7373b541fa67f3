"""New algebras from old: products, horizontal sums, intervals, subalgebras,
and exhaustive enumeration of small effect algebras up to isomorphism."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .core import UNDEF, EffectAlgebra, find_isomorphism, from_table, validate_table

ENUMERATION_CAP = 8


def direct_product(E: EffectAlgebra, F: EffectAlgebra) -> EffectAlgebra:
    m = len(F)
    names = [f"{x}|{y}" for x in E.names for y in F.names]
    n = len(names)
    table = [[UNDEF] * n for _ in range(n)]
    for (a1, a2), (b1, b2) in product(product(range(len(E)), range(m)), repeat=2):
        s1, s2 = E.table[a1][b1], F.table[a2][b2]
        if s1 != UNDEF and s2 != UNDEF:
            table[a1 * m + a2][b1 * m + b2] = s1 * m + s2
    return from_table(names, E.zero * m + F.zero, E.one * m + F.one, table)


def horizontal_sum(E: EffectAlgebra, F: EffectAlgebra) -> EffectAlgebra:
    """Disjoint union with the zeros and the units identified.

    Names of the second summand that clash with the first get a ``_2``
    suffix (repeated until unique).
    """
    if len(E) < 2 or len(F) < 2:
        raise ValueError("horizontal sum needs summands with at least two elements")
    names = list(E.names)
    used = set(names)
    fmap = {F.zero: E.zero, F.one: E.one}
    for y in range(len(F)):
        if y in fmap:
            continue
        nm = F.names[y]
        while nm in used:
            nm += "_2"
        used.add(nm)
        fmap[y] = len(names)
        names.append(nm)
    n = len(names)
    table = [[UNDEF] * n for _ in range(n)]
    for a in range(len(E)):
        for b in range(len(E)):
            table[a][b] = E.table[a][b]
    for a in range(len(F)):
        for b in range(len(F)):
            s = F.table[a][b]
            if s != UNDEF:
                table[fmap[a]][fmap[b]] = fmap[s]
    for x in range(n):
        table[E.zero][x] = table[x][E.zero] = x
    return from_table(names, E.zero, E.one, table)


def interval_algebra(E: EffectAlgebra, a: int) -> EffectAlgebra:
    """[0, a] with ⊕ restricted to sums staying below a, and a as the unit."""
    if a == E.zero:
        raise ValueError("interval [0, 0] is not an effect algebra")
    keep = list(E.below[a])
    pos = {x: i for i, x in enumerate(keep)}
    table = [[UNDEF] * len(keep) for _ in keep]
    for x in keep:
        for y in keep:
            s = E.table[x][y]
            if s != UNDEF and E.order[s][a]:
                table[pos[x]][pos[y]] = pos[s]
    return from_table([E.names[x] for x in keep], pos[E.zero], pos[a], table)


def generated_subalgebra(E: EffectAlgebra, S: Iterable[int]) -> frozenset[int]:
    """Least superset of S ∪ {1} closed under ⊖ of comparable pairs."""
    out = set(S) | {E.one}
    work = list(out)
    while work:
        a = work.pop()
        new = []
        for b in list(out):
            if E.order[b][a]:
                new.append(E.ominus(a, b))
            if E.order[a][b]:
                new.append(E.ominus(b, a))
        for c in new:
            if c not in out:
                out.add(c)
                work.append(c)
    return frozenset(out)


def all_subalgebras(E: EffectAlgebra) -> list[frozenset[int]]:
    """Every sub-effect algebra of E, sorted by (size, sorted ids)."""
    start = generated_subalgebra(E, ())
    seen = {start}
    work = [start]
    while work:
        S = work.pop()
        for x in range(len(E)):
            if x in S:
                continue
            T = generated_subalgebra(E, S | {x})
            if T not in seen:
                seen.add(T)
                work.append(T)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


# -- exhaustive enumeration ----------------------------------------------------

def _involutions(items: list[int]) -> Iterator[dict[int, int]]:
    if not items:
        yield {}
        return
    first, rest = items[0], items[1:]
    for sub in _involutions(rest):
        yield {first: first, **sub}
    for i, other in enumerate(rest):
        for sub in _involutions(rest[:i] + rest[i + 1:]):
            yield {first: other, other: first, **sub}


def _tables_of_size(n: int) -> Iterator[list[list[int]]]:
    """All valid tables on ids 0..n-1 (0 = zero, n-1 = one) whose ids extend ≤.

    Every finite poset has a linear extension, so requiring a ⊕ b > a, b
    for nonzero a, b loses no isomorphism class. Undecided cells hold None.
    """
    one = n - 1
    inner = list(range(1, n - 1))
    for comp in _involutions(inner):
        t = [[UNDEF] * n for _ in range(n)]
        for x in range(n):
            t[0][x] = t[x][0] = x
        t[0][one] = t[one][0] = one
        for a in inner:
            t[a][comp[a]] = one
        pairs = [(a, b) for a in inner for b in inner if a <= b and comp[a] != b]
        for a, b in pairs:
            t[a][b] = t[b][a] = None
        yield from _fill(t, pairs, 0, n)


def _consistent(t, n, a, b) -> bool:
    # injectivity of rows a and b (cancellativity)
    for r in {a, b}:
        vals = [v for v in t[r] if v is not None and v != UNDEF]
        if len(vals) != len(set(vals)):
            return False
    # associativity on every triple whose relevant cells are all decided
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if xy == UNDEF or xy is None:
                continue
            for z in range(n):
                xyz = t[xy][z]
                if xyz is None or xyz == UNDEF:
                    continue
                yz = t[y][z]
                if yz is None:
                    continue
                if yz == UNDEF:
                    return False
                xyz2 = t[x][yz]
                if xyz2 is None:
                    continue
                if xyz2 != xyz:
                    return False
    return True


def _fill(t, pairs, k, n):
    if k == len(pairs):
        yield [row[:] for row in t]
        return
    a, b = pairs[k]
    for v in [UNDEF, *range(max(a, b) + 1, n - 1)]:
        t[a][b] = t[b][a] = v
        if _consistent(t, n, a, b):
            yield from _fill(t, pairs, k + 1, n)
    t[a][b] = t[b][a] = None


def _names_for(n: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return ["0"] + [letters[i] for i in range(n - 2)] + ["1"]


def enumerate_all(max_n: int, cap: int = ENUMERATION_CAP) -> Iterator[EffectAlgebra]:
    """One effect algebra per isomorphism class with at most ``max_n`` elements.

    Ordered by size, then by discovery order of the backtracking search.
    """
    if max_n > cap:
        raise ValueError(f"enumeration above {cap} elements is not supported")
    for n in range(2, max_n + 1):
        found: list[EffectAlgebra] = []
        for table in _tables_of_size(n):
            if validate_table(table, 0, n - 1):
                continue
            E = from_table(_names_for(n), 0, n - 1, table)
            if any(find_isomorphism(E, F) is not None for F in found):
                continue
            found.append(E)
            yield E
