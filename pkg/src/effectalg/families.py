"""Orthogonal families, refinements, orthogonal covers and the closure M ↦ M̄."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .core import UNDEF, EffectAlgebra


class BudgetExceeded(RuntimeError):
    """A search ran out of its node budget before reaching an answer."""


class Budget:
    """Shared node counter; ``limit=None`` means unbounded."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def tick(self, k: int = 1):
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} nodes exceeded")


def _budget(budget):
    if budget is None or isinstance(budget, Budget):
        return budget or Budget()
    return Budget(budget)


@dataclass(frozen=True)
class OrthogonalFamily:
    members: tuple[int, ...]
    total: int

    def __len__(self):
        return len(self.members)

    def names(self, E: EffectAlgebra) -> tuple[str, ...]:
        return tuple(E.names[m] for m in self.members)


@dataclass(frozen=True)
class Refinement:
    coarse: OrthogonalFamily
    fine: OrthogonalFamily
    partition: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class CoverCertificate:
    family: OrthogonalFamily
    assignment: Mapping[int, tuple[int, ...]]
    range_within: frozenset[int]

    def verify(self, E: EffectAlgebra) -> bool:
        fam = self.family.members
        if family_sum(E, fam) != self.family.total:
            return False
        if not set(fam) <= self.range_within:
            return False
        for x, idx in self.assignment.items():
            if len(set(idx)) != len(idx) or any(not 0 <= i < len(fam) for i in idx):
                return False
            if family_sum(E, [fam[i] for i in idx]) != x:
                return False
        return True

    def to_json(self, E: EffectAlgebra) -> dict:
        return {
            "family": list(self.family.names(E)),
            "total": E.names[self.family.total],
            "assignment": {E.names[x]: list(idx) for x, idx in sorted(self.assignment.items())},
        }


def family_sum(E: EffectAlgebra, members: Iterable[int]) -> int | None:
    """Left fold of ⊕ over ``members``; None as soon as a step is undefined."""
    t = E.table
    acc = E.zero
    for m in members:
        acc = t[acc][m]
        if acc == UNDEF:
            return None
    return acc


def make_family(E: EffectAlgebra, members: Sequence[int]) -> OrthogonalFamily:
    total = family_sum(E, members)
    if total is None:
        raise ValueError(f"family {[E.names[m] for m in members]} is not orthogonal")
    return OrthogonalFamily(tuple(members), total)


def chain_height(E: EffectAlgebra) -> int:
    """Number of strict steps in the longest chain 0 < ... < 1."""
    height = {}
    for a in sorted(range(len(E)), key=lambda x: len(E.below[x])):
        height[a] = max((height[b] + 1 for b in E.below[a] if b != a), default=0)
    return height[E.one]


def is_refinement(E: EffectAlgebra, fine: Sequence[int], coarse: Sequence[int],
                  partition: Mapping[int, Iterable[int]] | Sequence[Iterable[int]]) -> bool:
    if family_sum(E, fine) is None or family_sum(E, coarse) is None:
        return False
    if isinstance(partition, Mapping):
        blocks = [partition.get(i, ()) for i in range(len(coarse))]
        if set(partition) - set(range(len(coarse))):
            return False
    else:
        blocks = list(partition)
        if len(blocks) != len(coarse):
            return False
    seen = []
    for blk in blocks:
        seen.extend(blk)
    if sorted(seen) != list(range(len(fine))):
        return False
    return all(family_sum(E, [fine[j] for j in sorted(blk)]) == c
               for c, blk in zip(coarse, blocks))


def enumerate_families(E: EffectAlgebra, range_within: Iterable[int],
                       max_len: int | None = None, budget=None) -> Iterator[OrthogonalFamily]:
    """Every orthogonal multiset of nonzero elements drawn from ``range_within``.

    Members are listed in nondecreasing id order. Families are yielded
    longest first, ties broken lexicographically by member ids.
    """
    budget = _budget(budget)
    if max_len is None:
        max_len = chain_height(E)
    pool = sorted(x for x in set(range_within) if x != E.zero)
    t = E.table
    by_len: list[list[tuple]] = [[] for _ in range(max_len + 1)]
    stack = []

    def rec(start, acc):
        for i in range(start, len(pool)):
            x = pool[i]
            s = t[acc][x]
            if s == UNDEF:
                continue
            budget.tick()
            stack.append(x)
            by_len[len(stack)].append((tuple(stack), s))
            if len(stack) < max_len:
                rec(i, s)
            stack.pop()

    rec(0, E.zero)
    for k in range(max_len, 0, -1):
        for members, total in by_len[k]:
            yield OrthogonalFamily(members, total)


@lru_cache(maxsize=None)
def _mask_order(k: int) -> tuple[int, ...]:
    """Bitmasks over k members ordered by (size, sorted index tuple)."""
    masks = range(1 << k)
    return tuple(sorted(masks, key=lambda m: (bin(m).count("1"),
                                              [i for i in range(k) if m >> i & 1])))


def subset_sums(E: EffectAlgebra, members: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Map each subfamily sum to its least index set (by size, then lexicographically)."""
    k = len(members)
    t = E.table
    sums = [E.zero] * (1 << k)
    for m in range(1, 1 << k):
        low = (m & -m).bit_length() - 1
        sums[m] = t[sums[m & (m - 1)]][members[low]]
    out = {}
    for m in _mask_order(k):
        s = sums[m]
        if s not in out:
            out[s] = tuple(i for i in range(k) if m >> i & 1)
    return out


def find_cover(E: EffectAlgebra, M: Iterable[int], range_within: Iterable[int],
               budget=None) -> CoverCertificate | None:
    """First orthogonal cover of ``M`` with range inside ``range_within``.

    Complete search in the order of :func:`enumerate_families`. Since
    extending a cover keeps it a cover, the first cover found is always a
    family that cannot be extended inside ``range_within``; other families
    are skipped without the subset check. Raises :class:`BudgetExceeded`.
    """
    M = frozenset(M)
    X = frozenset(range_within)
    t = E.table
    pool = [x for x in X if x != E.zero]
    for fam in enumerate_families(E, X, budget=budget):
        if any(t[fam.total][x] != UNDEF for x in pool):
            continue
        sums = subset_sums(E, fam.members)
        if all(x in sums for x in M):
            return CoverCertificate(fam, {x: sums[x] for x in M}, X)
    if M <= {E.zero}:
        return CoverCertificate(OrthogonalFamily((), E.zero), {x: () for x in M}, X)
    return None


def is_compatible_set(E: EffectAlgebra, M: Iterable[int], budget=None) -> CoverCertificate | None:
    return find_cover(E, M, E.carrier, budget=budget)


def is_internally_compatible(E: EffectAlgebra, M: Iterable[int], budget=None) -> CoverCertificate | None:
    M = frozenset(M)
    return find_cover(E, M, M, budget=budget)


def mutually_compatible(E: EffectAlgebra, a: int, b: int) -> tuple[int, int, int] | None:
    """Least triple (a1, b1, c) with a1⊕c = a, b1⊕c = b and a1⊕b1⊕c defined."""
    t = E.table
    best = None
    for c in E.below[a]:
        if not E.order[c][b]:
            continue
        a1, b1 = E.ominus(a, c), E.ominus(b, c)
        s = t[a1][b1]
        if s != UNDEF and t[s][c] != UNDEF:
            cand = (a1, b1, c)
            if best is None or cand < best:
                best = cand
    return best


def is_mutually_compatible_set(E: EffectAlgebra, M: Iterable[int]) -> bool:
    M = sorted(set(M))
    return all(mutually_compatible(E, a, b) is not None
               for i, a in enumerate(M) for b in M[i + 1:])


def closure_step(E: EffectAlgebra, M: Iterable[int]) -> set[int]:
    out = set(M)
    comp = E.comp
    for y in M:
        yc = comp[y]
        for x in E.below[y]:
            if E.order[x][yc]:
                out.add(x)
                out.add(E.ominus(y, x))
    return out


def closure(E: EffectAlgebra, M: Iterable[int]) -> frozenset[int]:
    """Least superset of M closed under adding x and y ⊖ x whenever x ≤ y, y′."""
    cur = set(M)
    while True:
        nxt = closure_step(E, cur)
        if nxt == cur:
            return frozenset(cur)
        cur = nxt
