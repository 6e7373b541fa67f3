"""Riesz decomposition, homogeneity, blocks, sharp/principal/central elements,
the compatibility center and ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .construct import all_subalgebras
from .core import UNDEF, Classification, EffectAlgebra, classify
from .families import (Budget, BudgetExceeded, enumerate_families, family_sum,
                       find_cover, is_compatible_set, subset_sums)

RDP_MAXIMAL = "rdp-maximal"
IC_MAXIMAL = "internally-compatible-maximal"


class InconsistencyError(AssertionError):
    """Two independent computations that must agree did not."""


class NotSubalgebraError(ValueError):
    def __init__(self, pair, message):
        self.pair = pair
        super().__init__(message)


# -- decompositions ------------------------------------------------------------

def _decomposes(E: EffectAlgebra, u: int, v1: int, v2: int, within=None) -> bool:
    """Is there u1 ≤ v1, u2 ≤ v2 with u = u1 ⊕ u2 (u1, u2 in ``within``)?"""
    for u1 in E.below[v1]:
        if not E.order[u1][u]:
            continue
        u2 = E.ominus(u, u1)
        if E.order[u2][v2] and (within is None or (u1 in within and u2 in within)):
            return True
    return False


def _rdp_witness(E: EffectAlgebra, S: Sequence[int] | None = None, homogeneous=False):
    """Least failing (u, v1, v2); S restricts everything to a subalgebra."""
    t = E.table
    elems = range(len(E)) if S is None else sorted(S)
    within = None if S is None else frozenset(S)
    for u in elems:
        if u == E.zero:
            continue
        for v1 in elems:
            for v2 in elems:
                s = t[v1][v2]
                if s == UNDEF or not E.order[u][s]:
                    continue
                if homogeneous and not E.order[u][E.comp[s]]:
                    continue
                if not _decomposes(E, u, v1, v2, within):
                    return (u, v1, v2)
    return None


def has_rdp(E: EffectAlgebra) -> bool | tuple[int, int, int]:
    """True, or the least triple (u, v1, v2) with u ≤ v1 ⊕ v2 that does not split."""
    w = _rdp_witness(E)
    return True if w is None else w


def is_homogeneous(E: EffectAlgebra) -> bool | tuple[int, int, int]:
    """True, or the least failing triple with u ≤ v1 ⊕ v2 and u ≤ (v1 ⊕ v2)′."""
    w = _rdp_witness(E, homogeneous=True)
    return True if w is None else w


def subset_has_rdp(E: EffectAlgebra, S: Iterable[int]) -> bool:
    """RDP of the sub-effect algebra S, computed inside E's table."""
    return _rdp_witness(E, list(S)) is None


def n_ary_decompose(E: EffectAlgebra, u: int, family: Sequence[int]) -> tuple[int, ...] | None:
    """Split u as u1 ⊕ ... ⊕ un with ui ≤ family[i].

    Requires u below both the family total and its complement. The search
    is complete, so None means no such split exists (and then E is not
    homogeneous).
    """
    total = family_sum(E, family)
    if total is None:
        raise ValueError("family is not orthogonal")
    if not (E.order[u][total] and E.order[u][E.comp[total]]):
        raise ValueError("u must lie below the family sum and its complement")
    n = len(family)
    if n == 0:
        return () if u == E.zero else None
    parts = []

    def rec(i, acc):
        if i == n - 1:
            if not E.order[acc][u]:
                return False
            last = E.ominus(u, acc)
            if E.order[last][family[i]]:
                parts.append(last)
                return True
            return False
        for x in E.below[family[i]]:
            s = E.table[acc][x]
            if s == UNDEF or not E.order[s][u]:
                continue
            parts.append(x)
            if rec(i + 1, s):
                return True
            parts.pop()
        return False

    return tuple(parts) if rec(0, E.zero) else None


# -- blocks --------------------------------------------------------------------

@dataclass(frozen=True)
class BlockSet:
    blocks: tuple[frozenset[int], ...]
    method: str

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def name_sets(self, E: EffectAlgebra) -> list[set[str]]:
        return [E.name_set(b) for b in self.blocks]


def _maximal(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    sets = set(sets)
    out = [s for s in sets if not any(s < t for t in sets)]
    return tuple(sorted(out, key=lambda s: (-len(s), sorted(s))))


def rdp_maximal_blocks(E: EffectAlgebra) -> tuple[frozenset[int], ...]:
    """Maximal sub-effect algebras with RDP."""
    return _maximal(S for S in all_subalgebras(E) if subset_has_rdp(E, S))


def maximal_internally_compatible_sets(E: EffectAlgebra, budget=None) -> tuple[frozenset[int], ...]:
    """Maximal internally compatible sets containing 1.

    Such a set is covered by a family inside it; dropping zeros, that
    family sums to 1 and the set equals the family's subset sums. So the
    candidates are the subset-sum sets of orthogonal families summing to 1.
    Each result is re-certified with :func:`find_cover` and checked to
    admit no one-element extension.
    """
    cands = {frozenset(subset_sums(E, f.members))
             for f in enumerate_families(E, E.carrier, budget=budget) if f.total == E.one}
    if E.one == E.zero:
        cands.add(frozenset({E.zero}))
    out = _maximal(cands)
    for B in out:
        if find_cover(E, B, B, budget=budget) is None:
            raise InconsistencyError(f"subset-sum set {sorted(B)} failed re-certification")
        for x in range(len(E)):
            if x not in B and find_cover(E, B | {x}, B | {x}, budget=budget) is not None:
                raise InconsistencyError(f"set {sorted(B)} extends by {x}")
    return out


def blocks(E: EffectAlgebra, cross_check: bool = True, budget=None) -> BlockSet:
    """All blocks: maximal sub-effect algebras with the Riesz decomposition property.

    For homogeneous E the blocks are recomputed as maximal internally
    compatible sets containing 1 and the two answers must agree.
    """
    res = rdp_maximal_blocks(E)
    if cross_check and is_homogeneous(E) is True:
        other = maximal_internally_compatible_sets(E, budget=budget)
        if set(other) != set(res):
            raise InconsistencyError("RDP-maximal blocks differ from maximal internally compatible sets")
    return BlockSet(res, RDP_MAXIMAL)


def is_homogeneous_via_blocks(E: EffectAlgebra, blockset: BlockSet | None = None) -> bool:
    """Every three-member orthogonal family has its range inside some block."""
    if blockset is None:
        blockset = BlockSet(rdp_maximal_blocks(E), RDP_MAXIMAL)
    n = len(E)
    t = E.table
    for u in range(n):
        for v1 in range(u, n):
            uv = t[u][v1]
            if uv == UNDEF:
                continue
            for v2 in range(v1, n):
                if t[uv][v2] == UNDEF:
                    continue
                if not any(u in B and v1 in B and v2 in B for B in blockset):
                    return False
    return True


# -- sharp, principal, central --------------------------------------------------

def is_sharp(E: EffectAlgebra, a: int) -> bool:
    ac = E.comp[a]
    return all(x == E.zero for x in E.below[a] if E.order[x][ac])


def is_principal(E: EffectAlgebra, a: int) -> bool:
    low = E.below[a]
    for i, x in enumerate(low):
        for y in low[i:]:
            s = E.table[x][y]
            if s != UNDEF and not E.order[s][a]:
                return False
    return True


def is_central(E: EffectAlgebra, a: int) -> bool:
    if not is_principal(E, a):
        return False
    ac = E.comp[a]
    for b in range(len(E)):
        count = 0
        for b1 in E.below[a]:
            if E.order[b1][b] and E.order[E.ominus(b, b1)][ac]:
                count += 1
        if count != 1:
            return False
    return True


def sharp_elements(E: EffectAlgebra) -> frozenset[int]:
    return frozenset(a for a in range(len(E)) if is_sharp(E, a))


def principal_elements(E: EffectAlgebra) -> frozenset[int]:
    return frozenset(a for a in range(len(E)) if is_principal(E, a))


def central_elements(E: EffectAlgebra) -> frozenset[int]:
    return frozenset(a for a in range(len(E)) if is_central(E, a))


def sharp_subalgebra(E: EffectAlgebra) -> EffectAlgebra:
    """E_S as an effect algebra; raises NotSubalgebraError if E_S is not closed."""
    S = sharp_elements(E)
    for a in sorted(S):
        for b in E.below[a]:
            if b in S and E.ominus(a, b) not in S:
                raise NotSubalgebraError(
                    (a, b), f"{E.names[a]} ⊖ {E.names[b]} = {E.names[E.ominus(a, b)]} is not sharp")
    return E.restrict(S)


def compatibility_center(E: EffectAlgebra, blockset: BlockSet | None = None) -> frozenset[int]:
    if blockset is None:
        blockset = blocks(E)
    out = frozenset(range(len(E)))
    for B in blockset:
        out &= B
    return out


# -- ideals --------------------------------------------------------------------

def is_ideal(E: EffectAlgebra, I: Iterable[int]) -> bool:
    """a, b ∈ I with a ⊥ b holds exactly when a ⊕ b ∈ I."""
    I = frozenset(I)
    n = len(E)
    for a in range(n):
        for b in range(n):
            s = E.table[a][b]
            if s != UNDEF and ((a in I and b in I) != (s in I)):
                return False
    return True


def is_riesz_ideal(E: EffectAlgebra, I: Iterable[int]) -> bool:
    """An ideal in which i ≤ a ⊕ b gives i1 ≤ a, i2 ≤ b in I with i ≤ i1 ⊕ i2."""
    I = frozenset(I)
    if not is_ideal(E, I):
        return False
    n = len(E)
    for a in range(n):
        for b in range(n):
            s = E.table[a][b]
            if s == UNDEF:
                continue
            la = [x for x in E.below[a] if x in I]
            lb = [x for x in E.below[b] if x in I]
            for i in I:
                if not E.order[i][s]:
                    continue
                if not any(E.table[x][y] != UNDEF and E.order[i][E.table[x][y]]
                           for x in la for y in lb):
                    return False
    return True


@dataclass(frozen=True)
class BlockCentrality:
    in_some: bool
    in_every_containing: bool


def central_in_block(E: EffectAlgebra, a: int, blockset: BlockSet | None = None) -> BlockCentrality:
    if blockset is None:
        blockset = blocks(E)
    flags = []
    for B in blockset:
        if a in B:
            sub = E.restrict(B)
            flags.append(is_central(sub, sub.id(E.names[a])))
    return BlockCentrality(any(flags), all(flags))


# -- report --------------------------------------------------------------------

@dataclass
class ClassificationReport:
    classification: Classification
    homogeneous: bool
    homogeneous_witness: tuple | None
    rdp: bool
    rdp_witness: tuple | None
    compatible: bool
    blocks: BlockSet
    sharp: frozenset[int]
    principal: frozenset[int]
    central: frozenset[int]
    k_center: frozenset[int]
    extra: dict = field(default_factory=dict)

    def to_json(self, E: EffectAlgebra) -> dict:
        c = self.classification

        def names(ids):
            return [E.names[i] for i in sorted(ids)]

        def wit(w):
            if w is None:
                return None
            if isinstance(w, str):
                return w
            return [E.names[i] for i in w]

        return {
            "size": len(E),
            "flags": {
                "orthoalgebra": c.orthoalgebra,
                "omp": c.omp,
                "lattice": c.lattice,
                "oml": c.oml,
                "mv": c.mv,
                "boolean": c.boolean,
                "compatible": self.compatible,
                "rdp": self.rdp,
                "homogeneous": self.homogeneous,
            },
            "witnesses": {
                **{k: wit(v) for k, v in sorted(c.witnesses.items())},
                "rdp": wit(self.rdp_witness),
                "homogeneous": wit(self.homogeneous_witness),
            },
            "blocks": [names(b) for b in self.blocks],
            "sharp": names(self.sharp),
            "principal": names(self.principal),
            "central": names(self.central),
            "k_center": names(self.k_center),
        }


def report(E: EffectAlgebra, budget=None) -> ClassificationReport:
    c = classify(E)
    h = is_homogeneous(E)
    r = has_rdp(E)
    compatible = is_compatible_set(E, E.carrier, budget=budget) is not None
    bs = blocks(E, budget=budget)
    rep = ClassificationReport(
        classification=c,
        homogeneous=h is True, homogeneous_witness=None if h is True else h,
        rdp=r is True, rdp_witness=None if r is True else r,
        compatible=compatible,
        blocks=bs,
        sharp=sharp_elements(E),
        principal=principal_elements(E),
        central=central_elements(E),
        k_center=compatibility_center(E, bs),
    )
    # ClassificationReport invariants
    assert rep.central <= rep.principal <= rep.sharp
    return rep


__all__ = [
    "BlockSet", "BlockCentrality", "ClassificationReport", "InconsistencyError",
    "NotSubalgebraError", "Budget", "BudgetExceeded",
    "has_rdp", "is_homogeneous", "is_homogeneous_via_blocks", "n_ary_decompose",
    "blocks", "rdp_maximal_blocks", "maximal_internally_compatible_sets",
    "sharp_elements", "principal_elements", "central_elements", "sharp_subalgebra",
    "compatibility_center", "is_ideal", "is_riesz_ideal", "central_in_block", "report",
]
