"""Finite effect algebras: table representation, axiom validation, order.

An effect algebra is stored as a dense ``n x n`` table of ints where
``UNDEF`` (-1) marks an undefined sum.  Elements are addressed by their
index into ``names``; names are the external identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

UNDEF = -1

AXIOMS = ("E1", "E2", "E3", "E4", "Zero", "Table")


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple[int, ...]
    message: str

    def __str__(self):
        return f"{self.axiom}: {self.message}"


class InvalidAlgebra(ValueError):
    """Raised by :func:`build` when the table breaks an axiom."""

    def __init__(self, violations: Sequence[AxiomViolation]):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            lines += f"; ... ({more} more)"
        super().__init__(lines)


class EffectAlgebra:
    """An immutable, validated finite effect algebra.

    Use :func:`build` or :func:`from_table` to construct one.
    """

    __slots__ = ("names", "zero", "one", "table", "order", "comp", "_ominus",
                 "_index", "below", "above")

    def __init__(self, names, zero, one, table):
        n = len(names)
        self.names = tuple(names)
        self.zero = zero
        self.one = one
        self.table = tuple(tuple(row) for row in table)
        self._index = {nm: i for i, nm in enumerate(self.names)}
        om = [[UNDEF] * n for _ in range(n)]
        for a in range(n):
            for c in range(n):
                b = self.table[a][c]
                if b != UNDEF:
                    om[b][a] = c
        self._ominus = tuple(tuple(r) for r in om)
        self.order = tuple(tuple(om[b][a] != UNDEF for b in range(n)) for a in range(n))
        self.comp = tuple(row.index(one) for row in self.table)
        self.below = tuple(tuple(x for x in range(n) if self.order[x][a]) for a in range(n))
        self.above = tuple(tuple(x for x in range(n) if self.order[a][x]) for a in range(n))

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"<EffectAlgebra n={len(self)} names={list(self.names)[:6]}{'...' if len(self) > 6 else ''}>"

    @property
    def carrier(self) -> frozenset[int]:
        return frozenset(range(len(self.names)))

    def id(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    def ids(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.id(nm) for nm in names)

    def name_set(self, ids: Iterable[int]) -> set[str]:
        return {self.names[i] for i in ids}

    def sum(self, a: int, b: int) -> int | None:
        s = self.table[a][b]
        return None if s == UNDEF else s

    def ominus(self, b: int, a: int) -> int:
        c = self._ominus[b][a]
        if c == UNDEF:
            raise ValueError(f"{self.names[b]} ⊖ {self.names[a]} undefined: "
                             f"{self.names[a]} is not below {self.names[b]}")
        return c

    def restrict(self, subset: Iterable[int]) -> "EffectAlgebra":
        """Restriction of the table to ``subset`` (kept in id order).

        Raises InvalidAlgebra when the subset is not a sub-effect algebra
        in a way that breaks the axioms.
        """
        keep = sorted(set(subset))
        pos = {x: i for i, x in enumerate(keep)}
        table = [[UNDEF] * len(keep) for _ in keep]
        for x in keep:
            for y in keep:
                s = self.table[x][y]
                if s != UNDEF and s in pos:
                    table[pos[x]][pos[y]] = pos[s]
        if self.zero not in pos or self.one not in pos:
            raise ValueError("subset must contain 0 and 1")
        return from_table([self.names[x] for x in keep], pos[self.zero], pos[self.one], table)


def validate_table(table: Sequence[Sequence[int]], zero: int, one: int) -> list[AxiomViolation]:
    """Exhaustive E1-E4 / zero-row check of a dense table."""
    n = len(table)
    out = []
    for a in range(n):
        if len(table[a]) != n:
            out.append(AxiomViolation("Table", (a,), f"row {a} has length {len(table[a])}, expected {n}"))
            return out
        for b in range(n):
            s = table[a][b]
            if s != UNDEF and not 0 <= s < n:
                out.append(AxiomViolation("Table", (a, b), f"entry {s} out of range"))
    if out:
        return out

    for a in range(n):
        if table[zero][a] != a or table[a][zero] != a:
            out.append(AxiomViolation("Zero", (a,), "0 ⊕ a must equal a"))
    for a in range(n):
        for b in range(a + 1, n):
            if table[a][b] != table[b][a]:
                out.append(AxiomViolation("E1", (a, b), "a ⊕ b differs from b ⊕ a"))
    for a in range(n):
        comps = [b for b in range(n) if table[a][b] == one]
        if len(comps) != 1:
            out.append(AxiomViolation("E3", (a, *comps[:2]),
                                      f"expected exactly one complement, found {len(comps)}"))
    for a in range(n):
        if a != zero and table[a][one] != UNDEF:
            out.append(AxiomViolation("E4", (a,), "a ⊕ 1 is defined for a nonzero a"))
    for a, b, c in product(range(n), repeat=3):
        ab = table[a][b]
        if ab == UNDEF:
            continue
        abc = table[ab][c]
        if abc == UNDEF:
            continue
        bc = table[b][c]
        if bc == UNDEF:
            out.append(AxiomViolation("E2", (a, b, c), "(a ⊕ b) ⊕ c defined but b ⊕ c is not"))
        elif table[a][bc] != abc:
            out.append(AxiomViolation("E2", (a, b, c), "(a ⊕ b) ⊕ c differs from a ⊕ (b ⊕ c)"))
    return out


def replay_violation(table, zero: int, one: int, v: AxiomViolation) -> bool:
    """True iff the witness of ``v`` still exhibits the failure on ``table``."""
    n = len(table)
    w = v.witness
    if v.axiom == "Zero":
        (a,) = w
        return table[zero][a] != a or table[a][zero] != a
    if v.axiom == "E1":
        a, b = w
        return table[a][b] != table[b][a]
    if v.axiom == "E3":
        a = w[0]
        return sum(1 for b in range(n) if table[a][b] == one) != 1
    if v.axiom == "E4":
        (a,) = w
        return a != zero and table[a][one] != UNDEF
    if v.axiom == "E2":
        a, b, c = w
        ab = table[a][b]
        if ab == UNDEF or table[ab][c] == UNDEF:
            return False
        bc = table[b][c]
        return bc == UNDEF or table[a][bc] != table[ab][c]
    return True


def _check_cancellative(table, n):
    for a in range(n):
        seen = {}
        for b in range(n):
            s = table[a][b]
            if s == UNDEF:
                continue
            if s in seen:
                raise AssertionError(
                    f"validator bug: {a}⊕{seen[s]} = {a}⊕{b} passed E1-E4")
            seen[s] = b


def from_table(names: Sequence[str], zero: int, one: int, table) -> EffectAlgebra:
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError("element names must be distinct")
    violations = validate_table(table, zero, one)
    if violations:
        raise InvalidAlgebra(violations)
    _check_cancellative(table, len(names))
    return EffectAlgebra(names, zero, one, table)


def build(names: Sequence[str], zero: str, one: str,
          entries: Iterable[tuple[str, str, str]]) -> EffectAlgebra:
    """Build and validate an algebra from ``(a, b, a⊕b)`` name triples.

    Each unordered pair needs to appear once; mirrored entries and the
    zero row are filled in. Raises :class:`InvalidAlgebra` on failure.
    """
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError("element names must be distinct")
    if any(not nm for nm in names):
        raise ValueError("element names must be non-empty")
    idx = {nm: i for i, nm in enumerate(names)}
    for nm in (zero, one):
        if nm not in idx:
            raise ValueError(f"unknown element {nm!r}")
    z, o = idx[zero], idx[one]
    n = len(names)
    table = [[UNDEF] * n for _ in range(n)]
    for a in range(n):
        table[z][a] = table[a][z] = a
    problems = []
    for a, b, c in entries:
        for nm in (a, b, c):
            if nm not in idx:
                raise ValueError(f"unknown element {nm!r} in entry {(a, b, c)}")
        i, j, k = idx[a], idx[b], idx[c]
        old = table[i][j]
        if old != UNDEF and old != k:
            problems.append(AxiomViolation(
                "Table", (i, j), f"conflicting entries for {a} ⊕ {b}: {names[old]} and {c}"))
            continue
        table[i][j] = table[j][i] = k
    if problems:
        raise InvalidAlgebra(problems)
    return from_table(names, z, o, table)


# -- order-theoretic queries -------------------------------------------------

def leq(E: EffectAlgebra, a: int, b: int) -> bool:
    return E.order[a][b]


def complement(E: EffectAlgebra, a: int) -> int:
    return E.comp[a]


def ominus(E: EffectAlgebra, b: int, a: int) -> int:
    return E.ominus(b, a)


def perp(E: EffectAlgebra, a: int, b: int) -> bool:
    return E.table[a][b] != UNDEF


def lower_bounds(E: EffectAlgebra, a: int, b: int) -> list[int]:
    return [x for x in E.below[a] if E.order[x][b]]


def upper_bounds(E: EffectAlgebra, a: int, b: int) -> list[int]:
    return [x for x in E.above[a] if E.order[b][x]]


def meet(E: EffectAlgebra, a: int, b: int) -> int | None:
    lbs = lower_bounds(E, a, b)
    for g in lbs:
        if all(E.order[x][g] for x in lbs):
            return g
    return None


def join(E: EffectAlgebra, a: int, b: int) -> int | None:
    ubs = upper_bounds(E, a, b)
    for g in ubs:
        if all(E.order[g][x] for x in ubs):
            return g
    return None


def is_sub_effect_algebra(E: EffectAlgebra, S: Iterable[int]) -> bool:
    S = set(S)
    if E.one not in S:
        return False
    for a in S:
        for b in E.below[a]:
            if b in S and E.ominus(a, b) not in S:
                return False
    # closure under ⊕ and ′ follows from a ⊕ b = (a′ ⊖ b)′
    assert all(E.comp[a] in S for a in S)
    assert all(E.table[a][b] in S for a in S for b in S if E.table[a][b] != UNDEF)
    return True


# -- classification ----------------------------------------------------------

@dataclass
class Classification:
    orthoalgebra: bool
    omp: bool
    lattice: bool
    mv: bool
    boolean: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def oml(self) -> bool:
        return self.lattice and self.orthoalgebra


def orthoalgebra_witness(E: EffectAlgebra) -> int | None:
    for a in range(len(E)):
        if a != E.zero and E.table[a][a] != UNDEF:
            return a
    return None


def omp_witness(E: EffectAlgebra) -> tuple[int, int, int] | None:
    """Least pairwise orthogonal triple whose total sum is undefined."""
    n = len(E)
    t = E.table
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            if ab == UNDEF:
                continue
            for c in range(n):
                if t[b][c] != UNDEF and t[a][c] != UNDEF and t[ab][c] == UNDEF:
                    return (a, b, c)
    return None


def lattice_witness(E: EffectAlgebra) -> tuple[int, int] | None:
    n = len(E)
    for a in range(n):
        for b in range(a + 1, n):
            if meet(E, a, b) is None or join(E, a, b) is None:
                return (a, b)
    return None


def classify(E: EffectAlgebra) -> Classification:
    from .families import is_compatible_set

    w = {}
    oa = orthoalgebra_witness(E)
    if oa is not None:
        w["orthoalgebra"] = (oa,)
    om = omp_witness(E)
    if om is not None:
        w["omp"] = om
    lw = lattice_witness(E)
    if lw is not None:
        w["lattice"] = lw
    lattice = lw is None
    mv = False
    if lattice:
        mv = is_compatible_set(E, E.carrier) is not None
        if not mv:
            w["mv"] = "carrier is not compatible"
    else:
        w["mv"] = "not lattice ordered"
    boolean = mv and oa is None
    if not boolean:
        w["boolean"] = w["mv"] if not mv else w["orthoalgebra"]
    return Classification(oa is None, om is None, lattice, mv, boolean, w)


# -- isomorphism -------------------------------------------------------------

def _signature(E: EffectAlgebra, a: int):
    n = len(E)
    return (
        a == E.zero, a == E.one,
        len(E.below[a]), len(E.above[a]),
        sum(1 for b in range(n) if E.table[a][b] != UNDEF),
        E.table[a][a] != UNDEF,
        sum(1 for x in range(n) for y in range(n) if E.table[x][y] == a),
    )


def find_isomorphism(E: EffectAlgebra, F: EffectAlgebra) -> dict[int, int] | None:
    """Lexicographically least isomorphism E -> F as an id map, or None."""
    n = len(E)
    if n != len(F):
        return None
    sigE = [_signature(E, a) for a in range(n)]
    sigF = [_signature(F, b) for b in range(n)]
    if sorted(sigE) != sorted(sigF):
        return None
    cands = [[b for b in range(n) if sigF[b] == sigE[a]] for a in range(n)]
    tE, tF = E.table, F.table
    # pairs (x, y) of E grouped by their sum, for checks when the sum gets mapped
    by_sum = [[] for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            s = tE[x][y]
            if s != UNDEF:
                by_sum[s].append((x, y))
    phi = [UNDEF] * n
    used = [False] * n

    def ok(a):
        fa = phi[a]
        for x in range(a + 1):
            fx = phi[x]
            s, fs = tE[a][x], tF[fa][fx]
            if (s == UNDEF) != (fs == UNDEF):
                return False
            if s == UNDEF:
                continue
            if s <= a:
                if phi[s] != fs:
                    return False
            elif used[fs]:
                return False
        for x, y in by_sum[a]:
            if x < a and y < a and tF[phi[x]][phi[y]] != fa:
                return False
        return True

    def rec(a):
        if a == n:
            return True
        for b in cands[a]:
            if used[b]:
                continue
            phi[a] = b
            used[b] = True
            if ok(a) and rec(a + 1):
                return True
            used[b] = False
            phi[a] = UNDEF
        return False

    if rec(0):
        return dict(enumerate(phi))
    return None


def is_isomorphic(E: EffectAlgebra, F: EffectAlgebra) -> bool:
    return find_isomorphism(E, F) is not None
