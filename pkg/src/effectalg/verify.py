"""Executable checks of the structure theorems, corpus sweeps, and
counterexample searches for the open questions.

Every check returns one of ``pass``, ``fail``, ``not-applicable`` or
``skipped`` (budget exhausted). Failures carry a JSON witness that
:func:`replay` can re-run from its serialized record.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Iterable

from . import structure as st
from .catalog import boolean, chain, mo, r6, standard_corpus
from .construct import (all_subalgebras, direct_product, enumerate_all, horizontal_sum,
                        interval_algebra)
from .core import (EffectAlgebra, InvalidAlgebra, classify, find_isomorphism,
                   is_sub_effect_algebra)
from .efaformat import parse, serialize
from .families import (Budget, BudgetExceeded, closure, find_cover, is_compatible_set,
                       is_internally_compatible, is_mutually_compatible_set)

PASS, FAIL, NA, SKIPPED = "pass", "fail", "not-applicable", "skipped"

DEFAULT_BUDGET = 2_000_000


@dataclass
class TheoremCheck:
    id: str
    status: str
    witness: Any = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


class _Fail(Exception):
    def __init__(self, witness, detail=""):
        self.witness = witness
        self.detail = detail


class _NotApplicable(Exception):
    pass


class Context:
    """Lazily computed facts about one algebra, shared between checks."""

    def __init__(self, E: EffectAlgebra, budget: int | None = DEFAULT_BUDGET, force: bool = False):
        self.E = E
        self.budget_limit = budget
        self.force = force
        self._compat = {}

    def budget(self):
        return Budget(self.budget_limit)

    def nm(self, ids):
        if isinstance(ids, int):
            return self.E.names[ids]
        return [self.E.names[i] for i in sorted(ids)]

    def nm_triple(self, w):
        return None if w is True else [self.E.names[i] for i in w]

    @cached_property
    def cls(self):
        return classify(self.E)

    @cached_property
    def homogeneous(self):
        return st.is_homogeneous(self.E)

    @cached_property
    def rdp(self):
        return st.has_rdp(self.E)

    @cached_property
    def compatible(self):
        return self.compat(self.E.carrier)

    def compat(self, M) -> bool:
        M = frozenset(M)
        if M not in self._compat:
            self._compat[M] = is_compatible_set(self.E, M, budget=self.budget()) is not None
        return self._compat[M]

    @cached_property
    def subalgebras(self):
        return all_subalgebras(self.E)

    @cached_property
    def blocks(self):
        return st.BlockSet(st.rdp_maximal_blocks(self.E), st.RDP_MAXIMAL)

    @cached_property
    def ic_blocks(self):
        return st.maximal_internally_compatible_sets(self.E, budget=self.budget())

    @cached_property
    def sharp(self):
        return st.sharp_elements(self.E)

    @cached_property
    def central(self):
        return st.central_elements(self.E)

    @cached_property
    def principal(self):
        return st.principal_elements(self.E)

    @cached_property
    def k_center(self):
        return st.compatibility_center(self.E, self.blocks)

    @cached_property
    def small_subsets(self) -> list[frozenset[int]]:
        """All subsets for n <= 6; otherwise sizes <= 2 plus a seeded sample."""
        n = len(self.E)
        if n <= 6:
            return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
        out = [frozenset(c) for k in range(3) for c in combinations(range(n), k)]
        rng = random.Random(n)
        for _ in range(40):
            k = rng.randint(3, min(n, 6))
            out.append(frozenset(rng.sample(range(n), k)))
        return out

    def require(self, cond: bool):
        if not (cond or self.force):
            raise _NotApplicable

    def require_homogeneous(self):
        self.require(self.homogeneous is True)


# -- the checks -----------------------------------------------------------------

def _agoodclass(cx: Context):
    c = cx.cls
    cx.require(c.orthoalgebra or c.lattice or cx.rdp is True)
    if cx.homogeneous is not True:
        raise _Fail(cx.nm_triple(cx.homogeneous), "orthoalgebra/lattice/RDP algebra is not homogeneous")


def _equiv(cx: Context):
    lhs = cx.rdp is True
    rhs = cx.homogeneous is True and cx.compatible
    if lhs != rhs:
        raise _Fail({"rdp": lhs, "homogeneous": cx.homogeneous is True, "compatible": cx.compatible},
                    "RDP differs from homogeneous-and-compatible")


def _bigcor(cx: Context):
    via = st.is_homogeneous_via_blocks(cx.E, cx.blocks)
    if via != (cx.homogeneous is True):
        raise _Fail({"direct": cx.homogeneous is True, "via_blocks": via},
                    "three-member families test disagrees with the direct scan")


def _homogeneousn(cx: Context):
    cx.require_homogeneous()
    from .families import enumerate_families
    E = cx.E
    for fam in enumerate_families(E, E.carrier, max_len=3, budget=cx.budget()):
        tc = E.comp[fam.total]
        for u in E.below[fam.total]:
            if E.order[u][tc] and st.n_ary_decompose(E, u, fam.members) is None:
                raise _Fail({"u": E.names[u], "family": list(fam.names(E))}, "no n-ary decomposition")


def _maxcompatisblock(cx: Context):
    cx.require_homogeneous()
    a, b = set(cx.blocks), set(cx.ic_blocks)
    if a != b:
        raise _Fail({"rdp_only": [cx.nm(s) for s in a - b], "ic_only": [cx.nm(s) for s in b - a]},
                    "blocks differ from maximal internally compatible sets")


def _blockcover(cx: Context):
    cx.require_homogeneous()
    covered = frozenset().union(*cx.blocks)
    missing = cx.E.carrier - covered
    if missing:
        raise _Fail(cx.nm(missing), "elements outside every block")


def _embedfinite(cx: Context):
    cx.require_homogeneous()
    for M in cx.small_subsets:
        if cx.compat(M) and not any(M <= B for B in cx.blocks):
            raise _Fail(cx.nm(M), "compatible set lies in no block")


def _blockcenter(cx: Context):
    cx.require_homogeneous()
    for a in range(len(cx.E)):
        r = st.central_in_block(cx.E, a, cx.blocks)
        s = a in cx.sharp
        if not (s == r.in_some == r.in_every_containing):
            raise _Fail({"a": cx.nm(a), "sharp": s, "in_some": r.in_some,
                         "in_every": r.in_every_containing}, "sharpness differs from block centrality")


def _rieszcenter(cx: Context):
    cx.require(cx.rdp is True)
    if not (cx.sharp == cx.central == cx.principal):
        raise _Fail({"sharp": cx.nm(cx.sharp), "central": cx.nm(cx.central),
                     "principal": cx.nm(cx.principal)}, "sharp, central, principal differ")


def _centers_eq(cx: Context):
    cx.require_homogeneous()
    E, K = cx.E, cx.k_center
    try:
        KE = E.restrict(K)
    except (InvalidAlgebra, ValueError) as exc:
        raise _Fail(cx.nm(K), f"K(E) is not an effect algebra: {exc}")
    cK = {E.id(KE.names[i]) for i in st.central_elements(KE)}
    sK = {E.id(KE.names[i]) for i in st.sharp_elements(KE)}
    if not (set(cx.central) == cK == sK):
        raise _Fail({"C(E)": cx.nm(cx.central), "C(K(E))": cx.nm(cK), "K(E)_S": cx.nm(sK)},
                    "centers differ")


def _es_subalgebra(cx: Context):
    cx.require_homogeneous()
    try:
        ES = st.sharp_subalgebra(cx.E)
    except st.NotSubalgebraError as exc:
        raise _Fail(cx.nm(exc.pair), str(exc))
    if not classify(ES).orthoalgebra:
        raise _Fail(cx.nm(cx.sharp), "E_S is not an orthoalgebra")


def _bzero(cx: Context):
    cx.require_homogeneous()
    E = cx.E
    ES = st.sharp_subalgebra(E)
    for B0 in st.rdp_maximal_blocks(ES):
        B0 = frozenset(E.id(ES.names[i]) for i in B0)
        for B in cx.blocks:
            if B0 <= B:
                sub = E.restrict(B)
                CB = frozenset(E.id(sub.names[i]) for i in st.central_elements(sub))
                if CB != B0:
                    raise _Fail({"B0": cx.nm(B0), "B": cx.nm(B), "C(B)": cx.nm(CB)},
                                "block of E_S differs from the center of a block containing it")


def _center_props(cx: Context):
    E, C = cx.E, cx.central
    if not is_sub_effect_algebra(E, C):
        raise _Fail(cx.nm(C), "center is not a sub-effect algebra")
    if not classify(E.restrict(C)).boolean:
        raise _Fail(cx.nm(C), "center is not a Boolean algebra")
    for a in sorted(C):
        if a == E.zero or E.comp[a] == E.zero:
            continue
        P = direct_product(interval_algebra(E, a), interval_algebra(E, E.comp[a]))
        if find_isomorphism(E, P) is None:
            raise _Fail(cx.nm(a), "E is not isomorphic to [0,a] x [0,a']")


def _central_riesz(cx: Context):
    E = cx.E
    for a in range(len(E)):
        if (a in cx.central) != st.is_riesz_ideal(E, E.below[a]):
            raise _Fail(cx.nm(a), "central differs from [0,a] being a Riesz ideal")


def _subalg(cx: Context):
    cx.require_homogeneous()
    E = cx.E
    for F in cx.subalgebras:
        if closure(E, F) == F:
            w = st.is_homogeneous(E.restrict(F))
            if w is not True:
                raise _Fail({"F": cx.nm(F)}, "closure-closed subalgebra is not homogeneous")


def _closure_laws(cx: Context):
    E = cx.E
    subs = cx.small_subsets
    cl = {M: closure(E, M) for M in subs}
    for M in subs:
        if not M <= cl[M]:
            raise _Fail(cx.nm(M), "closure is not extensive")
        if closure(E, cl[M]) != cl[M]:
            raise _Fail(cx.nm(M), "closure is not idempotent")
    for M in subs:
        for N in subs:
            if M <= N and not cl[M] <= cl[N]:
                raise _Fail({"M": cx.nm(M), "N": cx.nm(N)}, "closure is not monotone")


def _intclosure(cx: Context):
    cx.require_homogeneous()
    E = cx.E
    for M in cx.small_subsets:
        if is_internally_compatible(E, M, budget=cx.budget()) is not None:
            C = closure(E, M)
            if is_internally_compatible(E, C, budget=cx.budget()) is None:
                raise _Fail(cx.nm(M), "closure of an internally compatible set is not")
    for B in cx.ic_blocks:
        if closure(E, B) != B:
            raise _Fail(cx.nm(B), "maximal internally compatible set is not closed")


def _minuscompat(cx: Context):
    cx.require_homogeneous()
    E = cx.E
    for M in cx.small_subsets:
        if not M or len(M) > 4 or not cx.compat(M):
            continue
        if not is_mutually_compatible_set(E, M):
            raise _Fail(cx.nm(M), "compatible set is not mutually compatible")
        for a in M:
            for b in M:
                if E.order[b][a] and not cx.compat(M | {E.ominus(a, b)}):
                    raise _Fail({"M": cx.nm(M), "a": cx.nm(a), "b": cx.nm(b)}, "M ∪ {a ⊖ b} incompatible")
                s = E.sum(a, b)
                if s is not None and not cx.compat(M | {s}):
                    raise _Fail({"M": cx.nm(M), "a": cx.nm(a), "b": cx.nm(b)}, "M ∪ {a ⊕ b} incompatible")


def _kcenter_closed(cx: Context):
    cx.require_homogeneous()
    K = cx.k_center
    if closure(cx.E, K) != K:
        raise _Fail(cx.nm(K), "K(E) differs from its closure")
    if not is_sub_effect_algebra(cx.E, K):
        raise _Fail(cx.nm(K), "K(E) is not a sub-effect algebra")


def _classify_consistency(cx: Context):
    c = cx.cls
    bad = []
    if c.boolean and not (c.mv and c.orthoalgebra):
        bad.append("boolean without mv+orthoalgebra")
    if c.oml and not c.omp:
        bad.append("oml without omp")
    if c.omp and not c.orthoalgebra:
        bad.append("omp without orthoalgebra")
    if c.mv and cx.rdp is not True:
        bad.append("mv without rdp")
    if bad:
        raise _Fail(bad, "inconsistent class flags")


CHECKS: dict[str, Callable[[Context], None]] = {
    "agoodclass": _agoodclass,
    "equiv": _equiv,
    "bigcor-agree": _bigcor,
    "homogeneousn": _homogeneousn,
    "maxcompatisblock": _maxcompatisblock,
    "blockcover": _blockcover,
    "embedfinite": _embedfinite,
    "blockcenter": _blockcenter,
    "rieszcenter": _rieszcenter,
    "centers-eq": _centers_eq,
    "es-subalgebra": _es_subalgebra,
    "bzero": _bzero,
    "center-props": _center_props,
    "central-riesz": _central_riesz,
    "subalg": _subalg,
    "closure-laws": _closure_laws,
    "intclosure": _intclosure,
    "minuscompat": _minuscompat,
    "kcenter-closed": _kcenter_closed,
    "classify-consistency": _classify_consistency,
}


def run_check(check_id: str, E: EffectAlgebra, force: bool = False,
              budget: int | None = DEFAULT_BUDGET, context: Context | None = None) -> TheoremCheck:
    """Run one check. ``force`` ignores the applicability test (for replays)."""
    cx = context or Context(E, budget, force)
    fn = CHECKS[check_id]
    try:
        fn(cx)
    except _NotApplicable:
        return TheoremCheck(check_id, NA)
    except _Fail as f:
        return TheoremCheck(check_id, FAIL, f.witness, f.detail)
    except st.NotSubalgebraError as exc:
        return TheoremCheck(check_id, FAIL, [E.names[i] for i in exc.pair], str(exc))
    except BudgetExceeded as exc:
        return TheoremCheck(check_id, SKIPPED, None, str(exc))
    return TheoremCheck(check_id, PASS)


def run_suite(E: EffectAlgebra, budget: int | None = DEFAULT_BUDGET,
              checks: Iterable[str] | None = None) -> list[TheoremCheck]:
    cx = Context(E, budget)
    return [run_check(cid, E, budget=budget, context=cx) for cid in (checks or CHECKS)]


# -- witness records -------------------------------------------------------------

def witness_record(E: EffectAlgebra, check: TheoremCheck) -> dict:
    return {"kind": "theorem-check", "check": check.id, "status": check.status,
            "witness": check.witness, "detail": check.detail, "algebra": serialize(E)}


def replay(record: dict) -> TheoremCheck:
    """Re-run a serialized failure (forcing the check past applicability)."""
    E = parse(record["algebra"])
    if record["kind"] == "theorem-check":
        return run_check(record["check"], E, force=True)
    if record["kind"] == "question":
        ok, witness = _QUESTIONS[record["question"]](E, record.get("subset_cap", 4))
        return TheoremCheck(record["question"], PASS if ok else FAIL, witness)
    raise ValueError(f"unknown record kind {record['kind']!r}")


# -- corpus and sweep -------------------------------------------------------------

def _dedupe(named: list[tuple[str, EffectAlgebra]]) -> list[tuple[str, EffectAlgebra]]:
    out: list[tuple[str, EffectAlgebra]] = []
    for nm, E in named:
        if not any(len(F) == len(E) and find_isomorphism(E, F) is not None for _, F in out):
            out.append((nm, E))
    return out


def generation(max_size: int = 24) -> list[tuple[str, EffectAlgebra]]:
    """One round of products, horizontal sums and intervals of catalog entries."""
    base = [("chain(1)", chain(1)), ("chain(2)", chain(2)), ("chain(3)", chain(3)),
            ("boolean(1)", boolean(1)), ("boolean(2)", boolean(2)), ("mo(2)", mo(2)), ("r6", r6())]
    out = []
    for i, (n1, E1) in enumerate(base):
        for n2, E2 in base[i:]:
            if len(E1) * len(E2) <= max_size:
                out.append((f"{n1}x{n2}", direct_product(E1, E2)))
            out.append((f"{n1}+{n2}", horizontal_sum(E1, E2)))
    for nm, E in standard_corpus():
        for a in range(len(E)):
            if a != E.zero and a != E.one:
                out.append((f"[0,{E.names[a]}]_{nm}", interval_algebra(E, a)))
    return _dedupe(out)


def corpus(max_n: int = 6, with_generation: bool = True) -> list[tuple[str, EffectAlgebra]]:
    out = [(f"enum{len(E)}#{i}", E) for i, E in enumerate(enumerate_all(max_n))]
    out += standard_corpus()
    if with_generation:
        out += generation()
    return out


@dataclass
class SweepSummary:
    instances: int = 0
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1, ensure_ascii=False)


def sweep(max_n: int = 6, with_generation: bool = True,
          budget: int | None = DEFAULT_BUDGET) -> SweepSummary:
    summary = SweepSummary(counts={cid: {PASS: 0, FAIL: 0, NA: 0, SKIPPED: 0} for cid in CHECKS})
    for nm, E in corpus(max_n, with_generation):
        summary.instances += 1
        for chk in run_suite(E, budget):
            summary.counts[chk.id][chk.status] += 1
            if chk.status == FAIL:
                summary.failures.append({"instance": nm, **witness_record(E, chk)})
            elif chk.status == SKIPPED:
                summary.skipped.append({"instance": nm, "check": chk.id, "detail": chk.detail})
    return summary


# -- open questions ----------------------------------------------------------------

QUESTIONS = ("compatible-embeds-in-block", "k-rdp", "cb-block-of-es")


def _q_embeds(E: EffectAlgebra, cap: int):
    bl = st.rdp_maximal_blocks(E)
    n = len(E)
    for k in range(1, min(cap, n) + 1):
        for M in combinations(range(n), k):
            M = frozenset(M)
            if any(M <= B for B in bl):
                continue
            if is_compatible_set(E, M) is not None:
                return False, {"subset": [E.names[i] for i in sorted(M)]}
    return True, None


def _q_krdp(E: EffectAlgebra, cap: int):
    K = st.compatibility_center(E, st.BlockSet(st.rdp_maximal_blocks(E), st.RDP_MAXIMAL))
    try:
        KE = E.restrict(K)
    except (InvalidAlgebra, ValueError):
        return False, {"k_center": [E.names[i] for i in sorted(K)], "reason": "not an effect algebra"}
    w = st.has_rdp(KE)
    if w is True:
        return True, None
    return False, {"k_center": [E.names[i] for i in sorted(K)], "rdp_witness": [KE.names[i] for i in w]}


def _q_cbblock(E: EffectAlgebra, cap: int):
    ES = st.sharp_subalgebra(E)
    es_blocks = {frozenset(ES.names[i] for i in B) for B in st.rdp_maximal_blocks(ES)}
    for B in st.rdp_maximal_blocks(E):
        sub = E.restrict(B)
        CB = frozenset(sub.names[i] for i in st.central_elements(sub))
        if CB not in es_blocks:
            return False, {"block": sorted(E.name_set(B)), "center": sorted(CB)}
    return True, None


_QUESTIONS = {"compatible-embeds-in-block": _q_embeds, "k-rdp": _q_krdp, "cb-block-of-es": _q_cbblock}


@dataclass
class SearchReport:
    question: str
    space: str
    instances: int
    outcome: str
    counterexample: dict | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1, ensure_ascii=False)


def search_question(question: str, max_n: int = 6, budget: int | None = DEFAULT_BUDGET,
                    extra: Iterable[tuple[str, EffectAlgebra]] | None = None,
                    subset_cap: int = 4) -> SearchReport:
    if question not in _QUESTIONS:
        raise KeyError(f"unknown question {question!r}; known: {', '.join(QUESTIONS)}")
    fn = _QUESTIONS[question]
    space = list(corpus(max_n, with_generation=False)) if extra is None else list(extra)
    checked = 0
    notes = []
    for nm, E in space:
        try:
            if st.is_homogeneous(E) is not True:
                continue
            checked += 1
            ok, witness = fn(E, subset_cap)
        except BudgetExceeded as exc:
            notes.append(f"{nm}: {exc}")
            continue
        if not ok:
            return SearchReport(question, _space_desc(max_n, extra), checked, "counterexample",
                                {"instance": nm, "kind": "question", "question": question,
                                 "subset_cap": subset_cap, "witness": witness,
                                 "algebra": serialize(E)}, notes)
    return SearchReport(question, _space_desc(max_n, extra), checked,
                        f"no counterexample up to n={max_n}" if extra is None else "no counterexample",
                        None, notes)


def _space_desc(max_n, extra):
    if extra is not None:
        return "explicit instances"
    return f"homogeneous algebras from enumerate_all({max_n}) plus the catalog"
