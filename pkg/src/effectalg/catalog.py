"""Named example algebras and small parametric families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import catalog_tables as tables
from .construct import horizontal_sum
from .core import UNDEF, EffectAlgebra, build, from_table


def chain(n: int) -> EffectAlgebra:
    """The chain 0 < a < 2a < ... < na = 1 with ka ⊕ la = (k+l)a."""
    if n < 1:
        raise ValueError("chain(n) needs n >= 1")
    names = ["0"] + [("a" if k == 1 else f"{k}a") for k in range(1, n)] + ["1"]
    table = [[UNDEF] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        for m in range(n + 1 - k):
            table[k][m] = k + m
    return from_table(names, 0, n, table)


def boolean(k: int) -> EffectAlgebra:
    """The Boolean algebra 2^k; sets of atoms are named like ``a+c``."""
    if not 0 <= k <= 26:
        raise ValueError("boolean(k) needs 0 <= k <= 26")
    atoms = "abcdefghijklmnopqrstuvwxyz"[:k]
    masks = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), [i for i in range(k) if m >> i & 1]))

    def name(m):
        if m == 0:
            return "0"
        if m == (1 << k) - 1:
            return "1"
        return "+".join(atoms[i] for i in range(k) if m >> i & 1)

    pos = {m: i for i, m in enumerate(masks)}
    table = [[UNDEF] * len(masks) for _ in masks]
    for x in masks:
        for y in masks:
            if x & y == 0:
                table[pos[x]][pos[y]] = pos[x | y]
    return from_table([name(m) for m in masks], pos[0], pos[(1 << k) - 1], table)


def mo(k: int) -> EffectAlgebra:
    """Horizontal sum of k copies of boolean(2)."""
    if k < 1:
        raise ValueError("mo(k) needs k >= 1")
    out = boolean(2)
    for _ in range(k - 1):
        out = horizontal_sum(out, boolean(2))
    return out


def r6() -> EffectAlgebra:
    return build(tables.R6_NAMES, "0", "1", tables.R6_ENTRIES)


def l18() -> EffectAlgebra:
    return build(tables.L18_NAMES, "0", "1", tables.L18_ENTRIES)


def gen18() -> EffectAlgebra:
    return build(tables.GEN18_NAMES, "0", "1", tables.GEN18_ENTRIES)


def wright() -> EffectAlgebra:
    from .structure import sharp_subalgebra
    return sharp_subalgebra(gen18())


def trivial() -> EffectAlgebra:
    return from_table(["0"], 0, 0, [[0]])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[..., EffectAlgebra]
    nparams: int = 0
    expected: dict = field(default_factory=dict)
    description: str = ""


ENTRIES = {
    "trivial": CatalogEntry("trivial", trivial, 0, {"size": 1}, "one-element algebra, 0 = 1"),
    "chain": CatalogEntry("chain", chain, 1, {}, "chain(n): n+1 elements, a ⊕ ... ⊕ a = 1 (n times)"),
    "boolean": CatalogEntry("boolean", boolean, 1, {}, "boolean(k): powerset of k atoms"),
    "mo": CatalogEntry("mo", mo, 1, {}, "mo(k): horizontal sum of k copies of 2^2"),
    "r6": CatalogEntry("r6", r6, 0,
                       {"size": 6, "compatible": True, "rdp": False, "homogeneous": False},
                       "two atoms a, b with a⊕a⊕a = a⊕b⊕b = 1"),
    "l18": CatalogEntry("l18", l18, 0,
                        {"size": 18, "lattice": True, "orthoalgebra": False, "homogeneous": True,
                         "blocks": 2, "sharp": 12},
                        "firefly box: a⊕b⊕c⊕c = c⊕c⊕d⊕e = 1"),
    "gen18": CatalogEntry("gen18", gen18, 0,
                          {"size": 18, "lattice": False, "orthoalgebra": False, "homogeneous": True,
                           "blocks": 3, "sharp": 14},
                          "a⊕b⊕c = c⊕d⊕d⊕e = e⊕f⊕a = 1"),
    "wright": CatalogEntry("wright", wright, 0,
                           {"size": 14, "orthoalgebra": True, "omp": False},
                           "Wright triangle: sharp elements of gen18"),
}


def catalog(name: str, *params: int) -> EffectAlgebra:
    try:
        entry = ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(ENTRIES))}") from None
    if len(params) != entry.nparams:
        raise ValueError(f"{name} takes {entry.nparams} parameter(s), got {len(params)}")
    return entry.builder(*params)


def standard_corpus() -> list[tuple[str, EffectAlgebra]]:
    """Named catalog instances used by sweeps and golden tests."""
    out = [("trivial", trivial())]
    out += [(f"chain({n})", chain(n)) for n in range(1, 5)]
    out += [(f"boolean({k})", boolean(k)) for k in range(1, 4)]
    out += [(f"mo({k})", mo(k)) for k in (2, 3)]
    out += [(nm, catalog(nm)) for nm in ("r6", "l18", "gen18", "wright")]
    return out


__all__ = ["CatalogEntry", "ENTRIES", "catalog", "chain", "boolean", "mo", "r6", "l18",
           "gen18", "wright", "trivial", "standard_corpus"]
