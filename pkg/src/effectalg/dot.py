"""Hasse diagrams in Graphviz DOT."""

from __future__ import annotations

from .core import EffectAlgebra
from .structure import sharp_elements


def cover_pairs(E: EffectAlgebra) -> list[tuple[int, int]]:
    """Pairs (a, b) with a < b and nothing strictly in between."""
    out = []
    for a in range(len(E)):
        for b in E.above[a]:
            if b == a:
                continue
            if not any(c != a and c != b and E.order[c][b] for c in E.above[a]):
                out.append((a, b))
    return out


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(E: EffectAlgebra, title: str = "effect_algebra") -> str:
    sharp = sharp_elements(E)
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    for a in range(len(E)):
        style = ' shape=box style=bold' if a in sharp else ''
        lines.append(f"  n{a} [label={_quote(E.names[a])}{style}];")
    for a, b in cover_pairs(E):
        lines.append(f"  n{a} -> n{b} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
