"""The ``.efa`` text format.

::

    efa 1
    # comments run to the end of a line
    elements 0 a b a' b' 1
    zero 0
    one 1
    sum a a a'
    sum a b b'

Each unordered pair of nonzero elements appears at most once; sums with
zero are implicit and may not be written.
"""

from __future__ import annotations

import re

from .core import UNDEF, EffectAlgebra, build

VERSION = 1
_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"{line}:{col}: {message}")


def _tokens(raw: str):
    text = raw.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


def parse(text: str) -> EffectAlgebra:
    """Parse a document; axiom failures surface as InvalidAlgebra from build()."""
    header = False
    names = None
    zero = one = None
    entries = []
    seen_pairs = {}
    known = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        kw, col = toks[0]
        args = toks[1:]
        if not header:
            if kw != "efa" or len(args) != 1:
                raise ParseError(lineno, col, "expected header 'efa 1'")
            if args[0][0] != str(VERSION):
                raise ParseError(lineno, args[0][1], f"unsupported version {args[0][0]!r}")
            header = True
            continue
        if kw == "elements":
            if names is not None:
                raise ParseError(lineno, col, "duplicate 'elements' line")
            if not args:
                raise ParseError(lineno, col, "'elements' needs at least one name")
            names = []
            for tok, c in args:
                if tok in known:
                    raise ParseError(lineno, c, f"duplicate element name {tok!r}")
                known[tok] = len(names)
                names.append(tok)
        elif kw in ("zero", "one"):
            if names is None:
                raise ParseError(lineno, col, f"'{kw}' before 'elements'")
            if len(args) != 1:
                raise ParseError(lineno, col, f"'{kw}' takes exactly one name")
            tok, c = args[0]
            if tok not in known:
                raise ParseError(lineno, c, f"unknown element {tok!r}")
            if (zero if kw == "zero" else one) is not None:
                raise ParseError(lineno, col, f"duplicate '{kw}' line")
            if kw == "zero":
                zero = tok
            else:
                one = tok
        elif kw == "sum":
            if names is None or zero is None:
                raise ParseError(lineno, col, "'sum' before 'elements' and 'zero'")
            if len(args) != 3:
                raise ParseError(lineno, col, "'sum' takes three names: a b a⊕b")
            for tok, c in args:
                if tok not in known:
                    raise ParseError(lineno, c, f"unknown element {tok!r}")
            (a, ca), (b, cb), (s, _) = args
            for tok, c in ((a, ca), (b, cb)):
                if tok == zero:
                    raise ParseError(lineno, c, "sums with zero are implicit and must not be listed")
            key = frozenset((a, b))
            if key in seen_pairs:
                prev_line, prev = seen_pairs[key]
                what = "redundant" if prev == s else "conflicting"
                raise ParseError(lineno, col, f"{what} entry for {a} {b} (first given on line {prev_line})")
            seen_pairs[key] = (lineno, s)
            entries.append((a, b, s))
        else:
            raise ParseError(lineno, col, f"unknown keyword {kw!r}")
    if not header:
        raise ParseError(1, 1, "empty document")
    for kw, val in (("elements", names), ("zero", zero), ("one", one)):
        if val is None:
            raise ParseError(lineno, 1, f"missing '{kw}' line")
    return build(names, zero, one, entries)


def serialize(E: EffectAlgebra, comments=()) -> str:
    for nm in E.names:
        if not nm or "#" in nm or any(ch.isspace() for ch in nm):
            raise ValueError(f"element name {nm!r} cannot be written to .efa")
    lines = [f"efa {VERSION}"]
    lines += [f"# {c}" for c in comments]
    lines.append("elements " + " ".join(E.names))
    lines.append(f"zero {E.names[E.zero]}")
    lines.append(f"one {E.names[E.one]}")
    n = len(E)
    for a in range(n):
        for b in range(a, n):
            s = E.table[a][b]
            if s != UNDEF and E.zero not in (a, b):
                lines.append(f"sum {E.names[a]} {E.names[b]} {E.names[s]}")
    return "\n".join(lines) + "\n"


def load(path) -> EffectAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(E: EffectAlgebra, path, comments=()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(E, comments))
