import re
from importlib import resources

import pytest
from hypothesis import given, settings, strategies as st

from effectalg.catalog import catalog, chain, standard_corpus
from effectalg.core import InvalidAlgebra, find_isomorphism, from_table
from effectalg.dot import cover_pairs, to_dot
from effectalg.efaformat import ParseError, parse, serialize
from effectalg.structure import sharp_elements

TWO_CHAIN = "efa 1\nelements 0 1\nzero 0\none 1\n"


def data_text(name):
    return resources.files("effectalg").joinpath("data", name).read_text(encoding="utf-8")


def test_two_chain_document():
    E = parse(TWO_CHAIN)
    assert E.names == ("0", "1")


def test_comments_and_blank_lines():
    E = parse("# header comment\n\nefa 1  # trailing\nelements 0 a 1\nzero 0\none 1\nsum a a 1 # a⊕a\n")
    assert E.sum(E.id("a"), E.id("a")) == E.one


@pytest.mark.parametrize("name", ["r6", "l18", "gen18", "wright"])
def test_shipped_files_equal_catalog(name):
    E = parse(data_text(f"{name}.efa"))
    F = catalog(name)
    assert E.names == F.names
    assert E.table == F.table


def test_missing_complement_is_e3():
    with pytest.raises(InvalidAlgebra) as exc:
        parse("efa 1\nelements 0 a 1\nzero 0\none 1\n")
    assert [v.axiom for v in exc.value.violations] == ["E3"]


@pytest.mark.parametrize("text,line,needle", [
    ("", 1, "empty"),
    ("efa 2\n", 1, "version"),
    ("elements 0 1\n", 1, "header"),
    ("efa 1\nelements 0 0\n", 2, "duplicate element"),
    ("efa 1\nelements 0 a 1\nzero 0\none 1\nsum a a 1\nsum a a 1\n", 6, "redundant"),
    ("efa 1\nelements 0 a 1\nzero 0\none 1\nsum a a 1\nsum a a a\n", 6, "conflicting"),
    ("efa 1\nelements 0 a 1\nzero 0\none 1\nsum 0 a a\n", 5, "implicit"),
    ("efa 1\nelements 0 a 1\nzero 0\none 1\nsum a b 1\n", 5, "unknown element"),
    ("efa 1\nelements 0 1\nzero 0\none 1\nmul 1 1 1\n", 5, "unknown keyword"),
    ("efa 1\nelements 0 1\nzero 0\n", 3, "missing 'one'"),
])
def test_parse_errors(text, line, needle):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line
    assert needle in exc.value.message


def test_symmetric_duplicate_rejected():
    with pytest.raises(ParseError) as exc:
        parse("efa 1\nelements 0 a b 1\nzero 0\none 1\nsum a b 1\nsum b a 1\n")
    assert "redundant" in exc.value.message


def test_serializer_rejects_bad_names():
    bad = from_table(["0", "one #"], 0, 1, [list(r) for r in chain(1).table])
    with pytest.raises(ValueError):
        serialize(bad)


def test_serializer_is_canonical():
    text = serialize(catalog("r6"))
    sums = [ln for ln in text.splitlines() if ln.startswith("sum")]
    assert len(sums) == 5
    assert serialize(parse(text)) == text


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(standard_corpus()))
def test_round_trip(named):
    _, E = named
    F = parse(serialize(E))
    assert F.names == E.names
    phi = find_isomorphism(E, F)
    assert phi == {i: i for i in range(len(E))}


def _naive_covers(E):
    """Cover pairs from the order relation alone (no precomputed below/above lists)."""
    n = len(E)
    less = {(x, y) for x in range(n) for y in range(n)
            if x != y and any(E.table[x][c] == y for c in range(n))}
    return {(x, y) for (x, y) in less
            if not any((x, z) in less and (z, y) in less for z in range(n))}


@pytest.mark.parametrize("name,E", standard_corpus(), ids=[n for n, _ in standard_corpus()])
def test_dot_is_transitive_reduction(name, E):
    assert set(cover_pairs(E)) == _naive_covers(E)
    dot = to_dot(E)
    edges = set(re.findall(r"n(\d+) -> n(\d+)", dot))
    assert {(int(a), int(b)) for a, b in edges} == _naive_covers(E)
    S = sharp_elements(E)
    for x in range(len(E)):
        line = next(ln for ln in dot.splitlines() if ln.strip().startswith(f"n{x} ["))
        assert ("style=bold" in line) == (x in S)
