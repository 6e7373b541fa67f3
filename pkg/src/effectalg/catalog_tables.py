"""Frozen sum tables of the named examples.

Each entry lists one unordered pair of nonzero elements and its sum.
"""

R6_NAMES = ("0", "a", "b", "a'", "b'", "1")
R6_ENTRIES = (
    ("a", "a", "a'"),
    ("b", "b", "a'"),
    ("a", "b", "b'"),
    ("a", "a'", "1"),
    ("b", "b'", "1"),
)

L18_NAMES = (
    "0", "a", "b", "c", "d", "e", "a+c", "b+c", "c+c", "c+d", "c+e",
    "a'", "b'", "d'", "e'", "(c+c)'", "c'", "1",
)
L18_ENTRIES = (
    ("a", "b", "(c+c)'"),
    ("a", "c", "a+c"),
    ("a", "b+c", "c'"),
    ("a", "c+c", "b'"),
    ("a", "a'", "1"),
    ("b", "c", "b+c"),
    ("b", "a+c", "c'"),
    ("b", "c+c", "a'"),
    ("b", "b'", "1"),
    ("c", "c", "c+c"),
    ("c", "d", "c+d"),
    ("c", "e", "c+e"),
    ("c", "a+c", "b'"),
    ("c", "b+c", "a'"),
    ("c", "c+d", "e'"),
    ("c", "c+e", "d'"),
    ("c", "(c+c)'", "c'"),
    ("c", "c'", "1"),
    ("d", "e", "(c+c)'"),
    ("d", "c+c", "e'"),
    ("d", "c+e", "c'"),
    ("d", "d'", "1"),
    ("e", "c+c", "d'"),
    ("e", "c+d", "c'"),
    ("e", "e'", "1"),
    ("a+c", "b+c", "1"),
    ("c+c", "(c+c)'", "1"),
    ("c+d", "c+e", "1"),
)

GEN18_NAMES = (
    "0", "a", "b", "c", "d", "e", "f", "d+d", "d+e", "c+d", "(d+d)'",
    "a'", "b'", "c'", "d'", "e'", "f'", "1",
)
GEN18_ENTRIES = (
    ("a", "b", "c'"),
    ("a", "c", "b'"),
    ("a", "e", "f'"),
    ("a", "f", "e'"),
    ("a", "a'", "1"),
    ("b", "c", "a'"),
    ("b", "b'", "1"),
    ("c", "d", "c+d"),
    ("c", "e", "(d+d)'"),
    ("c", "d+d", "e'"),
    ("c", "d+e", "d'"),
    ("c", "c'", "1"),
    ("d", "d", "d+d"),
    ("d", "e", "d+e"),
    ("d", "d+e", "c'"),
    ("d", "c+d", "e'"),
    ("d", "(d+d)'", "d'"),
    ("d", "d'", "1"),
    ("e", "f", "a'"),
    ("e", "d+d", "c'"),
    ("e", "c+d", "d'"),
    ("e", "e'", "1"),
    ("f", "f'", "1"),
    ("d+d", "(d+d)'", "1"),
    ("d+e", "c+d", "1"),
)
