"""Finite effect algebras: validation, blocks, sharp and central elements."""

from .catalog import catalog, standard_corpus
from .construct import direct_product, enumerate_all, horizontal_sum, interval_algebra
from .core import (UNDEF, AxiomViolation, EffectAlgebra, InvalidAlgebra, build, classify,
                   find_isomorphism, from_table, is_isomorphic)
from .efaformat import ParseError, dump, load, parse, serialize
from .families import BudgetExceeded, closure, find_cover
from .structure import blocks, report

__version__ = "0.1.0"

__all__ = [
    "UNDEF", "AxiomViolation", "EffectAlgebra", "InvalidAlgebra", "build", "classify",
    "find_isomorphism", "from_table", "is_isomorphic", "catalog", "standard_corpus",
    "direct_product", "enumerate_all", "horizontal_sum", "interval_algebra", "ParseError",
    "dump", "load", "parse", "serialize", "BudgetExceeded", "closure", "find_cover",
    "blocks", "report",
]
