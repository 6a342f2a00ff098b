"""Exact combinatorics for extended ordered multiset partitions and parking functions."""

from .core import (
    Block,
    Composition,
    Content,
    DomainError,
    OrderedMultisetPartition,
    ParseError,
    enumerate_omps,
    parse,
    serialize,
    validate,
)
from .qpoly import QTPolynomial
from .statistics import dinv, inv, maj, maj_of_word, minimaj, miniword

__version__ = "0.1.0"

__all__ = [
    "Block",
    "Composition",
    "Content",
    "DomainError",
    "OrderedMultisetPartition",
    "ParseError",
    "QTPolynomial",
    "enumerate_omps",
    "parse",
    "serialize",
    "validate",
    "inv",
    "dinv",
    "maj",
    "minimaj",
    "miniword",
    "maj_of_word",
    "__version__",
]
