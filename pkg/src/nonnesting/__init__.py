"""Exact combinatorics of nonnesting (canon) permutations."""

from .core import (
    DyckPath,
    Multipermutation,
    Permutation,
    dy,
    enumerate_dyck,
    enumerate_nonnesting,
    format_word,
    is_nonnesting,
    parse_path,
    parse_word,
    pi_from,
    s_of,
    statistics,
)
from .polynomials import BivariatePoly, distribution, eulerian, narayana

__all__ = [
    "BivariatePoly",
    "DyckPath",
    "Multipermutation",
    "Permutation",
    "distribution",
    "dy",
    "enumerate_dyck",
    "enumerate_nonnesting",
    "eulerian",
    "format_word",
    "is_nonnesting",
    "narayana",
    "parse_path",
    "parse_word",
    "pi_from",
    "s_of",
    "statistics",
]
