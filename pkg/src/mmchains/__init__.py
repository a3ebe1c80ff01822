"""Exact counting of maximal matchings in hexagonal cactus and benzenoid chains."""
from __future__ import annotations

from .chains import ChainSpec, Family, build_chain, named_spec, parse_spec
from .exact import count_maximal, maximal_matching_polynomial
from .transfer import chain_polynomial, count_chain

__all__ = [
    "ChainSpec",
    "Family",
    "build_chain",
    "named_spec",
    "parse_spec",
    "count_maximal",
    "maximal_matching_polynomial",
    "chain_polynomial",
    "count_chain",
]
