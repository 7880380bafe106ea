"""Plactic-like monoids and their cyclic shift graphs.

Six monoids of combinatorial objects (Young tableaux, quasi-ribbon tableaux,
right strict BSTs, stalactic tableaux, BSTs with multiplicities, twin BST
pairs), insertion algorithms, a presentation-based rewriting oracle, a
generic shift-graph engine, and constructive short paths between elements.
"""

from .words import (
    DEFAULT_MAX_CLASS,
    DEFAULT_MAX_TOTAL,
    LimitExceededError,
    cocharge_seq,
    evaluation,
    is_standard,
    parse_word,
    format_word,
    rotate,
    words_with_evaluation,
)

__all__ = [
    "DEFAULT_MAX_CLASS",
    "DEFAULT_MAX_TOTAL",
    "LimitExceededError",
    "cocharge_seq",
    "evaluation",
    "is_standard",
    "parse_word",
    "format_word",
    "rotate",
    "words_with_evaluation",
]

__version__ = "0.1.0"
