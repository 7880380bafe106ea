"""Paths in cyclic shift graphs produced by the constructive algorithms.

Every step records a witness: a word ``w`` and a split ``k`` such that the
step's source is represented by ``w`` and its target by ``w[k:] + w[:k]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word


@dataclass(frozen=True)
class ShiftPath:
    """A path T_0 ~ T_1 ~ ... ~ T_k with per-step rotation witnesses."""

    elements: tuple
    moves: tuple[tuple[Word, int], ...]

    @property
    def steps(self) -> int:
        return len(self.elements) - 1

    def step_words(self) -> list[tuple[Word, Word]]:
        """Word pairs (uv, vu) witnessing each step."""
        return [(w, w[k:] + w[:k]) for w, k in self.moves]


def compress_path(elements: list, moves: list[tuple[Word, int]], key=None) -> ShiftPath:
    """Drop trivial steps (consecutive equal elements) and their witnesses.

    ``key`` supplies the equality notion for element types without a
    structural __eq__ (mutable tree nodes compare by identity).
    """
    if not elements:
        raise ValueError("a path needs at least one element")
    ident = key if key is not None else (lambda x: x)
    kept = [elements[0]]
    kept_moves: list[tuple[Word, int]] = []
    for el, mv in zip(elements[1:], moves):
        if ident(el) != ident(kept[-1]):
            kept.append(el)
            kept_moves.append(mv)
    return ShiftPath(tuple(kept), tuple(kept_moves))
