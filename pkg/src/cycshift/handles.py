"""A uniform facade over the monoids, consumed by the graph engine.

A handle maps words to canonical class keys; classes are enumerated by
filtering the arrangements of the evaluation, one mechanism for every monoid,
cross-checked in the tests against the presentation oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import baxter, hypoplactic, plactic, rewrite, stalactic, sylvester, taiga
from .trees import to_json as tree_json
from .words import Evaluation, Word, evaluation, format_word, words_with_evaluation


@dataclass(frozen=True)
class MonoidHandle:
    name: str
    key_of: Callable[[Word], str]
    display: Callable[[Word], str]
    json_of: Callable[[Word], object]
    #: order-preserving relabelings of the alphabet leave the congruence alone
    relabel_invariant: bool = True

    def class_of(self, word: Word, rank: int, limit: int | None = None) -> set[Word]:
        target = self.key_of(word)
        ev = evaluation(word, rank)
        return {w for w in words_with_evaluation(ev, limit) if self.key_of(w) == target}

    def classes_of_evaluation(
        self, ev: Evaluation, limit: int | None = None
    ) -> dict[Word, str]:
        """Map every word with evaluation ``ev`` to its class key."""
        return {w: self.key_of(w) for w in words_with_evaluation(ev, limit)}


def _draw_plac(word: Word) -> str:
    return plactic.young_tableau(word).draw()


def _draw_hypo(word: Word) -> str:
    return hypoplactic.quasi_ribbon(word).draw()


def _draw_sylv(word: Word) -> str:
    return sylvester.draw(sylvester.right_bst(word))


def _draw_taig(word: Word) -> str:
    return sylvester.draw(taiga.mult_bst(word), with_mult=True)


def _draw_stal(word: Word) -> str:
    return stalactic.stalactic_tableau(word).draw()


def _draw_baxt(word: Word) -> str:
    return baxter.twin_pair(word).draw()


_COUNTER = rewrite.presentation("counterexample")


def _counter_key(word: Word) -> str:
    return format_word(_COUNTER.close(word).canonical)


HANDLES: dict[str, MonoidHandle] = {
    "plac": MonoidHandle(
        "plac", plactic.word_key, _draw_plac,
        lambda w: plactic.young_tableau(w).to_json(),
    ),
    "hypo": MonoidHandle(
        "hypo", hypoplactic.word_key, _draw_hypo,
        lambda w: hypoplactic.quasi_ribbon(w).to_json(),
    ),
    "sylv": MonoidHandle(
        "sylv", sylvester.word_key, _draw_sylv,
        lambda w: tree_json(sylvester.right_bst(w)),
    ),
    "stal": MonoidHandle(
        "stal", stalactic.word_key, _draw_stal,
        lambda w: stalactic.stalactic_tableau(w).to_json(),
    ),
    "taig": MonoidHandle(
        "taig", taiga.word_key, _draw_taig,
        lambda w: tree_json(taiga.mult_bst(w), with_mult=True),
    ),
    "baxt": MonoidHandle(
        "baxt", baxter.word_key, _draw_baxt,
        lambda w: {
            "left": tree_json(baxter.left_bst(w)),
            "right": tree_json(sylvester.right_bst(w)),
        },
    ),
    "counterexample": MonoidHandle(
        "counterexample",
        _counter_key,
        lambda w: _counter_key(w),
        lambda w: _counter_key(w),
        relabel_invariant=False,
    ),
}


def handle(name: str) -> MonoidHandle:
    try:
        return HANDLES[name]
    except KeyError:
        raise ValueError(f"unknown monoid {name!r}; choose from {sorted(HANDLES)}")
