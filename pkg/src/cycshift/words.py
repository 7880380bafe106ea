"""Words over the ordered alphabet {1 < 2 < ...} and their basic statistics.

A word is a tuple of positive integers.  The rank (alphabet size) is carried
alongside words, never inferred, so that a rank-6 scan sees unused symbols.
"""

from __future__ import annotations

import os
from math import factorial
from typing import Iterator

Word = tuple[int, ...]
Evaluation = tuple[int, ...]

#: Global guard for exponential enumerations (number of symbols enumerated).
DEFAULT_MAX_TOTAL = int(os.environ.get("CYCSHIFT_MAX_TOTAL", "10"))

#: Guard for per-object searches (readings, class enumeration by node count).
DEFAULT_MAX_CLASS = int(os.environ.get("CYCSHIFT_MAX_CLASS", "12"))


class LimitExceededError(ValueError):
    """An enumeration would exceed the configured size limit."""


def check_word(word: Word, rank: int) -> None:
    """Raise ValueError unless every symbol of ``word`` lies in 1..rank."""
    if rank < 0:
        raise ValueError(f"rank must be non-negative, got {rank}")
    for a in word:
        if not 1 <= a <= rank:
            raise ValueError(f"symbol {a} outside alphabet 1..{rank}")


def evaluation(word: Word, rank: int) -> Evaluation:
    """Count occurrences of each symbol 1..rank in ``word``."""
    check_word(word, rank)
    counts = [0] * rank
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


def is_standard(word: Word) -> bool:
    """True iff ``word`` contains each of 1..len(word) exactly once."""
    return sorted(word) == list(range(1, len(word) + 1))


def rotate(word: Word, k: int) -> Word:
    """Cyclic rotation: return word[k:] + word[:k].  Requires 0 <= k <= len."""
    if not 0 <= k <= len(word):
        raise IndexError(f"rotation index {k} out of range for length {len(word)}")
    return word[k:] + word[:k]


def rotations(word: Word) -> list[Word]:
    """All rotations word[k:]+word[:k] for k = 0..len(word), duplicates kept."""
    return [word[k:] + word[:k] for k in range(len(word) + 1)]


def multinomial(ev: Evaluation) -> int:
    """Number of distinct arrangements of the multiset described by ``ev``."""
    n = factorial(sum(ev))
    for c in ev:
        n //= factorial(c)
    return n


def words_with_evaluation(ev: Evaluation, limit: int | None = None) -> Iterator[Word]:
    """Yield every word with the given evaluation, in lexicographic order.

    The total sum(ev) is bounded by ``limit`` (default DEFAULT_MAX_TOTAL).
    """
    bound = DEFAULT_MAX_TOTAL if limit is None else limit
    total = sum(ev)
    if total > bound:
        raise LimitExceededError(
            f"evaluation total {total} exceeds enumeration limit {bound} (evaluation {ev})"
        )
    counts = list(ev)
    word: list[int] = []

    def gen() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for s in range(len(counts)):
            if counts[s]:
                counts[s] -= 1
                word.append(s + 1)
                yield from gen()
                word.pop()
                counts[s] += 1

    return gen()


def cocharge_seq(word: Word) -> tuple[int, ...]:
    """Cocharge sequence of a standard word.

    Write the word anticlockwise around a circle with a marker at the seam.
    Label symbol 1 with 0; having labelled i with k, symbol i+1 gets k+1 when
    it is reached clockwise before the seam, and k otherwise.  Reading in word
    positions: the label grows exactly when i+1 occurs earlier than i.
    """
    if not is_standard(word):
        raise ValueError(f"cocharge sequence requires a standard word, got {word}")
    pos = {a: i for i, a in enumerate(word)}
    labels = [0]
    for i in range(2, len(word) + 1):
        labels.append(labels[-1] + (1 if pos[i] < pos[i - 1] else 0))
    seq = tuple(labels) if word else ()
    _check_cocharge(seq)
    return seq


def _check_cocharge(seq: tuple[int, ...]) -> None:
    if seq:
        assert seq[0] == 0
        for a, b in zip(seq, seq[1:]):
            assert b in (a, a + 1)


def parse_word(text: str) -> Word:
    """Parse a compact digit string ("1325") or comma-separated form ("10,3,12")."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError as e:
        raise ValueError(f"cannot parse word from {text!r}") from e
    if any(a < 1 for a in word):
        raise ValueError(f"symbols must be positive, got {word}")
    return word


def format_word(word: Word) -> str:
    """Compact digit string when all symbols are single digits, else comma-separated."""
    if not word:
        return ""
    if all(a <= 9 for a in word):
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def format_run(symbols) -> str:
    """Format a run of symbols the same way words are formatted."""
    return format_word(tuple(symbols))


def parse_evaluation(text: str) -> Evaluation:
    """Parse comma-separated counts ("2,0,1")."""
    parts = [p.strip() for p in text.split(",") if p.strip() != ""]
    ev = tuple(int(p) for p in parts)
    if any(c < 0 for c in ev):
        raise ValueError(f"counts must be non-negative, got {ev}")
    return ev
