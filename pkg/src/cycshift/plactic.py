"""Young tableaux and Schensted row insertion (the plactic monoid).

Rows carry weakly increasing entries, columns strictly increase downwards,
and row lengths weakly decrease from top to bottom.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, cocharge_seq, evaluation, format_run, is_standard, words_with_evaluation


def _insert_into_rows(rows: list[list[int]], a: int) -> None:
    """Row-insert ``a``: bump the leftmost strictly greater entry downwards."""
    i = 0
    while i < len(rows):
        row = rows[i]
        if a >= row[-1]:
            row.append(a)
            return
        # leftmost entry strictly greater than a
        lo, hi = 0, len(row) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > a:
                hi = mid
            else:
                lo = mid + 1
        a, row[lo] = row[lo], a
        i += 1
    rows.append([a])


def _rows_of_word(word: Word) -> list[list[int]]:
    rows: list[list[int]] = []
    for a in word:
        _insert_into_rows(rows, a)
    return rows


def word_key(word: Word) -> str:
    """Canonical key of the plactic class of ``word`` (rows joined by '/')."""
    return "/".join(format_run(r) for r in _rows_of_word(word))


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self.check()

    def check(self) -> None:
        rows = self.rows
        for i, row in enumerate(rows):
            if not row:
                raise ValueError("Young tableau rows must be non-empty")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i} not weakly increasing: {row}")
            if i + 1 < len(rows):
                below = rows[i + 1]
                if len(below) > len(row):
                    raise ValueError("row lengths must weakly decrease")
                if any(row[j] >= below[j] for j in range(len(below))):
                    raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def key(self) -> str:
        return "/".join(format_run(r) for r in self.rows)

    def symbols(self) -> list[int]:
        return [a for row in self.rows for a in row]

    def row_reading(self) -> Word:
        """Rows bottom to top, each left to right; a reading of the tableau."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def is_standard(self) -> bool:
        return is_standard(tuple(self.symbols()))

    def draw(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self.rows) or "(empty)"

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def schensted_insert(t: YoungTableau, a: int) -> YoungTableau:
    rows = [list(r) for r in t.rows]
    _insert_into_rows(rows, a)
    return YoungTableau(tuple(tuple(r) for r in rows))


def young_tableau(word: Word) -> YoungTableau:
    """Insert the symbols of ``word`` left to right into the empty tableau."""
    return YoungTableau(tuple(tuple(r) for r in _rows_of_word(word)))


def plactic_class(word: Word, rank: int, limit: int | None = None) -> set[Word]:
    """All words with the same evaluation and the same tableau as ``word``."""
    k = word_key(word)
    ev = evaluation(word, rank)
    return {w for w in words_with_evaluation(ev, limit) if word_key(w) == k}


def tableau_cocharge(t: YoungTableau) -> tuple[int, ...]:
    """Cocharge sequence of a standard tableau.

    Well-definedness on the plactic class is asserted by recomputing the
    sequence for every word of the class and requiring agreement.
    """
    symbols = t.symbols()
    if not is_standard(tuple(sorted(symbols))):
        raise ValueError("tableau is not standard")
    rank = len(symbols)
    readings = plactic_class(t.row_reading(), rank)
    seqs = {cocharge_seq(w) for w in readings}
    if len(seqs) != 1:
        raise AssertionError(f"cocharge sequence not constant on class of {t.key()}")
    return next(iter(seqs))
