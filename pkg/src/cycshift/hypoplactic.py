"""Quasi-ribbon tableaux and hypoplactic insertion.

A quasi-ribbon tableau has weakly increasing rows attached in a ribbon: each
row is glued to the next by exactly one column (no 2x2 block), and the single
overlap cell strictly increases downwards.  Consequently every symbol of row
i+1 is strictly greater than every symbol of row i, so the tableau is
determined by its evaluation together with the set of adjacent-symbol row
breaks.  Rows are stored as runs; offsets follow from the run lengths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import ShiftPath, compress_path
from .words import Word, evaluation, format_run, words_with_evaluation


def _insert_into_rows(rows: list[list[int]], a: int) -> None:
    if not rows:
        rows.append([a])
        return
    if a < rows[0][0]:
        rows.insert(0, [a])
        return
    if a >= rows[-1][-1]:
        rows[-1].append(a)
        return
    # last row whose first entry is <= a
    i = max(idx for idx, row in enumerate(rows) if row[0] <= a)
    row = rows[i]
    j = max(idx for idx, val in enumerate(row) if val <= a)
    if j < len(row) - 1:
        # split within the row: x and z horizontally adjacent
        rows[i : i + 1] = [row[: j + 1] + [a], row[j + 1 :]]
    else:
        # x at the end of row i, z starts row i+1: vertically adjacent
        row.append(a)


def _rows_of_word(word: Word) -> list[list[int]]:
    rows: list[list[int]] = []
    for a in word:
        _insert_into_rows(rows, a)
    return rows


def _offsets(rows) -> list[int]:
    offs = [0]
    for row in rows[:-1]:
        offs.append(offs[-1] + len(row) - 1)
    return offs if rows else []


def word_key(word: Word) -> str:
    rows = _rows_of_word(word)
    offs = _offsets(rows)
    return "/".join(f"{o}:{format_run(r)}" for o, r in zip(offs, rows))


@dataclass(frozen=True)
class QuasiRibbonTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self.check()

    def check(self) -> None:
        for i, row in enumerate(self.rows):
            if not row:
                raise ValueError("quasi-ribbon rows must be non-empty")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i} not weakly increasing: {row}")
            if i + 1 < len(self.rows) and row[-1] >= self.rows[i + 1][0]:
                raise ValueError("overlap column must strictly increase downwards")

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(_offsets(list(self.rows)))

    def key(self) -> str:
        return "/".join(f"{o}:{format_run(r)}" for o, r in zip(self.offsets, self.rows))

    def symbols(self) -> list[int]:
        return [a for row in self.rows for a in row]

    def row_of(self, symbol: int) -> int:
        for i, row in enumerate(self.rows):
            if row[0] <= symbol <= row[-1] and symbol in row:
                return i
        raise ValueError(f"symbol {symbol} not in tableau")

    def columns(self) -> list[list[int]]:
        """Columns left to right, each listed bottom to top."""
        if not self.rows:
            return []
        offs = self.offsets
        width = offs[-1] + len(self.rows[-1])
        cols: list[list[int]] = [[] for _ in range(width)]
        # iterate rows bottom-up so each column comes out bottom-to-top
        for i in range(len(self.rows) - 1, -1, -1):
            for j, a in enumerate(self.rows[i]):
                cols[offs[i] + j].append(a)
        return cols

    def column_reading(self) -> Word:
        return tuple(a for col in self.columns() for a in col)

    def row_reading(self) -> Word:
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def draw(self) -> str:
        lines = []
        for o, row in zip(self.offsets, self.rows):
            lines.append("  " * o + " ".join(str(a) for a in row))
        return "\n".join(lines) or "(empty)"

    def to_json(self) -> list[dict]:
        return [{"offset": o, "row": list(r)} for o, r in zip(self.offsets, self.rows)]


def hypo_insert(t: QuasiRibbonTableau, a: int) -> QuasiRibbonTableau:
    rows = [list(r) for r in t.rows]
    _insert_into_rows(rows, a)
    return QuasiRibbonTableau(tuple(tuple(r) for r in rows))


def quasi_ribbon(word: Word) -> QuasiRibbonTableau:
    """Insert the symbols of ``word`` left to right into the empty tableau."""
    return QuasiRibbonTableau(tuple(tuple(r) for r in _rows_of_word(word)))


def hypo_class(word: Word, rank: int, limit: int | None = None) -> set[Word]:
    k = word_key(word)
    ev = evaluation(word, rank)
    return {w for w in words_with_evaluation(ev, limit) if word_key(w) == k}


def distinct_symbols(word: Word) -> list[int]:
    return sorted(set(word))


def has_inversion(word: Word, i: int) -> bool:
    """True iff the (i+1)-th distinct symbol occurs left of the i-th somewhere.

    ``i`` is 1-based among the distinct symbols of ``word``; equivalently the
    two symbols land on different rows of the quasi-ribbon tableau.
    """
    syms = distinct_symbols(word)
    if i < 1 or i + 1 > len(syms):
        raise ValueError(f"word has only {len(syms)} distinct symbols, pair {i} undefined")
    lo, hi = syms[i - 1], syms[i]
    seen_hi = False
    for a in word:
        if a == hi:
            seen_hi = True
        elif a == lo and seen_hi:
            return True
    return False


def _same_row(t: QuasiRibbonTableau, lo: int, hi: int) -> bool:
    return t.row_of(lo) == t.row_of(hi)


def shift_path(t: QuasiRibbonTableau, u: QuasiRibbonTableau) -> ShiftPath:
    """Cyclic-shift path from ``t`` to ``u`` using at most (#distinct symbols)-1 shifts.

    Working up through the distinct symbols, each step makes the placement of
    the pair (i, i+1) agree with ``u`` (same row vs. split rows) by rotating
    either the column reading, split after the column holding the rightmost i,
    or the row reading, split after the row holding the symbols i+1.  The
    already-settled part on symbols <= i is never broken up.
    """
    t_syms, u_syms = sorted(t.symbols()), sorted(u.symbols())
    if t_syms != u_syms:
        raise ValueError("shift path requires equal evaluations")
    syms = distinct_symbols(tuple(t_syms))
    elements = [t]
    moves: list[tuple[Word, int]] = []
    cur = t
    for idx in range(1, len(syms)):
        lo, hi = syms[idx - 1], syms[idx]
        cur_same = _same_row(cur, lo, hi)
        goal_same = _same_row(u, lo, hi)
        if cur_same == goal_same:
            elements.append(cur)
            moves.append((cur.column_reading(), 0))
            continue
        if cur_same:
            # split the column reading after the column holding the rightmost lo
            cols = cur.columns()
            c = max(ci for ci, col in enumerate(cols) if lo in col)
            head = tuple(a for col in cols[: c + 1] for a in col)
            tail = tuple(a for col in cols[c + 1 :] for a in col)
        else:
            # split the row reading after the row holding the symbols hi
            rows = list(cur.rows)
            r = next(ri for ri, row in enumerate(rows) if hi in row)
            head_rows = rows[r:]  # bottom part of the reading: rows r.. read first
            tail_rows = rows[:r]
            head = tuple(a for row in reversed(head_rows) for a in row)
            tail = tuple(a for row in reversed(tail_rows) for a in row)
        word = head + tail
        if quasi_ribbon(word) != cur:
            raise AssertionError("split reading does not represent the current tableau")
        nxt = quasi_ribbon(tail + head)
        moves.append((word, len(head)))
        elements.append(nxt)
        cur = nxt
    if cur != u:
        raise AssertionError("hypoplactic shift path did not reach its target")
    return compress_path(elements, moves)
