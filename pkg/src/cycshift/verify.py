"""The acceptance suite: every check the CLI ``verify`` command runs.

Checks are deterministic and exact (integer combinatorics).  Each returns a
CheckResult; a criterion passes when all of its sub-checks pass.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from . import baxter, hypoplactic, plactic, rewrite, stalactic, sylvester, taiga
from .handles import handle
from .rewrite import A_SYM, B_SYM, X_SYM, Y_SYM, in_factor_language, presentation, xy_cycle_invariant
from .shiftgraph import (
    ShiftGraph,
    component,
    diameter,
    diameter_scan,
    distance,
    evaluation_graph,
    full_support_evaluations,
)
from .words import Word, cocharge_seq, parse_word, words_with_evaluation


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status}  {self.name}{tail}"


def _ok(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, True, detail)


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _expect(name: str, got, want) -> CheckResult:
    if got == want:
        return _ok(name, f"= {want}")
    return _fail(name, f"got {got}, expected {want}")


def _standard_ev(n: int) -> tuple[int, ...]:
    return (1,) * n


# ---------------------------------------------------------------------------
# criterion 1: the worked cocharge sequence


def criterion_1() -> list[CheckResult]:
    got = cocharge_seq(parse_word("1246375"))
    return [_expect("c1 cocharge of 1246375", got, (0, 0, 0, 1, 1, 2, 2))]


# ---------------------------------------------------------------------------
# criterion 2: insertion vs presentation, exhaustively


def _all_words(rank: int, max_len: int) -> Iterable[Word]:
    for length in range(max_len + 1):
        yield from product(range(1, rank + 1), repeat=length)


def criterion_2(max_len: int = 6, rank: int = 4) -> list[CheckResult]:
    out = []
    for name in ("plac", "hypo", "sylv", "stal", "taig", "baxt"):
        h = handle(name)
        oracle = presentation(name)
        key_to_canon: dict[tuple, Word] = {}
        canon_to_key: dict[tuple, str] = {}
        bad = 0
        for w in _all_words(rank, max_len):
            k = (tuple(sorted(w)), h.key_of(w))
            canon = oracle.close(w, max_len).canonical
            if key_to_canon.setdefault(k, canon) != canon:
                bad += 1
            if canon_to_key.setdefault((tuple(sorted(w)), canon), k[1]) != k[1]:
                bad += 1
        out.append(
            _ok(f"c2 {name} insertion matches presentation", f"words up to length {max_len}")
            if bad == 0
            else _fail(f"c2 {name} insertion matches presentation", f"{bad} discrepancies")
        )
    return out


# ---------------------------------------------------------------------------
# criterion 3: the four reference components


def criterion_3() -> list[CheckResult]:
    out = []
    g = component(handle("plac"), parse_word("12345"), 5)
    out.append(_expect("c3 plac component of 12345: vertices", len(g.vertices), 26))
    out.append(_expect("c3 plac component of 12345: diameter", diameter(g), 4))
    g = component(handle("hypo"), parse_word("123445"), 5)
    out.append(_expect("c3 hypo component of 123445: vertices", len(g.vertices), 16))
    out.append(_expect("c3 hypo component of 123445: diameter", diameter(g), 4))
    g = component(handle("sylv"), parse_word("1234"), 4)
    out.append(_expect("c3 sylv component of 1234: vertices", len(g.vertices), 14))
    out.append(_expect("c3 sylv component of 1234: diameter", diameter(g), 3))
    g = component(handle("stal"), parse_word("1233"), 3)
    out.append(_expect("c3 stal component of 1233: vertices", len(g.vertices), 6))
    out.append(_expect("c3 stal component of 1233: edges", g.edge_count, 11))
    out.append(_expect("c3 stal component of 1233: diameter", diameter(g), 3))
    return out


# ---------------------------------------------------------------------------
# criterion 4: the summary table at desk scale


def criterion_4(max_total: int = 7) -> list[CheckResult]:
    out = []
    reports: dict[tuple[str, int], object] = {}

    def scan(name: str, rank: int):
        key = (name, rank)
        if key not in reports:
            reports[key] = diameter_scan(
                handle(name), rank, max_total, distinct_up_to_relabeling=True
            )
        return reports[key]

    def max_diam_through(name: str, rank: int) -> int:
        # evaluations with unused symbols relabel to lower full-support ranks
        return max(scan(name, r).max_diameter for r in range(1, rank + 1))

    for n in range(2, 6):
        out.append(
            _expect(f"c4 hypo rank {n} max diameter", max_diam_through("hypo", n), n - 1)
        )
    for name in ("sylv", "taig"):
        for n in range(2, 6):
            d = max_diam_through(name, n)
            if n - 1 <= d <= n:
                out.append(_ok(f"c4 {name} rank {n} max diameter", f"= {d}, within [{n-1},{n}]"))
            else:
                out.append(_fail(f"c4 {name} rank {n} max diameter", f"{d} outside [{n-1},{n}]"))
    stal_expect = {1: 0, 2: 1, 3: 3, 4: 3, 5: 3}
    for n in range(1, 6):
        out.append(
            _expect(
                f"c4 stal rank {n} max diameter", max_diam_through("stal", n), stal_expect[n]
            )
        )
    for n in range(2, 6):
        d = max_diam_through("plac", n)
        if d == n - 1 and d <= 2 * n - 3:
            out.append(_ok(f"c4 plac rank {n} max diameter", f"= {d} = n-1 <= {2*n-3}"))
        else:
            out.append(_fail(f"c4 plac rank {n} max diameter", f"{d}, expected {n-1}"))
    for name in ("plac", "hypo", "sylv", "taig"):
        split = [n for n in range(2, 6) if not scan(name, n).all_single_component]
        out.append(
            _ok(f"c4 {name} components = evaluation classes")
            if not split
            else _fail(f"c4 {name} components = evaluation classes", f"splits at ranks {split}")
        )
    for name in ("stal", "baxt"):
        split = [n for n in range(3, 6) if not scan(name, n).all_single_component]
        out.append(
            _ok(f"c4 {name} has split evaluations", f"ranks {split}")
            if split == [3, 4, 5]
            else _fail(f"c4 {name} has split evaluations", f"only at ranks {split}")
        )
    return out


# ---------------------------------------------------------------------------
# criterion 5: constructive paths


def _path_checks(
    name: str,
    graph: ShiftGraph,
    path,
    key_fn: Callable,
    source_key: str,
    target_key: str,
    bound: int,
) -> str | None:
    keys = [key_fn(el) for el in path.elements]
    if keys[0] != source_key or keys[-1] != target_key:
        return "endpoints wrong"
    if path.steps > bound:
        return f"{path.steps} steps exceeds bound {bound}"
    for a, b in zip(keys, keys[1:]):
        if b not in graph.adjacency[a]:
            return f"step {a} -> {b} is not an edge"
    return None


def criterion_5() -> list[CheckResult]:
    out = []
    # hypoplactic, standard elements, ranks 2..5
    for n in range(2, 6):
        ev = _standard_ev(n)
        g = evaluation_graph(handle("hypo"), ev)
        reps: dict[str, Word] = {}
        for w in words_with_evaluation(ev):
            reps.setdefault(hypoplactic.word_key(w), w)
        tabs = {k: hypoplactic.quasi_ribbon(w) for k, w in reps.items()}
        bad = 0
        for kt, t in tabs.items():
            for ku, u in tabs.items():
                path = hypoplactic.shift_path(t, u)
                err = _path_checks(
                    "hypo", g, path, lambda el: el.key(), kt, ku, n - 1
                )
                if err:
                    bad += 1
        out.append(
            _ok(f"c5 hypo paths rank {n}") if bad == 0 else _fail(f"c5 hypo paths rank {n}", f"{bad} bad")
        )
    # sylvester, standard elements, ranks 2..5 (invariants checked internally)
    for n in range(2, 6):
        ev = _standard_ev(n)
        g = evaluation_graph(handle("sylv"), ev)
        reps = {}
        for w in words_with_evaluation(ev):
            reps.setdefault(sylvester.word_key(w), w)
        trees = {k: sylvester.right_bst(w) for k, w in reps.items()}
        bad = 0
        for kt, t in trees.items():
            for ku, u in trees.items():
                path = sylvester.shift_path(t, u)
                err = _path_checks("sylv", g, path, sylvester.key, kt, ku, n)
                if err:
                    bad += 1
        out.append(
            _ok(f"c5 sylv paths rank {n}", "internal invariants asserted")
            if bad == 0
            else _fail(f"c5 sylv paths rank {n}", f"{bad} bad")
        )
    # stalactic: every pattern of totals <= 6 up to rank 4, pairs per component key
    bad = 0
    pairs = 0
    for rank in range(1, 5):
        for ev in full_support_evaluations(rank, 6):
            g = evaluation_graph(handle("stal"), ev)
            reps = {}
            for w in words_with_evaluation(ev):
                reps.setdefault(stalactic.word_key(w), w)
            tabs = {k: stalactic.stalactic_tableau(w) for k, w in reps.items()}
            groups: dict[object, list[str]] = {}
            for k, t in tabs.items():
                groups.setdefault(stalactic.component_key(t), []).append(k)
            for ks in groups.values():
                for kt in ks:
                    for ku in ks:
                        pairs += 1
                        path = stalactic.shift_path(tabs[kt], tabs[ku])
                        err = _path_checks(
                            "stal", g, path, lambda el: el.key(), kt, ku, 3
                        )
                        if err:
                            bad += 1
    out.append(
        _ok("c5 stal paths", f"{pairs} pairs, totals <= 6")
        if bad == 0
        else _fail("c5 stal paths", f"{bad} of {pairs} bad")
    )
    # taiga: every pattern of totals <= 6 up to rank 4, all pairs per evaluation
    bad = 0
    pairs = 0
    for rank in range(1, 5):
        for ev in full_support_evaluations(rank, 6):
            support = sum(1 for c in ev if c)
            g = evaluation_graph(handle("taig"), ev)
            reps = {}
            for w in words_with_evaluation(ev):
                reps.setdefault(taiga.word_key(w), w)
            trees = {k: taiga.mult_bst(w) for k, w in reps.items()}
            for kt, t in trees.items():
                for ku, u in trees.items():
                    pairs += 1
                    path = taiga.shift_path(t, u)
                    err = _path_checks("taig", g, path, taiga.key, kt, ku, support)
                    if err:
                        bad += 1
    out.append(
        _ok("c5 taig paths", f"{pairs} pairs, totals <= 6")
        if bad == 0
        else _fail("c5 taig paths", f"{bad} of {pairs} bad")
    )
    return out


# ---------------------------------------------------------------------------
# criterion 6: row-to-column lower bounds


def criterion_6() -> list[CheckResult]:
    out = []
    for name in ("plac", "hypo", "sylv"):
        h = handle(name)
        for n in (3, 4, 5):
            row = tuple(range(1, n + 1))
            col = tuple(range(n, 0, -1))
            seq_row = cocharge_seq(row)
            seq_col = cocharge_seq(col)
            gap = max(abs(a - b) for a, b in zip(seq_row, seq_col))
            g = evaluation_graph(h, _standard_ev(n))
            d = distance(g, h.key_of(row), h.key_of(col))
            if gap == n - 1 and d >= n - 1:
                out.append(
                    _ok(f"c6 {name} rank {n} row/column", f"cocharge gap {gap}, distance {d}")
                )
            else:
                out.append(
                    _fail(f"c6 {name} rank {n} row/column", f"gap {gap}, distance {d}")
                )
    return out


# ---------------------------------------------------------------------------
# criterion 7: Baxter structure


def criterion_7() -> list[CheckResult]:
    out = []
    h = handle("baxt")
    got = baxter.readings(baxter.twin_pair(parse_word("2431")))
    out.append(_expect("c7 readings of the 2431 pair", got, {parse_word("2431")}))
    g = component(h, parse_word("123"), 3)
    want = {h.key_of(parse_word(w)) for w in ("123", "231", "312")}
    out.append(_expect("c7 component of 123", set(g.vertices), want))
    out.append(
        _ok("c7 132 outside the 123 component")
        if h.key_of(parse_word("132")) not in g.adjacency
        else _fail("c7 132 outside the 123 component", "it is inside")
    )
    g = component(h, parse_word("1243"), 4)
    want = {h.key_of(parse_word(w)) for w in ("1243", "2431", "4312", "3124")}
    out.append(_expect("c7 component of 1243", set(g.vertices), want))
    out.append(
        _ok("c7 1234 outside the 1243 component")
        if h.key_of(parse_word("1234")) not in g.adjacency
        else _fail("c7 1234 outside the 1243 component", "it is inside")
    )
    return out


# ---------------------------------------------------------------------------
# criterion 8: the unbounded-diameter monoid


def _factor_words(max_len: int) -> list[Word]:
    """All products of a, b, xy, yx with one a and one b, up to ``max_len``."""
    out = []
    max_k = (max_len - 2) // 2
    for k in range(max_k + 1):
        slots = k + 2
        for pa in range(slots):
            for pb in range(slots):
                if pa == pb:
                    continue
                for bits in product(((X_SYM, Y_SYM), (Y_SYM, X_SYM)), repeat=k):
                    factors = []
                    fill = iter(bits)
                    for s in range(slots):
                        if s == pa:
                            factors.append((A_SYM,))
                        elif s == pb:
                            factors.append((B_SYM,))
                        else:
                            factors.append(next(fill))
                    out.append(tuple(x for f in factors for x in f))
    return out


def criterion_8() -> list[CheckResult]:
    out = []
    h = handle("counterexample")
    oracle = presentation("counterexample")
    for alpha in (2, 3, 4):
        w1 = (A_SYM,) + (X_SYM, Y_SYM) * alpha + (B_SYM,)
        w2 = (B_SYM,) + (Y_SYM, X_SYM) * alpha + (A_SYM,)
        g = evaluation_graph(h, (1, 1, alpha, alpha))
        try:
            d = distance(g, h.key_of(w1), h.key_of(w2))
        except ValueError:
            out.append(_fail(f"c8 alpha={alpha} connectivity", "classes not connected"))
            continue
        if d >= alpha - 1:
            out.append(_ok(f"c8 alpha={alpha} distance", f"= {d} >= {alpha - 1}"))
        else:
            out.append(_fail(f"c8 alpha={alpha} distance", f"{d} < {alpha - 1}"))
        bad_edges = 0
        for a, b in g.edges():
            wa, wb = parse_word(a), parse_word(b)
            if in_factor_language(wa) and in_factor_language(wb):
                if abs(xy_cycle_invariant(wa) - xy_cycle_invariant(wb)) > 1:
                    bad_edges += 1
        out.append(
            _ok(f"c8 alpha={alpha} invariant edge bound")
            if bad_edges == 0
            else _fail(f"c8 alpha={alpha} invariant edge bound", f"{bad_edges} bad edges")
        )
    bad = 0
    for w in _factor_words(10):
        mu = xy_cycle_invariant(w)
        cls = oracle.close(w)
        if any(
            not in_factor_language(m) or xy_cycle_invariant(m) != mu for m in cls.members
        ):
            bad += 1
    out.append(
        _ok("c8 invariant constant on classes", "lengths <= 10")
        if bad == 0
        else _fail("c8 invariant constant on classes", f"{bad} classes vary")
    )
    return out


# ---------------------------------------------------------------------------
# criterion 9: conjugacy witnesses


def criterion_9() -> list[CheckResult]:
    out = []
    pairs = 0
    bad = 0
    for rank in range(1, 5):
        for ev in full_support_evaluations(rank, 6):
            reps: dict[str, Word] = {}
            for w in words_with_evaluation(ev):
                reps.setdefault(stalactic.word_key(w), w)
            words = [stalactic.stalactic_tableau(w).reading() for w in reps.values()]
            for u in words:
                for v in words:
                    pairs += 1
                    try:
                        stalactic.conjugacy_witness(u, v)
                    except AssertionError:
                        bad += 1
    out.append(
        _ok("c9 stal witnesses", f"{pairs} element pairs, totals <= 6")
        if bad == 0
        else _fail("c9 stal witnesses", f"{bad} of {pairs} bad")
    )
    pairs = 0
    bad = 0
    by_ev: dict[tuple, list[Word]] = {}
    for w in _all_words(4, 4):
        by_ev.setdefault(tuple(sorted(w)), []).append(w)
    for group in by_ev.values():
        for p in group:
            for q in group:
                pairs += 1
                try:
                    baxter.conjugacy_witness(p, q)
                except AssertionError:
                    bad += 1
    out.append(
        _ok("c9 baxt witnesses", f"{pairs} word pairs, lengths <= 4")
        if bad == 0
        else _fail("c9 baxt witnesses", f"{bad} of {pairs} bad")
    )
    return out


# ---------------------------------------------------------------------------
# criterion 10: randomized invariant suite


def _random_words(count: int, max_len: int, rank: int, seed: int) -> list[Word]:
    rng = random.Random(seed)
    return [
        tuple(rng.randint(1, rank) for _ in range(rng.randint(0, max_len)))
        for _ in range(count)
    ]


def criterion_10(count: int = 10_000, max_len: int = 10, rank: int = 8) -> list[CheckResult]:
    words = _random_words(count, max_len, rank, seed=20260808)
    out = []
    checks: dict[str, Callable[[Word], None]] = {
        "plac": lambda w: plactic.young_tableau(w).check(),
        "hypo": lambda w: hypoplactic.quasi_ribbon(w).check(),
        "sylv": lambda w: sylvester.check_right_strict(sylvester.right_bst(w)),
        "stal": lambda w: stalactic.stalactic_tableau(w),
        "taig": lambda w: taiga.check_mult_bst(taiga.mult_bst(w)),
        "baxt": lambda w: baxter.twin_pair(w),
    }
    symbol_count: dict[str, Callable[[Word], list[int]]] = {
        "plac": lambda w: plactic.young_tableau(w).symbols(),
        "hypo": lambda w: hypoplactic.quasi_ribbon(w).symbols(),
        "sylv": lambda w: sylvester.labels_of(w),
        "stal": lambda w: stalactic.stalactic_tableau(w).symbols(),
        "taig": lambda w: taiga.symbols_of(w),
        "baxt": lambda w: baxter.symbols_of(w),
    }
    for name in ("plac", "hypo", "sylv", "stal", "taig", "baxt"):
        bad = 0
        moves = rewrite.PRESENTATIONS[name]
        for w in words:
            try:
                checks[name](w)
                if sorted(symbol_count[name](w)) != sorted(w):
                    bad += 1
                for w2 in moves(w):
                    if sorted(w2) != sorted(w):
                        bad += 1
            except (ValueError, AssertionError):
                bad += 1
        out.append(
            _ok(f"c10 {name} invariants", f"{count} random words")
            if bad == 0
            else _fail(f"c10 {name} invariants", f"{bad} violations")
        )
    return out


# ---------------------------------------------------------------------------
# driver


CRITERIA: dict[int, Callable[[], list[CheckResult]]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run(numbers: Iterable[int] | None = None, echo: Callable[[str], None] = print) -> bool:
    """Run the selected criteria (all by default); True when everything passed."""
    selected = sorted(numbers) if numbers else sorted(CRITERIA)
    all_ok = True
    for n in selected:
        results = CRITERIA[n]()
        ok = all(r.passed for r in results)
        all_ok = all_ok and ok
        echo(f"criterion {n}: {'PASS' if ok else 'FAIL'}")
        for r in results:
            echo(f"  {r.line()}")
    return all_ok
