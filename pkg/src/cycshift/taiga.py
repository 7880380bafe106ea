"""Binary search trees with multiplicities (the taiga monoid).

Labels are distinct and strictly ordered (left < node < right); each node
carries a positive multiplicity.  A repeated symbol bumps the multiplicity
instead of adding a node, so an element is determined by the stripped tree
shape together with the evaluation.
"""

from __future__ import annotations

from . import sylvester
from .paths import ShiftPath, compress_path
from .trees import Node, clone, postfix, serialize
from .words import Word


def insert(root: Node | None, a: int) -> Node:
    fresh = clone(root)
    return _insert_mut(fresh, a)


def _insert_mut(root: Node | None, a: int) -> Node:
    if root is None:
        return Node(a, 1)
    node = root
    while True:
        if a == node.label:
            node.mult += 1
            return root
        if a < node.label:
            if node.left is None:
                node.left = Node(a, 1)
                return root
            node = node.left
        else:
            if node.right is None:
                node.right = Node(a, 1)
                return root
            node = node.right


def mult_bst(word: Word) -> Node | None:
    """Insert the symbols of ``word`` right to left into the empty tree."""
    root: Node | None = None
    for a in reversed(word):
        root = _insert_mut(root, a)
    return root


def word_key(word: Word) -> str:
    return serialize(mult_bst(word), with_mult=True)


def key(root: Node | None) -> str:
    return serialize(root, with_mult=True)


def check_mult_bst(root: Node | None) -> None:
    stack: list[tuple[Node | None, int | None, int | None]] = [(root, None, None)]
    while stack:
        node, lo, hi = stack.pop()
        if node is None:
            continue
        if node.mult < 1:
            raise ValueError("multiplicities must be positive")
        if lo is not None and node.label <= lo:
            raise ValueError("labels must strictly increase rightwards")
        if hi is not None and node.label >= hi:
            raise ValueError("labels must strictly decrease leftwards")
        stack.append((node.left, lo, node.label))
        stack.append((node.right, node.label, hi))


def drop_multiplicities(root: Node | None) -> Node | None:
    """Forget multiplicities; distinct labels make the result a (both-strict) BST."""
    if root is None:
        return None
    return Node(root.label, 1, drop_multiplicities(root.left), drop_multiplicities(root.right))


def evaluation_of(root: Node | None, rank: int) -> tuple[int, ...]:
    counts = [0] * rank
    for node in postfix(root):
        counts[node.label - 1] += node.mult
    return tuple(counts)


def shift_path(t: Node | None, u: Node | None) -> ShiftPath:
    """Lift the stripped-tree shift path, repeating each symbol per the evaluation."""
    ev_t = sorted((x.label, x.mult) for x in postfix(t))
    ev_u = sorted((x.label, x.mult) for x in postfix(u))
    if ev_t != ev_u:
        raise ValueError("shift path requires equal evaluations")
    if t is None:
        return ShiftPath((None,), ())
    if key(t) == key(u):
        return ShiftPath((clone(t),), ())
    mult = {lbl: m for lbl, m in ev_t}

    def expand(word: Word) -> Word:
        return tuple(a for sym in word for a in (sym,) * mult[sym])

    base = sylvester.shift_path(drop_multiplicities(t), drop_multiplicities(u))
    elements: list[Node | None] = [clone(t)]
    moves: list[tuple[Word, int]] = []
    for w, k in base.moves:
        uv = expand(w)
        split = len(expand(w[:k]))
        if key(mult_bst(uv)) != key(elements[-1]):
            raise AssertionError("lifted reading does not represent the current tree")
        moves.append((uv, split))
        elements.append(mult_bst(uv[split:] + uv[:split]))
    if key(elements[-1]) != key(u):
        raise AssertionError("lifted path did not reach its target")
    return compress_path(elements, moves, key=key)


def symbols_of(word: Word) -> list[int]:
    """Symbols with multiplicity stored in the tree of ``word``."""
    return [x.label for x in postfix(mult_bst(word)) for _ in range(x.mult)]
