"""Pairs of twin binary search trees (the Baxter monoid).

The right component is the right strict BST of the word; the left component
is built by left strict leaf insertion reading the word left to right.  The
two trees carry the same symbols and have complementary canopies.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sylvester
from .trees import Node, clone, labels, nodes, serialize
from .words import DEFAULT_MAX_CLASS, LimitExceededError, Word


def left_insert(root: Node | None, a: int) -> Node:
    fresh = clone(root)
    return _left_insert_mut(fresh, a)


def _left_insert_mut(root: Node | None, a: int) -> Node:
    new = Node(a)
    if root is None:
        return new
    node = root
    while True:
        if a < node.label:
            if node.left is None:
                node.left = new
                return root
            node = node.left
        else:
            if node.right is None:
                node.right = new
                return root
            node = node.right


def left_bst(word: Word) -> Node | None:
    """Insert the symbols of ``word`` left to right (equal symbols go right)."""
    root: Node | None = None
    for a in word:
        root = _left_insert_mut(root, a)
    return root


def check_left_strict(root: Node | None) -> None:
    stack: list[tuple[Node | None, int | None, int | None]] = [(root, None, None)]
    while stack:
        node, lo, hi = stack.pop()
        if node is None:
            continue
        if lo is not None and node.label < lo:
            raise ValueError("right subtree must be >= its ancestor")
        if hi is not None and node.label >= hi:
            raise ValueError("left subtree must be strictly below its ancestor")
        stack.append((node.left, lo, node.label))
        stack.append((node.right, node.label, hi))


def canopy(root: Node | None) -> str:
    """Bit word of the empty subtrees in left-to-right order, ends dropped.

    An empty left slot reads 1, an empty right slot 0; the first and last
    empty slots of the tree are skipped.
    """
    if root is None:
        raise ValueError("canopy of the empty tree is undefined")
    bits: list[str] = []

    def rec(node: Node) -> None:
        if node.left is None:
            bits.append("1")
        else:
            rec(node.left)
        if node.right is None:
            bits.append("0")
        else:
            rec(node.right)

    rec(root)
    return "".join(bits[1:-1])


def complementary(a: str, b: str) -> bool:
    return len(a) == len(b) and all(x != y for x, y in zip(a, b))


@dataclass(frozen=True)
class TwinPair:
    left: Node | None
    right: Node | None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("twin trees must be empty together")
        if self.left is None:
            return
        if sorted(labels(self.left)) != sorted(labels(self.right)):
            raise ValueError("twin trees must carry the same symbols")
        check_left_strict(self.left)
        sylvester.check_right_strict(self.right)
        if not complementary(canopy(self.left), canopy(self.right)):
            raise ValueError("twin canopies must be complementary")

    def key(self) -> str:
        return f"{serialize(self.left)}|{serialize(self.right)}"

    def __eq__(self, other) -> bool:
        return isinstance(other, TwinPair) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def draw(self) -> str:
        return (
            "left strict:\n"
            + sylvester.draw(self.left)
            + "\nright strict:\n"
            + sylvester.draw(self.right)
        )


def twin_pair(word: Word) -> TwinPair:
    return TwinPair(left_bst(word), sylvester.right_bst(word))


def word_key(word: Word) -> str:
    return f"{serialize(left_bst(word))}|{serialize(sylvester.right_bst(word))}"


def readings(pair: TwinPair, limit: int | None = None) -> set[Word]:
    """Every word inserting to ``pair``, by exhaustive root/leaf extraction.

    Repeatedly pick a symbol that labels both a root of the left forest and a
    leaf of the right tree, output it and delete both occurrences; exploring
    all picks yields every reading.
    """
    bound = DEFAULT_MAX_CLASS if limit is None else limit
    size = len(nodes(pair.left))
    if size > bound:
        raise LimitExceededError(f"pair has {size} nodes, readings limit is {bound}")
    if pair.left is None:
        return {()}

    def forest_key(forest: tuple[Node, ...]) -> str:
        return ";".join(serialize(t) for t in forest)

    memo: dict[tuple[str, str], frozenset[Word]] = {}

    def rec(forest: tuple[Node, ...], right: Node | None) -> frozenset[Word]:
        if not forest:
            assert right is None
            return frozenset({()})
        state = (forest_key(forest), serialize(right))
        hit = memo.get(state)
        if hit is not None:
            return hit
        out: set[Word] = set()
        leaf_labels = {}
        for parent, attr, leaf in _leaves(right):
            leaf_labels.setdefault(leaf.label, []).append((parent, attr, leaf))
        for i, tree in enumerate(forest):
            picks = leaf_labels.get(tree.label)
            if not picks:
                continue
            new_forest = (
                forest[:i]
                + tuple(t for t in (tree.left, tree.right) if t is not None)
                + forest[i + 1 :]
            )
            for parent, attr, leaf in picks:
                new_right = _without_leaf(right, leaf)
                for rest in rec(new_forest, new_right):
                    out.add((tree.label,) + rest)
        result = frozenset(out)
        memo[state] = result
        return result

    return set(rec((pair.left,), pair.right))


def _leaves(root: Node | None):
    """(parent, side, leaf) triples; parent None for a leaf root."""
    out = []

    def rec(node: Node | None, parent: Node | None, attr: str | None) -> None:
        if node is None:
            return
        if node.left is None and node.right is None:
            out.append((parent, attr, node))
            return
        rec(node.left, node, "left")
        rec(node.right, node, "right")

    rec(root, None, None)
    return out


def _without_leaf(root: Node | None, leaf: Node) -> Node | None:
    def rec(node: Node | None) -> Node | None:
        if node is None:
            return None
        if node is leaf:
            return None
        return Node(node.label, node.mult, rec(node.left), rec(node.right))

    return rec(root)


def conjugacy_witness(p: Word, q: Word) -> tuple[Word, Word]:
    """Two-sided intertwiners g = pq and h = qp for equal-evaluation words."""
    if sorted(p) != sorted(q):
        raise ValueError("conjugacy witnesses require equal evaluations")
    g = p + q
    h = q + p
    if word_key(p + g) != word_key(g + q):
        raise AssertionError("left witness fails")
    if word_key(h + p) != word_key(q + h):
        raise AssertionError("right witness fails")
    return g, h


def symbols_of(word: Word) -> list[int]:
    """Symbols stored in the left tree of ``word``."""
    return labels(left_bst(word))
