"""Right strict binary search trees (the sylvester monoid) and the
single-shift-per-symbol path construction on their cyclic shift graph.

A right strict BST has each node >= its left subtree and < its right subtree,
so equal labels stack on one descending path and only the uppermost of them
can own a right subtree.  Words insert right to left by leaf insertion.

The path construction walks the target tree in left-to-right postfix order
restricted to uppermost label occurrences; the shift done for each visited
symbol is a rotation of an explicitly factorized reading of the current tree.
Every factorization and every intermediate invariant is checked at runtime:
a violation raises AssertionError and means a bug, never a silent fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import ShiftPath, compress_path
from .trees import (
    Node,
    clone,
    labels,
    leftmost,
    nodes,
    nodes_with_label,
    parent_map,
    postfix,
    postfix_reading,
    rightmost,
    search_topmost,
    serialize,
    subtree_ids,
)
from .words import DEFAULT_MAX_CLASS, LimitExceededError, Word


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(f"sylvester path internals: {msg}")


# ---------------------------------------------------------------------------
# insertion


def insert(root: Node | None, a: int) -> Node:
    """Leaf-insert ``a``: go left when a <= label, right otherwise.

    Returns a new tree; ``root`` is not modified.
    """
    fresh = clone(root)
    return _insert_mut(fresh, a)


def _insert_mut(root: Node | None, a: int) -> Node:
    new = Node(a)
    if root is None:
        return new
    node = root
    while True:
        if a <= node.label:
            if node.left is None:
                node.left = new
                return root
            node = node.left
        else:
            if node.right is None:
                node.right = new
                return root
            node = node.right


def right_bst(word: Word) -> Node | None:
    """Insert the symbols of ``word`` right to left into the empty tree."""
    root: Node | None = None
    for a in reversed(word):
        root = _insert_mut(root, a)
    return root


def word_key(word: Word) -> str:
    return serialize(right_bst(word))


def key(root: Node | None) -> str:
    return serialize(root)


def check_right_strict(root: Node | None) -> None:
    """Validate the BST ordering and the repeated-label structure."""
    stack: list[tuple[Node | None, int | None, int | None]] = [(root, None, None)]
    while stack:
        node, lo, hi = stack.pop()
        if node is None:
            continue
        if lo is not None and node.label <= lo:
            raise ValueError("right subtree must be strictly greater than its ancestor")
        if hi is not None and node.label > hi:
            raise ValueError("left subtree must be <= its ancestor")
        stack.append((node.left, lo, node.label))
        stack.append((node.right, node.label, hi))
    # only the uppermost occurrence of a label may have a right subtree
    for lbl in set(labels(root)):
        chain = nodes_with_label(root, lbl)
        for nd in chain[1:]:
            if nd.right is not None:
                raise ValueError(f"non-uppermost node {lbl} has a right subtree")


def draw(root: Node | None, with_mult: bool = False) -> str:
    """Indented sideways rendering (right subtree above, left below)."""
    lines: list[str] = []

    def rec(node: Node | None, depth: int) -> None:
        if node is None:
            return
        rec(node.right, depth + 1)
        head = f"{node.label}^{node.mult}" if with_mult else str(node.label)
        lines.append("    " * depth + head)
        rec(node.left, depth + 1)

    rec(root, 0)
    return "\n".join(lines) or "(empty)"


# ---------------------------------------------------------------------------
# readings


def _shuffles(u: Word, v: Word) -> set[Word]:
    if not u:
        return {v}
    if not v:
        return {u}
    out: set[Word] = set()
    for rest in _shuffles(u[1:], v):
        out.add((u[0],) + rest)
    for rest in _shuffles(u, v[1:]):
        out.add((v[0],) + rest)
    return out


def readings(root: Node | None, limit: int | None = None) -> set[Word]:
    """All words inserting to ``root``: shuffles of subtree readings, root last."""
    bound = DEFAULT_MAX_CLASS if limit is None else limit
    size = len(nodes(root))
    if size > bound:
        raise LimitExceededError(f"tree has {size} nodes, readings limit is {bound}")

    def rec(node: Node | None) -> set[Word]:
        if node is None:
            return {()}
        out: set[Word] = set()
        for u in rec(node.left):
            for v in rec(node.right):
                for w in _shuffles(u, v):
                    out.add(w + (node.label,))
        return out

    return rec(root)


# ---------------------------------------------------------------------------
# repeated-label classification


def classify_nodes(root: Node | None, label: int) -> tuple[list[Node], list[Node], list[Node]]:
    """Split the nodes carrying ``label`` into (primary, secondary, tertiary).

    Primary: the uppermost occurrence and the run of occurrences consecutive
    with it.  Tertiary: a childless bottom occurrence together with the run
    consecutive with it, when not already primary.  Secondary: the rest.
    """
    chain = nodes_with_label(root, label)
    if not chain:
        raise ValueError(f"symbol {label} does not occur in the tree")
    parents = parent_map(root)
    primary = [chain[0]]
    for nd in chain[1:]:
        if parents.get(id(nd)) is primary[-1]:
            primary.append(nd)
        else:
            break
    primary_ids = {id(x) for x in primary}
    tertiary: list[Node] = []
    bottom = chain[-1]
    if bottom.left is None and bottom.right is None:
        run = [bottom]
        i = len(chain) - 2
        while i >= 0 and parents.get(id(run[-1])) is chain[i]:
            run.append(chain[i])
            i -= 1
        tertiary = [nd for nd in run if id(nd) not in primary_ids]
    tert_ids = {id(x) for x in tertiary}
    secondary = [nd for nd in chain if id(nd) not in primary_ids and id(nd) not in tert_ids]
    return primary, secondary, tertiary


# ---------------------------------------------------------------------------
# traversal plan


@dataclass
class PlanStep:
    """Data attached to one visit of the topmost-occurrence postfix walk.

    ``block`` is the complete subtree at the visited node; ``single_min``
    drops all duplicated minima; ``core`` additionally drops the tertiary
    occurrences of ``upper``; ``anchor`` re-inserts the occurrences of
    ``upper`` that live outside the core, and must appear at the root of the
    walk tree after this step's shift.
    """

    index: int
    label: int
    min_sym: int
    lower: int | None
    upper: int | None
    block: Node
    single_min: Node
    core: Node
    anchor: Node
    anchor_core_ids: frozenset[int]
    anchor_extra: int


def _clone_with_map(node: Node | None) -> tuple[Node | None, dict[int, Node]]:
    mapping: dict[int, Node] = {}

    def rec(x: Node | None) -> Node | None:
        if x is None:
            return None
        c = Node(x.label, x.mult)
        mapping[id(x)] = c
        c.left = rec(x.left)
        c.right = rec(x.right)
        return c

    return rec(node), mapping


def traversal_plan(u_root: Node) -> list[PlanStep]:
    """Plan the topmost-occurrence postfix walk of ``u_root``; one step per symbol."""
    _require(u_root is not None, "plan needs a non-empty tree")
    parents = parent_map(u_root)
    count: dict[int, int] = {}
    for lbl in labels(u_root):
        count[lbl] = count.get(lbl, 0) + 1
    topmost = {lbl: search_topmost(u_root, lbl) for lbl in count}
    order = [x for x in postfix(u_root) if topmost[x.label] is x]
    _require(len(order) == len(count), "one walk step per distinct symbol")

    steps: list[PlanStep] = []
    for idx, visited in enumerate(order, start=1):
        sub = nodes(visited)
        m = min(x.label for x in sub)
        upper = lower = None
        child = visited
        par = parents.get(id(child))
        while par is not None and (upper is None or lower is None):
            if par.left is child and upper is None:
                upper = par.label
            if par.right is child and lower is None:
                lower = par.label
            child, par = par, parents.get(id(par))
        _require(lower is None or lower < m, "lower bound below the block minimum")
        _require(upper is None or visited.label < upper, "upper bound above the visited symbol")

        block, bmap = _clone_with_map(visited)
        # single_min: drop every occurrence of the minimum except the uppermost
        single = block
        mchain = nodes_with_label(single, m)
        if len(mchain) > 1:
            kept = mchain[0]
            _require(
                all(x.label == m for x in postfix(kept.left)),
                "duplicated minima form a pure chain",
            )
            kept.left = None
        core, cmap = _clone_with_map(single)
        if upper is not None and count.get(upper):
            tert = classify_nodes(u_root, upper)[2]
            sub_ids = {id(x) for x in sub}
            inside = [bmap[id(x)] for x in tert if id(x) in sub_ids]
            # the tertiary run survives the minimum pruning verbatim
            inside_core = [cmap[id(x)] for x in inside if id(x) in cmap]
            _require(len(inside_core) == len(inside), "tertiary run untouched by min pruning")
            if inside_core:
                run_ids = {id(x) for x in inside_core}
                cparents = parent_map(core)
                tops = [
                    x for x in inside_core
                    if id(cparents.get(id(x), core)) not in run_ids
                ]
                _require(len(tops) == 1, "tertiary occurrences form one run")
                top = tops[0]
                par = cparents.get(id(top))
                _require(par is not None, "tertiary run never contains the block root")
                if par.left is top:
                    par.left = None
                else:
                    par.right = None
        anchor, amap = _clone_with_map(core)
        core_ids = frozenset(id(x) for x in postfix(anchor))
        extra = 0
        if upper is not None and any(x.label == upper for x in postfix(core)):
            extra = count[upper] - sum(1 for x in postfix(core) if x.label == upper)
            _require(extra >= 1, "at least the uppermost occurrence lies outside the core")
            for _ in range(extra):
                anchor = _insert_mut(anchor, upper)
        steps.append(
            PlanStep(
                index=idx,
                label=visited.label,
                min_sym=m,
                lower=lower,
                upper=upper,
                block=block,
                single_min=single,
                core=core,
                anchor=anchor,
                anchor_core_ids=core_ids,
                anchor_extra=extra,
            )
        )
    return steps


# ---------------------------------------------------------------------------
# embedding and invariant checks


def _embed_at(pattern: Node, target: Node):
    """Exact structural match of ``pattern`` at ``target``.

    Extra target subtrees are tolerated only below the left child of the
    pattern's leftmost node and the right child of its rightmost node.
    Returns (mapping id(pattern node) -> target node, left attach, right
    attach), or None when the match fails.
    """
    p_lm = leftmost(pattern)
    p_rm = rightmost(pattern)
    mapping: dict[int, Node] = {}

    def walk(p: Node, t: Node) -> bool:
        if p.label != t.label or p.mult != t.mult:
            return False
        mapping[id(p)] = t
        if p.left is not None:
            if t.left is None or not walk(p.left, t.left):
                return False
        elif t.left is not None and p is not p_lm:
            return False
        if p.right is not None:
            if t.right is None or not walk(p.right, t.right):
                return False
        elif t.right is not None and p is not p_rm:
            return False
        return True

    if not walk(pattern, target):
        return None
    return mapping, mapping[id(p_lm)].left, mapping[id(p_rm)].right


def check_spine_invariants(t_root: Node, plan: list[PlanStep], upset: list[int]) -> None:
    """Assert the walk-tree invariants for the given set of pending steps.

    The anchors of ``upset`` (indices, increasing) appear in reverse order
    down the path of left children from the root, anything below an anchor
    hangs off its two extremal attachment points, and no minimum of a pending
    step sits below a node carrying that step's lower bound.
    """
    pos: Node | None = t_root
    for idx in reversed(upset):
        step = plan[idx - 1]
        found = None
        while pos is not None:
            found = _embed_at(step.anchor, pos)
            if found is not None:
                break
            pos = pos.left
        _require(found is not None, f"anchor of step {idx} missing from the left spine")
        pos = found[1]
    for idx in upset:
        step = plan[idx - 1]
        if step.lower is None:
            continue
        for nd in postfix(t_root):
            if nd.label == step.lower:
                bad = any(
                    x.label == step.min_sym for x in postfix(nd) if x is not nd
                )
                _require(not bad, f"minimum {step.min_sym} below lower bound {step.lower}")


def _upset(order_below: list[set[int]], h: int) -> list[int]:
    """Indices i <= h whose visited node is not below a later visited node."""
    return [i for i in range(1, h + 1) if not (order_below[i - 1] & set(range(i + 1, h + 1)))]


# ---------------------------------------------------------------------------
# the path construction


def _has_ancestor(parents: dict[int, Node], node: Node, lbl: int) -> bool:
    par = parents.get(id(node))
    while par is not None:
        if par.label == lbl:
            return True
        par = parents.get(id(par))
    return False


def _between_on_path(u_parents: dict[int, Node], low_node: Node, high_node: Node) -> list[Node]:
    """Nodes strictly between ``low_node`` and its ancestor ``high_node``."""
    out: list[Node] = []
    par = u_parents.get(id(low_node))
    while par is not None and par is not high_node:
        out.append(par)
        par = u_parents.get(id(par))
    _require(par is high_node, "expected an ancestor path")
    return out


def _chain_down(start: Node | None) -> list[Node]:
    """Follow a pure left chain, asserting empty right subtrees throughout."""
    out = []
    node = start
    while node is not None:
        _require(node.right is None, "expected a bare chain (no right subtrees)")
        out.append(node)
        node = node.left
    return out


class _PathBuilder:
    def __init__(self, t_root: Node, u_root: Node):
        self.u_root = u_root
        self.plan = traversal_plan(u_root)
        self.n = len(self.plan)
        self.u_parents = parent_map(u_root)
        self.count: dict[int, int] = {}
        for lbl in labels(u_root):
            self.count[lbl] = self.count.get(lbl, 0) + 1
        self.topmost = {lbl: search_topmost(u_root, lbl) for lbl in self.count}
        # which earlier visits are below which later ones, for the pending set
        order = [self.topmost[s.label] for s in self.plan]
        anc_sets: list[set[int]] = []
        pos_of = {id(nd): i + 1 for i, nd in enumerate(order)}
        for nd in order:
            anc: set[int] = set()
            par = self.u_parents.get(id(nd))
            while par is not None:
                if id(par) in pos_of:
                    anc.add(pos_of[id(par)])
                par = self.u_parents.get(id(par))
            anc_sets.append(anc)
        self.order_below = anc_sets
        self.primary_count = {
            lbl: len(classify_nodes(u_root, lbl)[0]) for lbl in self.count
        }
        self.trees: list[Node] = [clone(t_root)]
        self.moves: list[tuple[Word, int]] = []

    # -- helpers on the current tree ------------------------------------

    def _emit(self, moved: list[int], rest: list[int]) -> None:
        t_cur = self.trees[-1]
        w1 = tuple(moved) + tuple(rest)
        _require(
            serialize(right_bst(w1)) == serialize(t_cur),
            "factorized reading does not represent the current tree",
        )
        w2 = tuple(rest) + tuple(moved)
        self.moves.append((w1, len(moved)))
        self.trees.append(right_bst(w2))

    def _secondary_between(self, h: int) -> int:
        """Occurrences of step h's upper bound between visits h and h+1 in U."""
        cur, nxt = self.plan[h - 1], self.plan[h]
        between = _between_on_path(
            self.u_parents, self.topmost[cur.label], self.topmost[nxt.label]
        )
        for nd in between:
            _require(nd.label == cur.upper, "only upper-bound symbols separate the visits")
        return len(between)

    # -- base step -------------------------------------------------------

    def base_step(self) -> None:
        t_cur = self.trees[-1]
        step = self.plan[0]
        u1 = step.label
        parents = parent_map(t_cur)
        below = (
            step.lower is not None
            and any(
                _has_ancestor(parents, nd, step.lower)
                for nd in nodes_with_label(t_cur, u1)
            )
        )
        if below:
            p_node = search_topmost(t_cur, step.lower)
            y = next(
                nd
                for nd in nodes_with_label(t_cur, u1)
                if _has_ancestor(parents, nd, step.lower)
            )
            _require(
                p_node is not None and p_node.right is not None
                and id(y) in subtree_ids(p_node.right),
                "distinguished node sits in the right subtree of the bound",
            )
            zeta = subtree_ids(t_cur) - subtree_ids(p_node)
            alpha = subtree_ids(p_node.left)
            delta = subtree_ids(p_node.right) - subtree_ids(y)
            beta = subtree_ids(y.left)
            gamma = subtree_ids(y.right)
            moved = self._reads(beta, gamma) + [u1]
            rest = self._reads(delta, alpha) + [step.lower] + self._reads(zeta)
        else:
            y = search_topmost(t_cur, u1)
            _require(y is not None, "target symbol occurs in the start tree")
            zeta = subtree_ids(t_cur) - subtree_ids(y)
            beta = subtree_ids(y.left)
            gamma = subtree_ids(y.right)
            moved = self._reads(beta, gamma) + [u1]
            rest = self._reads(zeta)
        self._emit(moved, rest)

    def _reads(self, *idsets: set[int]) -> list[int]:
        t_cur = self.trees[-1]
        out: list[int] = []
        for ids in idsets:
            out.extend(postfix_reading(t_cur, ids))
        return out

    # -- induction cases ---------------------------------------------------

    def step(self, h: int) -> None:
        cur, nxt = self.plan[h - 1], self.plan[h]
        n_h = self.topmost[cur.label]
        n_next = self.topmost[nxt.label]
        side = self._subtree_side(n_next, n_h)
        if side == "left":
            self._case2(h)
        elif side == "right":
            left_top = any(
                self.topmost[x.label] is x for x in postfix(n_next.left)
            )
            if left_top:
                self._case4(h)
            else:
                self._case3(h)
        else:
            self._case1(h)
        upset = _upset(self.order_below, h + 1)
        check_spine_invariants(self.trees[-1], self.plan, upset)

    def _subtree_side(self, anc: Node, nd: Node) -> str | None:
        chain = _between_on_path(self.u_parents, nd, anc) if self._is_ancestor(anc, nd) else None
        if chain is None:
            return None
        top_child = chain[-1] if chain else nd
        return "left" if anc.left is top_child else "right"

    def _is_ancestor(self, anc: Node, nd: Node) -> bool:
        par = self.u_parents.get(id(nd))
        while par is not None:
            if par is anc:
                return True
            par = self.u_parents.get(id(par))
        return False

    def _anchor_parts(self, step: PlanStep):
        """Embed the step's anchor at the current root; split core vs inserted."""
        t_cur = self.trees[-1]
        found = _embed_at(step.anchor, t_cur)
        _require(found is not None, f"anchor of step {step.index} absent at the root")
        mapping, lm, rm = found
        all_ids = {id(v) for v in mapping.values()}
        core_ids = {id(mapping[i]) for i in step.anchor_core_ids}
        return mapping, lm, rm, all_ids, core_ids

    def _case1(self, h: int) -> None:
        cur, nxt = self.plan[h - 1], self.plan[h]
        u1 = nxt.label
        _require(len(nodes(nxt.anchor)) == 1, "fresh visit carries a single-node anchor")
        t_cur = self.trees[-1]
        _, lm, rm, anchor_ids, _ = self._anchor_parts(cur)
        lam = subtree_ids(lm)
        parents = parent_map(t_cur)
        below = (
            nxt.lower is not None
            and any(
                _has_ancestor(parents, nd, nxt.lower)
                for nd in nodes_with_label(t_cur, u1)
            )
        )
        # the pull-to-front surgery needs every next-lower occurrence outside
        # the anchor; that fails only when the bounds collide and the anchor
        # absorbed those occurrences
        if below and (cur.upper != nxt.lower or cur.anchor_extra == 0):
            p_node = search_topmost(t_cur, nxt.lower)
            _require(id(p_node) in subtree_ids(rm), "bound lives right of the anchor")
            y = next(
                nd
                for nd in nodes_with_label(t_cur, u1)
                if _has_ancestor(parents, nd, nxt.lower)
            )
            _require(id(y) in subtree_ids(p_node.right), "distinguished node right of the bound")
            zeta = subtree_ids(rm) - subtree_ids(p_node)
            alpha = subtree_ids(p_node.left)
            delta = subtree_ids(p_node.right) - subtree_ids(y)
            beta = subtree_ids(y.left)
            gamma = subtree_ids(y.right)
            moved = self._reads(beta, gamma) + [u1]
            rest = (
                self._reads(delta, alpha)
                + [nxt.lower]
                + self._reads(zeta, lam, anchor_ids)
            )
        else:
            y = search_topmost(t_cur, u1)
            _require(y is not None and id(y) in subtree_ids(rm), "visit symbol right of anchor")
            zeta = subtree_ids(rm) - subtree_ids(y)
            beta = subtree_ids(y.left)
            gamma = subtree_ids(y.right)
            moved = self._reads(beta, gamma) + [u1]
            rest = self._reads(zeta, lam, anchor_ids)
        self._emit(moved, rest)

    def _case2(self, h: int) -> None:
        cur = self.plan[h - 1]
        u1 = self.plan[h].label
        _require(cur.upper == u1, "upper bound of the old block is the next visit")
        t_cur = self.trees[-1]
        _, lm, rm, anchor_ids, core_ids = self._anchor_parts(cur)
        lam = subtree_ids(lm)
        s2 = self.primary_count[u1]
        if cur.anchor_extra:
            s = cur.anchor_extra
            s1 = s - s2
            _require(s1 >= 0, "primary occurrences fit in the inserted set")
            beta = subtree_ids(rm)
            moved = [u1] * s2
            rest = [u1] * s1 + self._reads(beta, lam, core_ids)
        else:
            y = search_topmost(t_cur, u1)
            _require(y is not None and id(y) in subtree_ids(rm), "visits right of the anchor")
            _require(
                all(x.label == u1 for x in postfix(y.left)),
                "only repeats hang left of the uppermost visit symbol",
            )
            s = len(nodes_with_label(t_cur, u1))
            _require(s == self.count[u1], "all occurrences located")
            s1 = s - s2
            _require(s1 >= 0, "primary occurrences fit")
            delta = subtree_ids(rm) - subtree_ids(y)
            beta = subtree_ids(y.right)
            moved = self._reads(beta) + [u1] * s2
            rest = [u1] * s1 + self._reads(delta, lam, anchor_ids)
        self._emit(moved, rest)

    def _m_chain_pieces(self, lm: Node | None, anchor_ids: set[int], m: int, stop: Node):
        """Left-spine pieces from the anchor attachment down to ``stop``.

        Returns the word fragment lambda_0 m lambda_1 m ... m lambda_r (bottom
        part first) for the duplicated minima outside the anchor.  Minima
        inside the subtree at ``stop`` belong to the caller's own pieces and
        are skipped here.
        """
        t_cur = self.trees[-1]
        stop_ids = subtree_ids(stop)
        ext_all = [nd for nd in nodes_with_label(t_cur, m) if id(nd) not in anchor_ids]
        _require(
            len(ext_all) == self.count[m] - 1, "all duplicated minima sit outside the anchor"
        )
        ext = [nd for nd in ext_all if id(nd) not in stop_ids]
        _require(
            all(id(nd) in stop_ids for nd in ext_all[len(ext):]),
            "skipped minima form the lower end of the chain",
        )
        regions: list[set[int]] = []
        top = subtree_ids(lm)
        if ext:
            _require(id(ext[0]) in top, "duplicated minima hang left of the anchor")
            regions.append(top - subtree_ids(ext[0]))
            for a, b in zip(ext, ext[1:]):
                _require(b is not a and id(b) in subtree_ids(a.left), "minima descend leftwards")
                _require(a.right is None, "duplicated minima have empty right subtrees")
                regions.append(subtree_ids(a.left) - subtree_ids(b))
            _require(ext[-1].right is None, "duplicated minima have empty right subtrees")
            regions.append(subtree_ids(ext[-1].left) - stop_ids)
        else:
            regions.append(top - stop_ids)
        # regions are top..bottom; the word wants bottom..top with m separators
        frag: list[int] = []
        for i, region in enumerate(reversed(regions)):
            if i:
                frag.append(m)
            frag.extend(self._reads(region))
        return frag, len(ext)

    def _external_upper_chain(self, anchor_ids: set[int], upper: int | None):
        """The chain of upper-bound occurrences in the right-maximal subtree.

        Used when the core holds no upper occurrences: returns (top node,
        count, beta ids, delta ids relative to the right attach) for the
        topmost occurrence, or a trivial record when ``upper`` is None.
        """
        t_cur = self.trees[-1]
        if upper is None:
            return None, 0
        qnodes = nodes_with_label(t_cur, upper)
        _require(qnodes != [], "upper bound occurs somewhere")
        _require(
            all(id(q) not in anchor_ids for q in qnodes),
            "upper occurrences sit outside the anchor",
        )
        for a, b in zip(qnodes, qnodes[1:]):
            _require(a.left is b, "upper occurrences form one consecutive chain")
        _require(len(qnodes) == self.count[upper], "all upper occurrences located")
        return qnodes[0], len(qnodes)

    def _case3(self, h: int) -> None:
        cur, nxt = self.plan[h - 1], self.plan[h]
        u1, m = nxt.label, cur.min_sym
        _require(cur.lower == u1, "lower bound of the old block is the next visit")
        t_cur = self.trees[-1]
        _, lm, rm, anchor_ids, core_ids = self._anchor_parts(cur)
        y = nodes_with_label(t_cur, u1)[0]
        _require(y.right is None, "uppermost visit symbol has an empty right subtree")
        parents = parent_map(t_cur)
        below = (
            nxt.lower is not None
            and any(
                _has_ancestor(parents, nd, nxt.lower)
                for nd in nodes_with_label(t_cur, u1)
            )
        )
        if below:
            # an occurrence of the visit symbol sits below its predecessor
            # symbol; pull the uppermost such occurrence to the root so no
            # occurrence re-inserts below a predecessor (all predecessor
            # occurrences are the topmost one plus its left chain)
            p_node = search_topmost(t_cur, nxt.lower)
            y_low = next(
                nd
                for nd in nodes_with_label(t_cur, u1)
                if _has_ancestor(parents, nd, nxt.lower)
            )
            _require(
                p_node.right is not None and id(y_low) in subtree_ids(p_node.right),
                "distinguished occurrence right of the topmost predecessor",
            )
            head = self._reads(subtree_ids(y_low.left), subtree_ids(y_low.right))
            rest_head = self._reads(
                subtree_ids(p_node.right) - subtree_ids(y_low),
                subtree_ids(p_node.left),
            ) + [nxt.lower]
            stop = p_node
        else:
            head = self._reads(subtree_ids(y.left))
            rest_head = []
            stop = y
        frag, _r = self._m_chain_pieces(lm, anchor_ids, m, stop)
        frag = rest_head + frag
        if cur.anchor_extra:
            q = cur.upper
            s = cur.anchor_extra
            s2 = self._secondary_between(h)
            s1 = s - s2
            _require(s1 >= 0, "between-count fits in the inserted set")
            beta = subtree_ids(rm)
            moved = head + [q] * s2 + [u1]
            rest = frag + [q] * s1 + self._reads(beta, core_ids)
        elif cur.upper is not None:
            q_top, sq = self._external_upper_chain(anchor_ids, cur.upper)
            _require(id(q_top) in subtree_ids(rm), "upper chain right of the anchor")
            s2 = self._secondary_between(h)
            s1 = sq - s2
            _require(s1 >= 0, "between-count fits in the external chain")
            beta = subtree_ids(q_top.right)
            delta = subtree_ids(rm) - subtree_ids(q_top)
            if s2 > 0:
                moved = head + self._reads(beta) + [cur.upper] * s2 + [u1]
                rest = frag + [cur.upper] * s1 + self._reads(delta, anchor_ids)
            else:
                # with no occurrences to pull up front, the block around the
                # chain must stay contiguous so it lands right of the new root
                moved = head + [u1]
                rest = frag + self._reads(beta) + [cur.upper] * sq + self._reads(
                    delta, anchor_ids
                )
        else:
            moved = head + [u1]
            rest = frag + self._reads(subtree_ids(rm), anchor_ids)
        self._emit(moved, rest)

    def _case4(self, h: int) -> None:
        cur, nxt = self.plan[h - 1], self.plan[h]
        u1, m = nxt.label, cur.min_sym
        _require(cur.lower == u1, "lower bound of the old block is the next visit")
        upset = _upset(self.order_below, h)
        _require(len(upset) >= 2, "an earlier pending visit exists")
        gstep = self.plan[upset[-2] - 1]
        _require(gstep.upper == u1, "previous pending block is bounded by the next visit")
        t_cur = self.trees[-1]
        _, lm_h, rm_h, anchor_ids_h, core_ids_h = self._anchor_parts(cur)

        # walk the spine below the anchor down to the previous anchor
        spine: list[Node] = []
        pos = lm_h
        found = None
        while pos is not None:
            found = _embed_at(gstep.anchor, pos)
            if found is not None:
                break
            _require(pos.label in (m, u1), "spine carries only minima and next visits")
            _require(pos.right is None, "spine nodes have empty right subtrees")
            spine.append(pos)
            pos = pos.left
        _require(found is not None, "previous anchor found on the spine")
        gmap, lm_g, rm_g = found
        g_all_ids = {id(v) for v in gmap.values()}
        g_core_ids = {id(gmap[i]) for i in gstep.anchor_core_ids}
        lam = subtree_ids(lm_g)

        r2 = sum(1 for nd in spine if nd.label == m)
        o2 = len(spine) - r2
        _require(
            all(nd.label == m for nd in spine[:r2]),
            "minima come before next visits on the spine",
        )
        below = _chain_down(rm_g)
        r1 = sum(1 for nd in below if nd.label == m)
        o1 = len(below) - r1
        _require(
            all(nd.label == m for nd in below[:r1])
            and all(nd.label == u1 for nd in below[r1:]),
            "below the previous anchor: minima, then next visits",
        )
        _require(r1 + r2 == self.count[m] - 1, "all duplicated minima located")

        t2 = self.primary_count[u1]
        eh_ext = cur.anchor_extra > 0
        eg_ext = gstep.anchor_extra > 0
        if eg_ext:
            _require(o1 == 0 and o2 == 0, "next visits all live inside the previous anchor")
            t = gstep.anchor_extra
            _require(len(g_all_ids - g_core_ids) == t, "inserted next visits accounted for")
        else:
            t = o1 + o2
            _require(t == self.count[u1], "all next visits located")
        t1 = t - t2
        _require(t1 >= 0, "primary occurrences fit")

        if eh_ext:
            s = cur.anchor_extra
            s2 = self._secondary_between(h)
            s1 = s - s2
            _require(s1 >= 0, "between-count fits in the inserted set")
            beta = self._reads(subtree_ids(rm_h))
            q = cur.upper
            dh = self._reads(core_ids_h)
            if eg_ext:
                # sub-case (a): both anchors carry inserted upper occurrences
                _require(not below, "nothing hangs below the previous anchor here")
                moved = [q] * s2 + [u1] * t2
                rest = (
                    [u1] * t1
                    + self._reads(lam, g_core_ids)
                    + beta
                    + [m] * (r1 + r2)
                    + [q] * s1
                    + dh
                )
            else:
                dg = self._reads(g_core_ids)
                if o2 == 0:
                    moved = [q] * s2 + [u1] * t2
                    rest = (
                        [u1] * t1 + [m] * r1 + self._reads(lam) + dg
                        + [m] * r2 + beta + [q] * s1 + dh
                    )
                elif o2 >= t2:
                    _require(r1 == 0, "minima sit above once next visits reach the spine")
                    moved = [q] * s2 + [u1] * o1 + self._reads(lam) + dg + [u1] * t2
                    rest = [u1] * (o2 - t2) + [m] * r2 + beta + [q] * s1 + dh
                else:
                    _require(r1 == 0, "minima sit above once next visits reach the spine")
                    moved = [q] * s2 + [u1] * (t2 - o2)
                    rest = (
                        [u1] * (o1 + o2 - t2) + self._reads(lam) + dg + [u1] * o2
                        + [m] * r2 + beta + [q] * s1 + dh
                    )
        else:
            q = cur.upper
            q_top, sq = self._external_upper_chain(anchor_ids_h, q)
            if q_top is not None:
                _require(id(q_top) in subtree_ids(rm_h), "upper chain right of the anchor")
                beta = self._reads(subtree_ids(q_top.right))
                delta = self._reads(subtree_ids(rm_h) - subtree_ids(q_top))
            else:
                beta = []
                delta = self._reads(subtree_ids(rm_h))
            s2 = self._secondary_between(h) if q is not None else 0
            s1 = sq - s2
            _require(s1 >= 0, "between-count fits in the external chain")
            dh = self._reads(anchor_ids_h)
            if eg_ext:
                # sub-case (c)
                _require(not below, "nothing hangs below the previous anchor here")
                rr = r1 + r2
                dg = self._reads(lam, g_core_ids)
                u_inside = len(g_all_ids - g_core_ids)
                _require(u_inside == gstep.anchor_extra, "inserted next visits accounted for")
                tt = gstep.anchor_extra
                tt1 = tt - t2
                _require(tt1 >= 0, "primary occurrences fit")
                if s2 > 0:
                    moved = beta + [q] * s2 + [u1] * t2
                    rest = [u1] * tt1 + dg + [m] * rr + [q] * s1 + delta + dh
                else:
                    moved = [u1] * t2
                    rest = [u1] * tt1 + dg + [m] * rr + beta + [q] * sq + delta + dh
            else:
                dg = self._reads(g_core_ids)
                lamr = self._reads(lam)
                if s2 > 0:
                    if o2 == 0:
                        moved = beta + [q] * s2 + [u1] * t2
                        rest = (
                            [u1] * t1 + [m] * r1 + lamr + dg + [m] * r2
                            + [q] * s1 + delta + dh
                        )
                    elif o2 >= t2:
                        _require(r1 == 0, "minima sit above once next visits reach the spine")
                        moved = beta + [q] * s2 + [u1] * o1 + lamr + dg + [u1] * t2
                        rest = [u1] * (o2 - t2) + [m] * r2 + [q] * s1 + delta + dh
                    else:
                        _require(r1 == 0, "minima sit above once next visits reach the spine")
                        moved = beta + [q] * s2 + [u1] * (t2 - o2)
                        rest = (
                            [u1] * (o1 + o2 - t2) + lamr + dg + [u1] * o2 + [m] * r2
                            + [q] * s1 + delta + dh
                        )
                else:
                    if o2 == 0:
                        moved = [u1] * t2
                        rest = (
                            [u1] * t1 + [m] * r1 + lamr + dg + [m] * r2
                            + beta + [q] * sq + delta + dh
                        )
                    elif o2 >= t2:
                        _require(r1 == 0, "minima sit above once next visits reach the spine")
                        moved = [u1] * o1 + lamr + dg + [u1] * t2
                        rest = [u1] * (o2 - t2) + [m] * r2 + beta + [q] * sq + delta + dh
                    else:
                        _require(r1 == 0, "minima sit above once next visits reach the spine")
                        moved = [u1] * (t2 - o2)
                        rest = (
                            [u1] * (o1 + o2 - t2) + lamr + dg + [u1] * o2 + [m] * r2
                            + beta + [q] * sq + delta + dh
                        )
        self._emit(moved, rest)

    def run(self) -> tuple[list[Node], list[tuple[Word, int]]]:
        self.base_step()
        check_spine_invariants(self.trees[-1], self.plan, _upset(self.order_below, 1))
        for h in range(1, self.n):
            self.step(h)
        _require(
            serialize(self.trees[-1]) == serialize(self.u_root),
            "path construction must end at the target tree",
        )
        return self.trees, self.moves


def _relabel(root: Node | None, mapping: dict[int, int]) -> Node | None:
    if root is None:
        return None
    return Node(
        mapping[root.label], root.mult, _relabel(root.left, mapping), _relabel(root.right, mapping)
    )


def shift_path(t: Node | None, u: Node | None) -> ShiftPath:
    """Path of at most n cyclic shifts from ``t`` to ``u`` (n = distinct symbols).

    Requires equal evaluations; symbols are relabelled onto 1..n internally.
    """
    t_labels, u_labels = sorted(labels(t)), sorted(labels(u))
    if t_labels != u_labels:
        raise ValueError("shift path requires equal evaluations")
    if not t_labels:
        return ShiftPath((None,), ())
    if serialize(t) == serialize(u):
        return ShiftPath((clone(t),), ())
    support = sorted(set(t_labels))
    down = {a: i + 1 for i, a in enumerate(support)}
    up = {i + 1: a for i, a in enumerate(support)}
    builder = _PathBuilder(_relabel(t, down), _relabel(u, down))
    trees, moves = builder.run()
    elements = [_relabel(x, up) for x in trees]
    back_moves = [(tuple(up[a] for a in w), k) for w, k in moves]
    return compress_path(elements, back_moves, key=serialize)


def labels_of(word: Word) -> list[int]:
    """Symbols stored in the tree of ``word`` (sanity hook for invariant tests)."""
    return labels(right_bst(word))
