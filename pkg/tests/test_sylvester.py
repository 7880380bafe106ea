import pytest

from cycshift.rewrite import presentation
from cycshift.sylvester import (
    Node,
    check_right_strict,
    classify_nodes,
    insert,
    key,
    readings,
    right_bst,
    shift_path,
    traversal_plan,
    word_key,
)
from cycshift.trees import serialize
from cycshift.words import LimitExceededError, parse_word, words_with_evaluation

BSTEG = parse_word("5451761524")


def test_insert_examples():
    assert key(insert(None, 3)) == "3(-)(-)"
    assert word_key((1, 2)) == "2(1(-)(-))(-)"


def test_worked_tree_and_second_reading():
    t = right_bst(BSTEG)
    assert key(t) == "4(2(1(1(-)(-))(-))(4(-)(-)))(5(5(5(-)(-))(-))(6(-)(7(-)(-))))"
    assert word_key(parse_word("1571456254")) == key(t)


def test_row_and_column_words():
    assert word_key((1, 2, 3)) == "3(2(1(-)(-))(-))(-)"
    assert word_key((3, 2, 1)) == "1(-)(2(-)(3(-)(-)))"


def test_readings():
    assert readings(right_bst((3,))) == {(3,)}
    assert readings(right_bst((1, 2))) == {(1, 2)}
    rds = readings(right_bst(BSTEG))
    assert BSTEG in rds
    assert parse_word("1571456254") in rds
    assert all(word_key(w) == word_key(BSTEG) for w in rds)


def test_readings_match_class_filter():
    for w in words_with_evaluation((2, 2, 1)):
        t = right_bst(w)
        brute = {v for v in words_with_evaluation((2, 2, 1)) if word_key(v) == key(t)}
        assert readings(t) == brute


def test_readings_limit():
    with pytest.raises(LimitExceededError):
        readings(right_bst(tuple([1] * 13)))


def test_validation_catches_bad_trees():
    bad = Node(2, left=Node(3))
    with pytest.raises(ValueError):
        check_right_strict(bad)
    # equal label with a right subtree below the uppermost occurrence
    bad2 = Node(5, left=Node(5, left=None, right=Node(6)))
    with pytest.raises(ValueError):
        check_right_strict(bad2)


def test_classification_worked_example():
    # the repeated-5 tree: two primary, one secondary, three tertiary
    t = Node(
        5,
        left=Node(
            5,
            left=Node(
                2,
                left=Node(1),
                right=Node(
                    5,
                    left=Node(
                        4,
                        left=Node(3),
                        right=Node(5, left=Node(5, left=Node(5))),
                    ),
                ),
            ),
        ),
        right=Node(8),
    )
    check_right_strict(t)
    primary, secondary, tertiary = classify_nodes(t, 5)
    assert (len(primary), len(secondary), len(tertiary)) == (2, 1, 3)


def test_classification_simple_cases():
    assert [len(p) for p in classify_nodes(right_bst((1, 2, 3)), 2)] == [1, 0, 0]
    chain = right_bst((4, 4, 4))
    primary, secondary, tertiary = classify_nodes(chain, 4)
    assert (len(primary), len(secondary), len(tertiary)) == (3, 0, 0)


def test_traversal_plan_reference_tree():
    # the walk-definitions tree: visiting the topmost 6 sees bounds 1 and 8,
    # minimum 2, and pads the core with the three outside occurrences of 8
    t = Node(
        1,
        right=Node(
            8,
            left=Node(
                6,
                left=Node(
                    3,
                    left=Node(2, left=Node(2, left=Node(2)), right=Node(3)),
                    right=Node(6, left=Node(4)),
                ),
                right=Node(8, left=Node(7, right=Node(8, left=Node(8)))),
            ),
        ),
    )
    check_right_strict(t)
    plan = traversal_plan(t)
    step = next(s for s in plan if s.label == 6)
    assert step.lower == 1 and step.upper == 8 and step.min_sym == 2
    assert step.anchor_extra == 3
    assert serialize(step.core) == "6(3(2(-)(3(-)(-)))(6(4(-)(-))(-)))(8(7(-)(-))(-))"


def test_traversal_plan_chain_trees():
    plan = traversal_plan(right_bst((1, 2, 3, 4)))
    first = plan[0]
    assert first.label == 1 and first.lower is None and first.upper == 2
    only = traversal_plan(right_bst((7,)))[0]
    assert only.lower is None and only.upper is None
    assert serialize(only.anchor) == "7(-)(-)"


def test_shift_path_worked_example():
    t = right_bst(parse_word("13254"))
    u = right_bst(parse_word("23541"))
    path = shift_path(t, u)
    expected = ["13254", "54132", "12543", "41235", "12354", "23541"]
    assert [key(el) for el in path.elements] == [word_key(parse_word(w)) for w in expected]
    assert path.steps == 5
    for (uv, vu), (a, b) in zip(path.step_words(), zip(path.elements, path.elements[1:])):
        assert word_key(uv) == key(a) and word_key(vu) == key(b)


def test_shift_path_trivial_and_errors():
    single = right_bst((2,))
    path = shift_path(single, right_bst((2,)))
    assert path.steps == 0 and key(path.elements[0]) == "2(-)(-)"
    with pytest.raises(ValueError):
        shift_path(right_bst((1, 2)), right_bst((2, 2)))


@pytest.mark.parametrize(
    "ev", [(1, 1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1, 1), (1, 3, 1, 2)]
)
def test_shift_paths_exhaustive(ev):
    reps = {}
    for w in words_with_evaluation(ev):
        reps.setdefault(word_key(w), w)
    trees = [right_bst(w) for w in reps.values()]
    bound = sum(1 for c in ev if c)
    for t in trees:
        for u in trees:
            path = shift_path(t, u)
            assert path.steps <= bound
            assert key(path.elements[0]) == key(t)
            assert key(path.elements[-1]) == key(u)


def test_repeated_label_structure_on_generated_trees():
    from cycshift.trees import nodes_with_label, parent_map

    for w in words_with_evaluation((2, 2, 2)):
        t = right_bst(w)
        check_right_strict(t)
        parents = parent_map(t)
        for lbl in set(w):
            chain = nodes_with_label(t, lbl)
            # single descending path: each occurrence is an ancestor of the next
            for a, b in zip(chain, chain[1:]):
                node = parents.get(id(b))
                while node is not None and node is not a:
                    node = parents.get(id(node))
                assert node is a
            # a non-uppermost occurrence that is a left child hangs off an equal label
            for nd in chain[1:]:
                par = parents[id(nd)]
                if par.left is nd:
                    assert par.label == lbl


def test_agreement_with_presentation():
    sylv = presentation("sylv")
    for w in words_with_evaluation((2, 1, 2)):
        assert set(readings(right_bst(w))) == set(sylv.close(w).members)
