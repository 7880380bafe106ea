import pytest

from cycshift.rewrite import presentation
from cycshift.sylvester import key as sylv_key
from cycshift.taiga import (
    check_mult_bst,
    drop_multiplicities,
    insert,
    key,
    mult_bst,
    shift_path,
    word_key,
)
from cycshift.trees import Node
from cycshift.words import parse_word, words_with_evaluation


def test_insert_examples():
    assert key(insert(None, 3)) == "3^1(-)(-)"
    assert key(mult_bst((4, 4))) == "4^2(-)(-)"


def test_worked_tree():
    t = mult_bst(parse_word("135671456254"))
    assert key(t) == "4^2(2^1(1^2(-)(-))(3^1(-)(-)))(5^3(-)(6^2(-)(7^1(-)(-))))"


def test_drop_multiplicities():
    assert sylv_key(drop_multiplicities(mult_bst((4, 4, 4)))) == "4(-)(-)"
    t = mult_bst(parse_word("135671456254"))
    shape = drop_multiplicities(t)
    assert sylv_key(shape) == "4(2(1(-)(-))(3(-)(-)))(5(-)(6(-)(7(-)(-))))"


def test_validation():
    with pytest.raises(ValueError):
        check_mult_bst(Node(2, mult=0))
    with pytest.raises(ValueError):
        check_mult_bst(Node(2, left=Node(2)))


def test_equality_criterion():
    # equal element <=> equal stripped shape and equal evaluation
    for ev in [(2, 1, 1), (2, 2), (1, 2, 1)]:
        words = list(words_with_evaluation(ev))
        for u in words:
            for v in words:
                same = word_key(u) == word_key(v)
                criterion = sylv_key(drop_multiplicities(mult_bst(u))) == sylv_key(
                    drop_multiplicities(mult_bst(v))
                )
                assert same == criterion


def test_agreement_with_presentation():
    taig = presentation("taig")
    for w in words_with_evaluation((2, 1, 2)):
        cls = {v for v in words_with_evaluation((2, 1, 2)) if word_key(v) == word_key(w)}
        assert cls == set(taig.close(w).members)


def test_shift_path_trivial():
    t = mult_bst((1, 2, 2))
    path = shift_path(t, mult_bst((1, 2, 2)))
    assert path.steps == 0


def test_shift_path_requires_equal_evaluation():
    with pytest.raises(ValueError):
        shift_path(mult_bst((1, 2)), mult_bst((2, 2)))


@pytest.mark.parametrize("ev", [(2, 1), (2, 2, 1), (1, 2, 1, 1), (3, 2)])
def test_shift_paths_exhaustive(ev):
    reps = {}
    for w in words_with_evaluation(ev):
        reps.setdefault(word_key(w), w)
    trees = [mult_bst(w) for w in reps.values()]
    bound = sum(1 for c in ev if c)
    for t in trees:
        for u in trees:
            path = shift_path(t, u)
            assert path.steps <= bound
            assert key(path.elements[0]) == key(t)
            assert key(path.elements[-1]) == key(u)
            for (uv, vu), (a, b) in zip(path.step_words(), zip(path.elements, path.elements[1:])):
                assert word_key(uv) == key(a) and word_key(vu) == key(b)
