import pytest

from cycshift.rewrite import presentation
from cycshift.stalactic import (
    StalacticTableau,
    component_key,
    conjugacy_witness,
    height_one_word,
    insert,
    shift_path,
    stalactic_tableau,
    word_key,
)
from cycshift.words import parse_word, words_with_evaluation


def test_worked_tableau():
    t = stalactic_tableau(parse_word("361135112565"))
    assert t.columns == ((3, 2), (1, 4), (2, 1), (6, 2), (5, 3))
    assert word_key(parse_word("361135112565")) == "3^2|1^4|2^1|6^2|5^3"


def test_insert():
    t = stalactic_tableau((2, 3))
    assert insert(t, 1).columns == ((1, 1), (2, 1), (3, 1))
    assert insert(t, 3).columns == ((2, 1), (3, 2))


def test_distinct_word_single_row():
    t = stalactic_tableau((4, 1, 3))
    assert t.columns == ((4, 1), (1, 1), (3, 1))


def test_double_letter():
    assert stalactic_tableau((5, 5)).columns == ((5, 2),)


def test_validation():
    with pytest.raises(ValueError):
        StalacticTableau(((1, 1), (1, 2)))
    with pytest.raises(ValueError):
        StalacticTableau(((1, 0),))


def test_height_one_word():
    assert height_one_word(stalactic_tableau(parse_word("361135112565"))) == (2,)
    assert height_one_word(stalactic_tableau((4, 1, 3))) == (4, 1, 3)
    assert height_one_word(stalactic_tableau(parse_word("1233"))) == (1, 2)


def test_component_key_invariant_under_rotation():
    for w in words_with_evaluation((2, 1, 1)):
        base = component_key(stalactic_tableau(w))
        for k in range(len(w)):
            assert component_key(stalactic_tableau(w[k:] + w[:k])) == base


def test_component_key_separates():
    a = stalactic_tableau(parse_word("123"))
    b = stalactic_tableau(parse_word("213"))
    assert component_key(a) != component_key(b)


def test_shift_path_trivial_and_errors():
    t = stalactic_tableau(parse_word("1233"))
    assert shift_path(t, t).steps == 0
    with pytest.raises(ValueError):
        shift_path(stalactic_tableau(parse_word("123")), stalactic_tableau(parse_word("213")))


def test_rank_two_paths_are_single_shifts():
    for ev in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        reps = {}
        for w in words_with_evaluation(ev):
            reps.setdefault(word_key(w), w)
        tabs = [stalactic_tableau(w) for w in reps.values()]
        for t in tabs:
            for u in tabs:
                if component_key(t) == component_key(u):
                    assert shift_path(t, u).steps <= 1


def test_component_of_1233_paths():
    reps = {}
    for w in words_with_evaluation((1, 1, 2)):
        reps.setdefault(word_key(w), w)
    tabs = [stalactic_tableau(w) for w in reps.values()]
    assert len(tabs) == 6
    groups = {}
    for t in tabs:
        groups.setdefault(component_key(t), []).append(t)
    for group in groups.values():
        for t in group:
            for u in group:
                path = shift_path(t, u)
                assert path.steps <= 3
                assert path.elements[0] == t and path.elements[-1] == u
                for (uv, vu), (a, b) in zip(
                    path.step_words(), zip(path.elements, path.elements[1:])
                ):
                    assert stalactic_tableau(uv) == a and stalactic_tableau(vu) == b


def test_agreement_with_presentation():
    stal = presentation("stal")
    for w in words_with_evaluation((2, 2, 1)):
        cls = {v for v in words_with_evaluation((2, 2, 1)) if word_key(v) == word_key(w)}
        assert cls == set(stal.close(w).members)


def test_single_row_classes_are_singletons():
    stal = presentation("stal")
    for w in words_with_evaluation((1, 1, 1, 1)):
        assert stal.close(w).members == {w}


def test_conjugacy_witness_examples():
    g, h = conjugacy_witness((1, 2), (2, 1))
    assert g == (1, 2) and h == (2, 1)
    w = parse_word("1233")
    g, h = conjugacy_witness(w, w)
    assert g == h == (1, 2, 3)


def test_conjugacy_witness_requires_equal_evaluation():
    with pytest.raises(ValueError):
        conjugacy_witness((1, 2), (1, 1))
