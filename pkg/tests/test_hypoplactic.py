import pytest

from cycshift.hypoplactic import (
    QuasiRibbonTableau,
    has_inversion,
    hypo_class,
    hypo_insert,
    quasi_ribbon,
    shift_path,
    word_key,
)
from cycshift.rewrite import presentation
from cycshift.words import parse_word, words_with_evaluation

QRT = quasi_ribbon(parse_word("113246546"))


def test_insert_examples():
    assert hypo_insert(quasi_ribbon(()), 4).rows == ((4,),)
    assert hypo_insert(quasi_ribbon((1, 2)), 3).rows == ((1, 2, 3),)
    assert hypo_insert(quasi_ribbon((3, 1)), 2).rows == ((1, 2), (3,))


def test_worked_tableau_and_readings():
    assert QRT.rows == ((1, 1, 2), (3, 4, 4), (5,), (6, 6))
    assert QRT.offsets == (0, 2, 4, 4)
    assert QRT.column_reading() == parse_word("113246546")
    assert QRT.row_reading() == parse_word("665344112")
    assert quasi_ribbon(parse_word("665344112")) == QRT


def test_readings_insert_back():
    for w in words_with_evaluation((2, 1, 2)):
        t = quasi_ribbon(w)
        assert quasi_ribbon(t.column_reading()) == t
        assert quasi_ribbon(t.row_reading()) == t


def test_single_row_and_column_readings():
    row = quasi_ribbon((1, 1, 3))
    assert row.column_reading() == row.row_reading() == (1, 1, 3)
    # a single column reads bottom to top either way
    col = quasi_ribbon((3, 2, 1))
    assert col.rows == ((1,), (2,), (3,))
    assert col.column_reading() == col.row_reading() == (3, 2, 1)


def test_weakly_increasing_word_is_single_row():
    assert quasi_ribbon((1, 2, 2, 4)).rows == ((1, 2, 2, 4),)


def test_validation():
    with pytest.raises(ValueError):
        QuasiRibbonTableau(((2, 1),))
    with pytest.raises(ValueError):
        QuasiRibbonTableau(((1, 3), (3, 4)))  # overlap column not strict


def test_has_inversion():
    t = quasi_ribbon(parse_word("312"))
    assert not has_inversion(parse_word("312"), 1)  # 1 and 2 share a row
    assert t.row_of(1) == t.row_of(2)
    assert has_inversion(parse_word("312"), 2)  # 3 sits left of 2, rows split
    assert t.row_of(2) != t.row_of(3)
    assert not has_inversion(parse_word("123"), 1)
    assert not has_inversion(parse_word("123"), 2)
    with pytest.raises(ValueError):
        has_inversion(parse_word("123"), 3)


def test_inversion_matches_row_split():
    words = list(words_with_evaluation((1, 2, 1, 1)))
    for w in words:
        t = quasi_ribbon(w)
        syms = sorted(set(w))
        for i in range(1, len(syms)):
            split = t.row_of(syms[i - 1]) != t.row_of(syms[i])
            assert has_inversion(w, i) == split


def test_agreement_with_presentation():
    hypo = presentation("hypo")
    for w in words_with_evaluation((2, 1, 1)):
        assert hypo_class(w, 3) == set(hypo.close(w).members)


def test_worked_path():
    t = quasi_ribbon(parse_word("244135"))
    u = quasi_ribbon(parse_word("135244"))
    assert t.rows == ((1,), (2, 3), (4, 4, 5))
    assert u.rows == ((1, 2), (3, 4, 4), (5,))
    path = shift_path(t, u)
    assert path.elements[0] == t and path.elements[-1] == u
    assert path.steps == 4
    keys = [
        "0:1/0:23/1:445",
        "0:123/2:445",
        "0:12/1:3/1:445",
        "0:12/1:3445",
        "0:12/1:344/3:5",
    ]
    assert [el.key() for el in path.elements] == keys


def test_trivial_path():
    t = quasi_ribbon(parse_word("1223"))
    path = shift_path(t, t)
    assert path.elements == (t,)
    assert path.steps == 0


def test_path_requires_equal_evaluation():
    with pytest.raises(ValueError):
        shift_path(quasi_ribbon((1, 2)), quasi_ribbon((1, 1)))


def test_paths_standard_rank_5():
    reps = {}
    for w in words_with_evaluation((1, 1, 1, 1, 1)):
        reps.setdefault(word_key(w), w)
    tabs = [quasi_ribbon(w) for w in reps.values()]
    assert len(tabs) == 16
    for t in tabs:
        for u in tabs:
            path = shift_path(t, u)
            assert path.steps <= 4
            assert path.elements[0] == t and path.elements[-1] == u
            for (uv, vu), (a, b) in zip(path.step_words(), zip(path.elements, path.elements[1:])):
                assert quasi_ribbon(uv) == a and quasi_ribbon(vu) == b
