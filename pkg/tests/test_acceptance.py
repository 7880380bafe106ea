"""The acceptance suite, one test per criterion (criterion 3 split per monoid).

Each test prints its criterion's pass/fail lines; run with ``pytest -s`` to
see them.  Two sub-checks of criterion 3 assert reference values that
disagree with computation (the stalactic component has 10 edges, not 11;
the hypoplactic component of 123445 has diameter 3, not 4); they are kept
as stated and fail honestly.  See the README for the witnesses.
"""

from cycshift import verify


def _run(results):
    for r in results:
        print(r.line())
    bad = [r for r in results if not r.passed]
    assert not bad, "; ".join(r.line() for r in bad)


def test_c1_cocharge_worked_example():
    _run(verify.criterion_1())


def test_c2_insertion_matches_presentation():
    _run(verify.criterion_2())


def _c3():
    return {r.name: r for r in verify.criterion_3()}


def test_c3_plactic_component():
    rs = _c3()
    _run([rs["c3 plac component of 12345: vertices"], rs["c3 plac component of 12345: diameter"]])


def test_c3_hypoplactic_component():
    rs = _c3()
    _run(
        [
            rs["c3 hypo component of 123445: vertices"],
            rs["c3 hypo component of 123445: diameter"],
        ]
    )


def test_c3_sylvester_component():
    rs = _c3()
    _run([rs["c3 sylv component of 1234: vertices"], rs["c3 sylv component of 1234: diameter"]])


def test_c3_stalactic_component():
    rs = _c3()
    _run(
        [
            rs["c3 stal component of 1233: vertices"],
            rs["c3 stal component of 1233: edges"],
            rs["c3 stal component of 1233: diameter"],
        ]
    )


def test_c4_table_reproduction():
    _run(verify.criterion_4())


def test_c5_constructive_paths():
    _run(verify.criterion_5())


def test_c6_row_column_lower_bounds():
    _run(verify.criterion_6())


def test_c7_baxter_structure():
    _run(verify.criterion_7())


def test_c8_unbounded_counterexample():
    _run(verify.criterion_8())


def test_c9_conjugacy_witnesses():
    _run(verify.criterion_9())


def test_c10_randomized_invariants():
    _run(verify.criterion_10())
