import json

import pytest

from cycshift.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_psymbol_sylv(capsys):
    code, out, _ = run_cli(capsys, "psymbol", "--monoid", "sylv", "--word", "5451761524")
    assert code == 0
    assert out.splitlines()[0] == "key: 4(2(1(1(-)(-))(-))(4(-)(-)))(5(5(5(-)(-))(-))(6(-)(7(-)(-))))"


def test_psymbol_stal(capsys):
    code, out, _ = run_cli(capsys, "psymbol", "--monoid", "stal", "--word", "361135112565")
    assert code == 0
    assert "key: 3^2|1^4|2^1|6^2|5^3" in out


def test_psymbol_empty_word(capsys):
    code, out, _ = run_cli(capsys, "psymbol", "--monoid", "plac", "--word", "")
    assert code == 0
    assert "(empty)" in out


def test_class_listing(capsys):
    code, out, _ = run_cli(capsys, "class", "--monoid", "plac", "--word", "132")
    assert code == 0
    assert out.split() == ["132", "312"]


def test_diameter_of_plactic_reference_component(capsys):
    code, out, _ = run_cli(capsys, "diameter", "--monoid", "plac", "--rank", "5", "--word", "12345")
    assert code == 0
    assert out.strip() == "4"


def test_path_hypo_example(capsys):
    code, out, _ = run_cli(
        capsys, "path", "--monoid", "hypo", "--word1", "244135", "--word2", "135244"
    )
    assert code == 0
    lines = out.splitlines()
    steps = int(lines[0].split(":")[1].split()[0])
    assert steps <= 4
    assert lines[-1] == "shortest path: 1 steps"


def test_path_plactic_is_bfs_only(capsys):
    code, out, _ = run_cli(capsys, "path", "--monoid", "plac", "--word1", "132", "--word2", "213")
    assert code == 0
    assert "not available" in out
    assert "shortest path:" in out


def test_scan_stal(capsys):
    code, out, _ = run_cli(
        capsys, "scan", "--monoid", "stal", "--rank", "3", "--max-total", "6"
    )
    assert code == 0
    assert "overall max diameter 3" in out
    assert "splits" in out


def test_component_json_round_trip(tmp_path, capsys):
    out_file = tmp_path / "graph.json"
    code, _, _ = run_cli(
        capsys, "component", "--monoid", "stal", "--word", "1233",
        "--format", "json", "--out", str(out_file),
    )
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert len(payload["vertices"]) == 6
    assert sum(len(v) for v in payload["adjacency"].values()) // 2 == 10


def test_component_dot(capsys):
    code, out, _ = run_cli(
        capsys, "component", "--monoid", "baxt", "--word", "123", "--format", "dot"
    )
    assert code == 0
    assert out.startswith("graph {")
    assert out.count("--") == 3  # triangle of the three length-3 classes


def test_determinism(capsys):
    args = ("component", "--monoid", "sylv", "--word", "1234", "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "psymbol", "--monoid", "plac", "--word", "1,x")
    assert code == 2
    assert "error" in err


def test_unknown_monoid_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["psymbol", "--monoid", "nope", "--word", "1"])
    assert exc.value.code == 2


def test_neighbors_listing(capsys):
    code, out, _ = run_cli(capsys, "neighbors", "--monoid", "plac", "--word", "12345")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_psymbol_json(capsys):
    code, out, _ = run_cli(
        capsys, "psymbol", "--monoid", "baxt", "--word", "2431", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["monoid"] == "baxt"
    assert payload["object"]["left"]["label"] == 2
    assert payload["object"]["right"]["label"] == 1
