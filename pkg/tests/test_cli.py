"""Command line: exit codes, determinism, and header echoing."""

import json

import pytest

from edgewise import cli, io
from edgewise.cat import bar, chain_poset, truncated_free_monoid
from edgewise.checks import theorem_verify
from edgewise.sset import edgewise, standard_simplex


@pytest.fixture
def bar7_file(tmp_path):
    path = tmp_path / "bar7.json"
    io.write_text(str(path), io.save_sset(bar(truncated_free_monoid(1), 7)))
    return str(path)


@pytest.fixture
def tri_file(tmp_path):
    path = tmp_path / "tri.json"
    io.write_text(str(path), io.save_sset(standard_simplex(2, 3)))
    return str(path)


def test_draw_golden(capsys):
    assert cli.main(["draw", "esd-simplex", "1"]) == 0
    out = capsys.readouterr().out
    assert out == (
        'graph "esd(standard-simplex-1)" {\n'
        '  // nodes: 3\n'
        '  "00";\n'
        '  "01";\n'
        '  "11";\n'
        '  // edges: 2\n'
        '  "00" -- "01";  // "0001"\n'
        '  "11" -- "01";  // "0111"\n'
        '}\n')


def test_draw_counts_and_file_output(tmp_path, capsys):
    assert cli.main(["draw", "esd-simplex", "2"]) == 0
    out = capsys.readouterr().out
    assert "// nodes: 6" in out
    assert "// edges: 9" in out
    assert out.count("// level 2") == 1
    target = tmp_path / "figure.dot"
    assert cli.main(["draw", "esd-simplex", "2", "-o", str(target)]) == 0
    assert target.read_text() == out


def test_theorem_human_shows_own_segal_failure(bar7_file, capsys):
    assert cli.main(["check", "theorem", bar7_file]) == 0
    out = capsys.readouterr().out
    assert "overall: pass" in out
    assert "own_segal_overall: fail" in out
    assert "[2, 1]" in out


def test_theorem_machine_report_and_header(bar7_file, capsys):
    code = cli.main(["check", "theorem", bar7_file, "--format", "machine",
                     "--seed", "42", "--budget-iso-nodes", "9000"])
    assert code == 0
    text = capsys.readouterr().out
    header = io.report_header(text)
    assert header["command"] == "check theorem"
    assert header["seed"] == 42
    assert header["budgets"] == {"iso-nodes": 9000, "fuzz-count": None}
    assert header["context"]["own_segal_overall"] == "fail"
    assert [2, 1] in header["context"]["own_segal_failures"]
    fresh = theorem_verify(io.load_sset(open(bar7_file).read(), name="bar7"))
    assert io.load_report(text) == fresh


def test_check_exit_codes(bar7_file, tri_file, capsys):
    assert cli.main(["check", "segal", bar7_file]) == 1
    assert cli.main(["check", "2segal", bar7_file]) == 0
    assert cli.main(["check", "2segal", tri_file, "--reduced"]) == 0
    assert cli.main(["check", "segal", tri_file, "--reduced"]) == 2
    capsys.readouterr()


def test_validate_exit_codes(tmp_path, tri_file, capsys):
    assert cli.main(["validate", tri_file]) == 0
    capsys.readouterr()
    doc = json.loads(io.save_sset(standard_simplex(1, 2)))
    doc["degeneracy"]["0,0"]["0"] = "11"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert cli.main(["validate", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "violations: 0" not in out
    assert "[ds]" in out
    garbage = tmp_path / "garbage.json"
    garbage.write_text("nope")
    assert cli.main(["validate", str(garbage)]) == 2
    assert cli.main(["validate", str(tmp_path / "absent.json")]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_validate_machine_output(tri_file, capsys):
    assert cli.main(["validate", tri_file, "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "sset"
    assert doc["violations"] == []
    assert doc["header"]["command"] == "validate"


def test_esd_command_matches_library(tmp_path, tri_file):
    target = tmp_path / "out.json"
    assert cli.main(["esd", tri_file, "-o", str(target)]) == 0
    assert io.load_sset(target.read_text()) == edgewise(standard_simplex(2, 3))


def test_transform_outputs_load_back(tmp_path, capsys):
    cat_file = tmp_path / "chain2.json"
    io.write_text(str(cat_file), io.save_category(chain_poset(2)))
    pm_file = tmp_path / "tfm1.json"
    io.write_text(str(pm_file), io.save_partial_monoid(
        truncated_free_monoid(1)))
    for argv, kind in [
            (["nerve", str(cat_file), "--truncation", "3"], "sset"),
            (["tw", str(cat_file)], "category"),
            (["bar", str(pm_file), "--truncation", "3"], "sset"),
            (["spans", str(pm_file)], "category"),
            (["sconstruction", "--max-card", "2", "--truncation", "2"],
             "sgpd"),
    ]:
        assert cli.main(argv) == 0
        out = capsys.readouterr().out
        assert io.detect_format(out) == kind


def test_gen_deterministic_per_seed(capsys):
    assert cli.main(["gen", "partial-monoid", "--size", "3",
                     "--seed", "1"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["gen", "partial-monoid", "--size", "3",
                     "--seed", "1"]) == 0
    assert capsys.readouterr().out == first
    assert cli.main(["gen", "partial-monoid", "--size", "3",
                     "--seed", "2"]) == 0
    assert capsys.readouterr().out != first
    M = io.load_partial_monoid(first)
    assert M.unit in M.elements


def test_gen_coskeletal_and_bad_spec(tmp_path, capsys):
    target = tmp_path / "cosk.json"
    assert cli.main(["gen", "coskeletal", "--spec", "2,2,3", "--seed", "4",
                     "-o", str(target)]) == 0
    X = io.load_sset(target.read_text())
    assert X.truncation == 3
    assert len(X.level(0)) == 2
    assert cli.main(["gen", "coskeletal", "--spec", "2,2", "--seed", "4"]) == 2
    assert cli.main(["gen", "coskeletal", "--spec", "a,b,c",
                     "--seed", "4"]) == 2
    capsys.readouterr()


def test_fuzz_budget_caps_count(capsys):
    assert cli.main(["fuzz", "--count", "9", "--seed", "5",
                     "--budget-fuzz-count", "2"]) == 0
    out = capsys.readouterr().out
    assert "count: 2" in out
    assert "budget-fuzz-count: 2" in out


def test_fuzz_machine_output(capsys):
    assert cli.main(["fuzz", "--count", "3", "--seed", "5",
                     "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["header"]["command"] == "fuzz"
    assert doc["fuzz"]["checked"] + doc["fuzz"]["generation_failures"] == 3
    assert doc["fuzz"]["violations"] == []


def test_invalid_limits_exit_two(tmp_path, capsys):
    assert cli.main(["sconstruction", "--max-card", "9",
                     "--truncation", "2"]) == 2
    assert cli.main(["gen", "partial-monoid", "--size", "0",
                     "--seed", "1"]) == 2
    assert cli.main(["fuzz", "--count", "1", "--seed", "-3"]) == 2
    assert cli.main(["fuzz", "--count", "1", "--seed",
                     str(2 ** 64)]) == 2
    assert cli.main(["fuzz", "--count", "1", "--budget-fuzz-count",
                     "-1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_command_rejected():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["check", "segal", "x.json", "--no-such-flag"])
    assert exc.value.code == 2
