"""Command line behaviour: exit codes, output stability and report fields."""

import json
from pathlib import Path

import pytest

from braidglue.braidrep import regular_hecke_rep
from braidglue.cli import main
from braidglue.coxeter import CoxeterSystem


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_counterexample_json(capsys):
    code, rep = run_json(capsys, "counterexample", "--type", "A2")
    assert code == 0
    assert rep["verdict"] == "unsolvable"
    assert rep["det_mod_phi6"] == "0" and rep["p_mod_phi6"] == "4-2u"


def test_output_is_byte_stable(capsys):
    argv = ["glue", "k0", "--name", "split", "--format", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second and first


GOLDEN = Path(__file__).parent / "fixtures" / "golden"
GOLDEN_CASES = {
    "counterexample_a2": ["counterexample", "--type", "A2"],
    "convexity_a3": ["coxeter", "convexity", "--type", "A3"],
    "goodness_hecke_a2": ["rep", "goodness", "--name", "hecke_a2_q2"],
    "k0_split": ["glue", "k0", "--name", "split"],
    "supports_w_a2": ["glue", "supports", "--name", "w_a2"],
    "induce_a2": ["rep", "induce", "--type", "A2"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_matches_golden_output(capsys, name):
    code, out, _ = run(capsys, *GOLDEN_CASES[name], "--format", "json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_convexity(capsys):
    code, rep = run_json(capsys, "coxeter", "convexity", "--type", "A3")
    assert code == 0 and rep["ok"]


def test_goodness_rank_one_file(capsys, tmp_path):
    f = tmp_path / "br2.json"
    f.write_text(json.dumps({"system": {"type": "A", "rank": 1}, "generators": [[["2"]]]}))
    code, rep = run_json(capsys, "rep", "goodness", "--file", str(f))
    assert code == 0 and rep["good"] is True


def test_not_good_exits_one(capsys, tmp_path):
    rep = regular_hecke_rep(CoxeterSystem.from_label("A2"), -1)
    f = tmp_path / "hecke_minus_one.json"
    f.write_text(json.dumps(rep.to_dict()))
    code, out = run_json(capsys, "rep", "goodness", "--file", str(f))
    assert code == 1 and out["good"] is False


def test_broken_relation_exits_one(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"system": {"type": "A", "rank": 2}, "generators": [[[0, 1], [1, 0]], [[1, 0], [0, -1]]]}))
    code, _, _ = run(capsys, "rep", "validate", "--file", str(f))
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["coxeter", "info"],
        ["coxeter", "info", "--type", "Q7"],
        ["rep", "goodness", "--name", "no_such_rep"],
        ["glue", "k0", "--name", "nonprojective"],
        ["nonsense"],
    ],
)
def test_input_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_json_exits_two(capsys, tmp_path):
    f = tmp_path / "broken.json"
    f.write_text("{not json")
    assert run(capsys, "rep", "validate", "--file", str(f))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["coxeter", "sizig3", "--type", "B2"],
        ["coxeter", "appear", "--type", "A3"],
        ["coxeter", "geod", "--type", "A2"],
        ["rep", "euler", "--name", "hecke_a2_q2"],
        ["rep", "half", "--name", "cubic_b2_q2", "--i", "2"],
        ["rep", "ideals", "--name", "cubic_a2_q2"],
        ["rep", "chi", "--name", "a1_two"],
        ["rep", "induce", "--type", "A2"],
        ["rep", "goodness", "--random", "10"],
        ["homlem-fuzz", "--count", "20"],
        ["glue", "simples", "--name", "matrix"],
        ["glue", "assemble", "--name", "triangular"],
    ],
)
def test_subcommands_succeed(capsys, argv):
    code, rep = run_json(capsys, *argv)
    assert code == 0 and rep.get("ok", True)


def test_text_format(capsys):
    code, out, _ = run(capsys, "coxeter", "info", "--type", "B2")
    assert code == 0 and "8" in out
