import json

import pytest

from basiclocus.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr()


def test_classify_json(capsys):
    code, out = run(capsys, "classify", "--family", "C", "--rank", "2", "--lambda", "omega:2",
                    "--removed-vertex", "0", "--sigma", "id", "--format", "json", "--verify")
    assert code == EXIT_OK
    assert json.loads(out.out)["coxeter_type"] is True


def test_newton_gl4_rows(capsys):
    code, out = run(capsys, "newton", "--family", "A", "--rank", "3", "--gl", "--lambda", "omega:2",
                    "--removed-vertex", "0", "--sigma", "id", "--format", "tsv", "--verify")
    lines = out.out.strip().splitlines()
    assert code == EXIT_OK
    assert lines[0].split("\t") == ["word", "length", "nu"]
    assert "s0 s1 tau\t2\t2/3 2/3 2/3 0/1" in lines


def test_sweep_tsv(capsys):
    code, out = run(capsys, "sweep", "--max-rank", "3", "--format", "tsv", "--verify")
    assert code == EXIT_OK
    header, *rows = out.out.strip().splitlines()
    assert header.startswith("quadruple\tcc\tcsc")
    assert sum(r.split("\t")[3] == "true" for r in rows if not r.startswith("verify")) == 15


def test_invalid_quadruple_exit_2(capsys):
    code, out = run(capsys, "eo", "--family", "D", "--rank", "4", "--removed-vertex", "3", "--sigma", "sigma0")
    assert code == EXIT_INPUT and "sigma(v) != v" in out.err


@pytest.mark.parametrize("args", [
    ["classify", "--family", "Z", "--rank", "2"],
    ["classify", "--family", "B", "--rank", "2"],
    ["leq", "--family", "C", "--rank", "2", "--word", "s1"],
    ["witness", "--family", "C", "--rank", "2", "--word", "s7"],
    ["classify", "--family", "B", "--rank", "3", "--gl"],
])
def test_bad_input(capsys, args):
    assert main(args) == EXIT_INPUT


def test_verify_mismatch_exit_1(capsys):
    code, out = run(capsys, "witness", "--family", "C", "--rank", "4", "--lambda", "omega:1",
                    "--removed-vertex", "2", "--verify")
    assert code == EXIT_MISMATCH
    doc = json.loads(out.out)
    assert doc["corrected_reading"][0]["status"] == "confirmed"


@pytest.mark.parametrize("sub", ["strata", "closure", "smoothness", "basic-locus", "eo"])
def test_subcommands_run(capsys, sub):
    code, out = run(capsys, sub, "--family", "C", "--rank", "3", "--lambda", "omega:1", "--removed-vertex", "3",
                    "--format", "tsv")
    assert code == EXIT_OK and out.out.count("\n") >= 2


def test_reduce_and_leq(capsys):
    code, out = run(capsys, "reduce", "--family", "C", "--rank", "2", "--lambda", "omega:2", "--removed-vertex", "1",
                    "--word", "s1 s2 s0 tau")
    assert code == EXIT_OK and json.loads(out.out)["results"][0]["reduced_length"] <= 3
    code, out = run(capsys, "leq", "--family", "C", "--rank", "2", "--lambda", "omega:2", "--removed-vertex", "1",
                    "--word", "tau", "--word", "s1 s2 s0 tau")
    assert code == EXIT_OK and json.loads(out.out)["leq_J_sigma"] is True


def test_no_floats_in_output(capsys):
    code, out = run(capsys, "eo", "--family", "B", "--rank", "3", "--removed-vertex", "3", "--sigma", "tau:1")
    def walk(x):
        if isinstance(x, float):
            raise AssertionError(x)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)
    walk(json.loads(out.out))
