import json

import pytest

from superyangian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalform_odd_square(capsys):
    code, out, _ = run(capsys, "normalform", "--m", "1", "--n", "1", "t[1,2,1]*t[1,2,1]")
    assert code == 0 and out.strip() == "0"


def test_normalform_json(capsys):
    code, out, _ = run(capsys, "normalform", "--m", "1", "--n", "1", "--expr", "t[1,2,1]*t[2,1,1]", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["normal_form"] == "-t[1,1,1] + t[2,2,1] - t[2,1,1]*t[1,2,1]"
    assert (data["m"], data["n"]) == (1, 1)


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "normalform", "--m", "1", "--n", "1", "t[1,1,1] $")
    assert code == 2 and "error" in err and "9" in err


def test_index_out_of_range_exit_2(capsys):
    code, _, _ = run(capsys, "normalform", "--m", "1", "--n", "1", "t[3,1,1]")
    assert code == 2


def test_bounds(capsys):
    assert run(capsys, "rtt-check", "--m", "4", "--n", "3", "--N", "1")[0] == 2
    assert run(capsys, "rtt-check", "--m", "1", "--n", "1", "--N", "9")[0] == 2
    assert run(capsys, "rtt-check", "--m", "1", "--n", "1", "--N", "0")[0] == 2
    assert run(capsys, "rtt-check", "--m", "0", "--n", "0")[0] == 2
    assert run(capsys, "rtt-check", "--m", "1", "--n", "1", "--N", "9", "--max-bounds-override")[0] == 0


def test_unknown_suite_exit_2(capsys):
    assert run(capsys, "verify", "--suite", "nope", "--m", "1", "--n", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "theorem2", "--m", "2", "--n", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "rtt", "--m", "1", "--n", "1", "--sample", "2")[0] == 2


def test_verify_theorem2(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem2", "--m", "2", "--n", "1", "--N", "3")
    assert code == 0 and out.startswith("theorem2")


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rtt", "--m", "1", "--n", "1", "--N", "3", "--json")
    data = json.loads(out)
    assert code == 0
    assert {"suite", "m", "n", "N", "instances", "failures"} <= set(data)
    assert data["instances"] > 0 and data["failures"] == []


@pytest.mark.parametrize("suite", ["lemma6", "theorem3", "prop8.1", "gauss-recursion", "root-vectors",
                                   "zeta-gauss", "coproduct-twist", "hopf", "morphisms", "centrality"])
def test_verify_suites_pass(capsys, suite):
    assert run(capsys, "verify", "--suite", suite, "--m", "1", "--n", "2", "--N", "3")[0] == 0


def test_verify_kappa_suites(capsys):
    assert run(capsys, "verify", "--suite", "kappa-pbw", "--m", "1", "--n", "1", "--N", "2")[0] == 0
    assert run(capsys, "verify", "--suite", "pbw-count", "--m", "1", "--n", "1", "--N", "2")[0] == 0


def test_module_error_exit_1(capsys):
    # gauss-recursion needs m + n >= 3; the module raises and the CLI reports it
    code, _, err = run(capsys, "verify", "--suite", "gauss-recursion", "--m", "1", "--n", "1", "--N", "2")
    assert code == 1 and err.startswith("error: ValueError")
    code, _, err = run(capsys, "berezinian", "--m", "1", "--n", "1", "--N", "2", "--check", "root")
    assert code == 1 and "ValueError" in err


def test_gauss_text_and_json(capsys):
    code, out, _ = run(capsys, "gauss", "--m", "1", "--n", "1", "--N", "1")
    assert code == 0
    assert "d[1]^(1) = t[1,1,1]" in out
    assert "e[1,2]^(1) = t[1,2,1]" in out
    assert "f[2,1]^(1) = t[2,1,1]" in out
    code, out, _ = run(capsys, "gauss", "--m", "1", "--n", "1", "--N", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["N"] == 2


def test_map_examples(capsys):
    base = ["map", "--m", "1", "--n", "1"]
    code, out, _ = run(capsys, *base, "--name", "zeta", "--expr", "t[1,1,1]")
    assert code == 0 and out.strip() == "-t[2,2,1]"
    code, out, _ = run(capsys, *base, "--name", "mu", "--f", "1,1/2", "--expr", "t[1,1,1]")
    assert code == 0 and out.strip() == "1/2 + t[1,1,1]"
    code, out, _ = run(capsys, *base, "--name", "psi", "--k", "1", "--expr", "t[1,1,1]", "--json")
    data = json.loads(out)
    assert data["target"] == [2, 1] and data["map"] == "psi"
    assert run(capsys, *base, "--name", "psi", "--expr", "t[1,1,1]")[0] == 2
    assert run(capsys, *base, "--name", "mu", "--expr", "t[1,1,1]")[0] == 2
    assert run(capsys, *base, "--name", "rho")[0] == 2
    assert run(capsys, *base, "--name", "bogus", "--expr", "1")[0] == 2


def test_berezinian_both_forms(capsys):
    code, out, _ = run(capsys, "berezinian", "--m", "1", "--n", "1", "--N", "2", "--form", "both")
    assert code == 0 and "forms agree" in out
    code, out, _ = run(capsys, "berezinian", "--m", "1", "--n", "1", "--N", "2", "--json",
                       "--check", "central,leading")
    lines = out.strip().splitlines()
    assert json.loads(lines[0])["equal"] is True
    assert [json.loads(x)["suite"] for x in lines[1:]] == ["centrality", "leading-term"]
    assert run(capsys, "berezinian", "--m", "1", "--n", "1", "--check", "bogus")[0] == 2


def test_deterministic_across_threads(capsys):
    outs = []
    for threads in ("1", "4", "1"):
        code, out, _ = run(capsys, "verify", "--suite", "theorem3", "--m", "2", "--n", "2", "--N", "3",
                           "--json", "--threads", threads)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_missing_subcommand(capsys):
    assert run(capsys)[0] == 2
