import json

import pytest

from quivercount import ProblemParseError
from quivercount.cli import (main, parse_problem, parse_representation,
                             parse_samples)
from quivercount.rep import RepSpace
from quivercount import field_table, kronecker

K2_PROBLEM = """\
# 2-Kronecker quiver
vertices 2
arrow 0 1
arrow 0 1
dim 1 1
theta 1 0
"""

K2_22_PROBLEM = """\
vertices 2
arrow 0 1
arrow 0 1
dim 2 2
theta 1 0
"""


# ---------------------------------------------------------------------------
# parsing


def test_parse_problem_example():
    problem = parse_problem(K2_PROBLEM)
    assert problem.quiver.vertex_count == 2
    assert problem.quiver.arrows == ((0, 1), (0, 1))
    assert problem.dims == (1, 1)
    assert problem.theta == (1, 0)
    assert problem.q_list is None


def test_parse_problem_q_and_budgets():
    problem = parse_problem(K2_PROBLEM + "q 2 3\nbudget-reps 500\nbudget-subspaces 40\n")
    assert problem.q_list == (2, 3)
    assert problem.max_reps == 500
    assert problem.max_tuples == 40


def test_parse_problem_bad_arrow_line():
    with pytest.raises(ProblemParseError) as err:
        parse_problem("vertices 2\narrow 0 2\ndim 1 1\ntheta 1 0\n")
    assert "line 2" in str(err.value)


def test_parse_problem_dim_length():
    with pytest.raises(ProblemParseError) as err:
        parse_problem("vertices 2\ndim 1 1 1\ntheta 1 0\n")
    assert "line 2" in str(err.value)


def test_parse_problem_unknown_key():
    with pytest.raises(ProblemParseError):
        parse_problem(K2_PROBLEM + "arrows 1 0\n")


def test_parse_problem_missing_sections():
    with pytest.raises(ProblemParseError):
        parse_problem("vertices 2\ndim 1 1\n")
    with pytest.raises(ProblemParseError):
        parse_problem("arrow 0 1\n")


def test_parse_problem_duplicates_and_bad_q():
    with pytest.raises(ProblemParseError):
        parse_problem(K2_PROBLEM + "dim 1 1\n")
    with pytest.raises(ProblemParseError):
        parse_problem(K2_PROBLEM + "q 6\n")


def test_parse_problem_negative_dimension():
    with pytest.raises(ProblemParseError) as err:
        parse_problem("vertices 2\narrow 0 1\ndim 1 -1\ntheta 1 0\n")
    assert "line 3" in str(err.value)


def test_parse_representation_roundtrip():
    space = RepSpace(kronecker(2), (2, 3), field_table(2))
    M = space.rep(1234)
    text = "\n".join(
        " ".join(str(x) for row in mat for x in row) for mat in M.mats)
    parsed = parse_representation(text, space)
    assert parsed == M


def test_parse_representation_errors():
    space = RepSpace(kronecker(2), (1, 1), field_table(2))
    with pytest.raises(ProblemParseError):
        parse_representation("1\n", space)  # one line missing
    with pytest.raises(ProblemParseError):
        parse_representation("1 1\n0\n", space)  # too many entries
    with pytest.raises(ProblemParseError):
        parse_representation("2\n0\n", space)  # entry outside the field


def test_parse_samples():
    samples = parse_samples("base_q 2\n1 3\n2 3\n# c\n3 9\n4 15\n")
    assert samples.base_q == 2
    assert samples.samples == ((1, 3), (2, 3), (3, 9), (4, 15))
    with pytest.raises(ProblemParseError):
        parse_samples("1 3\n")
    with pytest.raises(ProblemParseError):
        parse_samples("base_q 2\n1 3 4\n")


# ---------------------------------------------------------------------------
# subcommands (in-process)


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.problem"
    path.write_text(K2_PROBLEM, encoding="utf-8")
    return str(path)


@pytest.fixture
def k2_22_file(tmp_path):
    path = tmp_path / "k2_22.problem"
    path.write_text(K2_22_PROBLEM, encoding="utf-8")
    return str(path)


def test_moduli_poly_command(k2_file, capsys):
    assert main(["moduli-poly", k2_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "q + 1"
    assert out[1] == "coeffs: 1 1"


def test_moduli_poly_coprimality_exit_code(k2_22_file, capsys):
    assert main(["moduli-poly", k2_22_file]) == 4
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "not coprime" in captured.err


def test_count_reps_command(k2_file, capsys):
    assert main(["count-reps", k2_file, "--brute", "3"]) == 0
    out = capsys.readouterr().out
    assert "rep-count-poly: q^2" in out
    assert "brute q=3: 9" in out


def test_stratify_command(k2_file, capsys):
    assert main(["stratify", k2_file, "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert "1,1 3" in out
    assert "1,0;0,1 1" in out
    assert "partition: 4 == q^2 ok" in out


def test_stratify_json(k2_file, capsys):
    assert main(["stratify", k2_file, "--q", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "stratify"
    assert data["total"] == 4
    assert {"type": [[1, 1]], "count": 3} in data["table"]


def test_hn_command(tmp_path, k2_file, capsys):
    rep = tmp_path / "rep.txt"
    rep.write_text("0\n0\n", encoding="utf-8")
    assert main(["hn", k2_file, "--rep", str(rep), "--q", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "type: 1,0;0,1"
    assert out[1] == "slopes: 1 0"


def test_hn_json(tmp_path, k2_file, capsys):
    rep = tmp_path / "rep.txt"
    rep.write_text("1\n0\n", encoding="utf-8")
    assert main(["hn", k2_file, "--rep", str(rep), "--q", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["type"] == [[1, 1]]


def test_verify_command(k2_file, capsys):
    assert main(["verify", k2_file, "--qmax", "3", "--threads", "1"]) == 0
    out = capsys.readouterr().out
    assert "verify: all checks passed" in out
    assert "q=2: partition ok" in out
    assert "q=3: torsor and moduli ok" in out


def test_verify_uses_problem_q_list(tmp_path, capsys):
    path = tmp_path / "with_q.problem"
    path.write_text(K2_PROBLEM + "q 2\n", encoding="utf-8")
    assert main(["verify", str(path), "--threads", "1"]) == 0
    out = capsys.readouterr().out
    assert "q=2: partition ok" in out
    assert "q=3" not in out


def test_verify_without_fields_errors(k2_file, capsys):
    assert main(["verify", k2_file]) == 2
    assert "qmax" in capsys.readouterr().err


def test_verify_non_coprime_skips_torsor(k2_22_file, capsys):
    assert main(["verify", k2_22_file, "--qmax", "2", "--threads", "1"]) == 0
    out = capsys.readouterr().out
    assert "torsor check skipped" in out


def test_verify_json(k2_file, capsys):
    assert main(["verify", k2_file, "--qmax", "2", "--threads", "1",
                 "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["result"] == "ok"
    assert data["qs"] == [2]
    assert any(c["check"] == "partition" for c in data["checks"])


def test_three_vertex_problem_roundtrip(tmp_path, capsys):
    path = tmp_path / "a3.problem"
    path.write_text(
        "vertices 3\narrow 0 1\narrow 1 2\ndim 1 1 1\ntheta 2 1 0\n",
        encoding="utf-8")
    assert main(["stratify", str(path), "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert "partition: 4 == q^2 ok" in out
    rep = tmp_path / "rep.txt"
    rep.write_text("1\n0\n", encoding="utf-8")
    assert main(["hn", str(path), "--rep", str(rep), "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("type: 1,1,0;0,0,1")


def test_budget_exceeded_exit_code(tmp_path, capsys):
    path = tmp_path / "tiny.problem"
    path.write_text(K2_PROBLEM + "budget-reps 2\n", encoding="utf-8")
    assert main(["stratify", str(path), "--q", "2"]) == 3
    assert "budget" in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.problem"
    path.write_text("vertices 2\narrow 0 5\ndim 1 1\ntheta 1 0\n", encoding="utf-8")
    assert main(["moduli-poly", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_purity_fit_command(tmp_path, capsys):
    samples = tmp_path / "torus.samples"
    samples.write_text("base_q 2\n1 3\n2 3\n3 9\n4 15\n", encoding="utf-8")
    assert main(["purity-fit", "--samples", str(samples), "--period", "2",
                 "--degree", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "verdict: periodic-polynomial"
    assert "P_0: t - 1" in out
    assert "P_1: t + 1" in out


def test_purity_fit_period_one(tmp_path, capsys):
    samples = tmp_path / "gm.samples"
    samples.write_text("base_q 2\n1 1\n2 3\n3 7\n4 15\n", encoding="utf-8")
    assert main(["purity-fit", "--samples", str(samples), "--period", "1",
                 "--degree", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "strong-polynomial"
    assert data["polynomials"][0]["pretty"] == "q - 1"


def test_missing_file_is_an_error(capsys):
    assert main(["moduli-poly", "/nonexistent/file.problem"]) == 1
    assert "error" in capsys.readouterr().err
