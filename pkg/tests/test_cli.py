import json

import pytest

from evenzeta.cli import main

PUBLISHED_SEQUENCE = [
    "1",
    "1",
    "10",
    "945",
    "992250",
    "13575766050",
    "2787683360962500",
    "9732664704199465153125",
]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ak_text(capsys):
    code, out, _ = run(capsys, "ak", "--max", "8")
    assert code == 0
    assert out.splitlines() == PUBLISHED_SEQUENCE


def test_ak_max_k_alias(capsys):
    code, out, _ = run(capsys, "ak", "--max-k", "3")
    assert code == 0
    assert out.splitlines() == ["1", "1", "10"]


def test_pk_half_scale(capsys):
    code, out, _ = run(capsys, "pk", "--k", "4", "--translated", "--half-scale")
    assert code == 0
    assert out.strip() == "465 + 130*x + 10*x^2"


def test_pk_half_scale_requires_translated(capsys):
    code, _, err = run(capsys, "pk", "--k", "4", "--half-scale")
    assert code == 2
    assert "--translated" in err


def test_zeta_even(capsys):
    code, out, _ = run(capsys, "zeta-even", "--k", "3")
    assert code == 0
    assert out.strip() == "1/945 * pi^6"


def test_zeta_even_approx(capsys):
    code, out, _ = run(capsys, "zeta-even", "--k", "1", "--approx")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1/6 * pi^2"
    assert lines[1].startswith("~= 1.644934")


@pytest.mark.parametrize(
    "k,method,expected",
    [
        (1, "classical", "1/6"),
        (2, "recursion", "-1/30"),
        (5, "tree", "5/66"),
        (1, "tree", "1/6"),
    ],
)
def test_bernoulli_methods(capsys, k, method, expected):
    code, out, _ = run(capsys, "bernoulli", "--k", str(k), "--method", method)
    assert code == 0
    assert out.strip() == expected


def test_bernoulli_tree_bound(capsys):
    code, _, err = run(capsys, "bernoulli", "--k", "15", "--method", "tree")
    assert code == 2
    assert "14" in err


def test_trees_listing(capsys):
    code, out, _ = run(capsys, "trees", "--k", "3", "--list")
    assert code == 0
    assert out.splitlines() == [
        "levels=1,1 low={3} high={} wt=1",
        "levels=1,2 low={} high={5} wt=5",
    ]


def test_trees_count(capsys):
    code, out, _ = run(capsys, "trees", "--k", "10")
    assert code == 0
    assert out.strip() == "4862"


def test_transform_default(capsys):
    code, out, _ = run(capsys, "transform", "--k", "3")
    assert code == 0
    assert out.strip() == "2/945"


def test_transform_sequence_file(capsys, tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1\n1\n1\n", encoding="utf-8")
    code, out, _ = run(capsys, "transform", "--k", "3", "--sequence", str(path))
    assert code == 0
    assert out.strip() == "2"


def test_transform_bad_sequence_file_names_line(capsys, tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1\noops\n", encoding="utf-8")
    code, _, err = run(capsys, "transform", "--k", "2", "--sequence", str(path))
    assert code == 2
    assert "seq.txt:2" in err


def test_json_output_shape_and_determinism(capsys):
    code, out1, _ = run(capsys, "zeta-even", "--k", "4", "--format", "json")
    assert code == 0
    code, out2, _ = run(capsys, "zeta-even", "--k", "4", "--format", "json")
    assert out1 == out2
    record = json.loads(out1)
    assert record["command"] == "zeta-even"
    assert record["inputs"] == {"k": 4}
    assert record["status"] == "ok"
    assert record["error_detail"] is None
    assert record["result"]["coefficient"] == "1/9450"
    assert record["result"]["pi_power"] == 8


def test_json_error_record(capsys):
    code, out, _ = run(capsys, "zeta-even", "--k", "0", "--format", "json")
    assert code == 2
    record = json.loads(out)
    assert record["status"] == "error"
    assert record["error_detail"]


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bernoulli", "--max-k", "20")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("20/20 passed")


def test_verify_json_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--suite", "newton-girard", "--format", "json")
    assert code == 0
    code, out2, _ = run(capsys, "verify", "--suite", "newton-girard", "--format", "json")
    assert out1 == out2
    record = json.loads(out1)
    assert record["result"]["passed"] is True


def test_verify_failure_exits_one(capsys, monkeypatch):
    from evenzeta import verify as verify_mod
    from evenzeta.verify import CheckResult, SuiteReport

    def fake_run_suite(name, max_k=None):
        check = CheckResult(name="forced failure", passed=False, witness={"got": "0"})
        return [SuiteReport(suite=name, max_k=1, checks=(check,))]

    monkeypatch.setattr(verify_mod, "run_suite", fake_run_suite)
    code, out, _ = run(capsys, "verify", "--suite", "bernoulli")
    assert code == 1
    assert "FAIL forced failure" in out


def test_verify_bad_bound(capsys):
    code, _, err = run(capsys, "verify", "--suite", "trees", "--max-k", "99")
    assert code == 2
    assert "max_k" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["bernoulli"])  # missing required --k
    assert exc.value.code == 2


def test_trees_bound(capsys):
    code, _, err = run(capsys, "trees", "--k", "40")
    assert code == 2
    assert "16" in err
