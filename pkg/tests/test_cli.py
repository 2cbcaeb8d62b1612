import json

from altkit import cli
from altkit.core import Algebra


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_describe_roundtrip(capsys):
    code, out, _ = run(capsys, "describe", "--algebra", "quaternions",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    again = Algebra.from_dict(data)
    assert again.to_dict() == data


def test_describe_text(capsys):
    code, out, _ = run(capsys, "describe", "--algebra", "complex")
    assert code == 0
    assert "dimension 2" in out


def test_check_associative_exit_zero(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "quaternions",
                       "--identity", "associative", "--format", "json")
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_check_left_alt_exit_one_with_witness(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "ak",
                       "--param", "k=1", "--param", "a11=1", "--param", "a12=1",
                       "--identity", "left-alt", "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert data["holds"] is False
    assert data["witness"] is not None
    assert data["witness"]["defect"] != ["0"] * 4


def test_check_partial_wiring(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "ak", "--param", "k=2",
                       "--identity", "partial-left-alt", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is True
    assert data["method"] == "exhaustive-basis"


def test_check_partial_wiring_sphere(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "quaternions",
                       "--identity", "partial-right-alt", "--format", "json")
    assert code == 0


def test_check_strictly_middle(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "tc",
                       "--param", "a=1", "--param", "h=1",
                       "--identity", "strictly-middle", "--format", "json")
    assert code == 0
    assert json.loads(out)["strict"] is True


def test_classify_quaternion_point(capsys):
    code, out, _ = run(capsys, "classify", "--family", "tn",
                       "--param", "a=-1", "--param", "g=1",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "H"
    assert data["witness_verified"] is True


def test_units_subcommand(capsys):
    code, out, _ = run(capsys, "units", "--algebra", "quaternions",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "sphere"
    assert data["equation"] == {"x2": "1", "y2": "1", "z2": "1", "rhs": "1"}
    assert len(data["points"]) <= 50


def test_nucleus_subcommand(capsys):
    code, out, _ = run(capsys, "nucleus", "--algebra", "quaternions",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["dim"] == 1


def test_decompose_subcommand(capsys):
    code, out, _ = run(capsys, "decompose", "--algebra", "quaternions",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["tp_params"]["delta2"] == "1"
    assert data["verdicts"]["anticommutation"] is True


def test_lieify_subcommand(capsys):
    code, out, _ = run(capsys, "lieify", "--algebra", "tp",
                       "--param", "delta2=1", "--param", "beta2=-1",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["jacobi"] is True
    assert data["classification"]["type"] == "g1_plus_g37"
    assert data["classification"]["beta"] == "2"


def test_file_input(tmp_path, capsys):
    from altkit import catalog

    path = tmp_path / "alg.json"
    path.write_text(catalog.quaternions().dumps())
    code, out, _ = run(capsys, "check", "--file", str(path),
                       "--identity", "associative")
    assert code == 0


def test_usage_errors(capsys):
    code, _, err = run(capsys, "describe", "--algebra", "nope")
    assert code == 2 and "unknown family" in err

    code, _, err = run(capsys, "describe", "--algebra", "ak", "--param", "a11")
    assert code == 2

    code, _, err = run(capsys, "describe", "--file", "/does/not/exist")
    assert code == 2

    code, _, err = run(capsys, "describe", "--algebra", "tn", "--file", "x")
    assert code == 2 and "exactly one" in err


def test_verify_paper_group(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "ak")
    assert code == 0
    assert out.count("PASS") == 4


def test_verify_paper_full_run(capsys):
    code, out, _ = run(capsys, "verify-paper")
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) >= 20
    failing = [l for l in lines if l.startswith("FAIL")]
    # the one honest failure: no real basis change turns the beta < 0
    # brackets into the compact canonical table
    assert [l.split()[1] for l in failing] == ["lie.case-witnesses"]
    assert code == 1


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "locus",
                       "--format", "json")
    assert code == 0
    rows = json_lines(out)
    assert all(row["passed"] for row in rows)
    assert len(rows) == 5


def test_verify_paper_unknown_group(capsys):
    code, _, err = run(capsys, "verify-paper", "--only", "bogus")
    assert code == 2


def test_eps_env_default(monkeypatch):
    from altkit import core

    monkeypatch.setenv("ALTKIT_EPS", "1e-3")
    assert core.default_eps() == 1e-3
    monkeypatch.delenv("ALTKIT_EPS")
    assert core.default_eps() == 1e-9
