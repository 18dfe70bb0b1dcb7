import json
import subprocess
import sys

import pytest

from flagcohom.cli import build_report, comparable, emit_report, main, parse_report, run_command


def run(*argv):
    code, report, error = run_command(list(argv))
    return code, report, error


def test_ring_flag():
    code, report, _ = run("ring", "flag", "--betti", "--basis", "4")
    assert code == 0
    result = report["result"]["ring"]
    assert result["dimensions"] == [1, 2, 2, 1]
    assert result["betti"] == {"b0": 1, "b2": 2, "b4": 2, "b6": 1}
    assert set(result["basis"]["monomials"]) == {"x1*x2", "x2^2"}
    assert report["engine"]["convention"] == "c1(L_i)=x_i"
    assert report["engine"]["version"]


@pytest.mark.parametrize("argv", [
    ("ring", "hu", "--u", "1,2"),
    ("ring", "mkl", "--params", "1,2"),
    ("ring", "cp2", "--params", "3,1"),
    ("ring", "cp3", "--params", "0,1,2", "--field", "Qsqrtm3"),
    ("ring", "cpn", "--m", "3"),
])
def test_ring_kinds(argv):
    code, report, error = run(*argv)
    assert code == 0, error
    assert report["result"]["ring"]["relations"]


def test_iso_mkl():
    code, report, _ = run("iso", "--family", "mkl", "--lhs", "1,1", "--rhs", "1,0")
    assert code == 0
    assert report["result"]["verdict"]["tag"] == "Iso"
    assert "elapsed" not in report["result"]["verdict"]
    assert report["timing"]["total"] >= 0


def test_iso_families():
    _, report, _ = run("iso", "--family", "cp2", "--lhs", "3,1", "--rhs", "4,3")
    assert report["result"]["verdict"]["tag"] == "NonIso"
    _, report, _ = run("iso", "--family", "cp3", "--lhs", "0,1,2", "--rhs", "0,2,4")
    assert report["result"]["verdict"]["tag"] == "Iso"


def test_iso_raw(tmp_path):
    code, ring, _ = run("ring", "hu", "--u", "1,0", "--json")
    path = tmp_path / "a.json"
    path.write_text(json.dumps(ring["result"]["ring"]))
    code, report, error = run("iso", "--family", "raw", "--lhs", str(path), "--rhs", str(path))
    assert code == 0, error
    assert report["result"]["verdict"]["tag"] == "Iso"


def test_unknown_is_warning():
    code, report, _ = run("iso", "--family", "mkl", "--lhs", "1,3", "--rhs", "2,5",
                          "--method", "groebner", "--max-gb-seconds", "0")
    assert code == 0
    assert report["result"]["verdict"]["tag"] == "Unknown"
    assert report["warnings"]


def test_exit_codes():
    assert run("ring", "hu", "--u", "1,x")[0] == 2
    assert run("ring", "nope")[0] == 2
    assert run("iso", "--family", "mkl", "--lhs", "0,0", "--rhs", "1,0")[0] == 2
    assert run("iso", "--family", "raw", "--lhs", "/no/such/file", "--rhs", "{}")[0] == 2


def test_engine_error(tmp_path):
    paths = []
    for field in ("Q", "Qsqrtm3"):
        ring = run("ring", "hu", "--u", "1,0", "--field", field)[1]["result"]["ring"]
        path = tmp_path / f"{field}.json"
        path.write_text(json.dumps(ring))
        paths.append(str(path))
    code, report, error = run("iso", "--family", "raw", "--lhs", paths[0], "--rhs", paths[1])
    assert code == 1 and report is None and error


def test_families_and_verify():
    _, report, _ = run("families", "cp2", "--prime-limit", "40")
    rows = report["result"]["members"]
    assert [r["p"] for r in rows] == [7, 13, 19, 31, 37]
    code, report, _ = run("verify", "--suite", "weyl")
    assert code == 0 and report["result"]["all_passed"]


def test_classify_worker_independence():
    a = run("classify", "--coprime", "--max", "5")[1]
    b = run("classify", "--coprime", "--max", "5", "--workers", "2")[1]
    assert comparable(a)["result"] == comparable(b)["result"]


@pytest.mark.parametrize("argv", [
    ("classify", "--coprime", "--max", "4"),
    ("iso", "--family", "mkl", "--lhs", "1,1", "--rhs", "1,2"),
    ("families", "cp3", "--k-max", "5"),
])
def test_text_json_round_trip(argv):
    report = run(*argv)[1]
    for mode in ("json", "text"):
        assert parse_report(emit_report(report, mode)) == report
    back = parse_report(emit_report(parse_report(emit_report(report, "json")), "text"))
    assert back == report


def test_empty_report():
    report = build_report("classify", {}, {"classification": {"classes": [], "class_count": 0}}, 0.0)
    assert parse_report(emit_report(report, "json"))["result"]["classification"]["class_count"] == 0
    assert report["warnings"] == []


def test_json_deterministic():
    argv = ["classify", "--coprime", "--max", "4", "--json"]
    outs = [subprocess.run([sys.executable, "-m", "flagcohom", *argv], capture_output=True,
                           text=True, check=True).stdout for _ in range(2)]
    a, b = (json.loads(o) for o in outs)
    assert comparable(a) == comparable(b)
    assert json.dumps(comparable(a)) == json.dumps(comparable(b))


def test_main_prints(capsys):
    assert main(["ring", "flag", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["ring"]["dimensions"] == [1, 2, 2, 1]
