import json
import subprocess
import sys

import pytest

from ppsym.cli import count, main, report_to_json, run_verification


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_matrix_dumps(capsys):
    assert run(capsys, "matrix", "U", "2")[:2] == (0, "1/2,0\n1,2")
    assert run(capsys, "matrix", "w", "2", "--format", "csv")[:2] == (0, "1,0\n2,4")
    code, out, _ = run(capsys, "matrix", "st", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"order": 1, "entries": [["1"]]}


def test_matrix_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["matrix", "V", "2"])
    assert exc.value.code == 2
    assert run(capsys, "matrix", "U", "0")[0] == 2


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["count", "cssc", "3", "--method", "det"], "49"),
        (["count", "tssc", "3", "--method", "det"], "7"),
        (["count", "cssc", "2", "--method", "orbit"], "4"),
        (["count", "cssc", "3", "--method", "paths"], "49"),
        (["count", "tssc", "3", "--method", "bruteforce"], "7"),
    ],
)
def test_count(capsys, argv, expected):
    assert run(capsys, *argv)[:2] == (0, expected)


def test_count_guard_and_unsupported_method(capsys):
    code, _, err = run(capsys, "count", "cssc", "4", "--method", "orbit")
    assert code == 2 and "n <= 3" in err
    assert run(capsys, "count", "tssc", "2", "--method", "orbit")[0] == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_methods_agree(n):
    assert len({count("cssc", n, m) for m in ("det", "bruteforce", "orbit", "paths")}) == 1
    assert len({count("tssc", n, m) for m in ("det", "bruteforce")}) == 1


def test_verify_determinant_chain(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5")
    assert code == 0
    report = json.loads(out)
    assert report["all_passed"]
    assert [r["n"] for r in report["records"]] == [1, 2, 3, 4, 5]
    assert report["records"][2]["tssc_implied"] == "7"
    for r in report["records"]:
        assert set(r["identities"].values()) == {"pass"}
        assert "oracles" not in r


def test_verify_with_oracles(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--with-oracles", "--json", str(path))
    assert code == 0
    assert out.splitlines() == [f"n={n}: ok" for n in range(1, 5)]
    report = json.loads(path.read_text())
    r3 = report["records"][2]
    assert r3["oracles"]["cssc_bruteforce"] == "49"
    assert r3["oracles"]["tssc_bruteforce"] == "7"
    assert r3["oracles"]["K_matching_gf"] == "49/8"
    assert report["records"][3]["identities"]["orbit_matchings_eq_det"] == "skipped(guard)"
    assert report["records"][3]["identities"]["det_st_eq_det_w"] == "pass"


def test_verify_usage_error(capsys):
    assert run(capsys, "verify", "--max-n", "0")[0] == 2


def test_verify_reports_failures(monkeypatch, capsys):
    from ppsym import matrices

    real = matrices.build_st

    def broken(n):
        m = real(n)
        return m.scaled(2) if n == 2 else m

    monkeypatch.setattr(matrices, "build_st", broken)
    code, out, _ = run(capsys, "verify", "--max-n", "3")
    assert code == 1
    rec = json.loads(out)["records"][1]
    assert rec["identities"]["det_st_eq_det_w"] == "fail"


def test_report_round_trip_and_no_floats():
    report = run_verification(3, with_oracles=True)
    text = report_to_json(report)
    assert report_to_json(json.loads(text)) == text

    def walk(x):
        if isinstance(x, float):
            raise AssertionError(f"float in report: {x}")
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(report)


def test_dump_graph(capsys):
    code, out, _ = run(capsys, "dump-graph", "K", "1")
    assert code == 0 and out.splitlines()[0] == "0 1 1/2"
    code, out, _ = run(capsys, "dump-graph", "orbit", "3")
    assert code == 0 and len(out.splitlines()) == 50


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ppsym", "count", "cssc", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
