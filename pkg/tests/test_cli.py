import json

import pytest

from burgebox.cli import main
from burgebox.sweep import CHECKS, SweepConfig, run_sweep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dmap(capsys):
    code, out, _ = run(capsys, "dmap", "5,3,2,2,1")
    assert code == 0 and out.strip() == "[9,3,1]"


def test_encode_decode(capsys):
    code, out, _ = run(capsys, "encode", "5,3,2,2,1")
    assert code == 0 and out.strip() == "babaaabbba"
    code, out, _ = run(capsys, "decode", "abbaba")
    assert code == 0 and out.strip() == "[5,2,1]"


def test_decode_json_round_trip(capsys):
    code, out, _ = run(capsys, "decode", "abbaba", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"word": "abbaba", "partition": [5, 2, 1]}


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "5,3,2,2,1")
    assert code == 0
    assert "word: babaaabbba" in out
    code, out, _ = run(capsys, "chain", "5,3,2,2,1", "--json")
    data = json.loads(out)
    assert data["states"][0] == [1, 2, 1, 0, 1] and data["states"][-1] == []


def test_oblak_and_chains(capsys):
    code, out, _ = run(capsys, "oblak", "f:(3,3,2,0,3,1,0,0,2)")
    assert code == 0 and out.strip() == "[25,17,10,2]"
    code, out, _ = run(capsys, "oblak-chains", "f:(3,0,1,1,0,0,0,1)", "--json")
    data = json.loads(out)
    assert len(data) == 2
    assert all(d["valuation"] == [9, 6, 3] for d in data)


def test_check_square(capsys):
    code, out, _ = run(capsys, "check-square", "f:(3,0,2,1,0,1,2,1)", "--index", "1")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "check-square", "f:(3,0,2,1,0,1,2,1)", "--index", "8")
    assert code == 0 and out.strip() == "false"


def test_fiber_json(capsys):
    code, out, _ = run(capsys, "fiber", "10,7,3", "--json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 18
    by_coords = {tuple(r["coords"]): r for r in rows}
    assert by_coords[(1, 1, 1)]["partition"] == [10, 7, 3]
    assert by_coords[(3, 3, 2)]["partition"] == [9, 5, 1, 1, 1, 1, 1, 1]
    assert by_coords[(3, 3, 2)]["parts"] == 8
    assert by_coords[(2, 1, 2)]["code"] == "abbaaababba"


def test_coords_maxparts_symmetry(capsys):
    code, out, _ = run(capsys, "coords", "[9,4^2,2,1]")
    assert code == 0 and out.strip() == "Q=[10,7,3] coords=(2,1,2)"
    code, out, _ = run(capsys, "maxparts", "10,7,3")
    assert out.strip() == "[9,5,1^6]"
    code, out, _ = run(capsys, "symmetry", "10,7,3", "--coords", "1,1,1")
    assert out.strip() == "(3,3,2)"
    code, out, _ = run(capsys, "symmetry", "10,7,3", "--coords", "2,1,2", "--positions", "2")
    assert out.strip() == "(2,3,2)"


def test_foata_hooks_durfee(capsys):
    code, out, _ = run(capsys, "foata", "10,7,3", "--coords", "1,1,1")
    assert code == 0 and out.split()[0] == "babaabaaaaa"
    code, out, _ = run(capsys, "hooks", "8,7,5")
    assert out.strip() == "[10,7,3]"
    code, out, _ = run(capsys, "durfee", "8,7,5")
    assert out.strip() == "3"


def test_verify(capsys):
    code, out, _ = run(
        capsys, "verify", "--partition", "[4^2,3,2^2]", "--trials", "2", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "ok"
    assert data["expected"] == [4, 3, 3, 2, 1]


def test_scan_max(capsys):
    code, out, _ = run(
        capsys, "scan-max", "--partition", "2,1", "--field", "2", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["max_type"] == [3] and data["status"] == "ok"


def test_sweep_vacuous(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "0", "--checks", "thm-main-vs-oblak")
    assert code == 0
    assert "0 failures" in out


def test_sweep_small(capsys):
    code, out, _ = run(
        capsys,
        "sweep", "--max-n", "8",
        "--checks", "lem-stats,prop-stats,thm-main-vs-oblak,cor-box",
        "--json",
    )
    assert code == 0
    results = json.loads(out)
    assert [r["check"] for r in results] == [
        "lem-stats", "prop-stats", "thm-main-vs-oblak", "cor-box",
    ]
    assert all(r["failures"] == 0 for r in results)


def test_sweep_matrix_dominance(capsys):
    code, out, _ = run(
        capsys,
        "sweep", "--max-n", "3", "--checks", "matrix-dominance", "--field", "2",
    )
    assert code == 0 and "0 failures" in out


def test_sweep_threads_deterministic(capsys):
    argv = ["sweep", "--max-n", "6", "--checks", "prop-stats,prop-khatami", "--json"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv, "--threads", "4")
    strip = lambda rows: [
        {k: v for k, v in r.items() if k != "elapsed"} for r in json.loads(rows)
    ]
    assert strip(out1) == strip(out2)


def test_usage_errors(capsys):
    code, _, err = run(capsys, "dmap", "3,x")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "decode", "abaa")
    assert code == 2
    code, _, err = run(capsys, "fiber", "4,3")
    assert code == 2  # not super-distinct
    code, _, err = run(capsys, "sweep", "--max-n", "3", "--checks", "not-a-check")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_env_field_default(capsys, monkeypatch):
    monkeypatch.setenv("BURGEBOX_FIELD", "101")
    code, out, _ = run(
        capsys, "verify", "--partition", "3,1", "--trials", "1", "--json"
    )
    assert code == 0
    assert json.loads(out)["field"] == 101


def test_sweep_reports_infeasible_check_instead_of_crashing(capsys):
    # dominance scans over a huge field exceed the matrix budget; the sweep
    # reports that check as failed with the reason and keeps going
    code, out, _ = run(
        capsys,
        "sweep", "--max-n", "3",
        "--checks", "matrix-dominance,prop-stats", "--field", "10007",
    )
    assert code == 1
    assert "infeasible configuration" in out
    assert "prop-stats" in out and "ok   prop-stats" in out


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(max_n=-1)
    with pytest.raises(ValueError):
        SweepConfig(max_n=3, checks=("bogus",))
    assert set(CHECKS) == {
        "lem-stats", "prop-stats", "prop-characterization", "thm-main-vs-oblak",
        "cor-box", "thm-oblakburge", "prop-khatami", "foata-hooks",
        "matrix-restriction", "matrix-dominance",
    }


def test_run_sweep_all_checks_tiny():
    # matrix-dominance needs a tiny field (its scan budget is p^slots);
    # everything else runs on a generic-sized one
    combinatorial = tuple(c for c in CHECKS if c != "matrix-dominance")
    results = run_sweep(SweepConfig(max_n=4, checks=combinatorial, field=101, trials=1))
    assert [r.name for r in results] == list(combinatorial)
    assert all(r.ok for r in results)
    assert all(r.instances > 0 for r in results)
    results = run_sweep(SweepConfig(max_n=4, checks=("matrix-dominance",), field=2))
    assert results[0].ok and results[0].instances == 12
