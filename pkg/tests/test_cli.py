"""CLI surface: output schemas, exit codes, determinism."""

import json

from grifchar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table1_tsv(capsys):
    code, out, _ = run_cli(capsys, "table1", "--format", "tsv")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    header, rows = lines[0], lines[1:]
    assert header.split("\t")[:3] == ["type", "h", "gamma"]
    assert len(rows) == 9
    by_type = {r.split("\t")[0]: r.split("\t") for r in rows}
    assert by_type["G_2"][1:6] == ["6", "48", "", "16", "48"]
    assert by_type["E_8"][1:4] == ["30", "900", "120"]
    assert all(r.split("\t")[-1] == "ok" for r in rows)


def test_table1_json(capsys):
    code, out, _ = run_cli(capsys, "table1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "grifchar/1"
    assert doc["all_ok"] is True
    assert len(doc["rows"]) == 9
    a_row = doc["rows"][0]
    assert a_row["type"] == "A_{n-1}"
    at_n5 = next(p for p in a_row["per_rank"] if p["n"] == 5)
    assert at_n5["computed"]["h"] == 5
    assert at_n5["computed"]["s"] == 20


def test_grif_json_golden(capsys):
    code, out, _ = run_cli(capsys, "grif", "A", "2", "--mu", "1,0", "--rep", "ad")
    assert code == 0
    doc = json.loads(out)
    assert doc["pairings"] == ["-6/1", "0/1"]
    assert doc["s_values"] == ["12/1", "12/1"]
    assert doc["c"] == "6/1"
    assert doc["levi"] == [2]
    assert doc["ray_ok"] is True
    assert doc["checks"] == {"direct_eq_closed": True, "anti_dominant": True}


def test_grif_highest_weight_rep(capsys):
    code, out, _ = run_cli(capsys, "grif", "A", "1", "--mu", "1", "--rep", "hw:1")
    assert code == 0
    doc = json.loads(out)
    assert doc["pairings"] == ["-1/1"]
    assert doc["c"] == "1/1"


def test_grif_rational_mu(capsys):
    code, out, _ = run_cli(capsys, "grif", "A", "1", "--mu", "1/2")
    assert code == 0
    doc = json.loads(out)
    assert doc["pairings"] == ["-2/1"]
    assert doc["mu"] == ["1/2"]


def test_grif_central_mu_exits_2(capsys):
    code, _, err = run_cli(capsys, "grif", "A", "2", "--mu", "0,0", "--rep", "ad")
    assert code == 2
    assert "CentralMu" in err


def test_grif_trivial_rep_exits_2(capsys):
    code, _, err = run_cli(capsys, "grif", "A", "2", "--mu", "1,0",
                           "--rep", "hw:0,0")
    assert code == 2
    assert "CentralKernelViolated" in err


def test_grif_illegal_rank_exits_2(capsys):
    code, _, err = run_cli(capsys, "grif", "G", "3", "--mu", "1,0,0")
    assert code == 2
    assert "IllegalRank" in err


def test_grif_bad_mu_arity_exits_2(capsys):
    code, _, err = run_cli(capsys, "grif", "A", "2", "--mu", "1")
    assert code == 2


def test_check_small_grid(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--families", "A1,A2,B2,G2",
        "--max-weight", "2", "--max-mu", "2", "--weyl-samples", "3",
    )
    assert code == 0
    assert "oracle_equivalence" in out
    assert "fail=0" in out
    assert not any("fail=" in l and not l.endswith("fail=0")
                   for l in out.splitlines() if "\tpass=" in l)


def test_check_empty_grid_warns(capsys):
    code, out, err = run_cli(capsys, "check", "--families", "A1",
                             "--max-weight", "0")
    assert code == 0
    assert "0 representations tested" in err
    assert "representations\t0" in out


def test_check_adjoint_only(capsys):
    code, out, _ = run_cli(capsys, "check", "--families", "B2",
                           "--rep-adjoint-only", "--max-mu", "3")
    assert code == 0
    assert "representations\t1" in out


def test_check_bad_family_exits_2(capsys):
    code, _, err = run_cli(capsys, "check", "--families", "H9")
    assert code == 2


def test_pclose_all(capsys):
    code, out, _ = run_cli(capsys, "pclose", "A", "2", "--mu", "1,1", "--all")
    assert code == 0
    doc = json.loads(out)
    assert doc["min_admissible_p"] == 3
    assert doc["quasi_constant"] is False
    assert doc["minuscule"] is False
    assert doc["max_ratio"] == "2/1"
    verdicts = {v["p"]: v["orbitally_p_close"] for v in doc["verdicts"]}
    assert verdicts[2] is False and verdicts[3] is True


def test_pclose_minuscule(capsys):
    code, out, _ = run_cli(capsys, "pclose", "A", "2", "--mu", "1,0", "--all")
    assert code == 0
    doc = json.loads(out)
    assert doc["quasi_constant"] is True
    assert doc["minuscule"] is True
    assert doc["min_admissible_p"] == 2


def test_pclose_central_warns(capsys):
    code, out, err = run_cli(capsys, "pclose", "A", "2", "--mu", "0,0",
                             "--p", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["central"] is True
    assert doc["verdicts"] == [{"p": 2, "orbitally_p_close": True}]
    assert "central" in err


def test_pclose_invalid_prime_exits_2(capsys):
    code, _, err = run_cli(capsys, "pclose", "A", "2", "--mu", "1,0", "--p", "4")
    assert code == 2
    assert "InvalidPrime" in err


def test_check_exits_1_on_failure(capsys, monkeypatch):
    import grifchar.cli as cli
    from grifchar.sweep import SweepReport

    failing = SweepReport()
    failing.add("oracle_equivalence", 3, 1,
                context={"system": "A2", "rep": "ad", "mu": [1, 0]})
    failing.reps_tested = 1
    monkeypatch.setattr(cli, "run_checks", lambda cfg: failing)
    code, out, _ = run_cli(capsys, "check", "--families", "A2")
    assert code == 1
    assert "first counterexample" in out
    assert '"invariant": "oracle_equivalence"' in out


def test_byte_identical_reruns(capsys):
    first = run_cli(capsys, "grif", "B", "2", "--mu", "0,1", "--rep", "ad")
    second = run_cli(capsys, "grif", "B", "2", "--mu", "0,1", "--rep", "ad")
    assert first == second
    t1 = run_cli(capsys, "table1", "--format", "tsv")
    t2 = run_cli(capsys, "table1", "--format", "tsv")
    assert t1 == t2
