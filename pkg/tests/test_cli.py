import json

import pytest

from reeder import cli, oracles
from reeder.laurent import ONE
from reeder.rootsys import build_root_system, dominance_leq
from reeder.stembridge import suites


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def reports(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_verify_b_closedform(capsys):
    code, out, _ = run(capsys, "verify", "--family", "B", "--rank", "2", "--rank-max", "6", "--mode", "closedform")
    assert code == 0
    rs = reports(out)
    assert rs and all(r["status"] == "pass" for r in rs)
    assert set(rs[0]) == {"family", "rank", "weight", "check", "status", "lhs", "rhs", "ms"}


def test_verify_c_oracle(capsys):
    code, out, _ = run(capsys, "verify", "--family", "c", "--rank", "2", "--rank-max", "3", "--mode", "oracle")
    assert code == 0
    assert {r["check"] for r in reports(out)} == {"reeder", "base", "row-on-oracle"}


def test_oracle_rank_limit(capsys):
    code, _, err = run(capsys, "verify", "--family", "B", "--rank", "5", "--mode", "oracle")
    assert code == 2 and "--force" in err


def test_all_mode_skips_large_oracle(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--family", "B", "--rank", "5", "--cache-dir", str(tmp_path))
    assert code == 0
    assert [r["status"] for r in reports(out) if r["check"] == "oracle"] == ["skipped"]


def test_bad_ranges(capsys):
    assert run(capsys, "verify", "--family", "B", "--rank", "1")[0] == 2
    assert run(capsys, "verify", "--family", "B", "--rank", "3", "--rank-max", "2")[0] == 2


def test_corrupted_formula_fails(capsys, monkeypatch):
    monkeypatch.setattr(oracles, "pw_bipartition", lambda bp, n=None: ONE)
    code, out, _ = run(capsys, "verify", "--family", "B", "--rank", "2", "--mode", "oracle")
    assert code == 1
    bad = [r for r in reports(out) if r["status"] == "fail"]
    assert bad and all(r["lhs"] is not None and r["rhs"] is not None for r in bad)


def test_corrupted_closed_form_fails(capsys, monkeypatch):
    monkeypatch.setattr(suites, "cb_closed", lambda m, n: ONE)
    code, out, _ = run(capsys, "verify", "--family", "B", "--rank", "3", "--mode", "recurrence")
    assert code == 1


def test_cache_round_trip(capsys, tmp_path):
    args = ("verify", "--family", "C", "--rank", "4", "--mode", "recurrence", "--cache-dir", str(tmp_path))
    first = run(capsys, *args)
    path = tmp_path / "C4.json"
    assert first[0] == 0 and path.exists()
    table = cli.solved_table("C", 4, tmp_path)
    assert cli._table_valid(table, cli._rows("C", 4))
    second = run(capsys, *args)
    assert second[0] == 0
    assert [r["status"] for r in reports(first[1])] == [r["status"] for r in reports(second[1])]


def test_corrupted_cache_is_recomputed(tmp_path, caplog):
    good = cli.solved_table("B", 3, tmp_path)
    path = tmp_path / "B3.json"
    obj = json.loads(path.read_text())
    obj["table"]["entries"][-1][1] = obj["table"]["entries"][0][1]
    path.write_text(json.dumps(obj))
    assert cli.solved_table("B", 3, tmp_path).entries == good.entries
    assert "recomputing" in caplog.text
    path.write_text("not json")
    assert cli.solved_table("B", 3, tmp_path).entries == good.entries


def test_identities(capsys):
    assert run(capsys, "identities", "--family", "C", "--rank-max", "12")[0] == 0
    assert run(capsys, "identities", "--family", "B", "--rank-max", "10")[0] == 0


def test_dump_row(capsys):
    code, out, _ = run(capsys, "dump", "--family", "C", "--rank", "3", "--weight", "1,1,0")
    assert code == 0
    obj = json.loads(out)
    rs = build_root_system("C", 3)
    keys = [tuple(mu) for mu, _ in obj["coeffs"]]
    assert (1, 1, 0) in keys
    assert all(dominance_leq(mu, (1, 1, 0), rs) for mu in keys)


def test_dump_table_entry(capsys):
    code, out, _ = run(capsys, "dump", "--family", "B", "--rank", "2", "--weight", "0,0", "--table")
    assert code == 0 and json.loads(out)["weight"] == [0, 0]


def test_dump_errors(capsys):
    assert run(capsys, "dump", "--family", "C", "--rank", "3", "--weight", "1,0,0")[0] == 2
    assert run(capsys, "dump", "--family", "C", "--rank", "3", "--weight", "1,1")[0] == 2
    assert run(capsys, "dump", "--family", "C", "--rank", "3", "--weight", "0,0,0")[0] == 2
    assert run(capsys, "dump", "--family", "C", "--rank", "3")[0] == 2


def test_plain_and_out(capsys, tmp_path):
    out_file = tmp_path / "r.txt"
    code, out, _ = run(capsys, "verify", "--family", "B", "--rank", "2", "--mode", "closedform",
                       "--plain", "--out", str(out_file))
    assert code == 0 and out == ""
    lines = out_file.read_text().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_deterministic(capsys):
    args = ("verify", "--family", "C", "--rank", "3", "--mode", "closedform")
    a = [(r["check"], r["weight"], r["status"]) for r in reports(run(capsys, *args)[1])]
    b = [(r["check"], r["weight"], r["status"]) for r in reports(run(capsys, *args)[1])]
    assert a == b
