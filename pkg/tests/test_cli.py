import json

from eaqmds.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# cosets
# ---------------------------------------------------------------------------

def test_cosets_negacyclic_partition(capsys):
    code, out, _ = run_cli(capsys, "cosets", "5", "2", "26")
    assert code == 0
    assert "cosets: 14" in out
    assert "C_13 = {13}" in out
    assert "C_7 = {7, 19}  paired-with-C_9" in out


def test_cosets_skew_symmetric_flag(capsys):
    code, out, _ = run_cli(capsys, "cosets", "13", "2", "17")
    assert code == 0
    assert "C_17 = {17}  skew-symmetric" in out


def test_cosets_all_singletons(capsys):
    code, out, _ = run_cli(capsys, "cosets", "5", "3", "8")
    assert code == 0
    assert "cosets: 8" in out
    assert "C_4 = {4}  skew-symmetric" in out


def test_cosets_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "cosets", "5", "3", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["rn"] == 24 and len(payload["cosets"]) == 8


def test_cosets_invalid_spec_exit_2(capsys):
    code, _, err = run_cli(capsys, "cosets", "5", "4", "26")
    assert code == 2 and "divide" in err


# ---------------------------------------------------------------------------
# decompose and code
# ---------------------------------------------------------------------------

def test_decompose_output(capsys):
    code, out, _ = run_cli(capsys, "decompose", "5", "2", "26",
                           "--cosets", "13,15,17,19")
    assert code == 0
    assert "T_ss  = [7, 9, 17, 19]" in out
    assert "|T_ss| = 4" in out
    assert "dual-containing: false" in out


def test_code_command_with_oracles(capsys):
    code, out, _ = run_cli(capsys, "code", "5", "3", "8", "--cosets", "1,4,7",
                           "--rank-oracle", "--exact-distance")
    assert code == 0
    assert "[8, 5, >=4]" in out
    assert "[[8, 3, 4; 1]]_5" in out
    assert "exact distance: 4" in out


def test_code_command_corrupted_elements_exit_1(capsys):
    code, _, err = run_cli(capsys, "code", "5", "2", "26", "--elements", "13,15")
    assert code == 1
    assert "not closed" in err


def test_code_distance_cap_flag(capsys):
    code, out, _ = run_cli(capsys, "--distance-cap", "2", "--format", "json",
                           "code", "5", "3", "8", "--cosets", "1,4,7",
                           "--exact-distance")
    assert code == 0
    assert json.loads(out)["exact_distance"] == "exceeds-cap"


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------

def test_family_rows_csv(capsys):
    code, out, _ = run_cli(capsys, "family", "QM1_H", "13", "--h", "7",
                           "--no-qmds-datapoints")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,q,h,n,k,d,c,mds,verified"
    assert lines[1] == "QM1_H,13,7,24,21,3,1,true,bch-only"
    assert len(lines) == 1 + 7  # d = 3..9


def test_family_rows_json_rank_oracle(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "family", "TENTH_3", "13",
                           "--rank-oracle")
    assert code == 0
    rows = json.loads(out)
    assert [r["d"] for r in rows] == [2, 4, 6, 8]
    assert all(r["verified"] == "rank-oracle" for r in rows)


def test_family_inapplicable_exit_2(capsys):
    code, _, err = run_cli(capsys, "family", "Q2P1_NEGA", "7")
    assert code == 2 and "mod 4" in err


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def test_catalog_table_1_reproduction(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--tables", "1")
    assert code == 0
    lines = [l for l in out.strip().splitlines()[1:] if not l.startswith("#")]
    qs = sorted({int(l.split(",")[1]) for l in lines})
    assert qs == [9, 13, 17, 19, 25, 29]
    for line in lines:
        family, q, h, n, k, d, c, mds, _ = line.split(",")
        q, n, k, d, c = int(q), int(n), int(k), int(d), int(c)
        assert n == q * q + 1 and c == 4 and k == q * q + 7 - 2 * d
        assert q + 3 <= d <= 3 * q - 1 and d % 2 == 0
        assert mds == "true"


def test_catalog_out_file_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(["--out", str(out1), "catalog", "--tables", "5,6"]) == 0
    assert main(["--out", str(out2), "catalog", "--tables", "5,6"]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_catalog_empty_family_filter(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--families", "TENTH_7", "--q", "13")
    assert code == 0
    assert out.strip() == "family,q,h,n,k,d,c,mds,verified"


def test_catalog_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"tables": [4], "format": "csv"}))
    code, out, _ = run_cli(capsys, "--config", str(cfg), "--format", "json", "catalog")
    assert code == 0
    rows = json.loads(out)
    assert {r["q"] for r in rows} == {13, 23, 43, 53}


def test_catalog_bad_config_exit_2(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "xml"}))
    code, _, err = run_cli(capsys, "--config", str(cfg), "catalog", "--tables", "4")
    assert code == 2 and "format" in err


def test_catalog_bad_table_exit_2(capsys):
    code, _, err = run_cli(capsys, "catalog", "--tables", "3")
    assert code == 2 and "unknown tables" in err


def test_catalog_json_has_no_comment_rows(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "catalog", "--tables", "4")
    assert code == 0
    rows = json.loads(out)
    assert all(set(r) == {"family", "q", "h", "n", "k", "d", "c", "mds", "verified"}
               for r in rows)


def test_catalog_q_range(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--q-range", "5:9",
                           "--families", "QM1_H")
    assert code == 0
    lines = out.strip().splitlines()[1:]
    assert {int(l.split(",")[1]) for l in lines} == {5, 9}


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_small_scope(capsys):
    code, out, _ = run_cli(capsys, "verify", "--q-max", "5", "--no-exact-distance")
    assert code == 0
    assert "0 failed" in out
    assert "[ok] Q2P1_NEGA q=5" in out
    assert "descent-canary" in out
    assert "note:" in out


def test_verify_family_filter(capsys):
    code, out, _ = run_cli(capsys, "verify", "--q-max", "9",
                           "--families", "QM1_H", "--no-exact-distance")
    assert code == 0
    assert "Q2P1_NEGA" not in out.replace("note:", "")  # only notes may mention others
    assert "[ok] QM1_H q=5 h=3" in out
