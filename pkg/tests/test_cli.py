import csv
import io
import json
import os

import pytest

from nilporb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbits_json(capsys):
    code, out, err = run(capsys, "orbits", "C2", "--format", "json")
    assert code == 0 and err == ""
    records = json.loads(out)
    assert len(records) == 4
    assert records[0]["spec"] == "C2:4"
    assert records[0]["dim"] == 8
    by_spec = {r["spec"]: r for r in records}
    assert by_spec["C2:2,1,1"]["birationallyRigid"] is True
    assert by_spec["C2:2,2"]["rigid"] is False


def test_orbits_csv(capsys):
    code, out, err = run(capsys, "orbits", "B2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4
    assert rows[0]["spec"] == "B2:5"
    assert {"dim", "h2dim", "rigid", "birigid"} <= set(rows[0])


def test_orbits_table_and_text(capsys):
    code, out, _ = run(capsys, "orbits", "A2", "--format", "table")
    assert code == 0 and "A2:2,1" in out
    code, out, _ = run(capsys, "orbits", "A2")
    assert code == 0 and "A2:3" in out


def test_namikawa_table(capsys):
    code, out, err = run(capsys, "namikawa", "A2:3", "--format", "table")
    assert code == 0
    assert "cartanDim" in out and "2" in out and "A2" in out


def test_namikawa_json_leaves(capsys):
    code, out, _ = run(capsys, "namikawa", "D4:5,3", "--format", "json")
    rec = json.loads(out)
    assert rec["cartanDim"] == 3 and rec["weylOrder"] == 8
    assert len(rec["leaves"]) == 3


def test_datum_roundtrip(capsys):
    code, out, _ = run(capsys, "datum", "C5:5,5", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["levi"]["blocks"] == [2, 2] and rec["levi"]["tailRank"] == 1
    assert rec["tailOrbit"]["partition"] == [1, 1]
    assert rec["degree"] == 1 and rec["orbit"] == "C5:5,5"


def test_induce_verb(capsys):
    code, out, _ = run(capsys, "induce", "D4", "--levi", "2,2|0:-",
                       "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["induced"] == "D4:4,4:II"
    assert rec["degree"] == 1 and rec["birational"] is True


def test_rigid_and_birigid(capsys):
    code, out, _ = run(capsys, "rigid", "C2:2,1,1")
    assert code == 0 and "is rigid" in out
    code, out, _ = run(capsys, "rigid", "C2:2,2", "--format", "json")
    assert code == 0 and json.loads(out) == {"orbit": "C2:2,2", "rigid": False}
    code, out, _ = run(capsys, "birigid", "C2:2,2", "--format", "json")
    assert code == 0 and json.loads(out)["birationallyRigid"] is False


def test_label_roundtrip(capsys):
    code, out, _ = run(capsys, "label", "C3", "--xi", "2;2;0",
                       "--nilp", "[2];[2]")
    assert code == 0
    assert "symmetry order: 48" in out
    assert "(2|1)" in out


def test_label_d_very_even_tail(capsys):
    code, out, _ = run(capsys, "label", "D5", "--xi", "3;0;0;0;0",
                       "--nilp", "[1];[2,2,2,2]:II", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["adjoint"]["tailOrbit"]["tag"] == "II"
    assert rec["adjoint"]["tailOrbit"]["text"] == "[2,2,2,2]:II"
    # the sign of xi rides on the last odd block of the label levi
    assert rec["label"]["levi"]["blocks"] == [4, 1]
    assert rec["label"]["xi"] == ["0", "-3"]


def test_label_all_zero_xi_is_full_tail(capsys):
    # every coordinate zero: the centralizer is the whole algebra and
    # the label sits on the rigid zero orbit of the tail
    code, out, _ = run(capsys, "label", "B2", "--xi", "0;0")
    assert code == 0
    assert "label tail: [1,1,1,1,1]" in out
    assert "symmetry order: 1" in out


def test_bad_orbit_spec_diagnostics(capsys):
    code, out, err = run(capsys, "datum", "C2:xx")
    assert code == 2 and out == ""
    assert "bad orbit spec (column 4)" in err
    assert "C2:xx" in err and "^" in err


def test_bad_type_in_spec(capsys):
    code, _, err = run(capsys, "datum", "E8:1")
    assert code == 2 and "column 1" in err


def test_invalid_partition_rejected(capsys):
    code, _, err = run(capsys, "namikawa", "B3:3,3")
    assert code == 2 and "summing to 6" in err


def test_verify_cover_suite(capsys):
    code, out, err = run(capsys, "verify", "C2", "--suite", "cover")
    assert code == 0 and err == ""
    assert "cover: ok" in out


def test_verify_all_suites_small(capsys):
    code, out, _ = run(capsys, "verify", "C2", "--samples", "60")
    assert code == 0
    for suite in ("cover", "dims", "weyl", "datum", "birigid", "injectivity"):
        assert "%s: ok" % suite in out


def test_verify_rank_cap(capsys):
    code, _, err = run(capsys, "verify", "B9", "--suite", "weyl")
    assert code == 2 and "rank cap" in err


def test_verify_rejects_missing_type(capsys):
    code, _, err = run(capsys, "verify", "--suite", "weyl")
    assert code == 2 and "type" in err


def test_cache_roundtrip_identical_output(capsys, tmp_path):
    first = run(capsys, "orbits", "C3", "--format", "json")
    cache_root = os.environ["NILPORB_CACHE_DIR"]
    assert os.path.isdir(cache_root) and os.listdir(cache_root)
    second = run(capsys, "orbits", "C3", "--format", "json")
    assert first == second
    # bypassing the cache prints the same bytes too
    third = run(capsys, "orbits", "C3", "--format", "json", "--no-cache")
    assert first == third


def test_verify_cache_audit(capsys):
    run(capsys, "orbits", "C2", "--format", "json")
    code, out, err = run(capsys, "verify", "--cache")
    assert code == 0 and "cache ok" in out
    cache_root = os.environ["NILPORB_CACHE_DIR"]
    victim = None
    for name in os.listdir(cache_root):
        if name.endswith(".json"):
            victim = os.path.join(cache_root, name)
            break
    assert victim
    with open(victim, "w") as fh:
        fh.write("{broken")
    code, out, err = run(capsys, "verify", "--cache")
    assert code == 3
    assert "unreadable" in err and "cache audit failed" in err


def test_table_gap_exit_code(capsys, tmp_path, monkeypatch, request):
    import nilporb
    from nilporb.tables import table_path

    with open(table_path()) as fh:
        lines = [l for l in fh if not l.startswith("family so-row")]
    gap = tmp_path / "gap_table.txt"
    gap.write_text("".join(lines))
    monkeypatch.setenv("NILPORB_TABLE_PATH", str(gap))
    # results memoized under the real table must not leak in, nor
    # gap-table results leak out to later tests
    nilporb.clear_caches()
    request.addfinalizer(nilporb.clear_caches)
    code, out, err = run(capsys, "namikawa", "B4:9")
    assert code == 4
    assert "reduction-table-gap" in err


def test_report_writes_files(capsys, tmp_path):
    out_dir = tmp_path / "rep"
    code, out, _ = run(capsys, "report", "C2", "--out", str(out_dir))
    assert code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == ["dimensions.png", "hasse.png", "namikawa.csv",
                     "orbits.csv", "sheets.csv"]
    with open(out_dir / "orbits.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    with open(out_dir / "namikawa.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert any(r["orbit"] == "C2:4" for r in rows)


def test_sheets_verb(capsys):
    code, out, _ = run(capsys, "sheets", "C2", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert len(rec["sheets"]) == 5
    assert len(rec["birational"]) == 4
    quotients = {b["orbit"]: b["quotientDim"] for b in rec["birational"]}
    assert quotients["C2:4"] == 2 and quotients["C2:2,2"] == 1


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "nilporb" in capsys.readouterr().out


def test_jobs_flag(capsys):
    code, out, _ = run(capsys, "verify", "C3", "--suite", "datum", "--jobs", "2")
    assert code == 0 and "datum: ok" in out
