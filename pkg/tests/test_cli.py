"""End-to-end CLI checks: output shape, determinism, cache, artifacts."""

import json

import pytest

from axial import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_roots_text(capsys):
    code, out = run(capsys, ["roots", "--type", "G2"])
    assert code == 0
    assert "type G2" in out
    assert "horizontal components: A1" in out


def test_roots_json(capsys):
    code, out = run(capsys, ["roots", "--type", "B3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["type"] == "B3"
    assert payload["horizontal_components"] == ["A1", "A1"]


def test_bigon_flag(capsys):
    code, out = run(capsys, ["roots", "--type", "A3", "--bigon", "2,2"])
    assert code == 0
    assert "A3(2,2)" in out


def test_interval_coarse_grid(capsys):
    code, out = run(capsys, ["interval", "--type", "G2", "--coarse"])
    assert code == 0
    rows = [l.split() for l in out.splitlines() if l.strip()]
    assert rows == [["2", "1"], ["6", "6"], ["1", "2"]]


def test_interval_coarse_deterministic(capsys):
    _, a = run(capsys, ["interval", "--type", "C2", "--coarse", "--format", "json"])
    _, b = run(capsys, ["interval", "--type", "C2", "--coarse", "--format", "json"])
    assert a == b
    # thread count must not influence output
    _, c = run(capsys, ["interval", "--type", "C2", "--coarse", "--threads", "1"])
    _, d = run(capsys, ["interval", "--type", "C2", "--coarse", "--threads", "7"])
    assert c == d


def test_interval_coarse_cache_hit_identical(tmp_path, capsys):
    argv = ["interval", "--type", "G2", "--coarse",
            "--cache-dir", str(tmp_path)]
    _, cold = run(capsys, argv)
    assert list(tmp_path.glob("*.json"))
    _, warm = run(capsys, argv)
    assert warm == cold


def test_interval_report_artifacts(tmp_path, capsys):
    out = tmp_path / "rep"
    code, _ = run(capsys, ["interval", "--type", "G2", "--coarse",
                           "--out", str(out)])
    assert code == 0
    assert (out / "coarse_G2.csv").exists()
    assert (out / "coarse_G2.png").exists()
    assert (out / "coarse_G2.png").read_bytes()[:4] == b"\x89PNG"


def test_interval_group_artifacts(tmp_path, capsys):
    out = tmp_path / "rep"
    code, _ = run(capsys, ["interval", "--type", "G2", "--group", "W",
                           "--out", str(out)])
    assert code == 0
    assert (out / "interval_G2_W.json").exists()
    assert (out / "interval_G2_W.csv").exists()
    assert (out / "interval_G2_W.png").exists()
    payload = json.loads((out / "interval_G2_W.json").read_text())
    assert payload["elements"]


def test_lattice_check(capsys):
    code, out = run(capsys, ["lattice-check", "--type", "G2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["lattice"] is True


def test_ncb_count(capsys):
    code, out = run(capsys, ["ncb", "--n", "5", "--count"])
    assert code == 0
    assert "252" in out


def test_ncb_enumerate_matches_count(capsys):
    code, out = run(capsys, ["ncb", "--n", "3", "--enumerate", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["partitions"]) == 20


def test_mid(capsys):
    code, out = run(capsys, ["mid", "--n", "3"])
    assert code == 0
    assert "20" in out


def test_hurwitz_spherical(capsys):
    code, out = run(capsys, ["hurwitz", "--type", "B2", "--spherical"])
    assert code == 0
    assert "transitive" in out


def test_presentation_g2(capsys):
    code, out = run(capsys, ["presentation", "--type", "G2", "--group", "W"])
    assert code == 0
    assert "a₅a₁ = a₁a₋₃" in out


def test_nf(capsys):
    code, out = run(capsys, ["nf", "--n", "2", "--word", "1,-2,3"])
    assert code == 0
    assert "power" in out or "Δ" in out or "u" in out


def test_nf_deterministic(capsys):
    _, a = run(capsys, ["nf", "--n", "3", "--word", "2,5,-1", "--format", "json"])
    _, b = run(capsys, ["nf", "--n", "3", "--word", "2,5,-1", "--format", "json"])
    assert a == b


def test_selftest_quick(capsys):
    code, out = run(capsys, ["selftest", "--quick"])
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert lines and all(l.startswith("PASS") for l in lines)
    assert "0 failure(s)" in out


def test_invalid_type_fails(capsys):
    code = cli.main(["roots", "--type", "Z9"])
    assert code == 1
    assert "error" in capsys.readouterr().err
