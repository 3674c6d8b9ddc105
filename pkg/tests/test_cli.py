import json
import os

import pytest

from sqspiral.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_and_cache_idempotent(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    cache = tmp_path / "table.bin"
    code, out, _ = run(capsys, "build", "--n", "1000", "--cache", str(cache))
    assert code == EXIT_OK
    assert "max_n=1000" in out and "c2_raw=" in out
    first = cache.read_bytes()
    code, _, _ = run(capsys, "build", "--n", "1000", "--cache", str(cache))
    assert code == EXIT_OK and cache.read_bytes() == first


def test_build_unwritable_path(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "build", "--n", "10",
                       "--cache", str(tmp_path / "no" / "dir" / "x.bin"))
    assert code == EXIT_IO and "i/o error" in err


def test_verify_suite_passes(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "verify", "table1")
    assert code == EXIT_OK
    assert "PASS  table1.winding_avg_5" in out
    assert "40/40 checks passed" in out
    assert "FAIL" not in out


def test_verify_deterministic_output(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    _, first, _ = run(capsys, "verify", "fig7")
    _, second, _ = run(capsys, "verify", "fig7")
    assert first == second


def test_verify_unknown_suite(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == EXIT_USAGE and "usage error" in err


def test_arms_json_contains_published_sequence(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "arms", "--group", "div:11", "--n", "600",
                       "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert any(a["members"][:4] == [22, 77, 154, 253] for a in doc["arms"])
    assert doc["rule_5_2"]["N"]["22"] is True


def test_arms_bad_group(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "arms", "--group", "div:0", "--n", "100")
    assert code == EXIT_USAGE and "usage error" in err


def test_fib_angles_match_published(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "fib", "--angles", "--count", "6")
    assert code == EXIT_OK
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    got = {int(i): float(v) for i, v in rows}
    for k, want in enumerate((45.0, 35.26, 56.57, 67.01, 88.34, 111.40), 1):
        assert got[k] == pytest.approx(want, abs=0.01)


def test_areas_commands(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "areas", "--bands", "10")
    assert code == EXIT_OK and out.startswith("index,value")
    code, out, _ = run(capsys, "areas", "--crossings", "6")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["crossings"] == [2, 18, 54, 110, 186, 282]
    assert doc["poly"] == "10*x^2 - 14*x + 6"


def test_primes_scan(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "primes", "--scan-d", "18", "--t", "60",
                       "--c-min", "-2", "--c-max", "2")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "a,b_hat,c,T,prime_count,density,coprime6"
    assert any(line.startswith("9,9,-1,") for line in out.splitlines())


def test_render_valid_svg(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    out_path = tmp_path / "fig10.svg"
    code, _, _ = run(capsys, "render", "--n", "300", "--group", "div:7",
                     "--arms", "--out", str(out_path))
    assert code == EXIT_OK
    import xml.etree.ElementTree as ET
    root = ET.parse(out_path).getroot()
    assert root.tag.endswith("svg") and "viewBox" in root.attrib
    again = tmp_path / "fig10b.svg"
    run(capsys, "render", "--n", "300", "--group", "div:7", "--arms",
        "--out", str(again))
    assert out_path.read_bytes() == again.read_bytes()


def test_config_file_and_env_cache(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "spiral.conf").write_text("output = json\nmax_n = 120\n")
    code, out, _ = run(capsys, "arms", "--group", "squares")
    assert code == EXIT_OK and json.loads(out)["max_n"] == 120
    (tmp_path / "spiral.conf").write_text("wrong = key\n")
    code, _, err = run(capsys, "arms", "--group", "squares")
    assert code == EXIT_USAGE and "config error" in err
    os.remove(tmp_path / "spiral.conf")
    cache = tmp_path / "c.bin"
    run(capsys, "build", "--n", "500", "--cache", str(cache))
    monkeypatch.setenv("SQSPIRAL_CACHE", str(cache))
    code, out, _ = run(capsys, "arms", "--group", "squares", "--n", "400",
                       "--format", "json")
    assert code == EXIT_OK
    assert any(a["members"][0] == 1 for a in json.loads(out)["arms"])
