from __future__ import annotations

import json
import subprocess
import sys

import pytest

from toroidal_freefield.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, UsageError, main, parse_relations


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_relations():
    assert parse_relations("1,2,7-10") == [1, 2, 7, 8, 9, 10]
    assert parse_relations(None) is None
    for bad in ("0", "11", "x", "", "3-"):
        with pytest.raises(UsageError):
            parse_relations(bad)
    with pytest.raises(UsageError):
        parse_relations("7", range(1, 7))


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--family", "d4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[1] == "relation\tindices\tsigns\tstatus\tdetail"
    assert "# summary pass=54 fail=0" in out
    assert any(l.startswith("10\t1,2\t+\tpass") for l in lines)


def test_verify_json_is_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "--family", "a-even", "--format", "json")
    _, second, _ = run(capsys, "verify", "--family", "a-even", "--format", "json", "--threads", "2")
    assert first == second
    data = json.loads(first)
    assert data["summary"]["elapsed_ms"] == 0
    assert data["variant_probe"] == {"variant": "proof", "pass": data["summary"]["pass"], "fail": 0, "failures": []}
    _, timed, _ = run(capsys, "verify", "--family", "a-even", "--format", "json", "--timing")
    assert json.loads(timed)["summary"]["elapsed_ms"] > 0


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--family", "a-odd", "--keep-null", "--relations", "2")
    assert code == EXIT_FAIL
    assert "\tfail\t" in out


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--family", "a-odd", "--n", "2")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--family", "a-odd", "--relations", "12")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--family", "nope")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--family", "d4", "--threads", "0")[0] == EXIT_USAGE
    assert run(capsys, "oracle", "--family", "d4", "--relations", "7")[0] == EXIT_USAGE
    code, _, err = run(capsys, "oracle", "--family", "d4", "--scheme", "int")
    assert code == EXIT_USAGE and "--zero-mode" in err
    assert run(capsys, "kaehler-selftest", "--bound", "-1")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "d-series", "--relations", "5",
                       "--modes", "1", "--depth", "1", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["summary"]["fail"] == 0 and data["summary"]["elapsed_ms"] == 0
    code, out, _ = run(capsys, "oracle", "--family", "a-even", "--relations", "4", "--modes", "1",
                       "--depth", "1", "--scheme", "int", "--zero-mode", "polarized")
    assert code == EXIT_OK and "# summary pass=18 fail=0" in out


def test_tables_dump_and_kaehler(capsys):
    code, out, _ = run(capsys, "tables", "--family", "a-odd", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["level"] == ["-1", "0"]
    code, out, _ = run(capsys, "dump-rho", "--family", "d4", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["images"]["c"] == {"scalar": "-2"}
    code, out, _ = run(capsys, "kaehler-selftest", "--bound", "2")
    assert code == EXIT_OK and "a db = -b da\t625/625" in out


def test_figures(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--family", "d4", "--figures", str(tmp_path), "--format", "json")
    assert code == EXIT_OK
    [fig] = json.loads(out)["figures"]
    assert fig.endswith(".png") and (tmp_path / "verify-d4-n2-theorem.png").stat().st_size > 0
    run(capsys, "tables", "--family", "d4", "--figures", str(tmp_path))
    assert (tmp_path / "cartan-d4-n2.png").exists()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "toroidal_freefield", "tables", "--family", "d4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "D4(3)" in res.stdout


def test_type_alias(capsys):
    code, out, _ = run(capsys, "tables", "--type", "d4", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["type"] == "d4"
