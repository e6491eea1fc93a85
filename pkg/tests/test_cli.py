"""Command-line verbs: exit codes, rendering, JSON output, determinism."""
import json

import jsonschema
import pytest

from z2tk.cli import main


def test_verify_relations_text(capsys):
    assert main(["verify-relations"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("DEl (dim 32): PASS")
    assert out.count("  PASS  ") == 21
    assert "FAIL" not in out


def test_verify_relations_notes_zero_generators(capsys):
    assert main(["verify-relations", "--rep", "DE"]) == 0
    out = capsys.readouterr().out
    assert "generators represented by the zero matrix: Z" in out


def test_unknown_rep_exits_64(capsys):
    assert main(["verify-relations", "--rep", "bogus"]) == 64
    err = capsys.readouterr().err
    assert err.startswith("z2tk verify-relations:") and "bogus" in err


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--rep", "bogus"])
    assert exc.value.code == 64
    capsys.readouterr()


def test_probe_single_point(capsys):
    assert main(["probe", "--block", "D1", "--E", "2", "--lambda", "4"]) == 0
    out = capsys.readouterr().out
    assert "closure dim 4 (expected 4) PASS" in out
    assert out.rstrip().endswith("overall: PASS")


def test_probe_degenerate_point_exits_64(capsys):
    assert main(["probe", "--block", "D1", "--E", "0", "--lambda", "0"]) == 64
    assert "z2tk probe:" in capsys.readouterr().err


def test_mechanics_exit_codes(capsys):
    assert main(["mechanics", "--L", "L0"]) == 0
    capsys.readouterr()
    assert main(["mechanics", "--L", "Lg"]) == 2
    out = capsys.readouterr().out
    assert "NOT a total derivative" in out
    assert main(["mechanics"]) == 64
    assert "z2tk mechanics:" in capsys.readouterr().err


def test_mechanics_composed_action(capsys):
    assert main(["mechanics", "--action1", "--g", "mu*x*xbar"]) == 2
    out = capsys.readouterr().out
    assert "matches the published closed form modulo a total derivative: True" in out
    assert "supercharge image of the composed action is an exact derivative: True" in out


def test_decompose_renders_errata(capsys):
    assert main(["decompose"]) == 0
    out = capsys.readouterr().out
    assert "erratum (basis-vector) at D2 basis vector sigma:" in out
    assert "printed:" in out and "corrected:" in out


def test_intertwine_exits_zero(capsys):
    assert main(["intertwine"]) == 0
    out = capsys.readouterr().out
    assert "intertwiner dimension 0" in out


def test_json_output_validates_against_schema(capsys, report_schema):
    rc = main(["decompose", "--rep", "DEl", "--lambda-eq-E2", "--format", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    jsonschema.Draft202012Validator(report_schema).validate(payload)
    assert payload["extracted_4d"] is not None


def test_flags_work_after_the_verb(capsys):
    assert main(["mechanics", "--L", "L0", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lagrangian"] == "L0" and payload["ok"]


def test_output_file_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["dump", "--rep", "D1", "--format", "json", "--output", str(a)]) == 0
    assert main(["dump", "--rep", "D1", "--format", "json", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["dim"] == 8


def test_all_reports_every_criterion(capsys):
    assert main(["all"]) == 2
    out = capsys.readouterr().out
    for n in range(1, 12):
        assert f"criterion {n}: " in out
    assert "criterion 8: FAIL" in out
    assert out.count("criterion") == 11
    assert out.rstrip().endswith("overall: FAIL")
