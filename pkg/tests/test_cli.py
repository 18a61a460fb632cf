from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ruledmotion.cli import main
from ruledmotion.serialization import motion_from_json

from .goldens import DATA, QUARTIC_MOTION


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_analyze(capsys):
    code, out = run(["analyze", "--input", DATA / "sextic_line.json"], capsys)
    assert code == 0
    assert out["kinematic"] and out["g"] == "t^2-6t+10"


def test_analyze_nonkinematic(capsys):
    code, out = run(["analyze", "--input", DATA / "nonkinematic_line.json"], capsys)
    assert code == 0 and out["kinematic"] is False


def test_synthesize_with_injection(capsys):
    code, out = run(
        ["synthesize", "--input", DATA / "sextic_line.json", "--inject-q", DATA / "sextic_primal.json"], capsys
    )
    assert code == 0
    assert motion_from_json(out) == QUARTIC_MOTION
    assert out["minimal"] is True and out["h"] == "t^2-6t+10"


def test_synthesize_nonkinematic_exit_code(capsys):
    code = main(["synthesize", "--input", str(DATA / "nonkinematic_line.json")])
    assert code == 3
    assert "NotKinematicError" in capsys.readouterr().err


def test_verify_and_failure(capsys, tmp_path):
    code, out = run(
        ["verify", "--input", DATA / "quartic_motion.json", "--line", DATA / "sextic_line.json"], capsys
    )
    assert code == 0 and out["ok"] and out["h"] == "t^2-6t+10"
    code, out = run(
        ["verify", "--input", DATA / "quartic_motion.json", "--line", DATA / "cylindroid_line.json"], capsys
    )
    assert code == 4 and out["ok"] is False


def test_factor_commands(capsys):
    code, out = run(["factor", "--input", DATA / "revolute_extended_motion.json", "--order", "t^2+1"], capsys)
    assert code == 0
    assert out["factors"][0]["h"]["primal"] == ["0", "0", "0", "1"]
    code, out = run(
        ["factor", "--input", DATA / "translation_extended_motion.json", "--peel-translation", "t^2+1,1"], capsys
    )
    assert code == 0
    assert motion_from_json({"motion": out["quotient"]}) == QUARTIC_MOTION


def test_interpolate_with_mesh(capsys, tmp_path):
    mesh = tmp_path / "surface.obj"
    code, out = run(["interpolate", "--input", DATA / "three_lines.json", "--mesh", mesh, "--samples", 8], capsys)
    assert code == 0
    assert len(out["axes"]) == 4 and out["residuals"]["refactor"] < 1e-9
    assert mesh.read_text().count("\nf ") == 7


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["analyze", "--input", str(bad)]) == 1
    assert main(["analyze", "--input", str(tmp_path / "missing.json")]) == 1
    assert main(["interpolate", "--input", str(DATA / "sextic_line.json")]) == 1


def test_mode_mismatch(capsys):
    assert main(["analyze", "--input", str(DATA / "sextic_line.json"), "--mode", "float"]) == 1


def test_degenerate_interpolation_exit_code(capsys, tmp_path):
    doc = json.loads((DATA / "three_lines.json").read_text())
    doc["lines"][1] = doc["lines"][0]
    path = tmp_path / "same.json"
    path.write_text(json.dumps(doc))
    assert main(["interpolate", "--input", str(path)]) == 6


def test_synthesize_then_verify_pipe():
    synth = subprocess.run(
        [sys.executable, "-m", "ruledmotion", "synthesize", "--input", str(DATA / "cylindroid_line.json")],
        capture_output=True,
        text=True,
        check=True,
    )
    check = subprocess.run(
        [sys.executable, "-m", "ruledmotion", "verify"], input=synth.stdout, capture_output=True, text=True
    )
    assert check.returncode == 0, check.stderr
    assert json.loads(check.stdout)["h"] == "t^4+2t^2+1"


@pytest.mark.parametrize("command", ["analyze", "synthesize", "verify", "factor", "interpolate"])
def test_help(command):
    with pytest.raises(SystemExit) as exc:
        main([command, "--help"])
    assert exc.value.code == 0
