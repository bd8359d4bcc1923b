import csv
import io
import json
import subprocess
import sys

import pytest

from nullcone.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_eval_fixture_csv(capsys):
    code, out, _ = run(capsys, "eval", "--fixture", "hyperbolic", "--a", "1", "--m", "2",
                       "--t0", "-1", "--t1", "1", "--samples", "5", "--format", "csv")
    assert code == 0
    table = rows(out)
    assert len(table) == 5
    mid = table[2]
    assert float(mid["t"]) == 0.0
    assert [float(mid[f"gamma{i}"]) for i in range(1, 5)] == [1.0, 0.5, -1.0, 0.5]


def test_csv_floats_round_trip(capsys):
    _, out, _ = run(capsys, "eval", "--f", "sin(t)/3", "--g", "exp(t)", "--m", "0.3", "--samples", "7")
    for row in rows(out):
        for i in range(1, 5):
            text = row[f"gamma{i}"]
            assert repr(float(text)) == text


def test_eval_gamma_w_row_is_w(capsys):
    code, out, _ = run(capsys, "smarandache", "--kind", "gamma-w", "--psi", "t", "--m", "2",
                       "--t0", "-1", "--t1", "1", "--samples", "3")
    assert code == 0
    mid = rows(out)[1]
    got = [float(mid[f"gamma{i}"]) for i in range(1, 5)]
    assert got == pytest.approx([-0.4, -0.2, -0.4, 0.2], abs=1e-12)


def test_eval_flags_singular_rows(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "gamma-w", "--psi", "t", "--with-curvatures",
                       "--samples", "3")
    assert code == 3
    flags = [r["flag"] for r in rows(out)]
    assert "singular" in flags


def test_eval_with_frame_and_curvatures_json(capsys):
    code, out, _ = run(capsys, "eval", "--with-frame", "--with-curvatures", "--format", "json",
                       "--samples", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["samples"] == 3
    row = doc["rows"][1]
    assert (row["h"], row["k1"], row["k2"]) == pytest.approx((0.0, 1.0, 0.0), abs=1e-12)
    assert row["flag"] is None


def test_samples_must_be_at_least_two(capsys):
    code, _, err = run(capsys, "eval", "--samples", "1")
    assert code == 2
    assert "samples must be ≥ 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--f", "sin(t"],
        ["eval", "--f", "t"],
        ["eval", "--fixture", "elliptic"],
        ["eval", "--metric", "diag(1,1,1,1)"],
        ["eval", "--t0", "1", "--t1", "0"],
        ["smarandache", "--psi", "t"],
        ["smarandache", "--kind", "gamma-zeta-n", "--phi1", "t"],
        ["eval", "--format", "xml"],
        ["frame", "--format", "csv"],
        ["nonsense"],
    ],
)
def test_config_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_frame_worked_example(capsys):
    code, out, _ = run(capsys, "frame", "--m", "2", "--t", "0")
    assert code == 0
    (pt,) = json.loads(out)["points"]
    assert pt["N"] == pytest.approx([-0.2, 0.4, 0.2, 0.4])
    assert [pt["curvatures"][k] for k in ("h", "k1", "k2")] == pytest.approx([0, 1, 0], abs=1e-12)
    assert max(pt["gram_residuals"].values()) <= 1e-9
    assert max(pt["frenet_residuals"].values()) <= 1e-8


def test_frame_trigonometric(capsys):
    _, out, _ = run(capsys, "frame", "--fixture", "trigonometric", "--t", "0.7")
    c = json.loads(out)["points"][0]["curvatures"]
    assert [c["h"], c["k1"], c["k2"]] == pytest.approx([0, -1, 0], abs=1e-12)


def test_frame_singular_point(capsys):
    code, out, _ = run(capsys, "frame", "--f", "t", "--g", "t", "--samples", "3")
    assert code == 3
    assert {p["flag"] for p in json.loads(out)["points"]} == {"singular"}


def test_unwritable_output(capsys, tmp_path):
    target = tmp_path / "missing" / "out.csv"
    code, _, err = run(capsys, "eval", "--output", str(target))
    assert code == 4
    assert "cannot write" in err


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--suite", "frame-gram")[0] == 0
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2
    code, out, _ = run(capsys, "verify", "--suite", "smarandache-curvature-audit")
    assert code == 0
    verdicts = [
        r["verdict"]
        for c in json.loads(out)["suites"][0]["checks"]
        if c["name"].startswith("audit[")
        for r in c["details"]["records"]
    ]
    assert "mismatch" in verdicts
    assert run(capsys, "verify", "--suite", "smarandache-curvature-audit", "--strict")[0] == 1


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma1", "--format", "text", "--seed", "3")
    assert code == 0
    assert "seed 3" in out.splitlines()[0]


def test_config_file_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"fixture": "trigonometric", "samples": 4, "m": 1.0}))
    _, out, _ = run(capsys, "eval", "--config", str(cfg), "--format", "json")
    doc = json.loads(out)
    assert doc["config"]["fixture"] == "trigonometric"
    assert len(doc["rows"]) == 4
    _, out, _ = run(capsys, "eval", "--config", str(cfg), "--samples", "6", "--format", "json")
    doc = json.loads(out)
    assert len(doc["rows"]) == 6
    assert doc["config"]["m"] == 1.0


def test_config_file_angles_and_tolerances(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"kind": "gamma-w", "angles": {"psi": "0"}, "samples": 3}))
    code, out, _ = run(capsys, "smarandache", "--config", str(cfg), "--format", "json")
    assert code == 0
    cfg.write_text(json.dumps({"tolerances": {"null": 1e-11}}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--suite", "canonical-null")
    assert code == 0
    assert json.loads(out)["header"]["tolerances"]["null"] == 1e-11


def test_bad_config_files(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert run(capsys, "eval", "--config", str(cfg))[0] == 2
    cfg.write_text("{not json")
    assert run(capsys, "eval", "--config", str(cfg))[0] == 2
    assert run(capsys, "eval", "--config", str(tmp_path / "absent.json"))[0] == 2


def test_byte_identical_files(tmp_path):
    # the output path is echoed in the header, so reuse it
    path = tmp_path / "audit.json"
    outputs = []
    for _ in range(2):
        code = main(["verify", "--suite", "smarandache-tangent", "--output", str(path)])
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0 and out.startswith("nullcone ")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nullcone.cli", "eval", "--samples", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("t,gamma1")
