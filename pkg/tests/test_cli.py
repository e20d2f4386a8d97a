"""End-to-end tests for the command-line interface."""

import json

import pytest

from yosp.cli import main


def test_build_and_verify_roundtrip(tmp_path, capsys):
    mod = str(tmp_path / "m.json")
    assert main(["elementary", "--alpha", "-1", "--beta", "0",
                 "--out", mod]) == 0
    assert main(["verify", "rtt", mod, "--samples", "20", "--seed", "1"]) == 0
    assert main(["verify", "central", mod]) == 0
    assert main(["verify", "gauss", mod, "--at", "7"]) == 0
    out = capsys.readouterr().out
    assert "rtt: pass" in out and "central: pass" in out and "gauss: pass" in out


def test_serialization_is_stable(tmp_path):
    m1 = tmp_path / "a.json"
    m2 = tmp_path / "b.json"
    main(["elementary", "--alpha=-5/2", "--beta=-3/2", "--out", str(m1)])
    main(["elementary", "--alpha=-5/2", "--beta=-3/2", "--out", str(m2)])
    assert m1.read_bytes() == m2.read_bytes()


def test_tensor_and_analysis_commands(tmp_path, capsys):
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    t = str(tmp_path / "t.json")
    q = str(tmp_path / "q.json")
    main(["elementary", "--alpha", "-1", "--beta", "0", "--out", a])
    main(["elementary", "--alpha=-5/2", "--beta=-3/2", "--out", b])
    assert main(["tensor", "--in", a, "--in", b, "--out", t]) == 0
    assert main(["singular", t]) == 0
    assert "dim 2" in capsys.readouterr().out
    # a reducible module makes the irreducibility check exit nonzero
    assert main(["irreducible", t]) == 1
    assert main(["quotient", t, "--out", q]) == 0
    assert main(["irreducible", q]) == 0


def test_drinfeld_and_classify(tmp_path, capsys):
    mod = str(tmp_path / "m.json")
    main(["elementary", "--alpha", "-2", "--beta", "0", "--out", mod])
    assert main(["drinfeld", mod]) == 0
    assert "P(u) = (u-2)(u-1)" in capsys.readouterr().out
    assert main(["classify", mod]) == 0
    assert "finite-dimensional" in capsys.readouterr().out


def test_character_and_osp_json_output(tmp_path, capsys):
    mod = str(tmp_path / "m.json")
    main(["elementary", "--alpha", "-2", "--beta", "0", "--out", mod])
    capsys.readouterr()
    assert main(["character", mod, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["total"] == 6
    assert main(["osp", mod]) == 0
    assert "V(2) + V(0)" in capsys.readouterr().out


def test_small_verma_build_and_character(tmp_path, capsys):
    mod = str(tmp_path / "m.json")
    assert main(["small-verma", "--alpha=-1/3", "--beta", "0",
                 "--depth", "6", "--out", mod]) == 0
    assert main(["character", mod]) == 0


def test_demo_commands(capsys):
    assert main(["demo", "example-tpr"]) == 0
    out = capsys.readouterr().out
    assert "dim 9" in out and "dim 8" in out and "dim 1" in out
    assert "(u-5/2)(u-1/2) / (u-3/2)^2" in out
    assert main(["demo", "closing-example"]) == 0
    assert "match: True" in capsys.readouterr().out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["elementary", "--alpha", "-1"])
    assert exc.value.code == 2


def test_truncated_analysis_reports_error(tmp_path, capsys):
    mod = str(tmp_path / "m.json")
    main(["small-verma", "--alpha=-1/3", "--beta", "0",
          "--depth", "4", "--out", mod])
    assert main(["irreducible", mod]) == 2
    assert "error" in capsys.readouterr().err
