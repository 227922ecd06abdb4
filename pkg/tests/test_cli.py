"""The command-line interface: output shapes, exit codes, golden files,
and byte-for-byte determinism."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from hopftrees.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "hopftrees", *argv],
        capture_output=True, text=True)
    return proc


# ---------------------------------------------------------------------------
# in-process subcommands


def test_product_ck(capsys):
    assert main(["product", "--algebra", "ck",
                 "--input", "f1", "--input", "f2"]) == 0
    assert capsys.readouterr().out == "1*f1 f2\n"


def test_coproduct_shuffle(capsys):
    assert main(["coproduct", "--algebra", "shuffle", "--input", "f1.f2"]) == 0
    out = capsys.readouterr().out
    assert out == "1*1 (x) f1.f2 + 1*f1 (x) f2 + 1*f1.f2 (x) 1\n"


def test_antipode_quasi_shuffle(capsys):
    assert main(["antipode", "--algebra", "qshuffle", "--input", "f1.f1"]) == 0
    assert capsys.readouterr().out == "1*f2 + 1*f1.f1\n"


def test_pi_shuffles_the_forest(capsys):
    assert main(["pi", "--input", "f1 f2"]) == 0
    assert capsys.readouterr().out == "1*f1.f2 + 1*f2.f1\n"


def test_zhao_elements(capsys):
    assert main(["zhao", "--max-weight", "2"]) == 0
    assert capsys.readouterr().out == (
        "k1 = 1*[[]]\n"
        "eps1 = 1*[[]]\n"
        "k2 = 1/2*[[],[]] + 1*[[[]]]\n"
        "eps2 = 1/2*[[],[]]\n"
    )


def test_qsym_product(capsys):
    assert main(["product", "--algebra", "qsym",
                 "--input", "M(1)", "--input", "M(1)"]) == 0
    assert capsys.readouterr().out == "1*M(2) + 2*M(1,1)\n"


def test_gl_antipode(capsys):
    assert main(["antipode", "--algebra", "gl", "--input", "[[],[]]"]) == 0
    assert capsys.readouterr().out == "1*[[],[]] + 2*[[[]]]\n"


def test_planar_diamond_unit(capsys):
    assert main(["product", "--algebra", "planar",
                 "--input", "[]", "--input", "[[]]"]) == 0
    assert capsys.readouterr().out == "1*[[]]\n"


def test_foissy_antipode(capsys):
    assert main(["antipode", "--algebra", "foissy", "--input", "[] [[]]"]) == 0
    assert capsys.readouterr().out == "-1*[] [] [] + 1*[[]] []\n"


def test_foissy_coproduct(capsys):
    assert main(["coproduct", "--algebra", "foissy", "--input", "[] []"]) == 0
    assert capsys.readouterr().out == (
        "1*I (x) [] [] + 2*[] (x) [] + 1*[] [] (x) I\n")


def test_lyndon_listing(capsys):
    assert main(["lyndon", "--max-weight", "3"]) == 0
    assert capsys.readouterr().out == "f1\nf2\nf3\nf2.f1\n"


def test_hall_listing(capsys):
    assert main(["hall", "--max-weight", "2"]) == 0
    assert capsys.readouterr().out == (
        "f1 | tree=f1 | std=- | E=1*e(-1)\n"
        "f2 | tree=f2 | std=- | E=1*e(-2)\n"
    )


def test_frame_text(capsys):
    assert main(["frame", "--max-weight", "2", "--format", "text"]) == 0
    assert capsys.readouterr().out == (
        "1 * e(-1) v^1 z^-1\n"
        "1/2 * e(-2) v^2 z^-1\n"
        "1/2 * e(-1)e(-1) v^2 z^-2\n"
    )


def test_check_suite_passes(capsys):
    assert main(["check", "--suite", "all", "--max-weight", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith("PASS: ")
    assert "(2 informational)" in out.splitlines()[-1]


# ---------------------------------------------------------------------------
# exit codes


def test_parse_error_exits_2(capsys):
    assert main(["coproduct", "--algebra", "ck", "--input", "[[]"]) == 2
    err = capsys.readouterr().err
    assert err == "error: unbalanced bracket at offset 3\n"


def test_domain_error_exits_1(capsys):
    assert main(["antipode", "--algebra", "gl", "--input", "f1"]) == 1
    err = capsys.readouterr().err
    assert "unlabeled root" in err


def test_pi_needs_labels(capsys):
    assert main(["pi", "--input", "[]"]) == 1
    assert "fully labeled" in capsys.readouterr().err


def test_product_needs_two_inputs():
    with pytest.raises(SystemExit) as exc:
        main(["product", "--algebra", "ck", "--input", "f1"])
    assert exc.value.code == 2


def test_unknown_algebra_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["coproduct", "--algebra", "nope", "--input", "f1"])
    assert exc.value.code == 2


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# golden files and determinism


def test_frame_json_golden():
    proc = run_cli("frame", "--max-weight", "4", "--format", "json")
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "frame_w4.json").read_text()
    payload = json.loads(proc.stdout)
    assert payload["max_weight"] == 4
    assert len(payload["terms"]) == 15


def test_lyndon_golden():
    proc = run_cli("lyndon", "--max-weight", "5")
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "lyndon_w5.txt").read_text()


def test_hall_golden():
    proc = run_cli("hall", "--max-weight", "4")
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "hall_w4.txt").read_text()


def test_output_is_deterministic():
    first = run_cli("frame", "--max-weight", "4", "--format", "json")
    second = run_cli("frame", "--max-weight", "4", "--format", "json")
    assert first.stdout == second.stdout
    assert run_cli("hall", "--max-weight", "3").stdout == run_cli(
        "hall", "--max-weight", "3").stdout
