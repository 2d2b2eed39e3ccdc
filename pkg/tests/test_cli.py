import json
import subprocess
import sys

import pytest

from coreduce.cli import main


def run_cli(args):
    """Invoke main() in-process, capturing stdout and the exit code."""
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def test_rootsys_json():
    code, out = run_cli(["rootsys", "G2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["weyl_order"] == 12
    assert payload["positive_roots"] == 6


def test_json_is_byte_identical_across_runs():
    a = run_cli(["classify", "A2", "[2,1]"])
    b = run_cli(["classify", "A2", "[2,1]"])
    assert a == b
    code, out = a
    assert code == 1
    assert list(json.loads(out)) == sorted(json.loads(out))


def test_torus_check_exit_codes_and_certificate():
    code, out = run_cli(["torus-check", "--weights", "5,-5"])
    assert code == 0
    code, out = run_cli(["torus-check", "--weights", "4,-4,6,-6"])
    assert code == 1
    assert json.loads(out)["certificate"]["coeffs"] == [3, 0, 0, 2]


def test_hilbert_basis_command():
    code, out = run_cli(["hilbert-basis", "--weights", "4,-4,6,-6"])
    assert code == 0
    gens = {tuple(g) for g in json.loads(out)["generators"]}
    assert gens == {(1, 1, 0, 0), (0, 0, 1, 1), (3, 0, 0, 2), (0, 3, 2, 0)}


def test_bad_slice_command():
    code, out = run_cli(["bad-slice", "A1", "[6]"])
    assert code == 0 and json.loads(out)["bad"]
    code, out = run_cli(["bad-slice", "G2", "[0,1]"])
    assert code == 1 and not json.loads(out)["bad"]


def test_components_command():
    code, out = run_cli(["components", "A2", "[3,1]"])
    assert code == 0
    cands = json.loads(out)["candidates"]
    assert all(c["dimension"] >= 1 for c in cands)


def test_covariant_vanish_command():
    code, out = run_cli(
        ["covariant-vanish", "A2", "[2,1]", "--target", "[1,0]", "--degree", "3"]
    )
    assert code == 0
    assert json.loads(out)["vanishes_on_all"]


def test_classify_exit_zero_on_yes():
    code, out = run_cli(["classify", "A2", "[1,1]"])
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["coreduced"] in ("yes", "yes_paper_proof")


def test_usage_errors_exit_two():
    assert run_cli(["no-such-command"])[0] == 2
    assert run_cli([])[0] == 2
    assert run_cli(["rootsys", "Z9"])[0] == 2
    assert run_cli(["classify", "A2", "[1,0,0]"])[0] == 2


def test_resource_limit_exit_three():
    code, _ = run_cli(
        ["--limit-states", "10", "verify-paper", "--suite", "appendixB"]
    )
    assert code == 3


def test_env_override(monkeypatch):
    monkeypatch.setenv("COREDUCE_LIMIT_STATES", "10")
    code, _ = run_cli(["verify-paper", "--suite", "appendixB"])
    assert code == 3


def test_text_output_mode():
    code, out = run_cli(["--output", "text", "rootsys", "A2"])
    assert code == 0
    assert "weyl_order: 6" in out


def test_fast_suites_pass():
    for suite in ["torus", "sl2", "classical", "semisimple", "appendixA"]:
        code, out = run_cli(["verify-paper", "--suite", suite])
        assert code == 0, (suite, out)
        payload = json.loads(out)
        assert payload["ok"]
        assert all(c["ok"] for c in payload["suites"][suite])


def test_unknown_suite_is_usage_error():
    assert run_cli(["verify-paper", "--suite", "nonsense"])[0] == 2


def test_console_script_installed():
    out = subprocess.run(
        [sys.executable, "-m", "coreduce.cli", "rootsys", "A1"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["rank"] == 1
