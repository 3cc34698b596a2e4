"""End-to-end command-line checks: goldens, determinism, exit codes."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"

# golden bytes were produced under the always-available numpy backend; the
# jit backend agrees numerically but not bitwise in the last digit
GOLDEN_ENV = {"CORRWALK_BACKEND": "numpy"}

GOLDEN_CASES = [
    ("dist_basic.csv", "dist --a 0.3 --d 0.8 --alpha 0.4 --n 6"),
    ("dist_basic.json", "dist --a 0.3 --d 0.8 --alpha 0.4 --n 6 --format json"),
    ("dist_oracle.csv", "dist --a 0.35 --d 0.8 --alpha 0.5 --n 8 --oracle"),
    ("cf_grid.csv", "cf --a 0.3 --d 0.8 --alpha 0.4 --n 8 --points 5"),
    ("cf_grid.json", "cf --a 0.3 --d 0.8 --alpha 0.4 --n 8 --points 5 --format json"),
    ("moment_m3.csv", "moment --a 0.3 --d 0.8 --alpha 0.4 --n 12 --m 3"),
    ("moment_m3.json", "moment --a 0.3 --d 0.8 --alpha 0.4 --n 12 --m 3 --format json"),
    ("symmetry_sym.csv", "symmetry --a 0.6 --d 0.6 --alpha 0.5"),
    ("symmetry_sym.json", "symmetry --a 0.6 --d 0.6 --alpha 0.5 --format json"),
    ("symmetry_asym.csv", "symmetry --a 0.6 --d 0.6 --alpha 0.3"),
    ("absorb_all.csv", "absorb --a 0.6 --d 0.6 --alpha 0.5 --N 6 --all"),
    ("absorb_all.json", "absorb --a 0.6 --d 0.6 --alpha 0.5 --N 6 --all --format json"),
    ("absorb_inf.json", "absorb --a 0.3 --d 0.8 --alpha 0.5 --N inf --k 3 --format json"),
    ("limit_density.csv", "limit --theta 0.5 --x-points 3"),
    ("limit_variance.csv", "limit --variance --a 0.6"),
    ("limit_variance.json", "limit --variance --a 0.6 --format json"),
    (
        "simulate_walk.csv",
        "simulate --a 0.3 --d 0.8 --alpha 0.4 --steps 6 --samples 5000 --seed 9 --against-exact",
    ),
    (
        "simulate_absorb.json",
        "simulate --a 0.3 --d 0.8 --alpha 0.5 --steps 400 --samples 20000 --seed 7"
        " --N 6 --k 3 --against-exact --format json",
    ),
]


def run_cli(argv, out=None, pin_backend=False):
    cmd = [sys.executable, "-m", "corrwalk"] + argv
    if out is not None:
        cmd += ["--out", str(out)]
    env = dict(os.environ)
    if pin_backend:
        env.update(GOLDEN_ENV)
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


@pytest.mark.parametrize("golden_name,command", GOLDEN_CASES, ids=[g for g, _ in GOLDEN_CASES])
def test_golden_files(golden_name, command, tmp_path):
    out = tmp_path / golden_name
    result = run_cli(command.split(), out=out, pin_backend=True)
    assert result.returncode == 0, result.stderr
    assert result.stdout == ""
    assert out.read_bytes() == (GOLDEN_DIR / golden_name).read_bytes()


def test_repeat_invocation_is_byte_identical(tmp_path):
    argv = "simulate --a 0.3 --d 0.8 --alpha 0.4 --steps 12 --samples 3000 --seed 21".split()
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli(argv, out=a).returncode == 0
    assert run_cli(argv, out=b).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_stdout_matches_file_output(tmp_path):
    argv = "dist --a 0.3 --d 0.8 --alpha 0.4 --n 5".split()
    to_stdout = run_cli(argv)
    out = tmp_path / "x.csv"
    assert run_cli(argv, out=out).returncode == 0
    assert to_stdout.stdout == out.read_text()
    assert "\r" not in out.read_text()


def test_csv_and_json_carry_identical_numbers():
    base = "dist --a 0.35 --d 0.8 --alpha 0.5 --n 9".split()
    csv_run = run_cli(base)
    json_run = run_cli(base + ["--format", "json"])
    rows = [line.split(",") for line in csv_run.stdout.splitlines()
            if line and not line.startswith("#") and not line.startswith("position")]
    csv_values = {int(pos): float(prob) for pos, prob in rows}
    doc = json.loads(json_run.stdout)
    json_values = {int(pos): float(prob) for pos, prob in doc["payload"]["rows"]}
    assert csv_values == json_values
    assert doc["schema_version"] == "1"
    assert doc["params"]["n"] == 9


def test_exit_code_two_on_malformed_flags(tmp_path):
    bad_cases = [
        "dist --a 0.3 --d 0.8 --alpha 0.4",  # missing --n
        "dist --a 0.3 --d 0.8 --alpha 0.4 --n 0",  # invalid time
        "dist --a 1.5 --d 0.8 --alpha 0.4 --n 5",  # a out of range
        "dist --a 0.3 --d 0.8 --alpha 1.4 --n 5",  # alpha out of range
        "dist --d 0.8 --alpha 0.4 --n 5",  # missing --a
        "dist --a 0.3 --d 0.8 --alpha 0.4 --n 5 --bogus",  # unknown flag
        "moment --a 0.3 --d 0.8 --alpha 0.4 --n 5 --m 0",
        "absorb --a 0.3 --d 0.8 --alpha 0.4 --N nope --k 1",
        "absorb --a 0.3 --d 0.8 --alpha 0.4 --N inf",  # missing --k
        "absorb --a 0.3 --d 0.8 --alpha 0.4 --N inf --k 2 --all",
        "limit --a 0.6",  # neither --variance nor --theta
        "limit --theta 1.5",
        "limit --variance --a 0.6 --d 0.7",  # needs a = d
        "simulate --a 0.3 --d 0.8 --alpha 0.4 --steps 5 --samples 10",  # no seed
        "simulate --a 0.3 --d 0.8 --alpha 0.4 --steps 5 --samples 10 --seed 1 --N 6",
        "cf --a 0.3 --d 0.8 --alpha 0.4 --n 5 --points 1",
    ]
    for command in bad_cases:
        result = run_cli(command.split())
        assert result.returncode == 2, command
        assert result.stdout == ""
        assert result.stderr.strip(), command


def test_exit_code_three_on_budget(tmp_path):
    out = tmp_path / "never.csv"
    result = run_cli("dist --a 0.3 --d 0.8 --alpha 0.4 --n 30 --oracle".split(), out=out)
    assert result.returncode == 3
    assert "error:" in result.stderr
    assert not out.exists()  # nothing written on failure


def test_exit_code_four_on_nonconvergence(tmp_path):
    out = tmp_path / "never.csv"
    argv = "absorb --a 0.7 --d 0.7 --alpha 0.5 --N inf --k 2 --tol 1e-15".split()
    result = run_cli(argv, out=out)
    assert result.returncode == 4
    assert "error:" in result.stderr
    assert not out.exists()


def test_help_exits_zero():
    assert run_cli(["--help"]).returncode == 0
    assert run_cli(["dist", "--help"]).returncode == 0


def test_console_script_entry_point():
    result = subprocess.run(
        ["corrwalk", "moment", "--a", "0.3", "--d", "0.8", "--alpha", "0.4", "--n", "3", "--m", "1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.startswith("# corrwalk moment")
