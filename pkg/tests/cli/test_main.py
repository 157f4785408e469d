"""Tests for the command-line interface."""

import csv
import json

import pytest

from handsoff.cli import main
from handsoff.cli.commands import parse_vector
from handsoff.cli.main import attach_negative_values
from handsoff.core import BadInputError

SCALAR = "tests/data/systems/scalar_stable.json"
OSCILLATOR = "tests/data/systems/oscillator.yaml"


def test_solve(tmp_path) -> None:
    """Tests solving V(100) into a solution file."""
    out = tmp_path / "solution.json"
    code = main(["solve", "--system", SCALAR, "--xi", "100", "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["status"] == "optimal"
    assert data["value"] == pytest.approx(1.1203, abs=2e-3)
    assert data["grid"] == {"T": 5.0, "N": 200}


def test_solve_to_stdout(capsys) -> None:
    """Tests that the zero state prints an all-zero control."""
    code = main(["solve", "--system", SCALAR, "--xi", "0", "--n", "50"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == 0.0
    assert data["u"] == [0.0] * 50


def test_solve_infeasible(tmp_path) -> None:
    """Tests exit code 2 and the infeasible solution file."""
    out = tmp_path / "solution.json"
    code = main(["solve", "--system", SCALAR, "--xi", "200", "--out", str(out)])
    assert code == 2
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["status"] == "infeasible"
    assert data["phase1_residual"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--system", SCALAR, "--xi", "1,2"],
        ["solve", "--system", SCALAR, "--xi", "abc"],
        ["solve", "--system", "tests/data/systems/nope.json", "--xi", "1"],
        ["solve", "--system", "tests/data/systems/singular.json", "--xi=1,0"],
        ["solve", "--system", SCALAR],
        ["solve", "--system", SCALAR, "--xi", "10", "--n", "0"],
        ["sweep", "--system", SCALAR, "--from", "0", "--to", "1"]
        + ["--points", "3", "--n", "0", "--out", "unused.csv"],
        ["verify", "--system", SCALAR, "--seed", "-1", "--out", "unused.json"],
        ["verify", "--system", SCALAR, "--samples", "0"]
        + ["--out", "unused.json"],
        ["frobnicate"],
        ["oracle1d", "--a", "1", "--b", "1", "--T", "5", "--xi", "1"],
        ["oracle1d", "--a", "-1", "--b", "0", "--T", "5", "--xi", "1"],
        [
            "solve",
            "--system",
            SCALAR,
            "--xi",
            "1",
            "--config",
            "tests/data/config/unknown_key.yaml",
        ],
    ],
)
def test_bad_input(argv) -> None:
    """Tests exit code 1 for malformed flags, files and plants."""
    assert main(argv) == 1


def test_config_file(tmp_path) -> None:
    """Tests that --config sets the default cell count."""
    plant = tmp_path / "plant.json"
    plant.write_text('{"A": [[-1.0]], "B": [1.0], "T": 5.0}', "utf-8")
    out = tmp_path / "solution.json"
    code = main(
        [
            "solve",
            "--system",
            str(plant),
            "--xi",
            "10",
            "--config",
            "tests/data/config/solver.yaml",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["grid"]["N"] == 300


def test_sweep(tmp_path) -> None:
    """Tests the sweep CSV across and beyond the reachable set."""
    out = tmp_path / "sweep.csv"
    code = main(
        [
            "sweep",
            "--system",
            SCALAR,
            "--from",
            "-147",
            "--to",
            "160",
            "--points",
            "5",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    with open(out, encoding="utf-8", newline="") as csv_file:
        rows = list(csv.DictReader(csv_file))
    assert list(rows[0]) == ["s", "xi_1", "V", "status"]
    assert [row["status"] for row in rows] == ["optimal"] * 4 + ["infeasible"]
    assert rows[-1]["V"] == ""


def test_verify_oracle(tmp_path) -> None:
    """Tests the closed-form comparison suite from the command line."""
    out = tmp_path / "report.json"
    code = main(
        [
            "verify",
            "--system",
            SCALAR,
            "--suite",
            "oracle1d",
            "--samples",
            "7",
            "--n",
            "400",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["passed"] is True
    assert data["suites"][0]["suite"] == "oracle1d"


def test_verify_oracle_needs_scalar_plant(tmp_path) -> None:
    """Tests that the closed-form suite rejects the oscillator."""
    out = tmp_path / "report.json"
    argv = ["verify", "--system", OSCILLATOR, "--suite", "oracle1d"]
    assert main(argv + ["--out", str(out)]) == 1


def test_verify_deterministic(tmp_path) -> None:
    """Tests byte-identical reports for the same seed."""
    outputs = []
    for threads in ("1", "2"):
        out = tmp_path / f"report_{threads}.json"
        code = main(
            [
                "verify",
                "--system",
                OSCILLATOR,
                "--suite",
                "bangoffbang",
                "--seed",
                "42",
                "--samples",
                "4",
                "--threads",
                threads,
                "--out",
                str(out),
            ]
        )
        assert code in (0, 2)
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_oracle1d(capsys) -> None:
    """Tests the printed closed-form quantities."""
    argv = ["oracle1d", "--a", "-1", "--b", "1", "--T", "5", "--xi", "100"]
    code = main(argv)
    assert code == 0
    lines = dict(
        line.split(": ") for line in capsys.readouterr().out.splitlines()
    )
    assert float(lines["x1"]) == pytest.approx(147.4132, abs=1e-4)
    assert float(lines["tau"]) == pytest.approx(3.8797, abs=1e-4)
    assert float(lines["V"]) == pytest.approx(1.1203, abs=1e-4)


def test_oracle1d_zero_and_out_of_reach(capsys) -> None:
    """Tests xi = 0 and exit code 2 beyond x1."""
    base = ["oracle1d", "--a", "-1", "--b", "1", "--T", "5"]
    assert main(base + ["--xi", "0"]) == 0
    lines = dict(
        line.split(": ") for line in capsys.readouterr().out.splitlines()
    )
    assert float(lines["V"]) == 0.0
    assert float(lines["tau"]) == 5.0
    assert main(base + ["--xi", "150"]) == 2


def test_parse_vector() -> None:
    """Tests parsing comma-separated vectors."""
    assert parse_vector("1.5,-2").tolist() == [1.5, -2.0]
    with pytest.raises(BadInputError):
        parse_vector("1,,2")
    with pytest.raises(BadInputError):
        parse_vector("nan")


def test_solve_negative_vector(capsys) -> None:
    """Tests a state whose first entry is negative, without --xi=."""
    code = main(["solve", "--system", OSCILLATOR, "--xi", "-0.5,0.2"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["xi"] == [-0.5, 0.2]
    assert data["grid"]["N"] == 100


def test_attach_negative_values() -> None:
    """Tests that only vector flags followed by a negative value are joined."""
    argv = ["sweep", "--from", "-1,2", "--to", "3,-4", "--n", "-2"]
    assert attach_negative_values(argv) == [
        "sweep",
        "--from=-1,2",
        "--to",
        "3,-4",
        "--n",
        "-2",
    ]
    assert attach_negative_values(["--xi", "--out"]) == ["--xi", "--out"]
    assert attach_negative_values(["--xi"]) == ["--xi"]
