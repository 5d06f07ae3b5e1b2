import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from deepnodes.asymptotics import format_fraction
from deepnodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(*argv, env=None):
    return subprocess.run(
        [sys.executable, "-m", "deepnodes", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


# -- series ----------------------------------------------------------------


def test_series_A(capsys):
    assert run(capsys, "series", "--gf", "A", "--order", "5")[:2] == (
        0,
        "z + z^2 + 3*z^3 + 10*z^4 + 36*z^5\n",
    )


def test_series_A_kernel_route(capsys):
    _, out, _ = run(capsys, "series", "--gf", "A", "--order", "5", "--route", "kernel")
    assert out == "z + z^2 + 3*z^3 + 10*z^4 + 36*z^5\n"


def test_series_ph(capsys):
    code, out, _ = run(capsys, "series", "--gf", "ph", "--h", "4", "--order", "4")
    assert code == 0 and out.strip().endswith("+ (6 + 4*t)*z^4")


def test_series_dG(capsys):
    assert run(capsys, "series", "--gf", "dG", "--order", "4")[1] == "z + z^2 + 4*z^3 + 14*z^4\n"


def test_series_json(capsys):
    _, out, _ = run(capsys, "series", "--gf", "G", "--order", "3", "--format", "json")
    data = json.loads(out)
    assert data["coeffs"] == [[], ["0", "1"], ["0", "1"], ["0", "2", "1"]]


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "--gf", "ph", "--h", "1", "--route", "closed", "--order", "3"],
        ["series", "--gf", "Ah", "--order", "3"],
        ["series", "--gf", "G", "--route", "closed_sum", "--order", "3"],
        ["series", "--gf", "A", "--order", "0"],
    ],
)
def test_series_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


# -- trees -----------------------------------------------------------------


def test_trees_count(capsys):
    assert run(capsys, "trees", "--size", "4")[1] == "10\n"


def test_trees_list(capsys):
    assert run(capsys, "trees", "--size", "1", "--list")[1] == "() 1 1 0\n"
    lines = run(capsys, "trees", "--size", "3", "--list")[1].splitlines()
    assert len(lines) == 3 and "(*(())) 3 1 1" in lines


def test_trees_beyond_bound(capsys):
    assert run(capsys, "trees", "--size", "12")[0] == 2
    assert run(capsys, "trees", "--size", "0")[0] == 2
    assert run(capsys, "trees", "--size", "3", "--bound", "13")[0] == 2


# -- biject ----------------------------------------------------------------


@pytest.mark.parametrize(
    "src, dst, given, expected",
    [
        ("tree", "decorated", "(*(()))", "UUDL"),
        ("decorated", "tree", "UUDL", "(*(()))"),
        ("tree", "skew", "()", ""),
        ("skew", "tree", "UUDL", "(*(()))"),
        ("skew", "decorated", "UDUUDL", "UDUUDL"),
        ("tree", "tree", "(()())", "(()())"),
    ],
)
def test_biject(capsys, src, dst, given, expected):
    code, out, _ = run(capsys, "biject", "--from", src, "--to", dst, given)
    assert code == 0 and out == expected + "\n"


@pytest.mark.parametrize(
    "src, given",
    [("tree", "((*())())"), ("tree", "(()"), ("decorated", "UL"), ("skew", "UL"), ("decorated", "UUD")],
)
def test_biject_errors(capsys, src, given):
    code, _, err = run(capsys, "biject", "--from", src, "--to", "tree", given)
    assert code == 2 and err


# -- table -----------------------------------------------------------------


def test_table_csv(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "4", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "nodes,deepest_nodes,trees,ratio"
    assert lines[-1] == "4,14,10,1.400000"


def test_table_single_row(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "1", "--format", "csv")
    assert out.splitlines()[1:] == ["1,1,1,1.000000"]


def test_table_trees_column(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "8", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["trees"]) for r in rows] == [1, 1, 3, 10, 36, 137, 543, 2219]


def test_table_csv_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "60", "--format", "csv")
    for r in csv.DictReader(io.StringIO(out)):
        exact = Fraction(int(r["deepest_nodes"]), int(r["trees"]))
        assert format_fraction(exact, 6) == r["ratio"]


def test_table_json_schema(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "4", "--format", "json")
    rows = json.loads(out)
    assert rows[-1] == {"n": 4, "deepest_total": 14, "trees": 10, "ratio_num": 7, "ratio_den": 5}
    assert all(set(r) == {"n", "deepest_total", "trees", "ratio_num", "ratio_den"} for r in rows)


def test_table_text(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "4")
    assert out.splitlines()[-1].split() == ["4", "14", "10", "1.400000"]


def test_table_output_file(capsys, tmp_path):
    target = tmp_path / "ratios.csv"
    code, out, _ = run(capsys, "table", "--max-n", "3", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[-1] == "3,4,3,1.333333"


def test_table_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "table", "--max-n", "3", "--output", str(tmp_path / "no" / "x.csv"))
    assert code == 2 and "cannot write" in err


# -- verify ----------------------------------------------------------------


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--order", "12", "--bound", "7")
    assert code == 0
    assert "FAIL" not in out and out.splitlines()[-1].endswith("checks passed")


def test_verify_fault_injection(capsys):
    code, out, err = run(capsys, "verify", "--order", "12", "--bound", "6", "--inject", "delta")
    assert code == 1
    failed = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert len(failed) == 1 and "delta * q = v^2" in failed[0]
    assert "delta * q = v^2" in err


@pytest.mark.slow
def test_verify_order_60(capsys):
    code, out, _ = run(capsys, "verify", "--order", "60")
    assert code == 0, out


# -- process level ---------------------------------------------------------


def test_exit_codes_end_to_end():
    assert run_proc("trees", "--size", "4").returncode == 0
    assert run_proc("verify", "--order", "8", "--bound", "5", "--inject", "delta").returncode == 1
    assert run_proc("trees", "--size", "99").returncode == 2
    assert run_proc("nonsense").returncode == 2


def test_environment_order(monkeypatch):
    import os

    env = dict(os.environ, DEEPNODES_ORDER="3")
    assert run_proc("series", "--gf", "A", env=env).stdout == "z + z^2 + 3*z^3\n"
    # the flag wins over the environment
    assert run_proc("series", "--gf", "A", "--order", "2", env=env).stdout == "z + z^2\n"
    env["DEEPNODES_ORDER"] = "x"
    assert run_proc("series", "--gf", "A", env=env).returncode == 2


def test_default_order_is_30(capsys, monkeypatch):
    monkeypatch.delenv("DEEPNODES_ORDER", raising=False)
    _, out, _ = run(capsys, "series", "--gf", "A")
    assert out.strip().endswith("*z^30")


def test_deterministic_output():
    argv = ("table", "--max-n", "30", "--format", "json")
    assert run_proc(*argv).stdout == run_proc(*argv).stdout
    argv = ("trees", "--size", "6", "--list")
    assert run_proc(*argv).stdout == run_proc(*argv).stdout
