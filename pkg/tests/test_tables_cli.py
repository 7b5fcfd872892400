import io
import json

import pytest

from noisygames.cli import main
from noisygames.tables import (
    APPENDIX_SPOT_VALUES,
    conjecture_scan,
    grid_decimals,
    p_grid,
    read_sweep_csv,
    sweep_chomp,
    sweep_nim1,
    verify_appendix,
    write_sweep_csv,
)


def test_p_grid_endpoints_and_spacing():
    grid = p_grid(101)
    assert grid[0] == 0.0
    assert grid[-1] == 1.0
    assert grid[50] == 0.5
    assert grid == [i / 100 for i in range(101)]
    assert p_grid(2) == [0.0, 1.0]
    with pytest.raises(ValueError):
        p_grid(1)


def test_grid_decimals_round_trips():
    assert grid_decimals(101) == 2
    assert grid_decimals(2) == 2
    d = grid_decimals(7)  # thirds and sixths need many digits
    for p in p_grid(7):
        assert float(f"{p:.{d}f}") == p


def test_sweep_rows_internally_consistent():
    for rows in (sweep_nim1(4, 21), sweep_chomp(2, 2, "n8", 21)):
        assert len(rows) == 21
        for row in rows:
            assert row.value == max(row.move_values)
            for w in row.optimal_moves:
                assert row.move_values[w] >= row.value - 1e-9


def test_sweep_csv_round_trip():
    rows = sweep_nim1(4, 101)
    buf = io.StringIO()
    write_sweep_csv(rows, buf, decimals=grid_decimals(101))
    buf.seek(0)
    parsed = read_sweep_csv(buf)
    assert len(parsed) == len(rows)
    for a, b in zip(rows, parsed):
        assert b.p == a.p
        assert abs(b.value - a.value) <= 5e-16
        assert b.optimal_moves == a.optimal_moves


def test_sweep_csv_golden_rows():
    rows = sweep_nim1(4, 101)
    buf = io.StringIO()
    write_sweep_csv(rows, buf, decimals=2)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "p,N,optimal_moves"
    # p = 0.50: uniform channel, every transmitted move ties at the max
    assert lines[51] == "0.50,0.500000000000000,0;1;2;3"
    assert lines[26] == "0.25,0.631250000000000,0"
    rows10 = sweep_nim1(10, 101)
    assert f"{rows10[30].value:.15f}" == "0.527252488101950"


def test_verify_appendix_all_pass():
    rows = verify_appendix()
    assert len(rows) == len(APPENDIX_SPOT_VALUES)
    for row in rows:
        assert row.ok, (row.k, row.p, row.abs_error)


def test_verify_appendix_reports_corruption():
    corrupted = ((4, 0.25, 0.99, (0,)),)
    rows = verify_appendix(corrupted)
    assert not rows[0].ok
    assert rows[0].abs_error == pytest.approx(0.99 - 0.63125, abs=1e-12)


def test_conjecture_scan_consistent_to_ten_chips():
    scan = conjecture_scan(10, 101)
    assert scan.consistent, scan.findings


def test_conjecture_scan_rejects_bad_args():
    with pytest.raises(ValueError):
        conjecture_scan(0)


# -- CLI ------------------------------------------------------------------


def test_cli_solve_builtin(capsys):
    assert main(["solve", "--game", "nim1", "--chips", "3", "--p", "0.3"]) == 0
    out = capsys.readouterr().out
    assert "0.607692307692308" in out
    assert "leave 0 chips" in out


def test_cli_solve_chomp(capsys):
    rc = main(
        ["solve", "--game", "chomp", "--rows", "2", "--cols", "2",
         "--variant", "n8", "--p", "0.8"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "0.800000000000000" in out
    assert "chomp at (1, 1)" in out


def test_cli_solve_spec_file(tmp_path, capsys):
    path = tmp_path / "game.json"
    path.write_text(json.dumps({"family": "nim1", "chips": 2, "p": 0.25}))
    assert main(["solve", "--spec", str(path)]) == 0
    assert "0.750000000000000" in capsys.readouterr().out


def test_cli_solve_invalid_spec_exits_one(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {"graph": {"followers": [[1], [0]], "start": 0},
             "model": [[[1.0]], [[1.0]]]}
        )
    )
    assert main(["solve", "--spec", str(path)]) == 1
    assert "invalid game spec" in capsys.readouterr().err


def test_cli_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["solve"])
    assert exit_info.value.code == 2
    with pytest.raises(SystemExit) as exit_info:
        main(["simulate", "--game", "nim1", "--chips", "3", "--p", "0.3", "--games", "0"])
    assert exit_info.value.code == 2


def test_cli_sweep_writes_csv(tmp_path, capsys):
    out = tmp_path / "table.csv"
    rc = main(
        ["sweep", "--game", "nim1", "--chips", "4", "--points", "101",
         "--out", str(out)]
    )
    assert rc == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 102
    assert lines[51] == "0.50,0.500000000000000,0;1;2;3"


def test_cli_sweep_two_points(capsys):
    assert main(["sweep", "--game", "nim1", "--chips", "3", "--points", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("0.00,")
    assert lines[2].startswith("1.00,")


def test_cli_verify_appendix(capsys):
    assert main(["verify-appendix"]) == 0
    out = capsys.readouterr().out
    assert "17/17 spot values verified" in out


def test_cli_conjecture_scan(capsys):
    assert main(["conjecture-scan", "--max-chips", "6", "--points", "51"]) == 0
    assert "no counterexample candidates" in capsys.readouterr().out


def test_cli_simulate_reproducible(capsys):
    argv = ["simulate", "--game", "nim1", "--chips", "3", "--p", "0.3",
            "--games", "2000", "--seed", "9"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "estimate:" in first
