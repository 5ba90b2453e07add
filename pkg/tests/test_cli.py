import numpy as np
import pytest

from wbcentral import cli
from wbcentral.cli import main, parse_config, read_csv, write_csv
from wbcentral.errors import IoError, PositivityError, UsageError, ValidationError
from wbcentral.physics import Euler


def test_defaults():
    config = parse_config([])
    assert (config.scenario, config.scheme, config.cfl, config.theta) == (
        "isothermal", "fully_discrete", 0.485, 1.5)
    assert config.deviation and config.grid_sizes == [200, 400, 800, 1600]


def test_validation():
    with pytest.raises(ValidationError):
        parse_config(["--cfl", "0.6"])
    with pytest.raises(ValidationError):
        parse_config(["--theta", "2.5"])
    with pytest.raises(ValidationError):
        parse_config(["--n", "4"])
    with pytest.raises(UsageError, match="bogus"):
        parse_config(["--bogus", "1"])


def test_file_then_flags(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# comment\ntheta=2.0\nscenario = shock_tube\n")
    config = parse_config([str(path), "--theta", "1.0"])
    assert config.theta == 1.0 and config.scenario == "shock_tube"
    assert parse_config(["--config", str(path)]).theta == 2.0


def test_exit_codes(tmp_path, capsys):
    assert main(["--cfl", "0.6"]) == 2
    assert main(["--unknown", "x"]) == 2
    assert main(["run", "--n", "20", "--output", str(tmp_path / "a.csv")]) == 0
    assert "wb_deviation=0.000e+00" in capsys.readouterr().out


def test_shock_tube_csv(tmp_path):
    out = tmp_path / "sod.csv"
    assert main(["--scenario", "shock_tube", "--n", "100", "--output", str(out)]) == 0
    text = out.read_bytes()
    assert b"\r" not in text
    header, rows = read_csv(out)
    assert header[0] == "x" and rows.shape == (100, 8)
    assert np.all(np.diff(rows[:, 0]) > 0)
    # pressure column is reproduced exactly from the conserved columns
    assert np.array_equal(Euler().pressure(rows[:, 1:4].T), rows[:, 4])
    assert main(["--scenario", "shock_tube", "--n", "100", "--output", str(tmp_path / "b.csv")]) == 0
    assert (tmp_path / "b.csv").read_bytes() == text


def test_equilibrium_deviation_columns(tmp_path):
    out = tmp_path / "iso.csv"
    assert main(["--n", "50", "--output", str(out), "--snapshot-times", "0.1"]) == 0
    header, rows = read_csv(out)
    assert header[-3:] == ["dev_rho", "dev_momentum", "dev_energy"]
    assert np.all(rows[:, 5:] == 0.0)
    assert (tmp_path / "iso_t0.1.csv").exists()


def test_output_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("WB_OUTPUT_DIR", str(tmp_path))
    assert main(["--scenario", "advection", "--n", "32", "--t-final", "0.1"]) == 0
    header, rows = read_csv(tmp_path / "advection_fully_discrete_N32.csv")
    assert header == ["x", "q", "dev_q"] and rows.shape == (32, 3)


def test_convergence_command(tmp_path, capsys):
    out = tmp_path / "conv.csv"
    args = ["convergence", "--scenario", "perturbed", "--grids", "16,32,64,128",
            "--reference", "256", "--output", str(out)]
    assert main(args) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 5
    assert all(line.count(",") == 6 for line in lines)
    assert sum(1 for cell in lines[-1].split(",")[1:] if cell) == 6
    assert main(["convergence", "--scenario", "moving"]) == 2


def test_tv_command(tmp_path, capsys):
    out = tmp_path / "tv.csv"
    assert main(["tv", "--scenario", "burgers", "--scheme", "semi_discrete", "--n", "64",
                 "--output", str(out)]) == 0
    data = np.loadtxt(out, delimiter=",", skiprows=1)
    assert data[0, 0] == 0 and np.max(np.diff(data[:, 2])) <= 1e-12


def test_solver_error_exit(monkeypatch, capsys):
    def boom(*args, **kwargs):
        raise PositivityError("negative pressure", index=17, time=0.125)

    monkeypatch.setattr(cli, "simulate", boom)
    assert main(["--n", "20"]) == 1
    err = capsys.readouterr().err
    assert "cell 17" in err and "t=0.125" in err


def test_positivity_located_in_process():
    from wbcentral import Grid, advance
    from wbcentral.equilibrium import to_deviation, zero_profile
    from wbcentral.scheme_fd import step_fd

    grid = Grid(20)
    system = Euler()
    q = np.tile([[1.0], [0.0], [2.5]], grid.n_cells)
    q[2, 6] = -1.0
    profile = zero_profile(system)
    with pytest.raises(PositivityError) as info:
        advance(to_deviation(q, profile, grid), profile, grid, system, 0.1, step_fd)
    assert info.value.time == 0.0 and info.value.index is not None


def test_write_failure(tmp_path):
    from wbcentral import Grid
    from wbcentral.equilibrium import zero_profile

    blocker = tmp_path / "file"
    blocker.write_text("")
    grid = Grid(8)
    with pytest.raises(IoError):
        write_csv(blocker / "x.csv", grid, np.zeros((1, 8)), zero_profile(Euler()))
