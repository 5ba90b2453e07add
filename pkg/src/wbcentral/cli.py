"""Command-line experiment runner.

    wbcentral run --scenario isothermal --n 200
    wbcentral convergence --scenario perturbed --grids 200,400,800,1600
    wbcentral tv --scenario burgers --scheme semi_discrete

Options may also come from a file of ``key=value`` lines given as the first
argument (or via ``--config``); flags override file values. Exit codes: 0 on
success, 1 on solver or output errors, 2 on usage or validation errors.
"""

import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .diagnostics import total_variation, wb_deviation_norm
from .errors import IoError, SolverError, UsageError, ValidationError
from .experiments import (SCENARIOS, SCHEMES, get_scenario, perturbation_study,
                          reference_profile, simulate)
from .stepping import CFL_DEFAULT, SchemeConfig
from .reconstruct import THETA_DEFAULT

COMMANDS = ("run", "convergence", "tv")


@dataclass
class RunConfig:
    scenario: str = "isothermal"
    scheme: str = "fully_discrete"
    n_cells: int = None
    cfl: float = CFL_DEFAULT
    theta: float = THETA_DEFAULT
    t_final: float = None
    deviation: bool = True
    output_path: str = None
    snapshot_times: list = field(default_factory=list)
    grid_sizes: list = field(default_factory=lambda: [200, 400, 800, 1600])
    reference_n: int = 3200
    jobs: int = 1

    def scheme_config(self):
        return SchemeConfig(self.cfl, self.theta)


def _bool(text):
    t = text.strip().lower()
    if t in ("1", "on", "true", "yes"):
        return True
    if t in ("0", "off", "false", "no"):
        return False
    raise ValueError(f"expected on/off, got {text!r}")


def _floats(text):
    return [float(v) for v in text.split(",") if v.strip()]


def _ints(text):
    return [int(v) for v in text.split(",") if v.strip()]


# option name -> (RunConfig field, parser)
_OPTIONS = {
    "scenario": ("scenario", str),
    "scheme": ("scheme", str),
    "n": ("n_cells", int),
    "n_cells": ("n_cells", int),
    "cfl": ("cfl", float),
    "theta": ("theta", float),
    "t_final": ("t_final", float),
    "deviation": ("deviation", _bool),
    "output": ("output_path", str),
    "output_path": ("output_path", str),
    "snapshot_times": ("snapshot_times", _floats),
    "grids": ("grid_sizes", _ints),
    "reference": ("reference_n", int),
    "jobs": ("jobs", int),
}


def _key(raw):
    return raw.strip().replace("-", "_")


def _read_config_file(path):
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as err:
        raise UsageError(f"cannot read config file {path}: {err}") from None
    pairs = []
    for number, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{number}: expected key=value")
        key, value = line.split("=", 1)
        pairs.append((_key(key), value.strip()))
    return pairs


def parse_config(args):
    """Build a validated RunConfig from ``--key value`` tokens.

    A leading token that is not a flag names a config file.
    """
    args = list(args)
    pairs = []
    if args and not args[0].startswith("--"):
        pairs += _read_config_file(args.pop(0))
    flags = []
    while args:
        token = args.pop(0)
        if not token.startswith("--"):
            raise UsageError(f"unexpected argument {token!r}")
        key = token[2:]
        value = None
        if "=" in key:
            key, value = key.split("=", 1)
        elif args:
            value = args.pop(0)
        if value is None:
            raise UsageError(f"option --{key} needs a value")
        key = _key(key)
        if key == "config":
            pairs += _read_config_file(value)
        else:
            flags.append((key, value))

    config = RunConfig()
    for key, value in pairs + flags:
        if key not in _OPTIONS:
            raise UsageError(f"unknown option {key!r}")
        name, parse = _OPTIONS[key]
        try:
            setattr(config, name, parse(value))
        except ValueError as err:
            raise ValidationError(f"bad value for {key}: {err}") from None
    validate(config)
    return config


def validate(config):
    if config.scenario not in SCENARIOS:
        raise ValidationError(f"scenario must be one of {sorted(SCENARIOS)}")
    if config.scheme not in SCHEMES:
        raise ValidationError(f"scheme must be one of {sorted(SCHEMES)}")
    if not 0.0 < config.cfl < 0.5:
        raise ValidationError("cfl must satisfy 0 < cfl < 0.5")
    if not 1.0 <= config.theta <= 2.0:
        raise ValidationError("theta must lie in [1, 2]")
    if config.n_cells is not None and config.n_cells < 8:
        raise ValidationError("n must be at least 8")
    if config.t_final is not None and not config.t_final > 0:
        raise ValidationError("t_final must be positive")
    if any(n < 8 for n in config.grid_sizes) or not config.grid_sizes:
        raise ValidationError("grid sizes must be at least 8")
    if config.jobs < 1:
        raise ValidationError("jobs must be positive")
    return config


def _fmt(v):
    return f"{v:.17g}"


def write_csv(path, grid, states, profile, system=None):
    """One row per interior cell at full precision.

    Euler states get pressure and the deviation from ``profile``; scalar
    states get ``x,q,dev_q``.
    """
    states = np.asarray(states, dtype=float)
    x = grid.interior_centers
    dev = states - profile.state_at(x)
    if states.shape[0] == 3:
        header = "x,rho,momentum,energy,pressure,dev_rho,dev_momentum,dev_energy"
        p = system.pressure(states)
        columns = [x, states[0], states[1], states[2], p, dev[0], dev[1], dev[2]]
    else:
        header = "x,q,dev_q"
        columns = [x, states[0], dev[0]]
    lines = [header] + [",".join(_fmt(v) for v in row) for row in zip(*columns)]
    try:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from None


def read_csv(path):
    """Read a solution CSV back as ``(header, array of shape (rows, cols))``."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
    return header, np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)


def _output_dir():
    return Path(os.environ.get("WB_OUTPUT_DIR", "."))


def _default_output(config, kind):
    n = config.n_cells or get_scenario(config.scenario).default_N
    if kind == "run":
        name = f"{config.scenario}_{config.scheme}_N{n}.csv"
    else:
        name = f"{config.scenario}_{config.scheme}_{kind}.csv"
    return _output_dir() / name


def _snapshot_path(path, t):
    path = Path(path)
    return path.with_name(f"{path.stem}_t{t:g}{path.suffix}")


def run(config, out=None):
    """Simulate one configuration, write CSV snapshots and print a summary."""
    scenario = get_scenario(config.scenario)
    sim = simulate(scenario, config.n_cells, config.scheme, config.scheme_config(),
                   config.deviation, config.t_final, config.snapshot_times)
    path = Path(config.output_path) if config.output_path else _default_output(config, "run")
    for t in sorted(sim.snapshots):
        write_csv(_snapshot_path(path, t), sim.grid, sim.snapshot_state(t), sim.profile, scenario.system)
    write_csv(path, sim.grid, sim.state, sim.profile, scenario.system)
    tv = total_variation(sim.state[0], periodic=sim.grid.boundary == "periodic")
    print(
        f"scenario={scenario.name} scheme={config.scheme} n={sim.grid.n_cells} "
        f"steps={sim.n_steps} t={sim.field.time:.6g} tv_rho={tv:.10g} "
        f"wb_deviation={wb_deviation_norm(sim.exact_deviation):.3e} output={path}",
        file=out or sys.stdout,
    )
    return 0


def run_convergence(config, out=None):
    if config.scenario != "perturbed":
        raise ValidationError("the convergence study is defined for the perturbed scenario")
    report = perturbation_study(config.grid_sizes, config.reference_n, scheme=config.scheme,
                                config=config.scheme_config(), jobs=config.jobs)
    path = Path(config.output_path) if config.output_path else _default_output(config, "convergence")
    names = list(report.l1_errors)
    lines = ["N," + ",".join(f"{n}_L1,{n}_rate" for n in names)]
    for k, n in enumerate(report.grid_sizes):
        cells = [str(n)]
        for name in names:
            cells.append(_fmt(report.l1_errors[name][k]))
            cells.append(_fmt(report.rates[name][k - 1]) if k else "")
        lines.append(",".join(cells))
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n")
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from None
    print(report.table(), file=out or sys.stdout)
    return 0


def run_tv(config, out=None):
    """Log the total variation of the first deviation component after every step."""
    scenario = get_scenario(config.scenario)
    periodic = scenario.boundary == "periodic"
    log = []

    def record(d, dt):
        log.append((len(log), d.time, total_variation(d.cells[0, grid.interior], periodic)))

    grid = scenario.grid(config.n_cells)
    x = grid.interior_centers
    first = scenario.initial_state(x)[0] - reference_profile(scenario, config.deviation).state_at(x)[0]
    log.append((0, 0.0, total_variation(first, periodic)))
    simulate(scenario, config.n_cells, config.scheme, config.scheme_config(),
             config.deviation, config.t_final, on_step=record)
    path = Path(config.output_path) if config.output_path else _default_output(config, "tv")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("step,t,tv\n" + "".join(f"{s},{_fmt(t)},{_fmt(v)}\n" for s, t, v in log))
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from None
    tv = np.array([v for _, _, v in log])
    growth = np.max(np.diff(tv)) if len(tv) > 1 else 0.0
    print(f"steps={len(log) - 1} tv_initial={tv[0]:.10g} tv_final={tv[-1]:.10g} "
          f"max_increase={growth:.3e} output={path}", file=out or sys.stdout)
    return 0


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    command = "run"
    if argv and argv[0] in COMMANDS:
        command = argv.pop(0)
    elif argv and argv[0] in ("-h", "--help"):
        print(__doc__)
        return 0
    try:
        config = parse_config(argv)
    except (UsageError, ValidationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        return {"run": run, "convergence": run_convergence, "tv": run_tv}[command](config)
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except SolverError as err:
        where = []
        if getattr(err, "index", None) is not None:
            where.append(f"cell {err.index}")
        if getattr(err, "time", None) is not None:
            where.append(f"t={err.time:.6g}")
        print(f"solver error: {err} ({', '.join(where) or 'location unknown'})", file=sys.stderr)
        return 1
    except IoError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
