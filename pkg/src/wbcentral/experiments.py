"""Configured test problems and helpers to run them."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .diagnostics import ConvergenceReport, block_average, l1_error
from .equilibrium import (EquilibriumProfile, from_deviation, isothermal_profile,
                          moving_profile, to_deviation, zero_profile)
from .grid import Grid
from .physics import GAMMA, Burgers, Euler, LinearAdvection
from .scheme_fd import step_fd
from .scheme_sd import step_ssp2
from .stepping import SchemeConfig, advance

SCHEMES = {"fully_discrete": step_fd, "semi_discrete": step_ssp2}


@dataclass(frozen=True)
class Scenario:
    name: str
    domain: tuple
    initial_state: Callable
    profile: EquilibriumProfile
    boundary: str
    t_final: float
    default_N: int
    system: object = field(default_factory=Euler)

    def __post_init__(self):
        if not self.t_final > 0:
            raise ValueError("t_final must be positive")
        if not self.domain[1] > self.domain[0]:
            raise ValueError("empty domain")

    def grid(self, n=None):
        lo, hi = self.domain
        return Grid(n or self.default_N, lo, hi, self.boundary)


def _primitive_state(rho, u, p, gamma):
    rho, u, p = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (rho, u, p)))
    return np.stack([rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u])


def scenario_isothermal(gamma=GAMMA):
    profile = isothermal_profile(1.0, 1.0, 1.0, gamma)
    return Scenario("isothermal", (0.0, 1.0), profile.state_at, profile,
                    "outflow", 0.25, 200, Euler(gamma))


def scenario_perturbed(eta=0.001, gamma=GAMMA):
    """Isothermal atmosphere with a Gaussian pressure bump of height ``eta`` at x = 0.5."""
    rho0 = p0 = g = 1.0
    k = rho0 * g / p0
    profile = isothermal_profile(rho0, p0, g, gamma)

    def initial_state(x):
        x = np.asarray(x, dtype=float)
        p = p0 * np.exp(-k * x) + eta * np.exp(-100.0 * k * (x - 0.5) ** 2)
        return _primitive_state(rho0 * np.exp(-k * x), 0.0, p, gamma)

    name = "isothermal" if eta == 0 else "perturbed"
    return Scenario(name, (0.0, 1.0), initial_state, profile, "outflow", 0.25, 200, Euler(gamma))


def scenario_moving(gamma=GAMMA):
    profile = moving_profile(gamma)
    return Scenario("moving", (0.0, 1.0), profile.state_at, profile,
                    "outflow", 10.0, 200, Euler(gamma))


def scenario_shock_tube(gamma=GAMMA):
    """Sod data in a constant field g = 1 between reflecting walls."""
    profile = isothermal_profile(1.0, 1.0, 1.0, gamma)

    def initial_state(x):
        x = np.asarray(x, dtype=float)
        left = x <= 0.5
        return _primitive_state(np.where(left, 1.0, 0.125), 0.0,
                                np.where(left, 1.0, 0.1), gamma)

    return Scenario("shock_tube", (0.0, 1.0), initial_state, profile,
                    "reflecting", 0.2, 100, Euler(gamma))


def _sine(x):
    return np.sin(2.0 * np.pi * np.asarray(x, dtype=float))[None]


def scenario_advection():
    system = LinearAdvection(1.0)
    return Scenario("advection", (0.0, 1.0), _sine, zero_profile(system),
                    "periodic", 1.0, 200, system)


def scenario_burgers():
    """Periodic sine; the shock forms at t = 1/(2 pi)."""
    system = Burgers()
    return Scenario("burgers", (0.0, 1.0), _sine, zero_profile(system),
                    "periodic", 0.3, 200, system)


SCENARIOS = {
    "isothermal": scenario_isothermal,
    "perturbed": scenario_perturbed,
    "moving": scenario_moving,
    "shock_tube": scenario_shock_tube,
    "advection": scenario_advection,
    "burgers": scenario_burgers,
}


def get_scenario(name):
    try:
        return SCENARIOS[name]()
    except KeyError:
        raise KeyError(f"unknown scenario {name!r}; choose from {sorted(SCENARIOS)}") from None


@dataclass
class Simulation:
    scenario: Scenario
    grid: Grid
    profile: EquilibriumProfile
    field: object
    n_steps: int
    snapshots: dict

    @property
    def state(self):
        """Full conserved state on the interior cells."""
        return from_deviation(self.field, self.profile, self.grid)

    def snapshot_state(self, t):
        return from_deviation(self.snapshots[t], self.profile, self.grid)

    @property
    def exact_deviation(self):
        """Deviation from the scenario's own stationary profile, interior cells."""
        return self.state - self.scenario.profile.state_at(self.grid.interior_centers)


def reference_profile(scenario, deviation=True):
    """The scenario profile, or the trivial one (same gravity) for the unbalanced baseline."""
    if deviation:
        return scenario.profile
    return zero_profile(scenario.system, scenario.profile.phi_x_at)


def simulate(scenario, n=None, scheme="fully_discrete", config=SchemeConfig(),
             deviation=True, t_final=None, snapshot_times=(), on_step=None):
    grid = scenario.grid(n)
    profile = reference_profile(scenario, deviation)
    d = to_deviation(scenario.initial_state(grid.interior_centers), profile, grid)
    d, n_steps, snaps = advance(d, profile, grid, scenario.system,
                                t_final if t_final is not None else scenario.t_final,
                                SCHEMES[scheme], config, snapshot_times, on_step)
    return Simulation(scenario, grid, profile, d, n_steps, snaps)


def _perturbed_state(args):
    eta, n, scheme, config = args
    return simulate(scenario_perturbed(eta), n, scheme, config).state


def perturbation_study(grid_sizes=(200, 400, 800, 1600), reference_n=3200, eta=0.001,
                       scheme="fully_discrete", config=SchemeConfig(), jobs=1):
    """L1 errors of density, pressure and energy against a fine-grid run.

    The reference is computed with the same scheme on ``reference_n`` cells
    and block-averaged onto each coarse grid.
    """
    scenario = scenario_perturbed(eta)
    sizes = list(grid_sizes) + [reference_n]
    if any(reference_n % n for n in grid_sizes):
        raise ValueError("reference size must be a multiple of every grid size")
    runs = [(eta, n, scheme, config) for n in sizes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            states = list(pool.map(_perturbed_state, runs))
    else:
        states = [_perturbed_state(r) for r in runs]

    system = scenario.system

    def variables(q):
        return {"rho": q[0], "p": system.pressure(q), "E": q[2]}

    ref = variables(states[-1])
    errors = {k: [] for k in ref}
    lo, hi = scenario.domain
    for n, q in zip(grid_sizes, states[:-1]):
        coarse = variables(q)
        for k in errors:
            errors[k].append(l1_error(coarse[k], block_average(ref[k], reference_n // n), (hi - lo) / n))
    return ConvergenceReport(list(grid_sizes), {k: np.array(v) for k, v in errors.items()})
