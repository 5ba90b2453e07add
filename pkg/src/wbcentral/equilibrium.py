"""Stationary solutions and the deviation transform ``dq = q - q_tilde``."""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grid import Grid, fill_ghosts
from .physics import GAMMA


@dataclass(frozen=True)
class EquilibriumProfile:
    """Closed-form stationary state evaluable at arbitrary points.

    ``state_at(x)`` and ``gradient_at(x)`` return arrays of shape
    ``(n_comp,) + x.shape``; ``phi_x_at(x)`` returns the gravitational field
    gradient with the shape of ``x``. ``is_zero`` marks the trivial profile,
    for which the flux of the profile is taken to be identically zero.
    """

    state_at: Callable
    gradient_at: Callable
    phi_x_at: Callable
    label: str
    n_comp: int = 3
    is_zero: bool = False


@dataclass
class DeviationField:
    """Per-cell deviation averages and limited slopes, ghost cells included."""

    cells: np.ndarray
    slopes: np.ndarray = None
    time: float = 0.0

    def __post_init__(self):
        self.cells = np.asarray(self.cells, dtype=float)
        if self.slopes is None:
            self.slopes = np.zeros_like(self.cells)
        if self.slopes.shape != self.cells.shape:
            raise ValueError("cells and slopes must have the same shape")

    def copy(self):
        return DeviationField(self.cells.copy(), self.slopes.copy(), self.time)


def _constant_field(value):
    def phi_x(x):
        return np.full(np.shape(x), float(value))

    return phi_x


def isothermal_profile(rho0=1.0, p0=1.0, g=1.0, gamma=GAMMA):
    """Isothermal atmosphere at rest in a constant field ``phi_x = g``."""
    if not (rho0 > 0 and p0 > 0):
        raise ValueError("rho0 and p0 must be positive")
    k = rho0 * g / p0

    def state_at(x):
        x = np.asarray(x, dtype=float)
        decay = np.exp(-k * x)
        return np.stack([rho0 * decay, np.zeros_like(x), p0 * decay / (gamma - 1.0)])

    def gradient_at(x):
        return -k * state_at(x)

    return EquilibriumProfile(
        state_at, gradient_at, _constant_field(g), f"isothermal(rho0={rho0}, p0={p0}, g={g})"
    )


def moving_profile(gamma=GAMMA):
    """Steady flow rho = e^-x, u = e^x, p = e^(-gamma x).

    The field is obtained from the steady momentum balance,
    ``phi_x = gamma e^((1-gamma) x) - e^(2x)``, which also satisfies the
    steady energy balance.
    """
    if not gamma > 1.0:
        raise ValueError("gamma must exceed 1")

    def state_at(x):
        x = np.asarray(x, dtype=float)
        rho = np.exp(-x)
        energy = np.exp(-gamma * x) / (gamma - 1.0) + 0.5 * np.exp(x)
        return np.stack([rho, np.ones_like(x), energy])

    def gradient_at(x):
        x = np.asarray(x, dtype=float)
        denergy = -gamma / (gamma - 1.0) * np.exp(-gamma * x) + 0.5 * np.exp(x)
        return np.stack([-np.exp(-x), np.zeros_like(x), denergy])

    def phi_x_at(x):
        x = np.asarray(x, dtype=float)
        return gamma * np.exp((1.0 - gamma) * x) - np.exp(2.0 * x)

    return EquilibriumProfile(state_at, gradient_at, phi_x_at, f"moving(gamma={gamma})")


def zero_profile(system, phi_x=0.0):
    """Trivial profile; the deviation equals the state (no well-balancing).

    ``phi_x`` is either a constant or a callable field taken from the
    experiment.
    """
    n = system.n_comp
    phi = phi_x if callable(phi_x) else _constant_field(phi_x)

    def state_at(x):
        return np.zeros((n,) + np.shape(x))

    return EquilibriumProfile(state_at, state_at, phi, "zero", n_comp=n, is_zero=True)


def constant_profile(state, phi_x=0.0):
    """Spatially uniform reference state (stationary only without gravity)."""
    state = np.atleast_1d(np.asarray(state, dtype=float))
    phi = phi_x if callable(phi_x) else _constant_field(phi_x)

    def state_at(x):
        shape = np.shape(x)
        return np.broadcast_to(state.reshape((-1,) + (1,) * len(shape)), state.shape + shape).copy()

    def gradient_at(x):
        return np.zeros(state.shape + np.shape(x))

    return EquilibriumProfile(state_at, gradient_at, phi, f"constant({state.tolist()})",
                              n_comp=len(state))


def to_deviation(q_cells, profile, grid: Grid, time=0.0):
    """Subtract the profile sampled at cell centers.

    ``q_cells`` may cover the interior cells only, in which case ghost cells
    are filled from the grid's boundary condition, or all cells including
    ghosts.
    """
    q_cells = np.asarray(q_cells, dtype=float)
    if q_cells.ndim == 1:
        q_cells = q_cells[None, :]
    n = q_cells.shape[1]
    if n == grid.n_total:
        return DeviationField(q_cells - profile.state_at(grid.centers), time=time)
    if n != grid.n_cells:
        raise ValueError(f"expected {grid.n_cells} or {grid.n_total} cells, got {n}")
    cells = np.zeros((q_cells.shape[0], grid.n_total))
    cells[:, grid.interior] = q_cells - profile.state_at(grid.interior_centers)
    fill_ghosts(cells, grid, profile)
    return DeviationField(cells, time=time)


def from_deviation(d: DeviationField, profile, grid: Grid):
    """Full state on the interior cells: ``dq_j + q_tilde(x_j)``."""
    return d.cells[:, grid.interior] + profile.state_at(grid.interior_centers)
