"""Scheme configuration and the time-marching loop shared by both schemes."""

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteError, PositivityError
from .reconstruct import THETA_DEFAULT

CFL_DEFAULT = 0.485


@dataclass(frozen=True)
class SchemeConfig:
    cfl: float = CFL_DEFAULT
    theta: float = THETA_DEFAULT

    def __post_init__(self):
        if not 0.0 < self.cfl <= 0.5:
            raise ValueError("cfl must lie in (0, 0.5]")
        if not 1.0 <= self.theta <= 2.0:
            raise ValueError("theta must lie in [1, 2]")


def time_step(a_max, dx, cfl, dt_max=None):
    """``cfl * dx / a_max`` clipped to ``dt_max``."""
    if a_max > 0:
        dt = cfl * dx / a_max
        return dt if dt_max is None else min(dt, dt_max)
    if dt_max is None:
        raise ValueError("all wave speeds vanish and no time limit was given")
    return dt_max


def cell_label(grid, index):
    """Translate a grid-array index into an interior cell number."""
    if index is None:
        return None
    i = index[-1] if isinstance(index, tuple) else index
    return int(i) - grid.n_ghost


def locate(err, grid, time, offset=0):
    """Attach time and interior cell number to a positivity error."""
    if isinstance(err, (PositivityError, NonFiniteError)) and err.time is None:
        err.time = time
        if err.index is not None:
            err.index = cell_label(grid, err.index) + offset
    return err


def check_finite(cells, grid, time):
    bad = ~np.isfinite(cells[:, grid.interior])
    if np.any(bad):
        j = int(np.argwhere(bad)[0][1])
        raise NonFiniteError(f"non-finite value in cell {j} at t={time:.6g}", index=j, time=time)


def advance(d, profile, grid, system, t_final, step, config=SchemeConfig(),
            snapshot_times=(), on_step=None):
    """March ``d`` to ``t_final`` with ``step``.

    ``step(d, profile, grid, system, config, dt_max)`` returns the new field
    and the step size used. Requested snapshot times are hit exactly.
    Returns ``(field, n_steps, snapshots)`` where ``snapshots`` maps each
    snapshot time to a copy of the field.
    """
    targets = sorted(t for t in snapshot_times if d.time < t < t_final) + [t_final]
    snapshots = {}
    n_steps = 0
    for target in targets:
        while d.time < target:
            remaining = target - d.time
            d, dt = step(d, profile, grid, system, config, dt_max=remaining)
            n_steps += 1
            if dt >= remaining or target - d.time <= 1e-14 * max(1.0, abs(target)):
                d.time = target
            if on_step is not None:
                on_step(d, dt)
        if target != t_final:
            snapshots[target] = d.copy()
    return d, n_steps, snapshots
