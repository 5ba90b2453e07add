"""Uniform 1D mesh with ghost cells and boundary filling."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

BOUNDARIES = ("outflow", "reflecting", "periodic")

# slope, predictor and projection stencils together reach three cells out
N_GHOST = 3


@dataclass(frozen=True)
class Grid:
    n_cells: int
    x_lo: float = 0.0
    x_hi: float = 1.0
    boundary: str = "outflow"
    n_ghost: int = N_GHOST

    def __post_init__(self):
        if self.n_cells < 1:
            raise ValueError("n_cells must be positive")
        if not self.x_hi > self.x_lo:
            raise ValueError("x_hi must exceed x_lo")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"unknown boundary {self.boundary!r}")
        if self.n_ghost < N_GHOST:
            raise ValueError(f"need at least {N_GHOST} ghost cells")

    @property
    def dx(self):
        return (self.x_hi - self.x_lo) / self.n_cells

    @property
    def n_total(self):
        return self.n_cells + 2 * self.n_ghost

    @property
    def interior(self):
        return slice(self.n_ghost, self.n_ghost + self.n_cells)

    @cached_property
    def centers(self):
        """Cell centers, ghosts included."""
        i = np.arange(self.n_total) - self.n_ghost
        return self.x_lo + (i + 0.5) * self.dx

    @cached_property
    def interior_centers(self):
        return self.centers[self.interior]

    @cached_property
    def faces(self):
        """Location of the interface between cell ``i`` and ``i + 1``."""
        i = np.arange(self.n_total - 1) - self.n_ghost
        return self.x_lo + (i + 1.0) * self.dx


def fill_ghosts(cells, grid, profile=None):
    """Fill the ghost columns of a deviation array in place.

    Periodic and outflow conditions act on the deviation directly (outflow
    copies the nearest interior deviation, so a stationary profile stays
    exactly stationary at the boundary). Reflecting walls mirror the full
    state, negate the momentum of 3-component systems and subtract the
    profile at the ghost centers again.
    """
    g, n = grid.n_ghost, grid.n_cells
    lo, hi = slice(0, g), slice(g + n, 2 * g + n)
    if grid.boundary == "periodic":
        cells[:, lo] = cells[:, n : n + g]
        cells[:, hi] = cells[:, g : 2 * g]
    elif grid.boundary == "outflow":
        cells[:, lo] = cells[:, g : g + 1]
        cells[:, hi] = cells[:, g + n - 1 : g + n]
    else:
        x = grid.centers
        q_tilde = profile.state_at(x) if profile is not None else np.zeros_like(cells)
        full = cells + q_tilde
        # ghost g-1-k mirrors interior g+k
        left = full[:, 2 * g - 1 : g - 1 : -1].copy()
        right = full[:, g + n - 1 : n - 1 : -1].copy()
        if cells.shape[0] == 3:
            left[1] *= -1.0
            right[1] *= -1.0
        cells[:, lo] = left - q_tilde[:, lo]
        cells[:, hi] = right - q_tilde[:, hi]
    return cells
