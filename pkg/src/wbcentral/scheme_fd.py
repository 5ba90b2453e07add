"""Fully-discrete well-balanced central scheme on the deviation variable.

One step reconstructs the deviation with MC-theta slopes, evolves averages
over the Riemann-fan intervals U (around each interface) and the smooth
intervals M (inside each cell), then projects the piecewise-linear result
back onto the uniform cells.

Array conventions: cell arrays have length ``grid.n_total`` along the last
axis; interface arrays have length ``grid.n_total - 1`` and entry ``i``
belongs to the interface between cells ``i`` and ``i + 1``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFanError, PositivityError
from .equilibrium import DeviationField
from .grid import fill_ghosts
from .reconstruct import THETA_DEFAULT, mc_theta_slopes, nonuniform_slopes
from .stepping import SchemeConfig, check_finite, locate, time_step


@dataclass
class InterfaceGeometry:
    a: np.ndarray
    dt: float
    dx: float
    lam: float
    width_u: np.ndarray
    width_m: np.ndarray
    x_l: np.ndarray
    x_r: np.ndarray
    x_m: np.ndarray

    @classmethod
    def build(cls, a, dt, grid):
        dx = grid.dx
        a = np.asarray(a, dtype=float)
        width_m = np.full(grid.n_total, np.nan)
        width_m[1:-1] = dx - dt * (a[:-1] + a[1:])
        x_l = grid.faces - a * dt
        x_r = grid.faces + a * dt
        x_m = np.full(grid.n_total, np.nan)
        x_m[1:-1] = 0.5 * (x_r[:-1] + x_l[1:])
        return cls(a, dt, dx, dt / dx, 2.0 * a * dt, width_m, x_l, x_r, x_m)

    def weights(self):
        """Projection weights (left fan part, smooth part, right fan part) per cell."""
        left = np.full(self.width_m.shape, np.nan)
        right = np.full(self.width_m.shape, np.nan)
        left[1:-1] = self.a[:-1] * self.dt
        right[1:-1] = self.a[1:] * self.dt
        return left, self.width_m, right


@dataclass
class Midpoints:
    """Half-step deviation values at the sub-cell points of each interface."""

    left: np.ndarray
    right: np.ndarray


@dataclass
class IntermediateAverages:
    w_u: np.ndarray
    w_m: np.ndarray
    w_u_slopes: np.ndarray = None


def deviation_flux(system, profile, dq, q_tilde):
    """``f(dq + q_tilde) - f(q_tilde)``; the trivial profile has zero flux."""
    if profile.is_zero:
        return system.flux(dq)
    return system.flux(dq + q_tilde) - system.flux(q_tilde)


def interface_wavespeeds(d, profile, grid, system):
    """Local speeds from the reconstructed full state on both sides of each face.

    The full-state slope is the limited deviation slope plus the analytic
    slope of the profile.
    """
    x = grid.centers
    q = d.cells + profile.state_at(x)
    half = 0.5 * grid.dx * (d.slopes + profile.gradient_at(x))
    try:
        a_minus = system.max_wavespeed(q[:, :-1] + half[:, :-1])
        a_plus = system.max_wavespeed(q[:, 1:] - half[:, 1:])
    except PositivityError as err:
        raise locate(err, grid, d.time) from None
    return np.maximum(a_minus, a_plus)


def _active_speed(a):
    # faces 0 and n_total-2 only feed ghost cells that are never projected
    return float(np.max(a[1:-1]))


def make_geometry(d, profile, grid, system, cfl, dt_max=None):
    a = interface_wavespeeds(d, profile, grid, system)
    dt = time_step(_active_speed(a), grid.dx, cfl, dt_max)
    return InterfaceGeometry.build(a, dt, grid)


def midpoint_predictor(d, profile, geom, grid, system, theta=THETA_DEFAULT):
    """Taylor-predicted values at ``t + dt/2`` at the points x_{i,l}, x_{i,r}.

    The flux gradient in each cell is the MC-theta slope of the cell-centred
    deviation fluxes, which vanishes identically when the deviation does.
    """
    dx, dt = grid.dx, geom.dt
    c, s = d.cells, d.slopes
    flux_cells = deviation_flux(system, profile, c, profile.state_at(grid.centers))
    flux_grad = mc_theta_slopes(flux_cells, dx, theta)
    shrink = 0.5 - geom.lam * geom.a
    left = c[:, :-1] + dx * s[:, :-1] * shrink
    right = c[:, 1:] - dx * s[:, 1:] * shrink
    left = left + 0.5 * dt * (-flux_grad[:, :-1] + system.source(left, profile.phi_x_at(geom.x_l)))
    right = right + 0.5 * dt * (-flux_grad[:, 1:] + system.source(right, profile.phi_x_at(geom.x_r)))
    return Midpoints(left, right)


def _subcell_terms(mid, profile, geom, system):
    q_l = profile.state_at(geom.x_l)
    q_r = profile.state_at(geom.x_r)
    f_l = deviation_flux(system, profile, mid.left, q_l)
    f_r = deviation_flux(system, profile, mid.right, q_r)
    s_l = system.source(mid.left, profile.phi_x_at(geom.x_l))
    s_r = system.source(mid.right, profile.phi_x_at(geom.x_r))
    return f_l, f_r, s_l, s_r


def evolve_unsmooth(d, profile, geom, grid, system, midpoints, terms=None):
    """Averages over the fan intervals U_{i} at the new time level."""
    dx, dt = grid.dx, geom.dt
    c, s = d.cells, d.slopes
    width = geom.width_u
    if np.any(~np.isfinite(width)) or np.any(width < 0):
        raise DegenerateFanError("negative or non-finite fan width")
    f_l, f_r, s_l, s_r = terms or _subcell_terms(midpoints, profile, geom, system)

    degenerate = width < 1e-14 * dx
    safe = np.where(degenerate, 1.0, width)
    w = (
        0.5 * (c[:, :-1] + c[:, 1:])
        + 0.25 * (dx - 0.5 * width) * (s[:, :-1] - s[:, 1:])
        + (dt / safe) * (f_l - f_r)
        + 0.5 * dt * (s_l + s_r)
    )
    if np.any(degenerate):
        # empty fan: weight a*dt in the projection is ~0, so this is inert
        edge = 0.5 * ((c[:, :-1] + 0.5 * dx * s[:, :-1]) + (c[:, 1:] - 0.5 * dx * s[:, 1:]))
        w = np.where(degenerate, edge, w)
    return w


def evolve_smooth(d, profile, geom, grid, system, midpoints, terms=None):
    """Averages over the smooth intervals M_j (cells 1 .. n_total-2)."""
    dt = geom.dt
    c, s = d.cells, d.slopes
    width = geom.width_m[1:-1]
    if np.any(~(width > 0)):
        j = int(np.argmax(~(width > 0))) + 1
        raise DegenerateFanError(f"smooth region of cell {j - grid.n_ghost} has non-positive width")
    f_l, f_r, s_l, s_r = terms or _subcell_terms(midpoints, profile, geom, system)

    w = np.zeros_like(c)
    # cell j sees x_{j+1/2,l} (face j) on its right and x_{j-1/2,r} (face j-1) on its left
    w[:, 1:-1] = (
        c[:, 1:-1]
        + 0.25 * (geom.width_u[:-1] - geom.width_u[1:]) * s[:, 1:-1]
        + (dt / width) * (f_r[:, :-1] - f_l[:, 1:])
        + 0.5 * dt * (s_r[:, :-1] + s_l[:, 1:])
    )
    return w


def fan_slopes(w, geom, grid, theta=THETA_DEFAULT):
    """Limited slopes of the fan averages on the staggered sequence
    ``w_m[j] @ x_m[j], w_u[j] @ face[j], w_m[j+1] @ x_m[j+1], ...``."""
    n_faces = grid.n_total - 1
    # faces 1 .. n_faces-2 sit between two valid smooth averages
    k = n_faces - 2
    values = np.empty((w.w_m.shape[0], 2 * k + 1))
    positions = np.empty(2 * k + 1)
    values[:, 0::2] = w.w_m[:, 1:-1]
    positions[0::2] = geom.x_m[1:-1]
    values[:, 1::2] = w.w_u[:, 1:-1]
    positions[1::2] = grid.faces[1:-1]
    slopes = nonuniform_slopes(values, positions, theta, dx=grid.dx)
    out = np.zeros_like(w.w_u)
    out[:, 1:-1] = slopes[:, 1::2]
    return out


def project(w, geom, grid, theta=THETA_DEFAULT):
    """Cell averages of the piecewise-linear fan/smooth solution on the
    interior cells; ghost cells are left as zeros."""
    if w.w_u_slopes is None:
        w.w_u_slopes = fan_slopes(w, geom, grid, theta)
    dt = geom.dt
    a = geom.a
    wx = w.w_u_slopes
    out = np.zeros_like(w.w_m)
    sl = grid.interior
    lo, hi = sl.start, sl.stop
    a_left, a_right = a[lo - 1 : hi - 1], a[lo:hi]
    out[:, sl] = (
        a_left * dt * (w.w_u[:, lo - 1 : hi - 1] + 0.5 * a_left * dt * wx[:, lo - 1 : hi - 1])
        + geom.width_m[sl] * w.w_m[:, sl]
        + a_right * dt * (w.w_u[:, lo:hi] - 0.5 * a_right * dt * wx[:, lo:hi])
    ) / grid.dx
    return out


def step_fd(d, profile, grid, system, config=SchemeConfig(), dt_max=None):
    """Advance the deviation field by one step; returns ``(field, dt)``."""
    cells = fill_ghosts(d.cells.copy(), grid, profile)
    cur = DeviationField(cells, mc_theta_slopes(cells, grid.dx, config.theta), d.time)
    geom = make_geometry(cur, profile, grid, system, config.cfl, dt_max)
    try:
        mid = midpoint_predictor(cur, profile, geom, grid, system, config.theta)
        terms = _subcell_terms(mid, profile, geom, system)
    except PositivityError as err:
        raise locate(err, grid, d.time) from None
    w = IntermediateAverages(
        evolve_unsmooth(cur, profile, geom, grid, system, mid, terms),
        evolve_smooth(cur, profile, geom, grid, system, mid, terms),
    )
    new = project(w, geom, grid, config.theta)
    t_new = d.time + geom.dt
    check_finite(new, grid, t_new)
    fill_ghosts(new, grid, profile)
    return DeviationField(new, time=t_new), geom.dt
