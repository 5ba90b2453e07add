"""Hyperbolic systems: Euler equations with gravity and two scalar laws.

All state arrays put the conserved components on the first axis, so an Euler
state on a grid of ``n`` cells has shape ``(3, n)`` and a scalar state has
shape ``(1, n)``. A single state is simply a length-3 (or length-1) vector.
"""

import numpy as np

from .errors import PositivityError

GAMMA = 1.4


def _first_bad(mask):
    idx = np.argwhere(np.atleast_1d(mask))
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def euler_pressure(q, gamma=GAMMA):
    """Ideal-gas pressure ``(gamma - 1) * (E - m**2 / (2 rho))``."""
    q = np.asarray(q, dtype=float)
    rho, mom, energy = q[0], q[1], q[2]
    bad = ~(rho > 0)
    if np.any(bad):
        raise PositivityError("non-positive density", index=_first_bad(bad))
    return (gamma - 1.0) * (energy - 0.5 * mom * mom / rho)


def _checked_primitives(q, gamma):
    q = np.asarray(q, dtype=float)
    p = euler_pressure(q, gamma)
    bad = ~(p > 0)
    if np.any(bad):
        raise PositivityError("non-positive pressure", index=_first_bad(bad))
    return q[0], q[1] / q[0], p


def euler_flux(q, gamma=GAMMA):
    q = np.asarray(q, dtype=float)
    rho, u, p = _checked_primitives(q, gamma)
    mom, energy = q[1], q[2]
    return np.stack([mom, mom * u + p, (energy + p) * u])


def euler_max_wavespeed(q, gamma=GAMMA):
    """Spectral radius ``|u| + c`` of the Euler flux Jacobian."""
    rho, u, p = _checked_primitives(q, gamma)
    return np.abs(u) + np.sqrt(gamma * p / rho)


def euler_jacobian(q, gamma=GAMMA):
    """Analytic flux Jacobian of a single Euler state, shape (3, 3)."""
    rho, u, p = _checked_primitives(q, gamma)
    h = (q[2] + p) / rho
    gm = gamma - 1.0
    return np.array(
        [
            [0.0, 1.0, 0.0],
            [0.5 * (gamma - 3.0) * u * u, (3.0 - gamma) * u, gm],
            [u * (0.5 * gm * u * u - h), h - gm * u * u, gamma * u],
        ]
    )


def gravity_source(q, phi_x):
    """``(0, -rho * phi_x, -m * phi_x)``; linear in the conserved state."""
    q = np.asarray(q, dtype=float)
    phi_x = np.asarray(phi_x, dtype=float)
    return np.stack([np.zeros_like(q[0] * phi_x), -q[0] * phi_x, -q[1] * phi_x])


def burgers_flux(q):
    return 0.5 * np.asarray(q, dtype=float) ** 2


class Euler:
    """1D Euler equations with a gravitational source term."""

    n_comp = 3
    has_source = True
    names = ("rho", "momentum", "energy")

    def __init__(self, gamma=GAMMA):
        if not gamma > 1.0:
            raise ValueError("gamma must exceed 1")
        self.gamma = float(gamma)

    def flux(self, q):
        return euler_flux(q, self.gamma)

    def max_wavespeed(self, q):
        return euler_max_wavespeed(q, self.gamma)

    def source(self, q, phi_x):
        return gravity_source(q, phi_x)

    def pressure(self, q):
        return euler_pressure(q, self.gamma)

    def jacobian(self, q):
        return euler_jacobian(q, self.gamma)

    def __repr__(self):
        return f"Euler(gamma={self.gamma})"


class _Scalar:
    n_comp = 1
    has_source = False
    names = ("q",)

    def source(self, q, phi_x):
        return np.zeros_like(np.asarray(q, dtype=float))


class LinearAdvection(_Scalar):
    """``q_t + c q_x = 0``."""

    def __init__(self, speed=1.0):
        self.speed = float(speed)

    def flux(self, q):
        return self.speed * np.asarray(q, dtype=float)

    def max_wavespeed(self, q):
        q = np.asarray(q, dtype=float)
        return np.full(q.shape[1:], abs(self.speed))

    def jacobian(self, q):
        return np.array([[self.speed]])

    def __repr__(self):
        return f"LinearAdvection(speed={self.speed})"


class Burgers(_Scalar):
    def flux(self, q):
        return burgers_flux(q)

    def max_wavespeed(self, q):
        return np.abs(np.asarray(q, dtype=float)[0])

    def jacobian(self, q):
        return np.array([[float(np.asarray(q)[0])]])

    def __repr__(self):
        return "Burgers()"
