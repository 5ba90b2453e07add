"""MC-theta limited slopes for piecewise-linear reconstruction."""

import numpy as np

from .errors import ZeroSpacingError

THETA_DEFAULT = 1.5


def clamp_theta(theta):
    return min(max(float(theta), 1.0), 2.0)


def minmod3(a, b, c):
    """``sign(a) * min(|a|, |b|, |c|)`` if all three share a sign, else 0."""
    a, b, c = np.asarray(a, float), np.asarray(b, float), np.asarray(c, float)
    s = np.sign(a)
    agree = (s != 0) & (np.sign(b) == s) & (np.sign(c) == s)
    out = np.where(agree, s * np.minimum(np.minimum(np.abs(a), np.abs(b)), np.abs(c)), 0.0)
    return out[()] if out.ndim == 0 else out


def mc_theta_slopes(cells, dx, theta=THETA_DEFAULT):
    """Componentwise MC-theta slopes along the last axis.

    The first and last cells have no two-sided stencil and get zero slope,
    so callers need at least one ghost cell on each side.
    """
    v = np.asarray(cells, dtype=float)
    theta = clamp_theta(theta)
    slopes = np.zeros_like(v)
    fwd = v[..., 2:] - v[..., 1:-1]
    bwd = v[..., 1:-1] - v[..., :-2]
    slopes[..., 1:-1] = minmod3(theta * fwd / dx, 0.5 * (fwd + bwd) / dx, theta * bwd / dx)
    return slopes


def nonuniform_slopes(values, positions, theta=THETA_DEFAULT, dx=None):
    """MC-theta slopes on a non-equidistant sequence of point values.

    For each interior point ``k`` this is the minmod of the backward,
    central and forward divided differences with the actual spacings as
    denominators; the end points get zero slope. ``dx`` sets the scale for
    the coincident-point check and defaults to the mean spacing.
    """
    v = np.asarray(values, dtype=float)
    x = np.asarray(positions, dtype=float)
    h = np.diff(x)
    if dx is None:
        dx = (x[-1] - x[0]) / max(len(x) - 1, 1)
    tiny = 1e-14 * abs(dx)
    if np.any(h <= tiny):
        k = int(np.argmax(h <= tiny))
        raise ZeroSpacingError(f"positions {k} and {k + 1} coincide or decrease")
    theta = clamp_theta(theta)
    dv = np.diff(v, axis=-1)
    slopes = np.zeros_like(v)
    slopes[..., 1:-1] = minmod3(
        theta * dv[..., :-1] / h[:-1],
        (v[..., 2:] - v[..., :-2]) / (x[2:] - x[:-2]),
        theta * dv[..., 1:] / h[1:],
    )
    return slopes
