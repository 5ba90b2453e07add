"""Error norms, convergence rates, total variation and reference solutions."""

from dataclasses import dataclass, field

import numpy as np

from .errors import LengthMismatchError, NonPositiveError


def total_variation(values, periodic=False):
    """Sum of absolute jumps between neighbouring entries.

    With ``periodic`` the jump from the last entry back to the first counts too.
    """
    v = np.asarray(values, dtype=float)
    if v.shape[-1] < 2:
        raise ValueError("need at least two values")
    tv = np.sum(np.abs(np.diff(v, axis=-1)))
    if periodic:
        tv += np.sum(np.abs(v[..., 0] - v[..., -1]))
    return float(tv)


def l1_error(numeric, reference, dx):
    numeric = np.asarray(numeric, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if numeric.shape != reference.shape:
        raise LengthMismatchError(f"shapes {numeric.shape} and {reference.shape} differ")
    return float(dx * np.sum(np.abs(numeric - reference)))


def convergence_rates(errors):
    """``log2(e_k / e_{k+1})`` for errors on successively doubled grids."""
    e = np.asarray(errors, dtype=float)
    if np.any(~(e > 0)):
        raise NonPositiveError("errors must be positive")
    return np.log2(e[:-1] / e[1:])


def wb_deviation_norm(d):
    """Largest absolute deviation over all cells and components.

    Accepts a DeviationField or a plain array.
    """
    cells = getattr(d, "cells", d)
    cells = np.asarray(cells, dtype=float)
    return float(np.max(np.abs(cells))) if cells.size else 0.0


def block_average(fine, factor):
    """Average consecutive blocks of ``factor`` cells along the last axis."""
    fine = np.asarray(fine, dtype=float)
    n = fine.shape[-1]
    if n % factor:
        raise LengthMismatchError(f"{n} cells do not split into blocks of {factor}")
    return fine.reshape(fine.shape[:-1] + (n // factor, factor)).mean(axis=-1)


@dataclass
class ConvergenceReport:
    grid_sizes: list
    l1_errors: dict
    rates: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.rates:
            self.rates = {k: convergence_rates(v) for k, v in self.l1_errors.items()}

    def table(self):
        """Plain-text table, one row per grid size."""
        names = list(self.l1_errors)
        head = ["N"] + [c for n in names for c in (f"{n}_L1", f"{n}_rate")]
        rows = [" ".join(f"{h:>12s}" for h in head)]
        for k, n in enumerate(self.grid_sizes):
            cells = [f"{n:>12d}"]
            for name in names:
                cells.append(f"{self.l1_errors[name][k]:12.4e}")
                cells.append(f"{self.rates[name][k - 1]:12.2f}" if k else f"{'-':>12s}")
            rows.append(" ".join(cells))
        return "\n".join(rows)
