"""Well-balanced central (Kurganov-Tadmor type) finite-volume schemes for
1D balance laws, written on the deviation from a known stationary state."""

from .diagnostics import (ConvergenceReport, block_average, convergence_rates, l1_error,
                          total_variation, wb_deviation_norm)
from .equilibrium import (DeviationField, EquilibriumProfile, constant_profile, from_deviation,
                          isothermal_profile, moving_profile, to_deviation, zero_profile)
from .errors import (DegenerateFanError, LengthMismatchError, NonFiniteError,
                     NonPositiveError, PositivityError, ZeroSpacingError)
from .experiments import (Scenario, get_scenario, perturbation_study, scenario_burgers,
                          scenario_advection, scenario_isothermal, scenario_moving,
                          scenario_perturbed, scenario_shock_tube, simulate)
from .grid import Grid
from .physics import Burgers, Euler, LinearAdvection
from .scheme_fd import step_fd
from .scheme_sd import equilibrium_residual, step_ssp2
from .stepping import SchemeConfig, advance

__version__ = "0.1.0"
