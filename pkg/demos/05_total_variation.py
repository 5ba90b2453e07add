"""Total variation of a steepening Burgers wave.

The sine profile forms a shock at t = 1/(2 pi) ~ 0.16. With the semi-discrete
scheme and two-stage SSP Runge-Kutta the total variation never increases,
before or after the shock.
"""

import numpy as np

from wbcentral.diagnostics import total_variation
from wbcentral.experiments import get_scenario, simulate

scenario = get_scenario("burgers")
grid = scenario.grid(200)
times = [0.0]
tv = [total_variation(scenario.initial_state(grid.interior_centers)[0], periodic=True)]


def record(d, dt):
    times.append(d.time)
    tv.append(total_variation(d.cells[0, grid.interior], periodic=True))


simulate(scenario, 200, "semi_discrete", on_step=record)
for t, v in list(zip(times, tv))[::15]:
    print(f"t={t:6.4f}  TV={v:.6f}")
print(f"largest increase over one step: {np.max(np.diff(tv)):.2e}")
