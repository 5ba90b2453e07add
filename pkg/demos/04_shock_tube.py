"""Sod shock tube under gravity between reflecting walls.

Prints a coarse text profile of the density at t = 0.2 and the L1 gap
between successive resolutions. Set WB_OUTPUT_DIR and use the command line
runner to get the full CSV instead:

    WB_OUTPUT_DIR=out python -m wbcentral run --scenario shock_tube --n 400
"""

import numpy as np

from wbcentral.diagnostics import block_average, l1_error
from wbcentral.experiments import get_scenario, simulate

scenario = get_scenario("shock_tube")
rho = {n: simulate(scenario, n).state[0] for n in (100, 200, 400)}

for n in (100, 200):
    gap = l1_error(rho[n], block_average(rho[2 * n], 2), 1.0 / n)
    print(f"|rho_{n} - rho_{2 * n}|_1 = {gap:.3e}")

print("\ndensity at N=400, every 20th cell")
x = scenario.grid(400).interior_centers
for xi, r in zip(x[::20], rho[400][::20]):
    print(f"{xi:6.3f} {r:7.4f} " + "#" * int(round(40 * r)))
print(f"\nmin rho = {np.min(rho[400]):.4f}")
