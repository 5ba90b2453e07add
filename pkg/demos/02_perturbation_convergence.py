"""Small pressure pulse on top of the hydrostatic atmosphere.

A Gaussian bump of height 1e-3 splits into two acoustic pulses. Errors are
measured against a 3200-cell run of the same scheme, block-averaged onto each
coarse grid. Pass ``--jobs 4`` to spread the runs over processes.
"""

import argparse

from wbcentral.experiments import perturbation_study

parser = argparse.ArgumentParser()
parser.add_argument("--jobs", type=int, default=1)
parser.add_argument("--scheme", default="fully_discrete", choices=["fully_discrete", "semi_discrete"])
args = parser.parse_args()

report = perturbation_study((200, 400, 800, 1600), reference_n=3200, scheme=args.scheme, jobs=args.jobs)
print(report.table())
