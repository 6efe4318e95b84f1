#!/usr/bin/env python3
"""Survey the averaging classifier over a small zoo of coefficients.

For each family the script prints the verdict, the top-half growth
fraction, and (where meaningful) the tail-integrability report, showing
how the divergent / bounded dichotomy separates the constant coefficient
from the matched power law.
"""

import argparse

from fracosc.averaging import KamenevParams, check_integrability_conditions, classify_kamenev
from fracosc.coefficients import Constant, PowerLaw, Sinusoid, power_solution_coefficient


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--epsilon", type=float, default=3.0)
    ap.add_argument("--t0", type=float, default=1.0)
    args = ap.parse_args()
    params = KamenevParams.default(eps=args.epsilon, t0=args.t0)

    zoo = [
        ("q = 1", Constant(1.0), 0.5),
        ("q = 0.02", Constant(0.02), 0.5),
        ("q = sin t", Sinusoid(1.0, 0.0, 1.0), 0.5),
        ("q = sin t + 0.2", Sinusoid(1.0, 0.2, 1.0), 0.5),
    ]
    for alpha in (0.25, 0.5, 0.75):
        c = power_solution_coefficient(alpha, alpha / 2)
        zoo.append(
            (f"q = C t^-(1+{alpha})", PowerLaw(c, -1 - alpha, domain_start=0.01), alpha)
        )
    zoo.append(("q = 0.1 t^-3 on [1,inf)", PowerLaw(0.1, -3.0, 1.0), 0.5))

    print(f"{'coefficient':28s} {'verdict':22s} {'growth':>8s}  conditions (I1, I2, passes)")
    for label, q, alpha in zoo:
        v = classify_kamenev(q, params)
        rep = check_integrability_conditions(q, alpha, 200.0)
        enc = rep.to_json_dict()
        print(
            f"{label:28s} {v.verdict.value:22s} {v.growth_fraction:8.3f}  "
            f"({enc['I1']}, {enc['I2']}, {enc['passes']})"
        )


if __name__ == "__main__":
    main()
