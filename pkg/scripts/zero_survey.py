#!/usr/bin/env python3
"""Count and locate the real zeros of t -> E_g(-t^g) across orders.

The constant-coefficient trajectory oscillates with asymptotic spacing
pi/sin(pi/g) only while the exponentially damped oscillation dominates
the algebraic tail; this script shows how the number of zeros grows as
g approaches 2 and how the observed gaps approach the closed form.
"""

import argparse

import numpy as np

from fracosc.specialfn import mittag_leffler, ml_zero_spacing


def zeros_on_window(g, t_end, step=0.02):
    def f(t):
        return mittag_leffler(g, -(t**g)).value if t > 0 else 1.0

    ts = np.arange(0.0, t_end, step)
    vals = np.array([f(t) for t in ts])
    out = []
    for i in range(len(ts) - 1):
        if vals[i] * vals[i + 1] < 0.0:
            a, b, fa = ts[i], ts[i + 1], vals[i]
            for _ in range(60):
                m = 0.5 * (a + b)
                fm = f(m)
                if fa * fm <= 0.0:
                    b = m
                else:
                    a, fa = m, fm
            out.append(0.5 * (a + b))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-end", type=float, default=40.0)
    args = ap.parse_args()

    print(f"{'g':>5s} {'zeros':>6s} {'last zero':>10s} {'last gap':>9s} {'pi/sin(pi/g)':>13s}")
    for g in (1.1, 1.25, 1.5, 1.75, 1.9, 1.95):
        zs = zeros_on_window(g, args.t_end)
        spacing = ml_zero_spacing(g, 1.0)
        last_gap = zs[-1] - zs[-2] if len(zs) > 1 else float("nan")
        last = zs[-1] if zs else float("nan")
        print(f"{g:5.2f} {len(zs):6d} {last:10.3f} {last_gap:9.3f} {spacing:13.4f}")


if __name__ == "__main__":
    main()
