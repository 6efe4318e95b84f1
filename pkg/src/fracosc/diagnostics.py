"""Every computable quantity of the sign-dichotomy theorem and its proof.

Given a solved (or sampled) trajectory this module produces:

* the sign quantity S = y * (x' - y) with y = x^(a), whose eventual strict
  negativity is the non-oscillatory alternative of the dichotomy;
* the Riccati variable w = y / x and the residual of the Riccati
  inequality w' + w^2 + q = -S/x^2, reported in its algebraic form and
  reconciled against the differenced form;
* refined zero-crossing sequences (the oscillation witness);
* the averaged bound |w(T)| + e^2/(4(e-1)t) that closes the proof.

All finite-window statements are evidence, never proofs; the report says so
in its notes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .averaging import kamenev_average
from .coefficients import Coefficient
from .errors import DomainError, MeshSizeError
from .grids import GridFunction
from .solver import Solution

__all__ = [
    "DiagnosticsReport",
    "BoundCheck",
    "LimitEstimate",
    "sign_quantity",
    "riccati_residual",
    "detect_sign_changes",
    "kamenev_bound_check",
    "limit_estimate_xalpha",
    "build_report",
]

#: relative floor below which |x| is considered "at a zero" and the Riccati
#: quantities are masked out instead of blowing up
X_THRESHOLD_REL = 1e-8

CROSSING_TIME_TOL = 1e-10


def sign_quantity(sol: Solution) -> GridFunction:
    """S(t_n) = y_n * (x'_n - y_n) node-wise; missing values propagate."""
    s = sol.y.values * (sol.xprime.values - sol.y.values)
    return GridFunction(sol.mesh, s)


def riccati_residual(
    sol: Solution, q: Coefficient, x_threshold: float | None = None
) -> tuple[GridFunction, float]:
    """Algebraic Riccati residual R = -S/x^2, masked near zeros of x.

    Also reconciles R against the differenced form w' + w^2 + q (w = y/x,
    w' by centered differences on unmasked runs) and returns the largest
    absolute disagreement as a consistency figure.
    """
    x = sol.x.values
    t = sol.mesh.nodes
    scale = float(np.nanmax(np.abs(x)))
    if x_threshold is None:
        x_threshold = X_THRESHOLD_REL * scale
    masked = ~np.isfinite(x) | (np.abs(x) <= x_threshold)
    masked |= ~np.isfinite(sol.y.values) | ~np.isfinite(sol.xprime.values)
    if masked.all():
        raise DomainError("all nodes masked: |x| never exceeds the threshold")

    s = sign_quantity(sol).values
    r = np.full_like(x, np.nan)
    live = ~masked
    r[live] = -s[live] / x[live] ** 2

    w = np.full_like(x, np.nan)
    w[live] = sol.y.values[live] / x[live]
    # differenced form on interior nodes whose full stencil is unmasked
    consistency = 0.0
    if t.size >= 3:
        wprime = np.full_like(x, np.nan)
        hm = t[1:-1] - t[:-2]
        hp = t[2:] - t[1:-1]
        core = live[1:-1] & live[:-2] & live[2:]
        wp = (
            -hp / (hm * (hm + hp)) * w[:-2]
            + (hp - hm) / (hm * hp) * w[1:-1]
            + hm / (hp * (hm + hp)) * w[2:]
        )
        wprime[1:-1][core] = wp[core]
        check = np.isfinite(wprime) & (t > q.domain_start)
        if check.any():
            qv = np.asarray(q(t[check]), dtype=float)
            alt = wprime[check] + w[check] ** 2 + qv
            consistency = float(np.max(np.abs(r[check] - alt)))
    return GridFunction(sol.mesh, r), consistency


def _bracketed_crossings(t: np.ndarray, v: np.ndarray, refine: bool):
    """(time, direction) for every strict sign change between consecutive
    unmasked samples; direction is the sign of the right value."""
    live = np.flatnonzero(np.isfinite(v))
    out = []
    for a, b in zip(live[:-1], live[1:]):
        va, vb = v[a], v[b]
        if va * vb < 0.0:
            if refine:
                # root of the chord; exact limit of bisecting the linear
                # interpolant, well below the 1e-10 time tolerance
                tc = t[a] - va * (t[b] - t[a]) / (vb - va)
            else:
                tc = 0.5 * (t[a] + t[b])
            out.append((float(tc), 1.0 if vb > 0 else -1.0))
    return out


def detect_sign_changes(f: GridFunction, refine: bool = True) -> list[float]:
    """Strictly increasing times where the samples change strict sign.

    Masked (NaN) nodes are skipped: a bracket is a pair of consecutive
    *unmasked* samples with opposite strict signs.  With ``refine`` the
    linear interpolant's root is returned (time tolerance 1e-10), otherwise
    the bracket midpoint.
    """
    if np.isfinite(f.values).sum() < 2:
        raise MeshSizeError("need at least 2 unmasked nodes")
    return [tc for tc, _ in _bracketed_crossings(f.times, f.values, refine)]


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of the averaged Riccati estimate lhs <= |w(T)| + e^2/(4(e-1)t)."""

    lhs: float
    rhs: float
    holds: bool

    def to_json_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def kamenev_bound_check(
    w_T: float, q: Coefficient, eps: float, T: float, t: float
) -> BoundCheck:
    """Check the final estimate of the proof over the window [T, t].

    The caller asserts the Riccati residual is <= 0 on [T, t] (the
    derivation's hypothesis); this operation only evaluates the two sides.
    """
    if eps <= 1.0:
        raise DomainError(f"bound requires eps > 1, got {eps:g}")
    if not t > T > 0.0:
        raise DomainError(f"need t > T > 0, got T = {T:g}, t = {t:g}")
    lhs = kamenev_average(q, eps, T, t)
    rhs = abs(w_T) + eps * eps / (4.0 * (eps - 1.0) * t)
    return BoundCheck(lhs=lhs, rhs=rhs, holds=bool(lhs <= rhs + 1e-9))


@dataclass(frozen=True)
class LimitEstimate:
    """Trailing-window mean of x^(a) plus its linear trend; descriptive only."""

    value: float
    trend_slope: float
    window_fraction: float


def limit_estimate_xalpha(sol: Solution, window_fraction: float = 0.25) -> LimitEstimate:
    """Estimate lim x^(a) from the trailing ``window_fraction`` of nodes."""
    if not 0.0 < window_fraction < 1.0:
        raise DomainError("window_fraction must lie in (0, 1)")
    y = sol.y.values
    t = sol.mesh.nodes
    if t.size < 10:
        raise MeshSizeError("limit estimate needs at least 10 nodes")
    start = int(math.floor(t.size * (1.0 - window_fraction)))
    start = min(start, t.size - 2)
    tw, yw = t[start:], y[start:]
    ok = np.isfinite(yw)
    slope = float(np.polyfit(tw[ok], yw[ok], 1)[0]) if ok.sum() >= 2 else math.nan
    return LimitEstimate(
        value=float(np.mean(yw[ok])),
        trend_slope=slope,
        window_fraction=window_fraction,
    )


@dataclass
class DiagnosticsReport:
    """Per-node Riccati quantities, crossing sequences, and provenance notes."""

    w: GridFunction
    riccati: GridFunction
    S: GridFunction
    x_zero_crossings: list[float]
    S_negative_times: list[float]
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "x_zero_crossings": self.x_zero_crossings,
            "s_negative_times": self.S_negative_times,
            "masked_nodes": int(np.isnan(self.w.values).sum()),
            "max_reported_riccati_residual": _nan_max(self.riccati.values),
            "notes": self.notes,
        }

    def csv_rows(self):
        """(t, w, residual, S) per node, NaN for masked entries."""
        for i, t in enumerate(self.w.times):
            yield t, self.w.values[i], self.riccati.values[i], self.S.values[i]


def _nan_max(v: np.ndarray) -> float | None:
    ok = np.isfinite(v)
    return float(np.max(np.abs(v[ok]))) if ok.any() else None


def build_report(
    sol: Solution, q: Coefficient, x_threshold: float | None = None
) -> DiagnosticsReport:
    """Assemble the full diagnostics for one trajectory."""
    s = sign_quantity(sol)
    r, consistency = riccati_residual(sol, q, x_threshold)
    x = sol.x.values
    scale = float(np.nanmax(np.abs(x)))
    thr = X_THRESHOLD_REL * scale if x_threshold is None else x_threshold
    masked = ~np.isfinite(x) | (np.abs(x) <= thr)
    w_vals = np.full_like(x, np.nan)
    w_vals[~masked] = sol.y.values[~masked] / x[~masked]

    crossings = detect_sign_changes(sol.x)
    s_neg = [tc for tc, d in _bracketed_crossings(s.times, s.values, True) if d < 0]
    notes = [
        f"w, residual masked at {int(masked.sum())} node(s), |x| <= {thr:.3e}",
        f"max |R - (w' + w^2 + q)| = {consistency:.3e} (differencing consistency)",
        "crossing sequences are finite-window evidence, not limit statements",
    ]
    return DiagnosticsReport(
        w=GridFunction(sol.mesh, w_vals),
        riccati=r,
        S=s,
        x_zero_crossings=crossings,
        S_negative_times=s_neg,
        notes=notes,
    )
