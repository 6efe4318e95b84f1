"""Solvers for the fractional equation and its curvature-operator analogue.

The fractional equation of order 1 + a,

    (x^(a))'(t) + q(t) x(t) = 0,    x(0) = x0,  x^(a)(0+) = y0,

is not discretised directly.  Writing y = x^(a), the pair (x, y) satisfies
the equivalent coupled Volterra system

    y(t) = y0 - int_0^t q(s) x(s) ds
    x(t) = x0 + (1/Gamma(a)) int_0^t (t-s)^(a-1) y(s) ds,

which is advanced node by node: the smooth integral by the trapezoidal
rule, the weakly singular one by the product-trapezoidal rule, and the
implicit 2x2 diagonal coupling at each new node solved in closed form.

The two initial data (x0, y0) are exactly the two free constants of the
equation's solution family; y0 = 0 reproduces the Mittag-Leffler solution
for constant q, and y0 = Gamma(1+a) with q = 0 reproduces x = x0 + t^a.
The first derivative is reconstructed from

    x'(t) = (1/Gamma(a)) [ y0 t^(a-1) + int_0^t (t-s)^(a-1) y'(s) ds ],

with y' = -q x known exactly at the nodes.  When y0 != 0, x' genuinely
diverges like y0 t^(a-1)/Gamma(a) at the origin and the node-0 value is
flagged missing (NaN) rather than extrapolated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specialfn
from .coefficients import Coefficient
from .errors import DivergenceError, DomainError, GradientBlowupError, MeshSizeError
from .fracops import caputo_derivative, prod_trap_weights
from .grids import GridFunction, Mesh, finite_difference_derivative

__all__ = [
    "FdeProblem",
    "Solution",
    "solve_fde",
    "residual_fde",
    "solve_curvature",
    "solution_from_samples",
]


@dataclass(frozen=True)
class FdeProblem:
    """Problem statement: order, two initial data, coefficient, mesh."""

    alpha: float
    x0: float
    y0: float
    q: Coefficient
    mesh: Mesh

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha:g}")
        if len(self.mesh) < 3:
            raise MeshSizeError("solve_fde needs at least 3 mesh nodes")
        if self.mesh.nodes[0] != 0.0:
            raise DomainError("solve_fde mesh must start at t = 0")
        if self.q.domain_start > 0.0:
            raise DomainError(
                "q is undefined at t = 0; use residual_fde on a sampled "
                "closed form over [t0, T] instead of solve_fde"
            )


@dataclass(eq=False)
class Solution:
    """Solved trajectory: x, y = x^(a), y' = -q x, and x'."""

    mesh: Mesh
    x: GridFunction
    y: GridFunction
    yprime: GridFunction
    xprime: GridFunction
    alpha: float | None = None


def solve_fde(problem: FdeProblem) -> Solution:
    """Advance the coupled Volterra system over the problem mesh.

    Raises :class:`DivergenceError` carrying the last good node index if
    the iteration produces a non-finite value.
    """
    t = problem.mesh.nodes
    n = t.size
    alpha = problem.alpha
    qv = np.asarray(problem.q(t), dtype=float)
    inv_gamma = 1.0 / specialfn.gamma(alpha)

    x = np.zeros(n)
    y = np.zeros(n)
    yp = np.zeros(n)
    xp = np.zeros(n)
    x[0], y[0] = problem.x0, problem.y0
    with np.errstate(over="ignore"):
        yp[0] = -qv[0] * x[0]

    h = np.diff(t)
    acc = 0.0  # trapezoidal integral of q*x over [0, t_{i-1}]
    # overflow is reported via DivergenceError, not numpy warnings
    with np.errstate(invalid="ignore", over="ignore"):
        for i in range(1, n):
            w_left, w_right = prod_trap_weights(t, i, alpha)
            s_known = w_left @ y[:i]
            if i > 1:
                s_known += w_right[:-1] @ y[1:i]
            w_ii = w_right[-1]
            t_known = acc + 0.5 * h[i - 1] * qv[i - 1] * x[i - 1]
            ci = 0.5 * h[i - 1] * qv[i]
            den = 1.0 + inv_gamma * w_ii * ci
            if den == 0.0 or not math.isfinite(den):
                raise DivergenceError(
                    f"singular step coupling at node {i} (t = {t[i]:g})", i - 1
                )
            x[i] = (problem.x0 + inv_gamma * (s_known + w_ii * (problem.y0 - t_known))) / den
            y[i] = problem.y0 - t_known - ci * x[i]
            if not (math.isfinite(x[i]) and math.isfinite(y[i])):
                raise DivergenceError(
                    f"non-finite state at node {i} (t = {t[i]:g})", i - 1
                )
            acc = t_known + ci * x[i]
            yp[i] = -qv[i] * x[i]
            # same product weights, applied to y' = -q x, give x' (plus the
            # singular y0 term)
            xp[i] = inv_gamma * (w_left @ yp[:i] + w_right @ yp[1 : i + 1])
            if problem.y0 != 0.0:
                xp[i] += inv_gamma * problem.y0 * t[i] ** (alpha - 1.0)
    xp[0] = np.nan if problem.y0 != 0.0 else 0.0

    mesh = problem.mesh
    return Solution(
        mesh=mesh,
        x=GridFunction(mesh, x),
        y=GridFunction(mesh, y),
        yprime=GridFunction(mesh, yp),
        xprime=GridFunction(mesh, xp),
        alpha=alpha,
    )


def residual_fde(x: GridFunction, q: Coefficient, alpha: float) -> GridFunction:
    """Pointwise defect r = d/dt[x^(a)] + q x of a sampled trajectory.

    The Caputo derivative is computed by the L1 rule and differentiated by
    centered finite differences (one-sided at the ends).  Nodes at or below
    ``q.domain_start`` are reported as NaN: analytic scenarios sample the
    closed form from t = 0 even when q is singular there.
    """
    t = x.mesh.nodes
    if t.size < 3:
        raise MeshSizeError("residual needs at least 3 nodes for differencing")
    cap = caputo_derivative(x, alpha)
    d = finite_difference_derivative(t, cap.values)
    out = np.full_like(d, np.nan)
    live = t > q.domain_start
    out[live] = d[live] + np.asarray(q(t[live]), dtype=float) * x.values[live]
    return GridFunction(x.mesh, out)


_U_SATURATION = 1.0 - 1e-9


def _curvature_rhs(q: Coefficient, t: float, x: float, u: float, step: int):
    if abs(u) >= _U_SATURATION:
        raise GradientBlowupError(
            f"curvature operator saturated (|u| -> 1) at step {step}, t = {t:g}",
            step_index=step,
            time=t,
        )
    return u / math.sqrt(1.0 - u * u), -float(q(t)) * x


def solve_curvature(x0: float, u0: float, q: Coefficient, mesh: Mesh) -> Solution:
    """Integrate (Dx)' + q x = 0 with Dx = x'/sqrt(1 + x'^2).

    Equivalently u' = -q x and x' = u/sqrt(1 - u^2) with u = Dx, advanced by
    classical RK4 on the mesh (which need not start at 0).  Requires
    |u0| < 1; raises :class:`GradientBlowupError` when |u| saturates.
    """
    if abs(u0) >= 1.0:
        raise DomainError(f"|u0| must be < 1, got {u0:g}")
    t = mesh.nodes
    n = t.size
    x = np.zeros(n)
    u = np.zeros(n)
    x[0], u[0] = x0, u0
    for i in range(n - 1):
        h = t[i + 1] - t[i]
        xi, ui = x[i], u[i]
        k1x, k1u = _curvature_rhs(q, t[i], xi, ui, i)
        k2x, k2u = _curvature_rhs(q, t[i] + h / 2, xi + h / 2 * k1x, ui + h / 2 * k1u, i)
        k3x, k3u = _curvature_rhs(q, t[i] + h / 2, xi + h / 2 * k2x, ui + h / 2 * k2u, i)
        k4x, k4u = _curvature_rhs(q, t[i] + h, xi + h * k3x, ui + h * k3u, i)
        x[i + 1] = xi + h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x)
        u[i + 1] = ui + h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u)
        if abs(u[i + 1]) >= _U_SATURATION:
            raise GradientBlowupError(
                f"curvature operator saturated (|u| -> 1) at step {i + 1}, "
                f"t = {t[i + 1]:g}",
                step_index=i + 1,
                time=float(t[i + 1]),
            )
    qv = np.asarray(q(t), dtype=float)
    xprime = u / np.sqrt(1.0 - u * u)
    return Solution(
        mesh=mesh,
        x=GridFunction(mesh, x),
        y=GridFunction(mesh, u),
        yprime=GridFunction(mesh, -qv * x),
        xprime=GridFunction(mesh, xprime),
        alpha=None,
    )


def solution_from_samples(x: GridFunction, alpha: float, q: Coefficient) -> Solution:
    """Wrap externally supplied samples as a Solution for the diagnostics.

    y is the L1 Caputo derivative of the samples, y' = -q x (NaN where q is
    undefined), and x' comes from centered finite differences.  Meant for
    closed-form scenarios whose q is singular at the origin and therefore
    outside solve_fde's reach.
    """
    t = x.mesh.nodes
    y = caputo_derivative(x, alpha)
    yp = np.full_like(y.values, np.nan)
    live = t > q.domain_start
    yp[live] = -np.asarray(q(t[live]), dtype=float) * x.values[live]
    xp = finite_difference_derivative(t, x.values)
    return Solution(
        mesh=x.mesh,
        x=x,
        y=y,
        yprime=GridFunction(x.mesh, yp),
        xprime=GridFunction(x.mesh, xp),
        alpha=alpha,
    )
