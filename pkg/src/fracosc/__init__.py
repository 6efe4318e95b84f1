"""fracosc: a numerical laboratory for the linear fractional equation
(x^(a))' + q(t) x = 0 with a Caputo derivative of order a in (0, 1).

Subpackages cover the pipeline end to end: special functions with tracked
error bounds, discrete fractional operators, the coupled Volterra solver
(plus the curvature-operator analogue), the Kamenev averaging functional,
and the sign/Riccati diagnostics of the oscillation dichotomy.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .coefficients import (
    Coefficient,
    Constant,
    PowerLaw,
    Sinusoid,
    Tabulated,
    power_solution_coefficient,
)
from .grids import GridFunction, Mesh
from .solver import FdeProblem, Solution, residual_fde, solve_curvature, solve_fde
from .specialfn import MlEvalResult, gamma, mittag_leffler, ml_zero_spacing

__all__ = [
    "__version__",
    "Coefficient",
    "Constant",
    "PowerLaw",
    "Sinusoid",
    "Tabulated",
    "power_solution_coefficient",
    "GridFunction",
    "Mesh",
    "FdeProblem",
    "Solution",
    "solve_fde",
    "solve_curvature",
    "residual_fde",
    "gamma",
    "mittag_leffler",
    "ml_zero_spacing",
    "MlEvalResult",
]
