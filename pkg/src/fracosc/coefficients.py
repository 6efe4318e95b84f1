"""Functional coefficient families for q(t).

Closed-form families carry enough structure for the averaging module to
decide integral convergence analytically; the tabulated family only knows
its samples and interpolates linearly inside its hull.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import specialfn
from .errors import DomainError
from .grids import GridFunction

__all__ = [
    "Coefficient",
    "Constant",
    "PowerLaw",
    "Sinusoid",
    "Tabulated",
    "power_solution_coefficient",
]


class Coefficient:
    """Base class; concrete families are callables t -> q(t).

    ``domain_start`` is the left edge of the domain of definition;
    evaluation below it raises :class:`DomainError`.
    """

    domain_start: float = 0.0

    def __call__(self, t):
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(Coefficient):
    value: float

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.full_like(t, self.value)
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class PowerLaw(Coefficient):
    """q(t) = coeff * t**exponent on [domain_start, inf)."""

    coeff: float
    exponent: float
    domain_start: float = 0.0

    def __post_init__(self):
        if self.exponent < 0.0 and self.domain_start <= 0.0:
            raise DomainError(
                "power law with negative exponent needs domain_start > 0"
            )
        if self.domain_start < 0.0:
            raise DomainError("domain_start must be >= 0")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < self.domain_start):
            raise DomainError(
                f"power-law coefficient undefined below t = {self.domain_start:g}"
            )
        out = self.coeff * t**self.exponent
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class Sinusoid(Coefficient):
    """q(t) = amplitude * sin(omega * t) + offset."""

    amplitude: float
    offset: float = 0.0
    omega: float = 1.0

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = self.amplitude * np.sin(self.omega * t) + self.offset
        return out if out.ndim else float(out)


@dataclass(frozen=True, eq=False)
class Tabulated(Coefficient):
    """Linear interpolation of samples, defined on the sample hull only."""

    grid: GridFunction

    @property
    def domain_start(self) -> float:  # type: ignore[override]
        return float(self.grid.times[0])

    @property
    def domain_end(self) -> float:
        return float(self.grid.times[-1])

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < self.domain_start) or np.any(t > self.domain_end):
            raise DomainError(
                f"tabulated coefficient defined on [{self.domain_start:g}, "
                f"{self.domain_end:g}] only; no extrapolation"
            )
        out = np.interp(t, self.grid.times, self.grid.values)
        return out if out.ndim else float(out)


def power_solution_coefficient(alpha: float, beta: float) -> float:
    """The constant making q(t) = C * t^(-1-alpha) pair with x(t) = t^beta.

    C = (alpha - beta) * Gamma(1+beta) / Gamma(1+beta-alpha); with this q the
    power x = t^beta solves the fractional equation away from the origin.
    Requires 0 < beta < alpha < 1.
    """
    if not 0.0 < beta < alpha < 1.0:
        raise DomainError("need 0 < beta < alpha < 1")
    return (alpha - beta) * specialfn.gamma(1.0 + beta) / specialfn.gamma(1.0 + beta - alpha)
