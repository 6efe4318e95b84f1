"""Coefficient families: evaluation, domains, the matched power-law constant."""

import numpy as np
import pytest

from fracosc.coefficients import (
    Constant,
    PowerLaw,
    Sinusoid,
    Tabulated,
    power_solution_coefficient,
)
from fracosc.errors import DomainError
from fracosc.grids import GridFunction, Mesh
from fracosc.specialfn import gamma

C_HALF_QUARTER = 0.18491719494928993076942633485798  # (a-b)G(1+b)/G(1+b-a), a=.5 b=.25


def test_constant_scalar_and_array():
    q = Constant(2.5)
    assert q(3.0) == 2.5
    assert np.all(q(np.array([0.0, 1.0])) == 2.5)


def test_power_law_needs_domain_start_for_negative_exponent():
    with pytest.raises(DomainError):
        PowerLaw(1.0, -1.5)
    q = PowerLaw(1.0, -1.5, domain_start=0.5)
    assert q(1.0) == 1.0
    with pytest.raises(DomainError):
        q(0.25)


def test_power_law_positive_exponent_from_zero():
    q = PowerLaw(3.0, 2.0)
    assert q(2.0) == 12.0
    assert q(0.0) == 0.0


def test_sinusoid():
    q = Sinusoid(amplitude=2.0, offset=1.0, omega=0.5)
    assert q(np.pi) == pytest.approx(2.0 * np.sin(np.pi / 2) + 1.0)


def test_tabulated_interpolates_inside_hull_only():
    grid = GridFunction(Mesh(np.array([1.0, 2.0, 3.0])), np.array([1.0, 3.0, 2.0]))
    q = Tabulated(grid)
    assert q.domain_start == 1.0
    assert q(1.5) == pytest.approx(2.0)
    for bad in (0.5, 3.5):
        with pytest.raises(DomainError):
            q(bad)


def test_power_solution_coefficient_value():
    assert power_solution_coefficient(0.5, 0.25) == pytest.approx(C_HALF_QUARTER, rel=1e-13)


def test_power_solution_coefficient_formula():
    alpha, beta = 0.7, 0.3
    expected = (alpha - beta) * gamma(1.0 + beta) / gamma(1.0 + beta - alpha)
    assert power_solution_coefficient(alpha, beta) == pytest.approx(expected, rel=1e-14)
    with pytest.raises(DomainError):
        power_solution_coefficient(0.5, 0.6)
