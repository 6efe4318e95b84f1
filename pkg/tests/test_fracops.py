"""Product-integration operators: closed forms, linearity, convergence."""


import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracosc.errors import DomainError, MeshSizeError
from fracosc.fracops import caputo_derivative, fractional_integral, prod_trap_weights
from fracosc.grids import GridFunction, Mesh, finite_difference_derivative
from fracosc.specialfn import gamma


def gf(mesh, fn):
    return GridFunction(mesh, fn(mesh.nodes))


class TestMesh:
    def test_uniform(self):
        m = Mesh.uniform(2.0, 4)
        assert np.allclose(m.nodes, [0, 0.5, 1.0, 1.5, 2.0])
        assert m.grading == 1.0

    def test_graded(self):
        m = Mesh.graded(1.0, 4, r=2.0)
        assert np.allclose(m.nodes, [0, 1 / 16, 1 / 4, 9 / 16, 1.0])

    def test_rejects_bad_nodes(self):
        with pytest.raises(DomainError):
            Mesh(np.array([0.0, 1.0, 1.0]))
        with pytest.raises(DomainError):
            Mesh(np.array([-1.0, 0.0, 1.0]))
        with pytest.raises(MeshSizeError):
            Mesh(np.array([0.0]))
        with pytest.raises(DomainError):
            Mesh.graded(1.0, 8, r=0.5)

    def test_gridfunction_length_check(self):
        m = Mesh.uniform(1.0, 4)
        with pytest.raises(MeshSizeError):
            GridFunction(m, np.zeros(3))


class TestCaputoDerivative:
    def test_constant_annihilated(self):
        m = Mesh.uniform(1.0, 64)
        out = caputo_derivative(gf(m, lambda t: np.full_like(t, 3.7)), 0.5)
        assert np.max(np.abs(out.values)) <= 1e-13

    def test_linear_function_is_exact(self):
        # h' is exactly piecewise constant, so the L1 rule is exact:
        # caputo of t at order a equals t^(1-a)/Gamma(2-a)
        m = Mesh.graded(2.0, 128, r=2.0)
        out = caputo_derivative(gf(m, lambda t: t), 0.5)
        expected = m.nodes[1:] ** 0.5 / gamma(1.5)
        assert np.max(np.abs(out.values[1:] - expected) / expected) <= 1e-12
        assert out.values[0] == 0.0

    def test_power_closed_form(self):
        # x = t^b has derivative Gamma(1+b)/Gamma(1+b-a) * t^(b-a)
        alpha, beta = 0.5, 0.25
        m = Mesh.graded(1.0, 1024, r=2.0)
        out = caputo_derivative(gf(m, lambda t: t**beta), alpha)
        g = gamma(1.0 + beta) / gamma(1.0 + beta - alpha)
        sel = m.nodes >= 0.5
        expected = g * m.nodes[sel] ** (beta - alpha)
        rel = np.abs(out.values[sel] - expected) / np.abs(expected)
        assert rel.max() <= 1e-4

    @settings(max_examples=25, deadline=None)
    @given(
        st.floats(min_value=-5.0, max_value=5.0),
        st.floats(min_value=-5.0, max_value=5.0),
    )
    def test_linearity(self, a, b):
        m = Mesh.uniform(1.0, 32)
        f = gf(m, lambda t: np.sin(t))
        g = gf(m, lambda t: t**2)
        lhs = caputo_derivative(GridFunction(m, a * f.values + b * g.values), 0.4)
        rhs = a * caputo_derivative(f, 0.4).values + b * caputo_derivative(g, 0.4).values
        scale = np.max(np.abs(rhs)) + 1.0
        assert np.max(np.abs(lhs.values - rhs)) <= 1e-12 * scale

    def test_domain_checks(self):
        m = Mesh.uniform(1.0, 8)
        f = gf(m, lambda t: t)
        for bad in (0.0, 1.0, -0.5):
            with pytest.raises(DomainError):
                caputo_derivative(f, bad)
        shifted = GridFunction(Mesh.uniform(2.0, 8, t_start=1.0), np.zeros(9))
        with pytest.raises(DomainError):
            caputo_derivative(shifted, 0.5)


class TestFractionalIntegral:
    def test_zero_density_gives_constant(self):
        m = Mesh.uniform(1.0, 32)
        out = fractional_integral(gf(m, lambda t: np.zeros_like(t)), 0.5, h0=2.5)
        assert np.all(out.values == 2.5)

    def test_constant_density_gives_power(self):
        # g = Gamma(1+a) integrates to exactly t^a (constant interpolation
        # is exact, kernel exact)
        for alpha in (0.25, 0.5, 0.75):
            m = Mesh.graded(1.0, 256, r=2.0)
            out = fractional_integral(
                gf(m, lambda t: np.full_like(t, gamma(1.0 + alpha))), alpha, h0=0.0
            )
            expected = m.nodes**alpha
            assert np.max(np.abs(out.values[1:] - expected[1:])) <= 1e-12

    def test_weights_nonnegative(self):
        for mesh in (Mesh.uniform(1.0, 40), Mesh.graded(1.0, 40, 3.0)):
            for alpha in (0.1, 0.5, 0.9):
                for i in (1, 7, 40):
                    w_left, w_right = prod_trap_weights(mesh.nodes, i, alpha)
                    assert np.all(w_left >= 0.0)
                    assert np.all(w_right >= 0.0)

    @settings(max_examples=20, deadline=None)
    @given(st.floats(min_value=0.05, max_value=0.95))
    def test_weights_sum_to_kernel_mass(self, alpha):
        # sum of weights = int_0^t (t-s)^(a-1) ds = t^a / a
        m = Mesh.graded(2.0, 33, 2.0)
        i = 33
        w_left, w_right = prod_trap_weights(m.nodes, i, alpha)
        total = w_left.sum() + w_right.sum()
        assert total == pytest.approx(m.nodes[i] ** alpha / alpha, rel=1e-10)


class TestRoundTrip:
    def test_t_squared_at_reference_resolution(self):
        m = Mesh.uniform(1.0, 1024)
        f = gf(m, lambda t: t**2)
        rec = fractional_integral(caputo_derivative(f, 0.5), 0.5, h0=0.0)
        assert np.max(np.abs(rec.values - f.values)) <= 1e-4

    @pytest.mark.parametrize("fn", [lambda t: t**2, np.sin, lambda t: t**1.5])
    @pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
    def test_refinement_order_at_least_one(self, fn, alpha):
        errs = []
        ns = [256, 512, 1024, 2048]
        for n in ns:
            m = Mesh.graded(1.0, n, r=2.0)
            f = gf(m, fn)
            rec = fractional_integral(caputo_derivative(f, alpha), alpha, h0=f.values[0])
            errs.append(float(np.max(np.abs(rec.values - f.values))))
        assert all(e2 < e1 for e1, e2 in zip(errs, errs[1:]))
        order = -np.polyfit(np.log2(ns), np.log2(errs), 1)[0]
        assert order >= 1.0


def test_finite_difference_derivative_quadratic_exact():
    t = np.array([0.0, 0.3, 0.7, 1.5, 2.0])
    v = 2.0 * t**2 - t + 1.0
    d = finite_difference_derivative(t, v)
    assert np.allclose(d[1:-1], (4.0 * t - 1.0)[1:-1], atol=1e-12)
