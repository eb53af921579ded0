import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lerchfrac.complexfn import cpow_principal
from lerchfrac.errors import ConvergenceError, DomainError
from lerchfrac.lerch import (ParameterPoint, Regime, SeriesPolicy, TailBound, hurwitz,
                             lerch_series, lerch_series_info, lerch_series_scaled,
                             lerch_series_vec, lerch_t_spectral, lerch_x_partial, riemann)

from conftest import ORACLE, rel_err

P = ParameterPoint

geometric_points = st.builds(
    P,
    st.builds(complex, st.floats(-1, 1), st.floats(0.15, 1.5)),
    st.builds(complex, st.floats(0.3, 3), st.floats(-1, 1)),
    st.builds(complex, st.floats(-3, 4), st.floats(-4, 4)),
)


class TestParameterPoint:
    def test_coerces_to_complex(self):
        p = P(1, 2, 3)
        assert isinstance(p.t, complex) and p.x == 2 + 0j

    @pytest.mark.parametrize("p, regime", [
        (P(1j, 1, -5), Regime.GEOMETRIC),
        (P(0.3, 1, 2), Regime.BOUNDARY),
        (P(0, 1, 0.5), Regime.INVALID),
        (P(-0.1j, 1, 2), Regime.INVALID),
        (P(1j, -2, 2), Regime.INVALID),
        (P(0, -0.5 + 1j, 2), Regime.INVALID),
    ])
    def test_regime(self, p, regime):
        assert p.regime is regime

    def test_require(self):
        with pytest.raises(DomainError):
            P(0, 1, 0.5).require(Regime.GEOMETRIC, Regime.BOUNDARY)
        assert P(1j, 1, 0).require(Regime.GEOMETRIC) is Regime.GEOMETRIC

    def test_frozen(self):
        with pytest.raises(AttributeError):
            P(1j, 1, 0).t = 0


class TestLerchSeries:
    def test_geometric_s0(self):
        assert rel_err(lerch_series(P(1j, 1, 0)), 1 / (1 - math.exp(-2 * math.pi))) < 1e-13

    def test_zeta2(self):
        assert rel_err(lerch_series(P(0, 1, 2)), math.pi ** 2 / 6) < 1e-13

    def test_oracle_geometric(self):
        assert rel_err(lerch_series(P(0.3 + 0.7j, 0.8 - 0.2j, 0.5 + 1j)),
                       ORACLE["lerch_geometric"]) < 1e-12

    def test_boundary_needs_re_s_above_one(self):
        with pytest.raises(DomainError):
            lerch_series(P(0, 1, 0.5))

    def test_boundary_noninteger_t(self):
        # L(1/2, 1, 2) = sum (-1)^m/(m+1)^2 = pi^2/12
        val = lerch_series(P(0.5, 1, 2), SeriesPolicy(rel_tol=1e-10))
        assert rel_err(val, math.pi ** 2 / 12) < 1e-10

    def test_boundary_noninteger_t_tight_tolerance_is_refused(self):
        with pytest.raises(ConvergenceError):
            lerch_series(P(0.5, 1, 2), SeriesPolicy(rel_tol=1e-12, max_terms=10**5))

    def test_tail_bound_mismatch(self):
        with pytest.raises(DomainError):
            lerch_series(P(1j, 1, 2), SeriesPolicy(tail_bound=TailBound.INTEGRAL))
        with pytest.raises(DomainError):
            lerch_series(P(0, 1, 2), SeriesPolicy(tail_bound=TailBound.GEOMETRIC))

    def test_info_reports_terms_and_bound(self):
        info = lerch_series_info(P(0.2 + 0.8j, 1, 0.5))
        assert info.n_terms >= 1 and info.tail_bound < 1e-12 * abs(info.value)

    def test_policy_validation(self):
        with pytest.raises(ValueError):
            SeriesPolicy(rel_tol=0)
        with pytest.raises(ValueError):
            SeriesPolicy(max_terms=0)

    def test_max_terms(self):
        with pytest.raises(ConvergenceError):
            lerch_series(P(0.001j, 1, 1), SeriesPolicy(max_terms=10))

    @settings(max_examples=100, deadline=None)
    @given(geometric_points)
    def test_x_shift_equation(self, p):
        lhs = lerch_series(p)
        rhs = cpow_principal(p.x, -p.s) + cmath.exp(2j * math.pi * p.t) * lerch_series(
            p.replace(x=p.x + 1))
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(cpow_principal(p.x, -p.s)))

    @settings(max_examples=50, deadline=None)
    @given(geometric_points)
    def test_periodic_in_t(self, p):
        a = lerch_series(p)
        b = lerch_series(p.replace(t=p.t + 1))
        assert abs(a - b) <= 1e-11 * max(abs(a), 1e-300) + 1e-300

    @settings(max_examples=50, deadline=None)
    @given(geometric_points)
    def test_scaled_matches_plain(self, p):
        c = 0.7 - 0.3j
        assert rel_err(lerch_series_scaled(p, c), cmath.exp(c) * lerch_series(p)) < 1e-11

    def test_scaled_avoids_overflow(self):
        # x^n L(t, x, s + n) stays bounded for |x| < 1 although L alone overflows
        p = P(0.1 + 0.5j, 0.5, 2000.0)
        val = lerch_series_scaled(p, 2000 * math.log(0.5))
        assert abs(val - 1) < 1e-12


class TestHurwitzRiemann:
    def test_zeta4(self):
        assert rel_err(riemann(4), math.pi ** 4 / 90) < 1e-13

    def test_zeta6(self):
        assert rel_err(riemann(6), math.pi ** 6 / 945) < 1e-13

    def test_oracle(self):
        assert rel_err(hurwitz(0.7, 2.5), ORACLE["hurwitz_0.7_2.5"]) < 1e-12

    def test_complex_s(self):
        # zeta(x, s) - zeta(x+1, s) = x^-s
        x, s = 0.4 + 0.2j, 3 + 2j
        assert rel_err(hurwitz(x, s) - hurwitz(x + 1, s), cpow_principal(x, -s)) < 1e-11

    @pytest.mark.parametrize("x, s", [(1, 1), (1, 0.5), (-1, 2)])
    def test_domain(self, x, s):
        with pytest.raises(DomainError):
            hurwitz(x, s)


class TestSpectral:
    p = P(0.2 + 0.9j, 1, 1.5)

    def test_order_zero(self):
        assert lerch_t_spectral(0, self.p) == lerch_series(self.p)

    def test_first_derivative(self):
        # the difference cancels about two digits, so evaluate it tightly
        p, tight = self.p, SeriesPolicy(rel_tol=1e-15)
        expect = 2j * math.pi * (lerch_series(p.replace(s=p.s - 1), tight)
                                 - p.x * lerch_series(p, tight))
        assert rel_err(lerch_t_spectral(1, p), expect) < 1e-10

    def test_oracle_half(self):
        assert rel_err(lerch_t_spectral(0.5, self.p), ORACLE["lerch_t_half"]) < 1e-12

    def test_right_side_integer(self):
        # (-2 pi i m)^1 = -(2 pi i m)
        assert rel_err(lerch_t_spectral(1, self.p, right=True), -lerch_t_spectral(1, self.p)) < 1e-14

    def test_negative_order_refused(self):
        with pytest.raises(DomainError):
            lerch_t_spectral(-0.5, self.p)

    def test_needs_geometric(self):
        with pytest.raises(DomainError):
            lerch_t_spectral(0.5, P(0, 1, 3))


class TestXPartial:
    def test_order_zero(self):
        p = P(0.3 + 0.5j, 1.2, 0.7)
        assert lerch_x_partial(0, p) == lerch_series(p)

    def test_first(self):
        p = P(1j, 1, 2)
        assert rel_err(lerch_x_partial(1, p), -2 * lerch_series(p.replace(s=3))) < 1e-14

    def test_oracle(self):
        assert rel_err(lerch_x_partial(3, P(0.1 + 0.8j, 1.2, 0.7)), ORACLE["x_partial_3"]) < 1e-12

    def test_negative_k(self):
        with pytest.raises(ValueError):
            lerch_x_partial(-1, P(1j, 1, 1))


class TestVectorised:
    @settings(max_examples=30, deadline=None)
    @given(geometric_points)
    def test_matches_scalar(self, p):
        xs = np.array([p.x, p.x + 0.5, p.x + 0.1j])
        vec = lerch_series_vec(p.t, xs, p.s)
        for x, v in zip(xs, vec):
            assert rel_err(v, lerch_series(p.replace(x=x))) < 1e-11

    def test_boundary_fallback(self):
        vec = lerch_series_vec(0, np.array([1.0, 2.0]), 2)
        assert rel_err(vec[0], math.pi ** 2 / 6) < 1e-12
        assert rel_err(vec[1], math.pi ** 2 / 6 - 1) < 1e-12

    def test_infinite_x(self):
        vec = lerch_series_vec(0.5j, np.array([1.0, np.inf]), 2)
        assert vec[1] == 0

    def test_negative_axis(self):
        with pytest.raises(DomainError):
            lerch_series_vec(0.5j, np.array([-1.0]), 2)
