import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lerchfrac import complexfn as cf
from lerchfrac.errors import DomainError, PoleError

from conftest import ORACLE, rel_err


def finite_complex(radius):
    return st.builds(complex, st.floats(-radius, radius), st.floats(-radius, radius)).filter(
        lambda z: abs(z) <= radius)


away_from_integers = finite_complex(20).filter(lambda z: abs(z - round(z.real)) > 0.1)


class TestGamma:
    def test_one(self):
        assert cf.cgamma(1) == pytest.approx(1, rel=1e-15)

    def test_half(self):
        assert cf.cgamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_oracle_2p1i(self):
        assert rel_err(cf.cgamma(2 + 1j), ORACLE["gamma_2p1i"]) < 1e-13

    @pytest.mark.parametrize("z", [0, -1, -7, -3 + 1e-13])
    def test_pole(self, z):
        with pytest.raises(PoleError):
            cf.cgamma(z)

    def test_golden_table(self):
        for key, val in ORACLE["gamma_golden"].items():
            z = complex(key.strip("()"))
            assert rel_err(cf.cgamma(z), val) < 1e-12, key

    @settings(max_examples=300, deadline=None)
    @given(away_from_integers)
    def test_reflection(self, z):
        assert abs(cf.cgamma(z) * cf.cgamma(1 - z) * cf.sinpi(z) / math.pi - 1) < 1e-10

    @settings(max_examples=300, deadline=None)
    @given(away_from_integers)
    def test_recurrence(self, z):
        assert rel_err(cf.cgamma(z + 1), z * cf.cgamma(z)) < 1e-11

    def test_large_modulus_accuracy(self):
        # Gamma(n) = (n-1)! up to |z| = 50
        for n in (10, 25, 50):
            assert rel_err(cf.cgamma(n), math.factorial(n - 1)) < 1e-12

    def test_lgamma_is_a_logarithm(self):
        z = 3.3 - 4.1j
        assert rel_err(cmath.exp(cf.lgamma(z)), cf.cgamma(z)) < 1e-13


class TestRgamma:
    def test_values(self):
        assert cf.rgamma(1) == pytest.approx(1)
        assert cf.rgamma(0.5) == pytest.approx(0.564189583547756, rel=1e-13)

    @pytest.mark.parametrize("n", [0, -1, -3, -10])
    def test_exact_zero_at_poles(self, n):
        assert cf.rgamma(n) == 0

    @settings(max_examples=100, deadline=None)
    @given(away_from_integers)
    def test_reciprocal(self, z):
        assert abs(cf.rgamma(z) * cf.cgamma(z) - 1) < 1e-12


class TestPrincipalBranch:
    def test_one_to_any(self):
        assert cf.cpow_principal(1, 2.5 - 3j) == pytest.approx(1)

    def test_minus_i_half(self):
        assert cf.cpow_principal(-1j, 0.5) == pytest.approx(
            0.7071067811865476 - 0.7071067811865476j, rel=1e-15)

    def test_oracle(self):
        assert rel_err(cf.cpow_principal(1 + 1j, 2.5 + 1j), ORACLE["cpow_1p1i_2.5p1i"]) < 1e-14

    def test_negative_real_axis_has_arg_pi(self):
        assert cf.principal_arg(-2.0) == math.pi
        assert cf.principal_arg(complex(-2.0, -0.0)) == math.pi
        assert cf.cpow_principal(-1, 0.5) == pytest.approx(1j)

    def test_zero_base(self):
        assert cf.cpow_principal(0, 0.5) == 0
        for a in (0, -1, 1j):
            with pytest.raises(DomainError):
                cf.cpow_principal(0, a)

    @settings(max_examples=200, deadline=None)
    @given(finite_complex(3).filter(lambda z: abs(z) > 0.1), st.integers(-6, 6))
    def test_integer_powers_match_products(self, b, m):
        ref = 1 + 0j
        for _ in range(abs(m)):
            ref = ref * b if m > 0 else ref / b
        assert rel_err(cf.cpow_principal(b, m), ref) < 1e-12

    @settings(max_examples=200, deadline=None)
    @given(finite_complex(10).filter(lambda z: z != 0))
    def test_arg_range(self, z):
        assert -math.pi < cf.principal_arg(z) <= math.pi


class TestBinomial:
    def test_zero_index(self):
        assert cf.gbinom(0.3 + 2j, 0) == pytest.approx(1)

    def test_vanishes(self):
        assert cf.gbinom(3, 5) == 0

    def test_half_choose_two(self):
        assert cf.gbinom(0.5, 2) == pytest.approx(-0.125, rel=1e-14)

    def test_pole(self):
        with pytest.raises(PoleError):
            cf.gbinom(-2, 0.5)

    def test_large_arguments_use_log_form(self):
        # binom(alpha, n) ~ (-1)^n n^(-alpha-1)/Gamma(-alpha) for large n
        alpha, n = 0.5, 4000
        approx = (-1) ** n * n ** (-alpha - 1) / cf.cgamma(-alpha)
        assert rel_err(cf.gbinom(alpha, n), approx) < 1e-3

    @settings(max_examples=200, deadline=None)
    @given(finite_complex(5).filter(lambda a: abs(a - round(a.real)) > 0.05),
           st.integers(1, 8))
    def test_pascal(self, a, n):
        lhs = cf.gbinom(a, n)
        assert abs(lhs - cf.gbinom(a - 1, n) - cf.gbinom(a - 1, n - 1)) <= 1e-10 * max(abs(lhs), 1)


class TestGammaRatioShift:
    def test_empty_product(self):
        assert cf.gamma_ratio_shift(3.7 + 1j, 0) == 1

    def test_simple(self):
        assert cf.gamma_ratio_shift(1 - 2, 1) == -2

    def test_oracle(self):
        assert rel_err(cf.gamma_ratio_shift(1 - (0.5 + 3j), 3), ORACLE["gamma_ratio_shift_3"]) < 1e-14

    def test_matches_gamma_quotient(self):
        a = 2.3 - 0.4j
        assert rel_err(cf.gamma_ratio_shift(a, 4), cf.cgamma(a) / cf.cgamma(a - 4)) < 1e-12

    def test_finite_across_poles(self):
        # Gamma(1)/Gamma(-2) is 0 as a product even though Gamma(-2) poles
        assert cf.gamma_ratio_shift(1, 3) == 0

    @given(finite_complex(10), st.integers(0, 10))
    def test_step(self, a, k):
        assert cf.gamma_ratio_shift(a, k + 1) == cf.gamma_ratio_shift(a, k) * (a - (k + 1))

    def test_negative_k(self):
        with pytest.raises(ValueError):
            cf.gamma_ratio_shift(1, -1)
