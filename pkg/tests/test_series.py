from __future__ import annotations

import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from multivalent.errors import BasePowerMismatch, NotUnitNormalized, ParameterError, ZeroLeadingCoefficient
from multivalent.series import (
    TruncatedSeries,
    add,
    binomial,
    cauchy_mul,
    constant,
    divide,
    evaluate,
    exp_unit,
    geometric,
    hadamard,
    log_unit,
    max_relative_error,
    monomial,
    pochhammer,
    pow_real,
    series,
    z_derivative,
    zero,
)

N = 24


def rand_series(rng, p=0, N=N, lead=1.0, scale=0.5):
    c = scale ** np.arange(N - p + 1) * (rng.normal(size=N - p + 1) + 1j * rng.normal(size=N - p + 1))
    c[0] = lead
    return TruncatedSeries(p, c)


coeff = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
small = st.complex_numbers(max_magnitude=0.3, allow_nan=False, allow_infinity=False)


def unit_series(min_size=2, max_size=12):
    return st.lists(small, min_size=min_size - 1, max_size=max_size - 1).map(lambda cs: series([1.0] + cs, p=0))


def any_series():
    return st.tuples(st.integers(0, 3), st.lists(coeff, min_size=1, max_size=10)).map(lambda t: series(t[1], p=t[0]))


class TestConstruction:
    def test_invariants(self):
        f = series([1, 2, 3], p=2)
        assert f.N == 4 and len(f) == 3
        assert f.coefficient(3) == 2
        assert f.coefficient(0) == 0

    def test_rejects_nan(self):
        with pytest.raises(ParameterError):
            TruncatedSeries(1, [1.0, float("nan")])

    def test_rejects_negative_power(self):
        with pytest.raises(ParameterError):
            TruncatedSeries(-1, [1.0])

    def test_coefficients_read_only(self):
        f = series([1, 2])
        with pytest.raises(ValueError):
            f.coeffs[0] = 5

    def test_json_round_trip(self):
        f = series([1, 0.5 - 2j, 3e-17], p=2)
        g = TruncatedSeries.from_json(f.to_json())
        assert g.p == f.p and np.array_equal(g.coeffs, f.coeffs)

    def test_json_pads_to_N(self):
        g = TruncatedSeries.from_json({"p": 1, "N": 4, "coeffs": [1, [2, 1]]})
        assert g.N == 4
        assert_allclose(g.coeffs, [1, 2 + 1j, 0, 0])


class TestAdd:
    def test_additive_identity(self):
        f = series([1, 2, 3], p=1, N=6)
        assert max_relative_error(f + zero(1, 6), f) == 0

    def test_cancellation(self):
        out = series([1, 1], p=1) + series([1, -1], p=1)
        assert_allclose(out.coeffs, [2, 0])

    def test_mixed_base_power(self):
        out = add(monomial(2, 3), monomial(3, 3))
        assert out.p == 2
        assert_allclose(out.coeffs, [1, 1])


class TestCauchy:
    def test_difference_of_squares(self):
        out = series([1, 1], N=2) * series([1, -1], N=2)
        assert_allclose(out.coeffs, [1, 0, -1])

    def test_z_times_z(self):
        out = monomial(1, 1) * monomial(1, 1)
        assert out.p == 2 and out.N == 2

    def test_square_matches_expansion(self):
        f = series([1, 1], N=5)
        assert_allclose((f * f).coeffs, [1, 2, 1, 0, 0, 0])

    def test_order_propagation(self):
        f = series([1, 1, 1], p=1)  # N = 3
        g = series([1, 1], p=0, N=10)
        assert cauchy_mul(f, g).N == 3


class TestHadamard:
    def test_all_ones_kernel_is_identity(self):
        f = series([1, 2, 3, 4], p=2)
        k = geometric(f.N, p=2)
        assert max_relative_error(hadamard(f, k), f) == 0

    def test_small(self):
        out = hadamard(series([1, 2], p=1), series([1, 3], p=1))
        assert_allclose(out.coeffs, [1, 6])

    def test_mismatch(self):
        with pytest.raises(BasePowerMismatch):
            hadamard(monomial(1, 3), monomial(2, 3))

    @given(st.lists(coeff, min_size=1, max_size=10), st.lists(coeff, min_size=1, max_size=10))
    def test_commutative(self, a, b):
        n = min(len(a), len(b))
        f, g = series(a[:n], p=1), series(b[:n], p=1)
        assert max_relative_error(hadamard(f, g), hadamard(g, f)) == 0


class TestDerivative:
    def test_monomial(self):
        assert_allclose(z_derivative(monomial(3, 5)).coeffs, [3, 0, 0])

    def test_sparse(self):
        assert_allclose(z_derivative(series([1, 0, 1], p=1)).coeffs, [1, 0, 3])

    def test_constant(self):
        assert_allclose(z_derivative(constant(4.0, 3)).coeffs, 0)


class TestDivide:
    def test_self(self):
        f = series([1, 0.3, -0.2], p=1, N=8)
        assert_allclose(divide(f, f).coeffs, [1] + [0] * 7, atol=1e-15)

    def test_geometric(self):
        out = divide(constant(1.0, 10), series([1, -1], N=10))
        assert_allclose(out.coeffs, np.ones(11))

    def test_monomials(self):
        out = divide(monomial(2, 6), monomial(1, 6))
        assert out.p == 1
        assert_allclose(out.coeffs[0], 1)

    def test_zero_leading(self):
        with pytest.raises(ZeroLeadingCoefficient):
            divide(constant(1.0, 3), series([0, 1], N=3))

    def test_round_trip(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            f = rand_series(rng, p=1)
            # sum of tail moduli below the leading one: no zeros in the closed disk
            g = rand_series(rng, lead=0.5 + rng.random(), scale=0.3)
            tail = np.abs(g.coeffs[1:]).sum()
            g = TruncatedSeries(0, np.concatenate([[g.coeffs[0]], g.coeffs[1:] * 0.9 * abs(g.coeffs[0]) / tail]))
            assert max_relative_error(cauchy_mul(divide(f, g), g), f) <= 1e-10


class TestLogExpPow:
    def test_log_one(self):
        assert_allclose(log_unit(constant(1.0, 5)).coeffs, 0)

    def test_mercator(self):
        out = log_unit(series([1, 1], N=8))
        expected = [0] + [(-1) ** (k + 1) / k for k in range(1, 9)]
        assert_allclose(out.coeffs, expected, atol=1e-15)

    def test_round_trip_example(self):
        u = series([1, 1, 1], N=10)
        assert max_relative_error(exp_unit(log_unit(u)), u) <= 1e-12

    def test_not_unit(self):
        with pytest.raises(NotUnitNormalized):
            log_unit(series([2, 1]))
        with pytest.raises(NotUnitNormalized):
            pow_real(series([1, 1], p=1), 0.5)

    def test_pow_zero(self):
        assert_allclose(pow_real(series([1, 0.5], N=4), 0).coeffs, [1, 0, 0, 0, 0])

    def test_sqrt_binomial(self):
        out = pow_real(series([1, 1], N=6), 0.5)
        assert_allclose(out.coeffs[:3], [1, 0.5, -0.125])
        assert max_relative_error(out, binomial(0.5, 6)) <= 1e-13

    @given(unit_series())
    def test_square_root_round_trip(self, u):
        assert max_relative_error(pow_real(pow_real(u, 2), 0.5), u, atol=1e-12) <= 1e-9

    @settings(max_examples=50)
    @given(unit_series(), st.floats(-2, 2), st.floats(-2, 2))
    def test_pow_additive(self, u, s, t):
        lhs = pow_real(u, s + t)
        rhs = pow_real(u, s) * pow_real(u, t)
        assert max_relative_error(lhs, rhs, atol=1e-12) <= 1e-9


class TestProperties:
    @given(any_series(), any_series())
    def test_add_commutative(self, f, g):
        assert max_relative_error(f + g, g + f) == 0

    @given(any_series(), any_series())
    def test_mul_commutative(self, f, g):
        assert max_relative_error(f * g, g * f, atol=1e-13) <= 1e-12

    @given(any_series(), any_series(), any_series())
    def test_mul_associative(self, f, g, h):
        assert max_relative_error((f * g) * h, f * (g * h), atol=1e-12) <= 1e-12

    @given(any_series(), any_series())
    def test_leibniz(self, f, g):
        lhs = z_derivative(f * g)
        rhs = z_derivative(f) * g + f * z_derivative(g)
        assert max_relative_error(lhs, rhs, atol=1e-12) <= 1e-12

    @given(st.lists(coeff, min_size=1, max_size=10), st.lists(coeff, min_size=1, max_size=10))
    def test_convolution_derivative(self, a, b):
        n = min(len(a), len(b))
        f, g = series(a[:n], p=2), series(b[:n], p=2)
        assert max_relative_error(z_derivative(hadamard(f, g)), hadamard(f, z_derivative(g))) <= 1e-15


class TestEvaluate:
    def test_monomial(self):
        z0 = 0.3 - 0.4j
        assert evaluate(monomial(3, 5), z0) == pytest.approx(z0**3)

    def test_zero_at_origin(self):
        assert evaluate(series([1, 2, 3], p=1), 0.0) == 0

    def test_geometric_sum(self):
        assert abs(evaluate(geometric(64), 0.5) - 2) <= 1e-12

    def test_vectorized(self):
        z = np.array([0.1, 0.2j])
        assert_allclose(evaluate(series([1, 1]), z), 1 + z)

    def test_warns_outside_disk(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            evaluate(series([1, 1]), 1.5)
        assert any(issubclass(w.category, RuntimeWarning) for w in caught)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(2.5 + 1j, 0) == 1

    def test_factorial(self):
        assert pochhammer(1, 4) == 24

    def test_hits_zero(self):
        assert pochhammer(-2, 3) == 0

    def test_gamma_ratio(self):
        a = 1.7
        assert pochhammer(a, 5) == pytest.approx(math.gamma(a + 5) / math.gamma(a))
