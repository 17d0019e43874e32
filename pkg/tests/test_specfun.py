import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from stablekit.specfun import (
    HyperSpec,
    bessel_i,
    fresnel_c,
    fresnel_s,
    hyper_pfq,
    log_gamma,
    pochhammer,
)


class TestLogGamma:
    def test_half(self):
        assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), abs=1e-14)

    def test_factorial(self):
        assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)

    def test_one(self):
        assert abs(log_gamma(1.0)) <= 1e-14

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-1.5)

    @given(st.floats(1e-3, 170.0))
    def test_against_platform_lgamma(self, x):
        assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("m", [2, 3, 5])
    @pytest.mark.parametrize("z", [0.3, 0.7, 1.1])
    def test_gauss_multiplication(self, m, z):
        # Gamma(mz) (2 pi)^((m-1)/2) = m^(mz - 1/2) prod_k Gamma(z + k/m)
        lhs = log_gamma(m * z) + (m - 1) / 2.0 * math.log(2 * math.pi)
        rhs = (m * z - 0.5) * math.log(m) + sum(
            log_gamma(z + k / m) for k in range(m)
        )
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


class TestPochhammer:
    def test_zeroth(self):
        assert pochhammer(3.0, 0) == 1.0

    def test_factorial(self):
        assert pochhammer(1.0, 5) == 120.0

    def test_half(self):
        assert pochhammer(0.5, 2) == 0.75

    def test_zero_factor_exact(self):
        assert pochhammer(-2.0, 4) == 0.0

    @given(st.floats(-5, 5), st.integers(0, 30))
    def test_recurrence(self, a, n):
        left = pochhammer(a, n + 1)
        right = pochhammer(a, n) * (a + n)
        assert left == pytest.approx(right, rel=1e-13, abs=1e-300)


class TestHyperPfq:
    def test_exponential(self):
        r = hyper_pfq(HyperSpec((), (), 1.0), tol=1e-14)
        assert r.converged
        assert r.value.real == pytest.approx(math.e, rel=1e-14)

    def test_geometric(self):
        r = hyper_pfq(HyperSpec((1.0,), (), -0.25), tol=1e-14)
        assert r.converged
        assert r.value.real == pytest.approx(0.8, rel=1e-13)

    def test_cosine_identity(self):
        z = math.pi / 3.0
        r = hyper_pfq(HyperSpec((), (0.5,), -z * z / 4.0), tol=1e-14)
        assert r.value.real == pytest.approx(0.5, rel=1e-13)

    def test_geometric_boundary_not_converged(self):
        r = hyper_pfq(HyperSpec((1.0,), (), 1.0), tol=1e-10)
        assert not r.converged
        r = hyper_pfq(HyperSpec((1.0,), (), -1.2), tol=1e-10)
        assert not r.converged

    def test_divergent_class_rejected(self):
        with pytest.raises(ValueError):
            hyper_pfq(HyperSpec((1.0, 2.0, 3.0), (0.5,), 0.1))

    def test_denominator_pole_rejected(self):
        with pytest.raises(ValueError):
            HyperSpec((1.0,), (0.0,), 0.1)
        with pytest.raises(ValueError):
            HyperSpec((1.0,), (-2.0,), 0.1)

    def test_complex_argument(self):
        r = hyper_pfq(HyperSpec((), (), 1j * math.pi / 2), tol=1e-14)
        assert r.value.real == pytest.approx(0.0, abs=1e-14)
        assert r.value.imag == pytest.approx(1.0, rel=1e-14)

    @pytest.mark.parametrize(
        "a,b,w",
        [
            ((), (0.75,), -2.0),
            ((0.25,), (0.5, 1.25), -40.0),
            ((1.0, 1.5), (1.0 / 3, 0.5, 5.0 / 6), 3.0),
        ],
    )
    def test_doubling_cap_stability(self, a, b, w):
        r1 = hyper_pfq(HyperSpec(a, b, w), tol=1e-10, max_terms=500)
        r2 = hyper_pfq(HyperSpec(a, b, w), tol=1e-10, max_terms=1000)
        assert r1.converged
        assert abs(r1.value - r2.value) <= r1.abs_error_bound + 1e-300

    def test_bound_covers_truth(self):
        # truth from a much tighter run
        spec = HyperSpec((0.25,), (0.5, 1.25), -20.0)
        loose = hyper_pfq(spec, tol=1e-6)
        tight = hyper_pfq(spec, tol=1e-15)
        assert loose.converged
        assert abs(loose.value - tight.value) <= loose.abs_error_bound


class TestFresnel:
    def test_zero(self):
        assert fresnel_c(0.0) == 0.0
        assert fresnel_s(0.0) == 0.0

    def test_odd(self):
        assert fresnel_c(-0.7) == -fresnel_c(0.7)
        assert fresnel_s(-0.7) == -fresnel_s(0.7)

    def test_c_at_one_frozen(self):
        # adaptive quadrature of cos(pi t^2/2) on [0,1]: 0.77989340037682282947
        assert fresnel_c(1.0) == pytest.approx(0.7798934003768228, abs=1e-12)

    def test_s_at_one_frozen(self):
        assert fresnel_s(1.0) == pytest.approx(0.4382591473903548, abs=1e-12)

    @pytest.mark.parametrize("x", [-3.0, -1.7, -0.4, 0.3, 1.1, 2.2, 3.0])
    def test_against_quadrature(self, x):
        c_ref = quad(lambda t: math.cos(math.pi * t * t / 2), 0, x, epsabs=1e-13)[0]
        s_ref = quad(lambda t: math.sin(math.pi * t * t / 2), 0, x, epsabs=1e-13)[0]
        assert fresnel_c(x) == pytest.approx(c_ref, abs=1e-10)
        assert fresnel_s(x) == pytest.approx(s_ref, abs=1e-10)


class TestBesselI:
    def test_at_zero(self):
        assert bessel_i(0.0, 0.0) == 1.0
        assert bessel_i(1.0 / 3.0, 0.0) == 0.0

    def test_third_order_frozen(self):
        # independent high-precision evaluation of I_{1/3}(2/27)
        assert bessel_i(1.0 / 3.0, 2.0 / 27.0) == pytest.approx(
            0.37366632196633647272, rel=1e-13
        )

    def test_internal_consistency_with_pfq(self):
        x = 2.0 / 27.0
        nu = 1.0 / 3.0
        f = hyper_pfq(HyperSpec((), (nu + 1.0,), (1.0 / 27.0) ** 2), tol=1e-15)
        pref = (x / 2.0) ** nu / math.exp(log_gamma(nu + 1.0))
        assert bessel_i(nu, x) == pytest.approx(pref * f.value.real, rel=1e-14)

    def test_domain(self):
        with pytest.raises(ValueError):
            bessel_i(-1.0, 1.0)
        with pytest.raises(ValueError):
            bessel_i(0.5, -1.0)

    @settings(max_examples=30)
    @given(st.floats(-0.9, 3.0), st.floats(0.01, 10.0))
    def test_positive(self, nu, x):
        assert bessel_i(nu, x) > 0.0
