import cmath
import math
import random

import numpy as np
import pytest

from stablekit.oracle import char_exponent, propagator_grid
from stablekit.params import RationalIndex, StableParams
from stablekit.resolvent import (
    ResolventSpec,
    h_lambda,
    mfold_limit,
    mu_lambda_gaussian_closed,
    mu_lambda_grid,
    sup_distance,
)

SQ_PI = math.sqrt(math.pi)


def _gauss_params(c=1.0):
    return StableParams(alpha=RationalIndex(2, 1), beta=0.0, c=c, tau=0.0)


class TestHLambda:
    def test_at_origin(self):
        spec = ResolventSpec(_gauss_params(), 1.0)
        assert h_lambda(spec, 0.0) == pytest.approx(1.0)

    def test_gaussian_unit(self):
        spec = ResolventSpec(_gauss_params(), 1.0)
        assert h_lambda(spec, 1.0) == pytest.approx(0.5)

    def test_skewed_half(self):
        p = StableParams(alpha=RationalIndex(1, 2), beta=1.0)
        spec = ResolventSpec(p, 2.0)
        expect = 1.0 / (2.0 + (1.0 - 1j * math.tan(math.pi / 4.0)))
        assert h_lambda(spec, 1.0) == pytest.approx(expect)

    def test_lambda_positive_required(self):
        with pytest.raises(ValueError):
            ResolventSpec(_gauss_params(), 0.0)

    def test_resolvent_identity(self):
        # h_lam - h_mu = (mu - lam) h_lam h_mu
        rng = random.Random(7)
        for pq, beta in [((1, 2), 0.0), ((3, 2), 0.6), ((2, 1), 0.0), ((1, 1), -0.4)]:
            p = StableParams(alpha=RationalIndex(*pq), beta=beta, c=1.3, tau=0.2)
            for _ in range(8):
                lam, mu = rng.uniform(0.1, 5.0), rng.uniform(0.1, 5.0)
                q = rng.uniform(-8.0, 8.0)
                hl = h_lambda(ResolventSpec(p, lam), q)
                hm = h_lambda(ResolventSpec(p, mu), q)
                assert abs((hl - hm) - (mu - lam) * hl * hm) <= 1e-12


class TestMuLambdaGrid:
    def test_gaussian_shape_fft(self):
        # exact inversion for alpha = 2: exp(-sqrt(lam/K)|x|)/(2 sqrt(K lam)),
        # which is the catalogued two-sided form divided by pi
        spec = ResolventSpec(_gauss_params(), 1.0)
        g = mu_lambda_grid(spec, 2**17, 30.0)
        xs = g.xs
        sel = np.abs(xs) >= 0.5
        ref = np.array(
            [mu_lambda_gaussian_closed(1.0, 1.0, x, symmetrized=True) for x in xs]
        ) / math.pi
        assert np.max(np.abs(g.values[sel] - ref[sel])) <= 1e-6

    def test_mass_contract(self):
        for lam in (1.0, 4.0):
            spec = ResolventSpec(_gauss_params(), lam)
            g = mu_lambda_grid(spec, 2**16, 30.0)
            assert lam * g.mass == pytest.approx(1.0, abs=1e-8)

    def test_guard_raises_on_poor_band(self):
        spec = ResolventSpec(StableParams(alpha=RationalIndex(1, 2)), 1.0)
        with pytest.raises(ValueError, match="tail-mass guard"):
            mu_lambda_grid(spec, 256, 30.0)

    def test_quadrature_route_positive_subdiffusive(self):
        spec = ResolventSpec(StableParams(alpha=RationalIndex(1, 2)), 1.0)
        g = mu_lambda_grid(spec, 64, 8.0, method="quadrature", guard_tol=1e-9)
        assert np.min(g.values) >= -1e-8

    def test_quadrature_matches_fft_gaussian(self):
        spec = ResolventSpec(_gauss_params(), 1.0)
        gq = mu_lambda_grid(spec, 16, 4.0, method="quadrature", guard_tol=1e-10)
        ref = np.array(
            [
                mu_lambda_gaussian_closed(1.0, 1.0, x, symmetrized=True) / math.pi
                for x in gq.xs
            ]
        )
        assert np.max(np.abs(gq.values - ref)) <= 1e-8


class TestGaussianClosed:
    def test_prefactor(self):
        assert mu_lambda_gaussian_closed(1.0, 1.0, 1e-12) == pytest.approx(
            math.pi / 2.0, rel=1e-9
        )

    def test_lambda_scaling(self):
        assert mu_lambda_gaussian_closed(4.0, 1.0, 1e-12) == pytest.approx(
            math.pi / 4.0, rel=1e-9
        )

    def test_decay(self):
        assert mu_lambda_gaussian_closed(1.0, 1.0, 1.0) == pytest.approx(
            math.pi / 2.0 * math.exp(-1.0), rel=1e-12
        )

    def test_one_sided_domain(self):
        with pytest.raises(ValueError):
            mu_lambda_gaussian_closed(1.0, 1.0, -1.0)
        assert mu_lambda_gaussian_closed(1.0, 1.0, -1.0, symmetrized=True) > 0.0


class TestMfoldLimit:
    def test_gaussian_monotone_improvement(self):
        p = _gauss_params()
        ref = lambda x: math.exp(-x * x / 4.0) / math.sqrt(4 * math.pi)
        dists = {}
        for m in (8, 64):
            g = mfold_limit(p, m, 1.0, 2**14, 60.0)
            assert g.mass == pytest.approx(1.0, abs=1e-8)
            dists[m] = sup_distance(g, ref)
        assert dists[64] < dists[8]

    def test_subdiffusive_monotone_improvement(self):
        from stablekit.engine import pdf

        p = StableParams(alpha=RationalIndex(1, 2), beta=0.0)
        ref = lambda x: pdf(p, x, 1.0, tol=1e-10).value
        d4 = sup_distance(mfold_limit(p, 4, 1.0, 2**14, 200.0), ref)
        d32 = sup_distance(mfold_limit(p, 32, 1.0, 2**14, 200.0), ref)
        assert d32 < d4

    def test_aliasing_guard(self):
        p = StableParams(alpha=RationalIndex(1, 2), beta=0.0)
        with pytest.raises(ValueError, match="aliasing guard"):
            mfold_limit(p, 2, 1.0, 64, 200.0)

    def test_semigroup_power_converges_pointwise(self):
        # (1 - t eta/m)^(-m) -> e^(t eta), error shrinking as m doubles
        p = StableParams(alpha=RationalIndex(3, 2), beta=0.5, c=1.2, tau=0.1)
        t = 1.0
        qs = [0.3, 1.0, 2.5, -4.0]
        prev = None
        for m in (8, 16, 32, 64):
            worst = 0.0
            for q in qs:
                eta = char_exponent(p, q)
                approx = (1.0 - t * eta / m) ** (-m)
                worst = max(worst, abs(approx * cmath.exp(-t * eta) - 1.0))
            if prev is not None:
                assert worst < prev
            prev = worst

    def test_m_one_matches_resolvent(self):
        # m = 1: lambda h_lambda inversion at lambda = 1/t
        p = _gauss_params()
        g1 = mfold_limit(p, 1, 1.0, 2**16, 30.0)
        spec = ResolventSpec(p, 1.0)
        gm = mu_lambda_grid(spec, 2**16, 30.0)
        assert np.max(np.abs(g1.values - gm.values)) <= 1e-10


class TestAgainstPropagator:
    def test_mfold_approaches_spectral_grid(self):
        p = StableParams(alpha=RationalIndex(2, 1), beta=0.0)
        g = propagator_grid(p, 1.0, 2**14, 60.0)
        f = mfold_limit(p, 64, 1.0, 2**14, 60.0)
        assert np.max(np.abs(g.values - f.values)) <= 0.02
