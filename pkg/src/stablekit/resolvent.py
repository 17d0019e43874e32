"""Resolvent classification of stable laws.

The resolvent transform h_lambda(q) = 1/(lambda - eta(q)) of the generator
symbol eta is the characteristic function (up to normalization) of a
generating measure mu_lambda; the m-fold self-convolution of mu_{m/t},
scaled by (m/t)^m, reconstructs the stable density as m grows.

Normalization: mu_lambda(x) = (1/2 pi) int e^{-iqx} h_lambda(q) dq, so that
lambda * integral(mu_lambda) = 1 exactly (probabilistic resolvent).  The
catalogued two-sided exponential for alpha = 2 equals pi times this
normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oracle import GridDensity, _invert_samples, _Oscillatory, _psi_arrays, char_exponent
from .params import StableParams

__all__ = [
    "ResolventSpec",
    "h_lambda",
    "mu_lambda_grid",
    "mu_lambda_gaussian_closed",
    "mfold_limit",
    "sup_distance",
]


@dataclass(frozen=True)
class ResolventSpec:
    params: StableParams
    lam: float

    def __post_init__(self) -> None:
        if not self.lam > 0.0:
            raise ValueError("lambda must be positive")


def h_lambda(spec: ResolventSpec, q: float) -> complex:
    """1/(lambda - eta(q)); finite for all q since Re eta <= 0."""
    return 1.0 / (spec.lam - char_exponent(spec.params, q))


def _h_vec(spec: ResolventSpec, q: np.ndarray) -> np.ndarray:
    return 1.0 / (spec.lam - _psi_arrays(spec.params, q))


def mu_lambda_grid(
    spec: ResolventSpec,
    n: int,
    L: float,
    method: str = "fft",
    guard_tol: float = 1e-6,
    x_ref: float = 0.5,
) -> GridDensity:
    """Generating measure mu_lambda on a grid.

    ``method='fft'`` samples h_lambda spectrally (mass is then exact by the
    DFT identity); since h decays only like |q|^(-alpha), the truncation
    guard is the algebraic pointwise bound |h(q_max)| / (pi |x_ref|), not
    an exponential one.  ``method='quadrature'`` integrates per grid point
    (midpoint grid, so x = 0 is never touched) with the oscillatory panel
    machinery; it is slower but free of Nyquist ringing, which matters for
    alpha < 1.
    """
    if n < 4 or (n & (n - 1)) != 0:
        raise ValueError("n must be a power of two (>= 4)")
    if method == "fft":
        dq = math.pi / L
        q = (np.arange(n) - n // 2) * dq
        h = _h_vec(spec, q)
        edge = max(abs(h[0]), abs(h[-1]))
        est = edge / (math.pi * x_ref)
        if est > guard_tol:
            raise ValueError(
                f"tail-mass guard: truncation estimate {est:.2e} > {guard_tol:.2e}; "
                f"increase n or shrink L (|h| decays like |q|^-alpha)"
            )
        vals = np.real(_invert_samples(h, n, L))
        return GridDensity(x0=-L, dx=2.0 * L / n, values=vals, t=0.0)
    if method == "quadrature":
        if spec.params.tau != 0.0:
            raise NotImplementedError("quadrature route assumes tau = 0")
        dx = 2.0 * L / n
        xs = -L + (np.arange(n) + 0.5) * dx
        vals = np.array([_mu_point(spec, float(x), guard_tol) for x in xs])
        return GridDensity(x0=float(xs[0]), dx=dx, values=vals, t=0.0)
    raise ValueError(f"unknown method {method!r}")


def _mu_point(spec: ResolventSpec, x: float, tol: float) -> float:
    """mu_lambda(x) = (1/pi) Re int_0^inf e^{-iqx} h(q) dq, |x| > 0."""
    if x == 0.0:
        raise ValueError("x = 0 is singular for alpha <= 1; use an offset grid")
    ax = abs(x)
    sx = 1.0 if x > 0 else -1.0

    def f_cos(q):
        return np.cos(q * ax) * np.real(_h_vec(spec, q))

    big = 1e30
    roots_c = lambda k, sh: (k + sh) * math.pi / ax
    osc = _Oscillatory(f_cos, lambda q: q * ax, [(0.0, big)], big, 0.0,
                       linear_roots=roots_c, open_ended=True)
    total, err = osc.integrate(tol * math.pi / 2.0, shift=0.5)
    if spec.params.beta != 0.0:

        def f_sin(q):
            return sx * np.sin(q * ax) * np.imag(_h_vec(spec, q))

        osc_s = _Oscillatory(f_sin, lambda q: q * ax, [(0.0, big)], big, 0.0,
                             linear_roots=roots_c, open_ended=True)
        v2, e2 = osc_s.integrate(tol * math.pi / 2.0, shift=1.0)
        total += v2
        err += e2
    return total / math.pi


def mu_lambda_gaussian_closed(
    lam: float, K2: float, x: float, symmetrized: bool = False
) -> float:
    """Catalogued alpha = 2 generating density:
    (pi / (2 sqrt(K2 lambda))) exp(-sqrt(lambda/K2) x) for x > 0.

    The symmetrized variant extends it evenly to x < 0; it equals pi times
    the unit-resolvent normalization used by :func:`mu_lambda_grid`.
    """
    if lam <= 0.0 or K2 <= 0.0:
        raise ValueError("lambda and K2 must be positive")
    if symmetrized:
        x = abs(x)
    elif x < 0.0:
        raise ValueError("the one-sided form is stated for x > 0")
    return math.pi / (2.0 * math.sqrt(K2 * lam)) * math.exp(-math.sqrt(lam / K2) * x)


def mfold_limit(
    params: StableParams,
    m: int,
    t: float,
    n: int,
    L: float,
    guard_tol: float = 1e-2,
) -> GridDensity:
    """Normalized m-fold convolution of mu_{m/t}, computed spectrally as
    (1 - t eta(q)/m)^(-m) and inverted on the grid.

    The spectral power decays like |q|^(-alpha m), so for small alpha*m the
    band edge cannot be pushed to machine level; ``guard_tol`` bounds the
    admissible band-edge magnitude (the residual grid ringing is of that
    order divided by pi |x|).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not t > 0.0:
        raise ValueError("t must be positive")
    if n < 4 or (n & (n - 1)) != 0:
        raise ValueError("n must be a power of two (>= 4)")
    dq = math.pi / L
    q = (np.arange(n) - n // 2) * dq
    eta = _psi_arrays(params, q)
    gh = np.exp(-m * np.log(1.0 - t * eta / m))  # principal log; Re(1 - t eta/m) >= 1
    edge = max(abs(gh[0]), abs(gh[-1]))
    if edge > guard_tol:
        raise ValueError(
            f"aliasing guard: |g_hat(q_max)| = {edge:.2e} > {guard_tol:.2e}; "
            "increase n (the spectral power decays like |q|^(-alpha m))"
        )
    vals = np.real(_invert_samples(gh, n, L))
    return GridDensity(x0=-L, dx=2.0 * L / n, values=vals, t=t)


def sup_distance(grid: GridDensity, f) -> float:
    """sup_j |grid.values[j] - f(x_j)| for a scalar density callable."""
    xs = grid.xs
    ref = np.array([f(float(x)) for x in xs])
    return float(np.max(np.abs(grid.values - ref)))
