"""Closed forms of the density kernel H(z) = alpha |z| f(z) at special indices.

Each function returns H for z > 0 in the self-similar coordinate.  The
hypergeometric combinations are frozen verbatim from the catalogued source
expressions for those indices; every one of them is cross-validated against
the generic series backends in the test suite.
"""

from __future__ import annotations

import math

from .specfun import HyperSpec, bessel_i, fresnel_c, fresnel_s, hyper_pfq, log_gamma

_SQRT_PI = math.sqrt(math.pi)

_G23 = math.exp(log_gamma(2.0 / 3.0))
_G34 = math.exp(log_gamma(0.75))


def _pfq(a, b, w, tol=1e-15):
    return hyper_pfq(HyperSpec(tuple(a), tuple(b), w), tol=tol, max_terms=4000).value.real


def gaussian_h(z: float) -> float:
    """alpha = 2: H(z) = z exp(-z^2/4) / sqrt(pi)."""
    return z * math.exp(-z * z / 4.0) / _SQRT_PI


def cauchy_h(z: float) -> float:
    """alpha = 1, beta = 0: H(z) = z / (pi (1 + z^2)).

    This is the geometric resummation of the small-z expansion, summed in
    closed form, which also continues it beyond |z| = 1.
    """
    return z / (math.pi * (1.0 + z * z))


def levy_one_sided_h(z: float) -> float:
    """alpha = 1/2, beta = 1 (delta = 2), z > 0 side: H = alpha z f with
    f(z) = z^(-3/2) exp(-1/(4z)) / (2 sqrt(pi))."""
    if z <= 0.0:
        return 0.0
    return math.exp(-1.0 / (4.0 * z)) / (4.0 * math.sqrt(math.pi * z))


def fresnel_half_h(z: float) -> float:
    """alpha = 1/2, beta = 0, via cosine and sine Fresnel integrals."""
    if z <= 0.0:
        return 0.0
    cphi = math.cos(1.0 / (4.0 * z))
    sphi = math.sin(1.0 / (4.0 * z))
    x = 1.0 / math.sqrt(2.0 * math.pi * z)
    h = -1.0 / (2.0 * math.sqrt(2.0 * math.pi * z)) * (
        cphi * fresnel_c(x) + sphi * fresnel_s(x)
    )
    h += 1.0 / (4.0 * math.sqrt(2.0 * math.pi * z)) * (cphi + sphi)
    return h


def holtsmark_h(z: float) -> float:
    """alpha = 3/2, beta = 0: three-term hypergeometric combination."""
    z = abs(z)
    w = -4.0 * z**6 / 729.0
    t1 = _G23 * _pfq((5.0 / 12.0, 11.0 / 12.0), (1.0 / 3.0, 0.5, 5.0 / 6.0), w)
    t2 = -(z * z / 2.0) * _pfq(
        (1.0, 0.75, 1.25), (5.0 / 6.0, 2.0 / 3.0, 4.0 / 3.0, 7.0 / 6.0), w
    )
    t3 = (
        14.0 * math.sqrt(3.0) / 486.0 * math.pi / _G23 * z**4
        * _pfq((19.0 / 12.0, 13.0 / 12.0), (1.5, 7.0 / 6.0, 5.0 / 3.0), w)
    )
    return z / math.pi * (t1 + t2 + t3)


def bessel_two_thirds_h(z: float) -> float:
    """alpha = 2/3, beta = 0: modified-Bessel combination, z > 0."""
    w = 2.0 / (27.0 * z * z)
    ch, sh = math.cosh(w), math.sinh(w)
    i13 = bessel_i(1.0 / 3.0, w)
    i23 = bessel_i(2.0 / 3.0, w)
    i43 = bessel_i(4.0 / 3.0, w)
    i53 = bessel_i(5.0 / 3.0, w)
    zz = z * z
    h = 4.0 / 9.0 * (ch * i13 + sh * i13 / (9.0 * zz) + ch * i43 / (9.0 * zz))
    h -= 4.0 / 27.0 * (6.0 * ch * i23 + sh * i23 / (3.0 * zz) + ch * i53 / (3.0 * zz))
    h += 4.0 / (81.0 * zz) * (ch * i13 + 9.0 * zz * sh * i13 + sh * i43)
    h -= 4.0 / (81.0 * zz) * (ch * i23 + 18.0 * zz * sh * i23 + sh * i53)
    return h


def one_third_h(z: float) -> float:
    """alpha = 1/3, beta = 0: five-term 0F3/1F4 combination, z > 0."""
    w = -1.0 / (11664.0 * z * z)
    s3 = math.sqrt(3.0)
    h = s3 / (27.0 * z ** (1.0 / 3.0) * _G23) * _pfq((), (1.0 / 3.0, 0.5, 5.0 / 6.0), w)
    h -= s3 * _G23 / (18.0 * z ** (2.0 / 3.0) * math.pi) * _pfq(
        (), (0.5, 2.0 / 3.0, 7.0 / 6.0), w
    )
    h += 1.0 / (18.0 * z * math.pi) * _pfq(
        (1.0,), (2.0 / 3.0, 5.0 / 6.0, 7.0 / 6.0, 4.0 / 3.0), w
    )
    h -= 1.0 / (162.0 * z ** (4.0 / 3.0) * _G23) * _pfq(
        (), (5.0 / 6.0, 4.0 / 3.0, 1.5), w
    )
    h += _G23 / (648.0 * z ** (5.0 / 3.0) * math.pi) * _pfq(
        (), (7.0 / 6.0, 1.5, 5.0 / 3.0), w
    )
    return h


def _csc(x: float) -> float:
    return 1.0 / math.sin(x)


def four_thirds_h(z: float) -> float:
    """alpha = 4/3, beta = 0: four-term 4F5 combination (small-z resummation)."""
    w = 729.0 * z**8 / 262144.0
    g = lambda x: math.exp(log_gamma(x))
    r1 = (
        _csc(7.0 * math.pi / 24.0) * _csc(11.0 * math.pi / 24.0) / _csc(3.0 * math.pi / 8.0)
        * g(19.0 / 24.0) * g(23.0 / 24.0) * g(5.0 / 8.0)
        / (g(17.0 / 24.0) * g(13.0 / 24.0) * g(7.0 / 8.0))
    )
    r2 = (
        _csc(math.pi / 24.0) * _csc(5.0 * math.pi / 24.0) / _csc(math.pi / 8.0)
        * g(13.0 / 24.0) * g(17.0 / 24.0) * g(7.0 / 8.0)
        / (g(23.0 / 24.0) * g(19.0 / 24.0) * g(5.0 / 8.0))
    )
    c24 = lambda n: n / 24.0
    t = 0.5 * r1 * _pfq(
        (c24(7), c24(11), c24(19), c24(23)),
        (0.25, 0.375, 0.5, 0.75, 0.875),
        w,
    )
    t -= 5.0 * math.sqrt(6.0) / 384.0 * z**2 * r2 * _pfq(
        (c24(13), c24(17), c24(25), c24(29)),
        (0.5, 0.625, 0.75, 1.125, 1.25),
        w,
    )
    t += 77.0 / 1024.0 * z**4 * r1 * _pfq(
        (c24(19), c24(23), c24(31), c24(35)),
        (0.75, 0.875, 1.25, 1.375, 1.5),
        w,
    )
    t -= 221.0 * math.sqrt(6.0) / 196608.0 * z**6 * r2 * _pfq(
        (c24(25), c24(29), c24(37), c24(41)),
        (1.125, 1.25, 1.5, 1.625, 1.75),
        w,
    )
    return 6.0 ** 0.25 / _SQRT_PI * z * t
