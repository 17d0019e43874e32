"""Density engine for S_alpha(beta, c, tau) at rational alpha = p/q.

Evaluates f(x, t) through four interchangeable backends: the power series
of the density kernel H(z) around z = 0 and z = infinity, their finite
hypergeometric resummations (one l-term per residue class of the series
index modulo p or q), and a catalogue of closed forms at special indices.
The series written for x >= tau*t are reused for the other side through
the reflection delta -> 2 - delta.

The small-z machinery is exact but loses digits once the resummed argument
grows: the sum collapses from terms of size exp(q^q z^p / p^p) down to an
O(1) value.  Auto dispatch therefore predicts that cancellation, and past
the feasible radius switches to the large-z expansion summed at optimal
truncation (its first omitted term is then far below any useful tolerance);
in the narrow band where neither meets tolerance it defers to the
characteristic-function inversion oracle.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional

from . import closedforms, kernels
from .params import RationalIndex, ScaledArg, StableParams, scale_factor, scaled_argument
from .specfun import HyperSpec, SeriesResult, hyper_pfq, log_gamma

__all__ = [
    "EvalMethod",
    "Density",
    "ToleranceError",
    "h_series_small_z",
    "h_series_large_z",
    "h_hyper_small",
    "h_hyper_large",
    "pdf_closed_form",
    "pdf",
]


class EvalMethod(enum.Enum):
    SERIES_SMALL_Z = "series-small"
    SERIES_LARGE_Z = "series-large"
    HYPER_SMALL = "hyper-small"
    HYPER_LARGE = "hyper-large"
    CLOSED_FORM = "closed"
    ORACLE = "oracle"
    AUTO = "auto"


class ToleranceError(RuntimeError):
    """No available backend met the requested tolerance."""


@dataclass(frozen=True)
class Density:
    """Density value with an absolute error bound.

    Tiny negative series residue is clamped to zero; the signed value is
    still covered by ``abs_error_bound``.
    """

    value: float
    abs_error_bound: float
    method_used: EvalMethod


_MAX_TERMS = 4000


def _delta_class(delta: float) -> int:
    if delta == 0.0:
        return 0
    if delta == 1.0:
        return 1
    if delta == 2.0:
        return 2
    return -1


def _with_rounding(raw, pref: float = 1.0) -> SeriesResult:
    value, tail, max_abs, terms, ok = raw
    rounding = max_abs * kernels.working_eps() * (2.0 * math.sqrt(terms + 1.0) + 2.0)
    bound = (tail + rounding) * pref
    return SeriesResult(complex(value * pref), bound, terms, ok)


def h_series_small_z(
    alpha: float, delta: float, z: float, tol: float, max_terms: int = _MAX_TERMS
) -> SeriesResult:
    """H(z) near z = 0:  (alpha/pi) sum (-1)^(n-1) G(1+n/a)/G(n+1) sin(n pi d/2) z^n.

    Convergent for 1 < alpha <= 2 everywhere and for alpha = 1 inside
    |z| < 1; rejected otherwise (for alpha < 1 the expansion is purely
    asymptotic and has no radius).
    """
    if alpha < 1.0:
        raise ValueError("small-z series diverges for alpha < 1")
    if alpha == 1.0 and abs(z) >= 1.0:
        raise ValueError("small-z series at alpha = 1 requires |z| < 1")
    if alpha > 2.0:
        raise ValueError("alpha must lie in (0, 2]")
    if z < 0.0:
        raise ValueError("z must be nonnegative")
    raw = kernels.h_small_sum(alpha, delta, z, tol, max_terms, _delta_class(delta))
    return _with_rounding(raw)


def h_series_large_z(
    alpha: float, delta: float, z: float, tol: float, max_terms: int = _MAX_TERMS
) -> SeriesResult:
    """H(z) near z = infinity: (alpha/pi) sum (-1)^(n+1) G(1+na)/G(n+1)
    sin(n pi a d/2) z^(-na).

    Convergent for every z > 0 when 0 < alpha < 1, and for z > 1 at
    alpha = 1 (geometric).  Larger alpha is rejected here; Auto dispatch
    uses the same sum asymptotically through a private entry point.
    """
    if alpha > 1.0 or (alpha == 1.0 and z <= 1.0):
        raise ValueError("large-z series requires alpha < 1, or alpha = 1 with z > 1")
    return _h_series_large_any(alpha, delta, z, tol, max_terms, None, None)


def _h_series_large_any(
    alpha: float,
    delta: float,
    z: float,
    tol: float,
    max_terms: int = _MAX_TERMS,
    p: Optional[int] = None,
    q: Optional[int] = None,
) -> SeriesResult:
    # exact sine-zero skipping needs the rational form of alpha*delta/2
    if p is None or q is None:
        dc = -1
        pp, qq = 1, 1
    else:
        dc = _delta_class(delta)
        pp, qq = p, q
    if z <= 0.0:
        raise ValueError("z must be positive for the large-z expansion")
    raw = kernels.h_large_sum(alpha, delta, z, tol, max_terms, pp, qq, dc)
    return _with_rounding(raw)


# ---------------------------------------------------------------------------
# hypergeometric resummations


def _pfq_pair(a, b, w_plus, tol, max_terms):
    fp = hyper_pfq(HyperSpec(a, b, w_plus), tol=tol, max_terms=max_terms)
    fm = hyper_pfq(HyperSpec(a, b, w_plus.conjugate()), tol=tol, max_terms=max_terms)
    return fp, fm


def h_hyper_small(
    alpha: RationalIndex, delta: float, z: float, tol: float, max_terms: int = _MAX_TERMS
) -> SeriesResult:
    """Resummed small-z kernel: a finite sum over l = 0..p-1 of qF_{p-1}
    pairs at conjugate arguments (q^q z^p / p^p) e^(+-i pi p(1 +- delta/2)).

    The value is the real part of the complex assembly; the imaginary
    residual is kept in ``value.imag`` and folded into the error bound.
    At alpha = 1 the single geometric term is summed in closed form, which
    also continues it to |z| >= 1.
    """
    p, q = alpha.p, alpha.q
    if p < q:
        raise ValueError("resummed small-z form requires alpha >= 1")
    if z < 0.0:
        raise ValueError("z must be nonnegative")
    if z == 0.0:
        return SeriesResult(0j, 0.0, 0, True)
    if p == q:  # alpha = 1, symmetric law only
        if delta != 1.0:
            raise ValueError("alpha = 1 requires beta = 0 (delta = 1)")
        val = z / (math.pi * (1.0 + z * z))
        return SeriesResult(complex(val), 4.0 * kernels.working_eps() * abs(val), 1, True)

    a_val = p / q
    K = math.sqrt(a_val) * (2.0 * math.pi) ** ((p - q) / 2.0 - 1.0)
    X = q**q * z**p / p**p
    w_plus = X * cmath.exp(1j * math.pi * p * (1.0 + delta / 2.0))

    coefs = []
    for l in range(p):
        lg = 0.0
        for k in range(1, q):
            lg += log_gamma(l / p + k / q)
        for s in range(1, p):
            lg -= log_gamma(l / p + s / p)
        pref = K * (q**q / p**p) ** (l / p) * z**l * math.exp(lg)
        coefs.append(pref)

    budget = tol / (4.0 * max(coefs) * p) if tol > 0 else 1e-14
    total = 0j
    bound = 0.0
    terms = 0
    ok = True
    big = 0.0  # scale of the l-terms before their mutual cancellation
    for l in range(p):
        a = (1.0,) + tuple(l / p + k / q for k in range(1, q))
        b = tuple(l / p + s / p for s in range(1, p))
        fp, fm = _pfq_pair(a, b, w_plus, budget, max_terms)
        ph1 = cmath.exp(1j * math.pi * (l * delta - 1.0) / 2.0)
        ph2 = cmath.exp(-1j * math.pi * (l * delta + 1.0) / 2.0)
        sign = -1.0 if l % 2 == 0 else 1.0  # (-1)^(l+1)
        total += sign * coefs[l] * (ph1 * fp.value - ph2 * fm.value)
        bound += coefs[l] * (fp.abs_error_bound + fm.abs_error_bound)
        big += coefs[l] * (abs(fp.value) + abs(fm.value))
        terms += fp.terms_used + fm.terms_used
        ok = ok and fp.converged and fm.converged
    bound += abs(total.imag)
    # the l-sum itself runs in doubles; when the constituent values dwarf
    # the assembled kernel (conjugate-pair arguments with integer phase),
    # the cross-term cancellation caps the achievable accuracy here
    bound += 8.0 * kernels.EPS_DOUBLE * big
    return SeriesResult(total, bound, terms, ok and bound <= tol)


def h_hyper_large(
    alpha: RationalIndex, delta: float, z: float, tol: float, max_terms: int = _MAX_TERMS
) -> SeriesResult:
    """Resummed large-z kernel: a finite sum over l = 0..q-1 of p+1Fq pairs
    at conjugate arguments (p^p / (q^q z^p)) e^(+-i pi(q +- p delta/2)).

    Entire for every proper fraction p/q < 1; at alpha = 1 the geometric
    term converges for z > 1.
    """
    p, q = alpha.p, alpha.q
    if p > q:
        raise ValueError("resummed large-z form requires alpha <= 1")
    if z <= 0.0:
        raise ValueError("z must be positive")
    if delta == 0.0:
        return SeriesResult(0j, 0.0, 0, True)

    a_val = p / q
    K = a_val**1.5 * (2.0 * math.pi) ** ((q - p) / 2.0 - 1.0)
    Y = p**p / (q**q * z**p)
    w_plus = Y * cmath.exp(1j * math.pi * (q + p * delta / 2.0))

    coefs = []
    for l in range(q):
        lg = 0.0
        for k in range(p):
            lg += log_gamma((k + 1) / p + l / q)
        for s in range(q):
            lg -= log_gamma((l + s + 1) / q)
        pref = K * (p**p / q**q) ** (l / q) * z ** (-l * p / q) * math.exp(lg)
        coefs.append(pref)

    budget = tol / (4.0 * max(coefs) * q) if tol > 0 else 1e-14
    total = 0j
    bound = 0.0
    terms = 0
    ok = True
    big = 0.0
    for l in range(q):
        a = (1.0,) + tuple((k + 1) / p + l / q for k in range(p))
        b = tuple((l + s + 1) / q for s in range(q))
        fp, fm = _pfq_pair(a, b, w_plus, budget, max_terms)
        ph1 = cmath.exp(1j * math.pi * (l * p * delta / q - 1.0) / 2.0)
        ph2 = cmath.exp(-1j * math.pi * (l * p * delta / q + 1.0) / 2.0)
        sign = -1.0 if l % 2 == 0 else 1.0
        total += sign * coefs[l] * (ph1 * fp.value - ph2 * fm.value)
        bound += coefs[l] * (fp.abs_error_bound + fm.abs_error_bound)
        big += coefs[l] * (abs(fp.value) + abs(fm.value))
        terms += fp.terms_used + fm.terms_used
        ok = ok and fp.converged and fm.converged
    bound += abs(total.imag)
    bound += 8.0 * kernels.EPS_DOUBLE * big
    return SeriesResult(total, bound, terms, ok and bound <= tol)


# ---------------------------------------------------------------------------
# closed forms


def _closed_entry(params: StableParams, z: float, sign: int):
    """(f_z, rel_err_scale) in the self-similar coordinate, or None."""
    p, q = params.alpha.p, params.alpha.q
    beta = params.beta
    z = abs(z)
    if p == 2 * q:  # Gaussian, any beta
        return math.exp(-z * z / 4.0) / (2.0 * math.sqrt(math.pi)), 4.0
    if p == q and beta == 0.0:  # Cauchy
        return 1.0 / (math.pi * (1.0 + z * z)), 4.0
    if (p, q) == (1, 2) and beta == 0.0:
        if z == 0.0:
            return 2.0 / math.pi, 4.0
        if z < 0.01:  # Fresnel arguments leave the power-series domain
            return None
        return 2.0 * closedforms.fresnel_half_h(z) / z, 300.0
    if (p, q) == (1, 2) and beta == 1.0:
        if sign < 0 or z == 0.0:
            return 0.0, 4.0
        return z**-1.5 * math.exp(-1.0 / (4.0 * z)) / (2.0 * math.sqrt(math.pi)), 8.0
    if (p, q) == (3, 2) and beta == 0.0:
        if z > 4.2:  # hypergeometric argument too large for stable cancellation
            return None
        if z == 0.0:
            return math.exp(log_gamma(5.0 / 3.0)) / math.pi, 4.0
        return 2.0 * closedforms.holtsmark_h(z) / (3.0 * z), 60.0
    if (p, q) == (2, 3) and beta == 0.0:
        if z < 0.28:  # Bessel argument blows up; cancellation kills the sum
            return None
        return 3.0 * closedforms.bessel_two_thirds_h(z) / (2.0 * z), 60.0
    return None


def pdf_closed_form(params: StableParams, z: float, sign: int = 1) -> Optional[Density]:
    """Catalogued closed form of the density in the self-similar coordinate.

    Covers (alpha, beta) in {(2, any), (1, 0), (1/2, 0), (1/2, 1), (3/2, 0),
    (2/3, 0)}; returns None elsewhere (absence is a value, not an error).
    """
    entry = _closed_entry(params, z, sign)
    if entry is None:
        return None
    f_z, scale = entry
    err = scale * kernels.working_eps() * (abs(f_z) + 0.1)
    return Density(max(f_z, 0.0), err, EvalMethod.CLOSED_FORM)


# ---------------------------------------------------------------------------
# dispatch


def _peak_value(alpha: float, delta: float) -> float:
    """Analytic limit of H(z)/(alpha z) at z = 0 (n = 1 series coefficient)."""
    return math.exp(log_gamma(1.0 + 1.0 / alpha)) * math.sin(math.pi * delta / 2.0) / math.pi


def _hyper_large_feasible(p: int, q: int, z: float, max_terms: int = _MAX_TERMS) -> bool:
    """Term-count gate for the large-z resummation at small z.

    The constituent p+1Fq sums are entire but need roughly |w|^(1/(q-p))
    terms at |w| = p^p/(q^q z^p); refusing early avoids burning the whole
    term cap per l-term before the oracle fallback would trigger anyway.
    """
    if p == q:  # alpha = 1 geometric branch has its own |w| < 1 guard
        return z > 1.0
    ln_w = p * math.log(p) - q * math.log(q) - p * math.log(z)
    if ln_w <= 0.0:
        return True
    return ln_w / (q - p) <= math.log(0.7 * max_terms)


def _hyper_small_feasible(p: int, q: int, z: float, delta: float, tol_h: float) -> bool:
    """Predict whether the resummation can meet tol_h before running it.

    Two separate rounding walls: the alternating sum inside each pFq grows
    to ~exp(|w|) (with the accumulation-mode epsilon), and the finite l-sum
    in doubles sees values of ~exp(Re w) when the argument phase lands on
    the positive axis.
    """
    if z <= 0.0:
        return True
    ln_w = q * math.log(q) - p * math.log(p) + p * math.log(z)
    if ln_w > 690.0:
        return False
    x_abs = math.exp(ln_w)
    re_w = x_abs * math.cos(math.pi * p * (1.0 + delta / 2.0))
    est = kernels.working_eps() * 50.0 * math.exp(min(x_abs, 700.0))
    est += kernels.EPS_DOUBLE * 50.0 * math.exp(min(max(re_w, 0.0), 700.0))
    return est <= 0.25 * tol_h


def _density_from_h(h: SeriesResult, denom: float, method: EvalMethod) -> Density:
    val = h.value.real / denom
    return Density(max(val, 0.0), h.abs_error_bound / denom, method)


def pdf(
    params: StableParams,
    x: float,
    t: float,
    method: EvalMethod = EvalMethod.AUTO,
    tol: float = 1e-9,
) -> Density:
    """Density f(x, t) of S_alpha(beta, c, tau), in x-units.

    f = H(z) / (alpha z s) with s = (c t)^(1/alpha) (1 + gamma^2)^(1/(2 alpha));
    x = tau*t (z = 0) uses the analytic limit of H(z)/(alpha z).  Auto picks
    a closed form when catalogued, then the resummation valid on the side of
    alpha, then the asymptotic expansion, then the inversion oracle.
    alpha = 1 with beta != 0 is evaluated by the oracle (Auto) and refused
    for every series method.
    """
    if not t > 0.0:
        raise ValueError("t must be positive")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    a = params.alpha
    alpha = a.value

    if a.p == a.q:  # alpha = 1
        if params.beta != 0.0:
            if method in (EvalMethod.AUTO, EvalMethod.ORACLE):
                from . import oracle

                return oracle.pdf_quadrature(params, x, t, tol=tol)
            raise ValueError(
                "alpha = 1 with beta != 0 has no series representation; "
                "use the inversion oracle"
            )
        u = x - params.tau * t
        s = params.c * t
        z = abs(u) / s
        sign = 1 if u >= 0 else -1
        sa = ScaledArg(z=z, sign=sign, gamma=0.0, delta=1.0)
    else:
        sa = scaled_argument(params, x, t)
        s = scale_factor(params, t)

    if method == EvalMethod.ORACLE:
        from . import oracle

        return oracle.pdf_quadrature(params, x, t, tol=tol)

    z = sa.z
    d_eff = sa.delta_effective()
    denom = alpha * z * s if z > 0.0 else s
    tol_h = tol * denom

    if method == EvalMethod.CLOSED_FORM:
        cf = pdf_closed_form(params, z, sa.sign)
        if cf is None:
            raise ValueError(
                f"no catalogued closed form for alpha={a}, beta={params.beta}"
            )
        return Density(cf.value / s, cf.abs_error_bound / s, EvalMethod.CLOSED_FORM)

    if method == EvalMethod.AUTO:
        cf = pdf_closed_form(params, z, sa.sign)
        if cf is not None:
            return Density(cf.value / s, cf.abs_error_bound / s, EvalMethod.CLOSED_FORM)

    if z == 0.0:
        if alpha > 1.0 or (alpha == 1.0 and params.beta == 0.0):
            val = _peak_value(alpha, d_eff) / s
            m = method if method != EvalMethod.AUTO else EvalMethod.SERIES_SMALL_Z
            return Density(val, 8.0 * kernels.working_eps() * val, m)
        if method == EvalMethod.AUTO:
            from . import oracle

            return oracle.pdf_quadrature(params, x, t, tol=tol)
        raise ValueError("z = 0 with alpha < 1 is only evaluated by the oracle")

    if method == EvalMethod.SERIES_SMALL_Z:
        h = h_series_small_z(alpha, d_eff, z, tol_h)
        if not h.converged:
            raise ToleranceError(f"small-z series did not meet tol at z={z}")
        return _density_from_h(h, denom, method)
    if method == EvalMethod.SERIES_LARGE_Z:
        h = h_series_large_z(alpha, d_eff, z, tol_h)
        if not h.converged:
            raise ToleranceError(f"large-z series did not meet tol at z={z}")
        return _density_from_h(h, denom, method)
    if method == EvalMethod.HYPER_SMALL:
        h = h_hyper_small(a, d_eff, z, tol_h)
        if not h.converged:
            raise ToleranceError(f"small-z resummation did not meet tol at z={z}")
        return _density_from_h(h, denom, method)
    if method == EvalMethod.HYPER_LARGE:
        h = h_hyper_large(a, d_eff, z, tol_h)
        if not h.converged:
            raise ToleranceError(f"large-z resummation did not meet tol at z={z}")
        return _density_from_h(h, denom, method)

    # AUTO (closed forms already tried above)
    if alpha > 1.0:
        if _hyper_small_feasible(a.p, a.q, z, d_eff, tol_h):
            h = h_hyper_small(a, d_eff, z, tol_h)
            if h.converged:
                return _density_from_h(h, denom, EvalMethod.HYPER_SMALL)
        h = _h_series_large_any(alpha, d_eff, z, tol_h, p=a.p, q=a.q)
        if h.converged:
            return _density_from_h(h, denom, EvalMethod.SERIES_LARGE_Z)
    elif alpha == 1.0:
        h = h_hyper_small(a, d_eff, z, tol_h)
        return _density_from_h(h, denom, EvalMethod.HYPER_SMALL)
    else:
        if _hyper_large_feasible(a.p, a.q, z):
            h = h_hyper_large(a, d_eff, z, tol_h)
            if h.converged:
                return _density_from_h(h, denom, EvalMethod.HYPER_LARGE)

    from . import oracle

    d = oracle.pdf_quadrature(params, x, t, tol=tol)
    if d.abs_error_bound > tol:
        raise ToleranceError(
            f"no backend met tol={tol} at x={x} (best bound {d.abs_error_bound:.2e})"
        )
    return d
