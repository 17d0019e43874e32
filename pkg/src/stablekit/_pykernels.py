"""Pure-Python series kernels.

These are the reference implementations of the three hot loops: the
generalized hypergeometric sum and the two power-series expansions of the
density kernel H(z).  A compiled twin lives in ``_ckernels.pyx``; the
backend is chosen at import time in ``kernels``.  All return the tuple

    (value, tail_bound, max_abs_term, terms_used, converged)

where ``tail_bound`` covers truncation only; callers add a rounding floor
based on ``max_abs_term``.
"""

from __future__ import annotations

import math

from ._dd import dd_add, dd_div_d, dd_mul_d

_RATIO_CAP = 0.995  # geometric tail rule engages only below this ratio


def pfq_sum(
    a: tuple[float, ...],
    b: tuple[float, ...],
    w: complex,
    tol: float,
    max_terms: int,
) -> tuple[complex, float, float, int, bool]:
    """Partial sum of sum_n prod(a_k)_n / prod(b_s)_n * w^n / n!.

    Terms are built by the ratio recurrence t_{n+1} = t_n * w *
    prod(a+n) / (prod(b+n) (n+1)) so no gamma ratios are ever formed.
    Stops once terms decay geometrically and the tail bound drops under
    ``tol``; Neumaier-compensated accumulation throughout.
    """
    wr, wi = w.real, w.imag
    sr = si = 0.0
    er = ei = 0.0  # compensation
    tr, ti = 1.0, 0.0
    t_abs = 1.0
    max_abs = 1.0
    streak = 0
    prev_ratio = math.inf
    n = 0
    while n < max_terms:
        # add current term with compensation
        y = tr - er
        s_new = sr + y
        er = (s_new - sr) - y
        sr = s_new
        y = ti - ei
        s_new = si + y
        ei = (s_new - si) - y
        si = s_new
        # next term
        num = 1.0
        for ak in a:
            num *= ak + n
        den = n + 1.0
        for bs in b:
            den *= bs + n
        f = num / den
        tr, ti = (tr * wr - ti * wi) * f, (tr * wi + ti * wr) * f
        n += 1
        t_next = math.hypot(tr, ti)
        if t_next > max_abs:
            max_abs = t_next
        if t_next <= 1e-305:
            return complex(sr, si), t_next, max_abs, n, True
        ratio = t_next / t_abs
        if ratio < _RATIO_CAP and ratio <= prev_ratio * 1.000001:
            streak += 1
            if streak >= 2:
                bound = t_next / (1.0 - ratio)
                if bound <= tol:
                    return complex(sr, si), bound, max_abs, n, True
        else:
            streak = 0
        prev_ratio = ratio
        t_abs = t_next
    return complex(sr, si), t_abs, max_abs, n, False


def pfq_sum_dd(
    a: tuple[float, ...],
    b: tuple[float, ...],
    w: complex,
    tol: float,
    max_terms: int,
) -> tuple[complex, float, float, int, bool]:
    """Double-double twin of :func:`pfq_sum` for cancellation-heavy sums."""
    wr, wi = w.real, w.imag
    sr = (0.0, 0.0)
    si = (0.0, 0.0)
    tr = (1.0, 0.0)
    ti = (0.0, 0.0)
    t_abs = 1.0
    max_abs = 1.0
    streak = 0
    prev_ratio = math.inf
    n = 0
    while n < max_terms:
        sr = dd_add(*sr, *tr)
        si = dd_add(*si, *ti)
        num = 1.0
        for ak in a:
            num *= ak + n
        den = n + 1.0
        for bs in b:
            den *= bs + n
        # t <- t * w * (num/den), complex in dd components
        ar = dd_mul_d(*tr, wr)
        br_ = dd_mul_d(*ti, wi)
        cr = dd_add(*ar, *dd_mul_d(*br_, -1.0))
        ai = dd_mul_d(*tr, wi)
        bi = dd_mul_d(*ti, wr)
        ci = dd_add(*ai, *bi)
        cr = dd_mul_d(*cr, num)
        ci = dd_mul_d(*ci, num)
        tr = dd_div_d(*cr, den)
        ti = dd_div_d(*ci, den)
        n += 1
        t_next = math.hypot(tr[0], ti[0])
        if t_next > max_abs:
            max_abs = t_next
        if t_next <= 1e-290:
            return complex(sr[0] + sr[1], si[0] + si[1]), t_next, max_abs, n, True
        ratio = t_next / t_abs
        if ratio < _RATIO_CAP and ratio <= prev_ratio * 1.000001:
            streak += 1
            if streak >= 2:
                bound = t_next / (1.0 - ratio)
                if bound <= tol:
                    return complex(sr[0] + sr[1], si[0] + si[1]), bound, max_abs, n, True
        else:
            streak = 0
        prev_ratio = ratio
        t_abs = t_next
    return complex(sr[0] + sr[1], si[0] + si[1]), t_abs, max_abs, n, False


def _sin_pi_reduced(x: float) -> float:
    """sin(pi * x) with the argument reduced modulo 2 before scaling."""
    r = math.remainder(x, 2.0)
    return math.sin(math.pi * r)


def h_small_sum(
    alpha: float,
    delta: float,
    z: float,
    tol: float,
    max_terms: int,
    delta_class: int,
) -> tuple[float, float, float, int, bool]:
    """(alpha/pi) sum_{n>=1} (-1)^(n-1) G(1+n/alpha)/G(n+1) sin(n pi delta/2) z^n.

    delta_class is 0, 1 or 2 when delta is exactly that integer (sine zeros
    are then skipped without evaluating them) and -1 otherwise.  The tail
    bound uses the sine-free envelope, so skipped zeros never disturb the
    geometric-ratio test.
    """
    pref = alpha / math.pi
    if z == 0.0:
        return 0.0, 0.0, 0.0, 0, True
    if delta_class == 0 or delta_class == 2:
        return 0.0, 0.0, 0.0, 0, True  # sin(n*pi*{0,1}) vanishes for all n
    step = 2 if delta_class == 1 else 1
    n = 1
    s = 0.0
    comp = 0.0
    max_abs = 0.0
    lz = math.log(z)
    env = math.exp(math.lgamma(1.0 + n / alpha) - math.lgamma(n + 1.0) + n * lz)
    streak = 0
    terms = 0
    while terms < max_terms:
        if delta_class == 1:
            coef = 1.0 if (n & 3) == 1 else -1.0  # sin(n pi/2), odd n
        else:
            coef = _sin_pi_reduced(n * delta / 2.0)
            if n % 2 == 0:
                coef = -coef  # (-1)^(n-1)
        t = coef * env
        a_t = abs(t)
        if a_t > max_abs:
            max_abs = a_t
        y = t - comp
        s_new = s + y
        comp = (s_new - s) - y
        s = s_new
        terms += 1
        n_next = n + step
        env_next = math.exp(
            math.lgamma(1.0 + n_next / alpha) - math.lgamma(n_next + 1.0) + n_next * lz
        )
        ratio = env_next / env if env > 0.0 else 0.0
        if env_next <= 1e-305:
            return pref * s, pref * env_next, pref * max_abs, terms, True
        if ratio < _RATIO_CAP:
            streak += 1
            if streak >= 2:
                bound = env_next / (1.0 - ratio)
                if pref * bound <= tol:
                    return pref * s, pref * bound, pref * max_abs, terms, True
        else:
            streak = 0
        n = n_next
        env = env_next
    return pref * s, pref * env, pref * max_abs, terms, False


def h_large_sum(
    alpha: float,
    delta: float,
    z: float,
    tol: float,
    max_terms: int,
    p: int,
    q: int,
    delta_class: int,
) -> tuple[float, float, float, int, bool]:
    """(alpha/pi) sum_{n>=1} (-1)^(n+1) G(1+n a)/G(n+1) sin(n pi a delta/2) z^(-n a).

    Convergent for alpha <= 1 (z > 1 needed at alpha = 1).  For alpha > 1
    the same sum is summed as an asymptotic expansion: terms are added while
    the envelope decreases and the first omitted envelope is the reported
    bound (optimal truncation).
    """
    if z <= 0.0:
        raise ValueError("z must be positive for the large-z expansion")
    pref = alpha / math.pi
    asym = alpha > 1.0
    lx = -alpha * math.log(z)
    n = 1
    s = 0.0
    comp = 0.0
    max_abs = 0.0
    env = math.exp(math.lgamma(1.0 + alpha) + lx)
    streak = 0
    terms = 0
    falling = False
    while terms < max_terms:
        if delta_class >= 0:
            num = n * p * delta_class
            if num % (2 * q) == 0:
                coef = 0.0
            else:
                frac = (num % (4 * q)) / (2.0 * q)
                coef = math.sin(math.pi * frac)
        else:
            coef = _sin_pi_reduced(n * alpha * delta / 2.0)
        if coef != 0.0:
            if n % 2 == 0:
                coef = -coef  # (-1)^(n+1)
            t = coef * env
            a_t = abs(t)
            if a_t > max_abs:
                max_abs = a_t
            y = t - comp
            s_new = s + y
            comp = (s_new - s) - y
            s = s_new
        terms += 1
        n_next = n + 1
        env_next = math.exp(
            math.lgamma(1.0 + n_next * alpha) - math.lgamma(n_next + 1.0) + n_next * lx
        )
        if env_next <= 1e-305:
            return pref * s, pref * env_next, pref * max_abs, terms, True
        ratio = env_next / env if env > 0.0 else 0.0
        if asym:
            if ratio < 1.0:
                falling = True
                bound = 2.0 * env_next
                if pref * bound <= tol:
                    return pref * s, pref * bound, pref * max_abs, terms, True
            elif falling:
                # passed the smallest term: optimal truncation point
                bound = 2.0 * env_next
                ok = pref * bound <= tol
                return pref * s, pref * bound, pref * max_abs, terms, ok
            else:
                # terms grow from the start: expansion unusable here
                return pref * s, pref * env_next, pref * max_abs, terms, False
        else:
            if ratio < _RATIO_CAP:
                streak += 1
                if streak >= 2:
                    bound = env_next / (1.0 - ratio)
                    if pref * bound <= tol:
                        return pref * s, pref * bound, pref * max_abs, terms, True
            else:
                streak = 0
        n = n_next
        env = env_next
    return pref * s, pref * env, pref * max_abs, terms, False
