# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python series kernels in ``_pykernels``.

Semantics and return tuples are identical; only the inner loops differ.
"""

from libc.math cimport lgamma, log, exp, hypot, sin, fabs, remainder, M_PI

DEF RATIO_CAP = 0.995
DEF MAX_PARAMS = 32


def pfq_sum(a, b, w, double tol, int max_terms):
    cdef double av[MAX_PARAMS]
    cdef double bv[MAX_PARAMS]
    cdef int na = len(a)
    cdef int nb = len(b)
    if na > MAX_PARAMS or nb > MAX_PARAMS:
        raise ValueError("too many hypergeometric parameters")
    cdef int i
    for i in range(na):
        av[i] = a[i]
    for i in range(nb):
        bv[i] = b[i]
    cdef double wr = w.real, wi = w.imag
    cdef double sr = 0.0, si = 0.0, er = 0.0, ei = 0.0
    cdef double tr = 1.0, ti = 0.0
    cdef double t_abs = 1.0, max_abs = 1.0
    cdef double prev_ratio = 1e308
    cdef int streak = 0
    cdef int n = 0
    cdef double y, s_new, num, den, f, t_next, ratio, bound, ntr, nti
    while n < max_terms:
        y = tr - er
        s_new = sr + y
        er = (s_new - sr) - y
        sr = s_new
        y = ti - ei
        s_new = si + y
        ei = (s_new - si) - y
        si = s_new
        num = 1.0
        for i in range(na):
            num *= av[i] + n
        den = n + 1.0
        for i in range(nb):
            den *= bv[i] + n
        f = num / den
        ntr = (tr * wr - ti * wi) * f
        nti = (tr * wi + ti * wr) * f
        tr = ntr
        ti = nti
        n += 1
        t_next = hypot(tr, ti)
        if t_next > max_abs:
            max_abs = t_next
        if t_next <= 1e-305:
            return complex(sr, si), t_next, max_abs, n, True
        ratio = t_next / t_abs
        if ratio < RATIO_CAP and ratio <= prev_ratio * 1.000001:
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


cdef inline double _sin_pi_reduced(double x):
    return sin(M_PI * remainder(x, 2.0))


def h_small_sum(double alpha, double delta, double z, double tol,
                int max_terms, int delta_class):
    cdef double pref = alpha / M_PI
    if z == 0.0:
        return 0.0, 0.0, 0.0, 0, True
    if delta_class == 0 or delta_class == 2:
        return 0.0, 0.0, 0.0, 0, True
    cdef int step = 2 if delta_class == 1 else 1
    cdef long n = 1
    cdef double s = 0.0, comp = 0.0, max_abs = 0.0
    cdef double lz = log(z)
    cdef double env = exp(lgamma(1.0 + n / alpha) - lgamma(n + 1.0) + n * lz)
    cdef int streak = 0
    cdef int terms = 0
    cdef double coef, t, a_t, y, s_new, env_next, ratio, bound
    cdef long n_next
    while terms < max_terms:
        if delta_class == 1:
            coef = 1.0 if (n & 3) == 1 else -1.0
        else:
            coef = _sin_pi_reduced(n * delta / 2.0)
            if n % 2 == 0:
                coef = -coef
        t = coef * env
        a_t = fabs(t)
        if a_t > max_abs:
            max_abs = a_t
        y = t - comp
        s_new = s + y
        comp = (s_new - s) - y
        s = s_new
        terms += 1
        n_next = n + step
        env_next = exp(lgamma(1.0 + n_next / alpha) - lgamma(n_next + 1.0)
                       + n_next * lz)
        ratio = env_next / env if env > 0.0 else 0.0
        if env_next <= 1e-305:
            return pref * s, pref * env_next, pref * max_abs, terms, True
        if ratio < RATIO_CAP:
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


def h_large_sum(double alpha, double delta, double z, double tol,
                int max_terms, long p, long q, int delta_class):
    if z <= 0.0:
        raise ValueError("z must be positive for the large-z expansion")
    cdef double pref = alpha / M_PI
    cdef bint asym = alpha > 1.0
    cdef double lx = -alpha * log(z)
    cdef long n = 1
    cdef double s = 0.0, comp = 0.0, max_abs = 0.0
    cdef double env = exp(lgamma(1.0 + alpha) + lx)
    cdef int streak = 0
    cdef int terms = 0
    cdef bint falling = False
    cdef double coef, t, a_t, y, s_new, env_next, ratio, bound
    cdef long n_next, num
    cdef bint ok
    while terms < max_terms:
        if delta_class >= 0:
            num = n * p * delta_class
            if num % (2 * q) == 0:
                coef = 0.0
            else:
                coef = sin(M_PI * ((num % (4 * q)) / (2.0 * q)))
        else:
            coef = _sin_pi_reduced(n * alpha * delta / 2.0)
        if coef != 0.0:
            if n % 2 == 0:
                coef = -coef
            t = coef * env
            a_t = fabs(t)
            if a_t > max_abs:
                max_abs = a_t
            y = t - comp
            s_new = s + y
            comp = (s_new - s) - y
            s = s_new
        terms += 1
        n_next = n + 1
        env_next = exp(lgamma(1.0 + n_next * alpha) - lgamma(n_next + 1.0)
                       + n_next * lx)
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
                bound = 2.0 * env_next
                ok = pref * bound <= tol
                return pref * s, pref * bound, pref * max_abs, terms, ok
            else:
                return pref * s, pref * env_next, pref * max_abs, terms, False
        else:
            if ratio < RATIO_CAP:
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
