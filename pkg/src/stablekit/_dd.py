"""Software double-double arithmetic (~32 significant digits).

Each value is an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.  Only the
handful of operations the series kernels need are provided.  The splitting
constant in _two_prod assumes IEEE-754 binary64.
"""

from __future__ import annotations

_SPLIT = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ca = _SPLIT * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLIT * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def dd_add(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    s1, s2 = _two_sum(ahi, bhi)
    t1, t2 = _two_sum(alo, blo)
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


def dd_mul(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    p1, p2 = _two_prod(ahi, bhi)
    p2 += ahi * blo + alo * bhi
    return _quick_two_sum(p1, p2)


def dd_mul_d(ahi: float, alo: float, b: float) -> tuple[float, float]:
    p1, p2 = _two_prod(ahi, b)
    p2 += alo * b
    return _quick_two_sum(p1, p2)


def dd_div_d(ahi: float, alo: float, b: float) -> tuple[float, float]:
    q1 = ahi / b
    p1, p2 = _two_prod(q1, b)
    # remainder of the first quotient digit, then one Newton correction
    r_hi, r_lo = dd_add(ahi, alo, -p1, -p2)
    q2 = (r_hi + r_lo) / b
    return _quick_two_sum(q1, q2)


def dd_neg(ahi: float, alo: float) -> tuple[float, float]:
    return -ahi, -alo
