"""Series-kernel backend selection.

At import time the compiled extension ``_ckernels`` is preferred; the pure
Python module ``_pykernels`` is the fallback (and can be forced with
``STABLEKIT_FORCE_PY=1`` for debugging or benchmarking).

``STABLEKIT_EXTENDED_PRECISION=1`` (or :func:`set_extended_precision`)
switches the hypergeometric sum to a software double-double accumulator.
That mode exists for cancellation-heavy evaluations, where an oscillatory
sum collapses by many orders of magnitude; it always runs in Python.
"""

from __future__ import annotations

import os

from . import _pykernels

try:  # pragma: no cover - exercised indirectly
    from . import _ckernels  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    _ckernels = None  # type: ignore[assignment]
    HAVE_COMPILED = False

_FORCE_PY = os.environ.get("STABLEKIT_FORCE_PY", "") == "1"
_backend = _pykernels if (_FORCE_PY or not HAVE_COMPILED) else _ckernels

BACKEND = "python" if _backend is _pykernels else "compiled"

_extended = os.environ.get("STABLEKIT_EXTENDED_PRECISION", "") == "1"

#: unit roundoff of the active accumulation mode
EPS_DOUBLE = 2.220446049250313e-16
EPS_DD = 4.93e-32


def set_extended_precision(flag: bool) -> None:
    """Enable or disable double-double accumulation (process-wide)."""
    global _extended
    _extended = bool(flag)


def extended_precision() -> bool:
    return _extended


def working_eps() -> float:
    return EPS_DD if _extended else EPS_DOUBLE


def pfq_sum(a, b, w, tol, max_terms):
    if _extended:
        return _pykernels.pfq_sum_dd(tuple(a), tuple(b), complex(w), tol, max_terms)
    return _backend.pfq_sum(tuple(a), tuple(b), complex(w), tol, max_terms)


def h_small_sum(alpha, delta, z, tol, max_terms, delta_class):
    return _backend.h_small_sum(alpha, delta, z, tol, max_terms, delta_class)


def h_large_sum(alpha, delta, z, tol, max_terms, p, q, delta_class):
    return _backend.h_large_sum(alpha, delta, z, tol, max_terms, p, q, delta_class)


def get_backends():
    """Both kernel modules (python one always present), for benchmarks."""
    out = {"python": _pykernels}
    if HAVE_COMPILED:
        out["compiled"] = _ckernels
    return out
