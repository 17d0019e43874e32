"""Parameter types for the stable laws S_alpha(beta, c, tau).

The index alpha lives here as an exact reduced fraction p/q.  All the
resummed evaluators dispatch on the integers (p, q), so alpha is never
allowed to degrade to a bare float inside dispatch logic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "RationalIndex",
    "StableParams",
    "ScaledArg",
    "reduce_rational",
    "farey_series",
    "admissible_region",
    "scaled_argument",
]


@dataclass(frozen=True)
class RationalIndex:
    """Stable index alpha = p/q, reduced, with 0 < p/q <= 2."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if self.p < 1 or self.q < 1:
            raise ValueError(f"p, q must be positive, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")
        if self.p > 2 * self.q:
            raise ValueError(f"index {self.p}/{self.q} lies outside (0, 2]")

    @property
    def value(self) -> float:
        return self.p / self.q

    def __float__(self) -> float:
        return self.p / self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __lt__(self, other: "RationalIndex") -> bool:
        return self.p * other.q < other.p * self.q


def reduce_rational(p: int, q: int) -> RationalIndex:
    """Reduce p/q to lowest terms and validate it as a stable index."""
    if p < 1 or q < 1:
        raise ValueError(f"p, q must be positive, got {p}, {q}")
    if p > 2 * q:
        raise ValueError(f"index {p}/{q} exceeds 2")
    g = math.gcd(p, q)
    return RationalIndex(p // g, q // g)


@dataclass(frozen=True)
class StableParams:
    """Parameter tuple (alpha, beta, c, tau) of the law S_alpha(beta, c, tau).

    c is the scale (generalized diffusion constant, units [L]^alpha / [T]);
    tau is the drift (units [L]/[T]).  At alpha = 2 the law does not depend
    on beta: the scaled-argument map forces gamma = 0 there.
    """

    alpha: RationalIndex
    beta: float = 0.0
    c: float = 1.0
    tau: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.alpha, RationalIndex):
            raise TypeError("alpha must be a RationalIndex")
        if not -1.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [-1, 1], got {self.beta}")
        if not self.c > 0.0:
            raise ValueError(f"scale c must be positive, got {self.c}")
        if not math.isfinite(self.tau):
            raise ValueError("tau must be finite")


@dataclass(frozen=True)
class ScaledArg:
    """Self-similar coordinate of a space-time point.

    z >= 0 is |x - tau*t| divided by (c t)^(1/alpha) (1 + gamma^2)^(1/(2 alpha));
    sign records which side of the drift line the point lies on.  The series
    written for the positive side are evaluated with delta; the negative side
    uses 2 - delta (reflection beta -> -beta).
    """

    z: float
    sign: int
    gamma: float
    delta: float

    def delta_effective(self) -> float:
        return self.delta if self.sign >= 0 else 2.0 - self.delta


def farey_series(n: int) -> list[RationalIndex]:
    """Ascending irreducible fractions p/q with 0 < p <= q <= n.

    Excludes 0/1, includes 1/1.  Uses the mediant next-term recurrence.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    out: list[RationalIndex] = []
    a, b, c, d = 0, 1, 1, n
    while c <= n:
        out.append(RationalIndex(c, d))
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return out


def admissible_region(alpha: float, b: float) -> bool:
    """Whether the centering constant b is admissible at index alpha."""
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"alpha must lie in (0, 2], got {alpha}")
    if alpha < 1.0:
        return abs(b) <= alpha
    return abs(b) <= 2.0 - alpha


def _gamma_of(alpha: RationalIndex, beta: float) -> float:
    if alpha.p == 2 * alpha.q:  # alpha = 2: tan(pi) = 0, beta drops out
        return 0.0
    if beta == 0.0:
        return 0.0
    return beta * math.tan(alpha.value * math.pi / 2.0)


def _delta_of(alpha: RationalIndex, gamma: float, beta: float) -> float:
    # principal arctan branch; delta stays in (0, 2) for alpha > 1 even at
    # beta = +-1, and hits the endpoints {0, 2} only for 0 < alpha < 1
    if gamma == 0.0:
        return 1.0
    if abs(beta) == 1.0 and alpha.p < alpha.q:
        # arctan(tan(alpha*pi/2)) = alpha*pi/2 exactly when alpha < 1
        return 1.0 + math.copysign(1.0, beta)
    return 1.0 + (2.0 / (alpha.value * math.pi)) * math.atan(gamma)


def scaled_argument(params: StableParams, x: float, t: float) -> ScaledArg:
    """Map (x, t) to the self-similar coordinate of the law.

    Requires t > 0 and alpha != 1 (the alpha = 1 law is not self-similar
    for beta != 0; the inversion oracle handles it).
    """
    if not t > 0.0:
        raise ValueError(f"t must be positive, got {t}")
    a = params.alpha
    if a.p == a.q:
        raise ValueError("alpha = 1 has no scaled argument; use the oracle")
    gamma = _gamma_of(a, params.beta)
    delta = _delta_of(a, gamma, params.beta)
    u = x - params.tau * t
    scale = (params.c * t) ** (1.0 / a.value) * (1.0 + gamma * gamma) ** (
        1.0 / (2.0 * a.value)
    )
    z = abs(u) / scale
    return ScaledArg(z=z, sign=1 if u >= 0.0 else -1, gamma=gamma, delta=delta)


def scale_factor(params: StableParams, t: float) -> float:
    """(c t)^(1/alpha) (1 + gamma^2)^(1/(2 alpha)): converts the density in
    the self-similar coordinate to x-units."""
    if not t > 0.0:
        raise ValueError(f"t must be positive, got {t}")
    a = params.alpha
    gamma = _gamma_of(a, params.beta)
    return (params.c * t) ** (1.0 / a.value) * (1.0 + gamma * gamma) ** (
        1.0 / (2.0 * a.value)
    )
