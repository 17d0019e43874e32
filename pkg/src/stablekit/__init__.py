"""stablekit: densities of one-dimensional stable laws at rational index.

The engine evaluates f(x, t) of S_alpha(beta, c, tau) for alpha = p/q in
(0, 2] through convergent power series of the density kernel and their
finite hypergeometric resummations, plus a catalogue of closed forms; an
independent characteristic-function inversion oracle cross-validates every
backend.  Hot series loops run in a compiled extension when available
(``stablekit.kernels.BACKEND`` says which one is active).
"""

from .engine import (
    Density,
    EvalMethod,
    ToleranceError,
    h_hyper_large,
    h_hyper_small,
    h_series_large_z,
    h_series_small_z,
    pdf,
    pdf_closed_form,
)
from .kernels import BACKEND, HAVE_COMPILED, extended_precision, set_extended_precision
from .oracle import (
    CharExponent,
    GridDensity,
    char_exponent,
    pdf_quadrature,
    propagator_grid,
    self_similarity_check,
    verify_ft_abs_power,
    weyl_symbol,
)
from .params import (
    RationalIndex,
    ScaledArg,
    StableParams,
    admissible_region,
    farey_series,
    reduce_rational,
    scaled_argument,
)
from .resolvent import (
    ResolventSpec,
    h_lambda,
    mfold_limit,
    mu_lambda_gaussian_closed,
    mu_lambda_grid,
    sup_distance,
)
from .specfun import (
    HyperSpec,
    SeriesResult,
    bessel_i,
    fresnel_c,
    fresnel_s,
    hyper_pfq,
    log_gamma,
    pochhammer,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAVE_COMPILED",
    "CharExponent",
    "Density",
    "EvalMethod",
    "GridDensity",
    "HyperSpec",
    "RationalIndex",
    "ResolventSpec",
    "ScaledArg",
    "SeriesResult",
    "StableParams",
    "ToleranceError",
    "admissible_region",
    "bessel_i",
    "char_exponent",
    "extended_precision",
    "farey_series",
    "fresnel_c",
    "fresnel_s",
    "h_hyper_large",
    "h_hyper_small",
    "h_lambda",
    "h_series_large_z",
    "h_series_small_z",
    "hyper_pfq",
    "log_gamma",
    "mfold_limit",
    "mu_lambda_gaussian_closed",
    "mu_lambda_grid",
    "pdf",
    "pdf_closed_form",
    "pdf_quadrature",
    "pochhammer",
    "propagator_grid",
    "reduce_rational",
    "scaled_argument",
    "self_similarity_check",
    "set_extended_precision",
    "sup_distance",
    "verify_ft_abs_power",
    "weyl_symbol",
]
