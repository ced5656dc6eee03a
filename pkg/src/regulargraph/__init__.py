"""Exponent spectra, sign thresholds and conditional bounds for the
Schmidt-Summerer regular graph."""

from .bounds import (
    BoundReport,
    TauDelta,
    bound_report,
    conditional_bound,
    conditional_crossing,
    glueck_bound,
    mit_check,
    tau_delta,
    unconditional_bound,
)
from .errors import (
    ConvergenceError,
    DomainError,
    NoSignChange,
    NonFinite,
    NotRepresentable,
    NumericalError,
    RegularGraphError,
)
from .numerics import Bracket, RootResult, bracket_scan, solve_monotone
from .spectra import (
    DualSpectrum,
    GraphParams,
    LambdaSpectrum,
    PsiProfile,
    RelationReport,
    dual_spectrum,
    f_aux,
    from_dual,
    lambda_spectrum,
    last_minimum,
    phi,
    psi_profile,
    relation_report,
    to_dual,
    vartheta,
)
from .thresholds import (
    Classification,
    SchmidtInterval,
    ThresholdResult,
    chi,
    chi_prime_at_one,
    classify,
    schmidt_interval,
    sign_at,
)

__version__ = "0.1.0"
