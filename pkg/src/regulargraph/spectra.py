"""Exponent spectra of the regular graph.

A regular graph in dimension ``n`` is fixed by ``lam = lambda_{n,1}`` in
``[1/n, inf]``. All ``n + 2`` exponents form a geometric sequence

    lambda_{n,j} = lam * q**(j - 1),    j = 1, ..., n + 2,

and the uniform exponents are the same list shifted by one index. The common
ratio ``q`` in ``(0, 1]`` is fixed by

    lam * (q + q**2 + ... + q**n) = 1,

which is the identity ``f_n(lam) = f_n(lambda_{n,n+2})`` for
``f_n(x) = (1 + x)**(n + 1) / x`` with the trivial solution ``q = 1`` divided
out. That reduced form stays well conditioned at the Dirichlet point
``lam = 1/n``, where the undivided identity has a double root. On the dual
side ``1/q`` solves the same polynomial equation with ``w`` on the right.

Everything is evaluated in log space so that ``n`` in the hundreds and ``lam``
up to 1e6 neither overflow nor lose the small exponents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DomainError
from .numerics import Bracket, solve_monotone

# relative distance below which lam counts as the Dirichlet point 1/n
DIRICHLET_RTOL = 1e-15


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"dimension n must be a positive integer, got {n!r}")
    return n


@dataclass(frozen=True)
class GraphParams:
    """Dimension ``n`` and parameter ``lam`` (may be ``math.inf``)."""

    n: int
    lam: float

    def __post_init__(self) -> None:
        _check_n(self.n)
        lam = float(self.lam)
        if math.isnan(lam):
            raise DomainError("lambda must not be nan")
        if lam < 1.0 / self.n and not self.is_dirichlet:
            raise DomainError(f"lambda must be >= 1/n = {1.0 / self.n!r}, got {lam!r}")
        object.__setattr__(self, "lam", lam)

    @property
    def is_dirichlet(self) -> bool:
        return abs(float(self.lam) * self.n - 1.0) <= DIRICHLET_RTOL

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.lam)


@dataclass(frozen=True)
class LambdaSpectrum:
    """``values[j - 1]`` is ``lambda_{n,j}`` for ``j = 1..n+2``.

    ``quotient`` is the common ratio ``lambda_{n,j+1} / lambda_{n,j}``; its
    reciprocal is the Schmidt-Summerer parameter ``rho``.
    """

    n: int
    values: Tuple[float, ...]
    quotient: float

    @property
    def lam(self) -> float:
        return self.values[0]

    @property
    def rho(self) -> float:
        return math.inf if self.quotient == 0.0 else 1.0 / self.quotient

    def exponent(self, j: int) -> float:
        """``lambda_{n,j}``, 1-based."""
        if not 1 <= j <= self.n + 2:
            raise DomainError(f"j must lie in [1, {self.n + 2}], got {j}")
        return self.values[j - 1]

    def uniform(self, j: int) -> float:
        """Uniform exponent ``hat lambda_{n,j} = lambda_{n,j+1}`` for ``j = 1..n+1``."""
        if not 1 <= j <= self.n + 1:
            raise DomainError(f"j must lie in [1, {self.n + 1}], got {j}")
        return self.values[j]


@dataclass(frozen=True)
class DualSpectrum:
    """``values[j - 1]`` is ``w_{n,j}``; uniform ``hat w_{n,j} = w_{n,j+1}``."""

    n: int
    values: Tuple[float, ...]
    quotient: float

    @property
    def w(self) -> float:
        return self.values[0]

    def exponent(self, j: int) -> float:
        if not 1 <= j <= self.n + 2:
            raise DomainError(f"j must lie in [1, {self.n + 2}], got {j}")
        return self.values[j - 1]

    def uniform(self, j: int) -> float:
        if not 1 <= j <= self.n + 1:
            raise DomainError(f"j must lie in [1, {self.n + 1}], got {j}")
        return self.values[j]


@dataclass(frozen=True)
class PsiProfile:
    n: int
    psi_lower: Tuple[float, ...]
    psi_upper: Tuple[float, ...]


@dataclass(frozen=True)
class RelationReport:
    """Residuals and slacks of the known inequalities on one regular graph.

    Slacks are ``larger side - smaller side`` and are non-negative when the
    inequality holds. ``laurent_slack`` is only defined for ``n = 2``.
    """

    n: int
    lam: float
    w: float
    w_hat: float
    lam_hat: float
    geometric_residual: float
    lower_bound_slack: float
    dual_lower_bound_slack: float
    german_upper_slack: float
    german_lower_slack: float
    laurent_slack: Optional[float] = None


def log_geometric_sum(n: int, s: float) -> float:
    """``log(e**s + e**(2 s) + ... + e**(n s))`` without overflow."""
    if s == 0.0:
        return math.log(n)
    if s < 0.0:
        return s + math.log(math.expm1(n * s) / math.expm1(s))
    return n * s + math.log(math.expm1(-n * s) / math.expm1(-s))


def _solve_log_ratio(n: int, log_target: float) -> float:
    """Return ``s`` with ``log_geometric_sum(n, s) = log_target``."""
    if n == 1:
        return log_target
    log_n = math.log(n)
    # the largest term bounds the sum between itself and n times itself
    if log_target <= log_n:
        lo, hi = log_target - log_n, min(0.0, log_target)
    else:
        lo, hi = (log_target - log_n) / n, log_target / n
    if not lo < hi:
        return hi
    result = solve_monotone(
        lambda s: log_geometric_sum(n, s), log_target, Bracket(lo, hi, "increasing")
    )
    return result.root


def log_quotient(params: GraphParams) -> float:
    """``log q`` for the common ratio ``q`` of the spectrum (``-inf`` at ``lam = inf``)."""
    if params.is_dirichlet:
        return 0.0
    if params.is_infinite:
        return -math.inf
    return _solve_log_ratio(params.n, -math.log(params.lam))


def _log_dual_ratio(n: int, w: float) -> float:
    """``log p`` with ``p + p**2 + ... + p**n = w``; the dual ratio is ``1/p``."""
    return _solve_log_ratio(n, math.log(w))


def log_f_aux(n: int, x: float) -> float:
    if not x > 0:
        raise DomainError(f"f_n is defined for x > 0, got {x!r}")
    return (n + 1) * math.log1p(x) - math.log(x)


def f_aux(n: int, x: float) -> float:
    """``(1 + x)**(n + 1) / x``; decreasing on ``(0, 1/n)``, increasing after."""
    _check_n(n)
    if not x > 0:
        raise DomainError(f"f_n is defined for x > 0, got {x!r}")
    if math.isinf(x):
        return math.inf
    try:
        return (1.0 + x) ** (n + 1) / x
    except OverflowError:
        return math.inf


def last_minimum(params: GraphParams) -> float:
    """``lambda_{n,n+2} = hat lambda_{n,n+1}``, the root of ``f_n(x) = f_n(lam)`` in ``[0, 1/n]``."""
    if params.is_dirichlet:
        return 1.0 / params.n
    if params.is_infinite:
        return 0.0
    return math.exp(math.log(params.lam) + (params.n + 1) * log_quotient(params))


def vartheta(params: GraphParams) -> float:
    """Uniform exponent ``hat lambda_n = lambda_{n,2}`` as a function of ``lam``."""
    if params.is_dirichlet:
        return 1.0 / params.n
    if params.is_infinite:
        return 1.0
    return math.exp(math.log(params.lam) + log_quotient(params))


def lambda_spectrum(params: GraphParams) -> LambdaSpectrum:
    n = params.n
    if params.is_dirichlet:
        return LambdaSpectrum(n, (1.0 / n,) * (n + 2), 1.0)
    if params.is_infinite:
        return LambdaSpectrum(n, (math.inf, 1.0) + (0.0,) * n, 0.0)
    log_lam = math.log(params.lam)
    s = log_quotient(params)
    values = (params.lam,) + tuple(math.exp(log_lam + k * s) for k in range(1, n + 2))
    return LambdaSpectrum(n, values, math.exp(s))


def _check_w(n: int, w: float) -> float:
    _check_n(n)
    w = float(w)
    if math.isnan(w) or (w < n and abs(w / n - 1.0) > DIRICHLET_RTOL):
        raise DomainError(f"w must be >= n = {n}, got {w!r}")
    return max(w, float(n))


def phi(n: int, w: float) -> float:
    """Uniform exponent ``hat w_n`` in the regular graph with ``w_n = w``.

    The dual ratio ``p`` solves ``p + ... + p**n = w`` (the reduced form of the
    dual last-minimum identity); then ``hat w_n = w / p``.
    """
    w = _check_w(n, w)
    if w == n:
        return float(n)
    if n == 1:
        return 1.0
    if math.isinf(w):
        return math.inf
    return math.exp(math.log(w) - _log_dual_ratio(n, w))


def dual_spectrum(n: int, w: float) -> DualSpectrum:
    w = _check_w(n, w)
    if w == n:
        return DualSpectrum(n, (float(n),) * (n + 2), 1.0)
    if math.isinf(w):
        return DualSpectrum(n, (math.inf,) * n + (1.0, 0.0), 0.0)
    log_w = math.log(w)
    t = _log_dual_ratio(n, w)
    values = (w,) + tuple(math.exp(log_w - k * t) for k in range(1, n + 2))
    return DualSpectrum(n, values, math.exp(-t))


def _reciprocal(x: float) -> float:
    if x == 0.0:
        return math.inf
    if math.isinf(x):
        return 0.0
    return 1.0 / x


def to_dual(spec: LambdaSpectrum) -> DualSpectrum:
    """Apply ``w_{n,j} = 1 / lambda_{n,n+3-j}`` (reciprocal of the mirrored uniform exponent)."""
    if len(spec.values) != spec.n + 2:
        raise DomainError(f"expected {spec.n + 2} exponents, got {len(spec.values)}")
    if any(math.isnan(v) or v < 0 for v in spec.values):
        raise DomainError("spectrum entries must be non-negative numbers")
    values = tuple(_reciprocal(v) for v in reversed(spec.values))
    return DualSpectrum(spec.n, values, spec.quotient)


def from_dual(spec: DualSpectrum) -> LambdaSpectrum:
    """Inverse of :func:`to_dual`."""
    if len(spec.values) != spec.n + 2:
        raise DomainError(f"expected {spec.n + 2} exponents, got {len(spec.values)}")
    if any(math.isnan(v) or v < 0 for v in spec.values):
        raise DomainError("spectrum entries must be non-negative numbers")
    values = tuple(_reciprocal(v) for v in reversed(spec.values))
    return LambdaSpectrum(spec.n, values, spec.quotient)


def psi_profile(params: GraphParams) -> PsiProfile:
    """Limits of the normalized successive minima, from
    ``(1 + lambda_{n,j}) (1 + psi_lower_j) = (n + 1) / n`` and the same with
    the uniform exponents for ``psi_upper``.
    """
    if params.is_infinite:
        raise DomainError("psi profile is not defined for lambda = inf")
    n = params.n
    spec = lambda_spectrum(params)
    c = (n + 1) / n
    lower = tuple(c / (1.0 + spec.exponent(j)) - 1.0 for j in range(1, n + 2))
    upper = tuple(c / (1.0 + spec.uniform(j)) - 1.0 for j in range(1, n + 2))
    return PsiProfile(n, lower, upper)


def relation_report(params: GraphParams) -> RelationReport:
    n, lam = params.n, params.lam
    if n < 2:
        raise DomainError("relations need n >= 2")
    if params.is_infinite or params.is_dirichlet:
        raise DomainError("relations need a finite lambda > 1/n")
    spec = lambda_spectrum(params)
    dual = to_dual(spec)
    w, w_hat = dual.exponent(1), dual.uniform(1)
    lam_hat = spec.uniform(1)

    # w_{n,i} = w_hat**(i-1) / w**(i-2), 1 <= i <= n+1, in log form
    log_w, log_wh = math.log(w), math.log(w_hat)
    geometric = max(
        abs(math.expm1((i - 1) * log_wh - (i - 2) * log_w - math.log(dual.exponent(i))))
        for i in range(1, n + 2)
    )
    lower_bound = w_hat * ((w_hat - 1.0) / (n - 1)) ** (1.0 / (n - 1))
    dual_lower_bound = lam_hat * ((n - 1) * lam_hat / (1.0 - lam_hat)) ** (1.0 / (n - 1))
    german_hi = w_hat / (w_hat - n + 1.0)
    german_lo = (w_hat - 1.0) / ((n - 1) * w_hat)
    laurent = w - w_hat * (w_hat - 1.0) if n == 2 else None
    return RelationReport(
        n=n,
        lam=lam,
        w=w,
        w_hat=w_hat,
        lam_hat=lam_hat,
        geometric_residual=geometric,
        lower_bound_slack=w - lower_bound,
        dual_lower_bound_slack=lam - dual_lower_bound,
        german_upper_slack=german_hi - lam_hat,
        german_lower_slack=lam_hat - german_lo,
        laurent_slack=laurent,
    )
