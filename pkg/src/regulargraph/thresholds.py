"""Where the exponents ``lambda_{n,j}(lam)`` cross the Dirichlet value ``1/n``.

Setting ``lambda_{n,j} = 1/n`` at ``lam = theta**(j-1) / n`` turns the
defining equation of the spectrum into ``chi_{n,j}(theta) = n`` with

    chi_{n,j}(theta) = theta**(j-2) + theta**(j-3) + ... + theta**(j-1-n).

``chi`` is convex on ``theta > 0`` and equals ``n`` at ``theta = 1``, so a
second crossing beyond 1 exists exactly when ``chi'(1) < 0``, i.e. when
``n >= 2 j - 2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, NotRepresentable, NumericalError
from .numerics import bracket_scan, solve_monotone
from .spectra import GraphParams, _check_n, lambda_spectrum

SIGN_DEAD_ZONE = 1e-11
# start of the outward search for the crossing beyond theta = 1
_THETA_OFFSET = 1e-6
_SCAN_STEPS = 64


class Classification(str, enum.Enum):
    ALWAYS_ABOVE = "always_above"
    ALWAYS_BELOW = "always_below"
    CROSSES_ONCE = "crosses_once"
    IDENTICALLY_DIRICHLET = "identically_dirichlet"


@dataclass(frozen=True)
class ThresholdResult:
    n: int
    j: int
    classification: Classification
    tilde_lambda: Optional[float] = None
    theta_root: Optional[float] = None


@dataclass(frozen=True)
class SchmidtInterval:
    """Open interval ``(lo, hi)`` of parameters with
    ``lambda_{n,T+1} > 1/n > lambda_{n,T+2}``; ``hi`` may be ``inf``.
    """

    n: int
    T: int
    lo: float
    hi: float

    def contains(self, lam: float) -> bool:
        return self.lo < lam < self.hi

    def sample(self) -> float:
        """Midpoint, or ``2 * lo`` when the interval is unbounded."""
        if math.isinf(self.hi):
            return 2.0 * self.lo
        return 0.5 * (self.lo + self.hi)


def _check_chi_index(n: int, j: int) -> None:
    _check_n(n)
    if not 2 <= j <= n:
        raise DomainError(f"chi_(n,j) needs 2 <= j <= n, got n={n}, j={j}")


def chi(n: int, j: int, theta: float) -> float:
    _check_chi_index(n, j)
    if not theta > 0:
        raise DomainError(f"theta must be positive, got {theta!r}")
    return math.fsum(theta ** (j - 1 - k) for k in range(1, n + 1))


def chi_prime_at_one(n: int, j: int) -> float:
    """``n j - (n**2 + 3 n) / 2``; negative iff ``j < (n + 3) / 2``."""
    _check_chi_index(n, j)
    return n * j - (n * n + 3 * n) / 2


def _theta_root(n: int, j: int) -> float:
    """The unique ``theta > 1`` with ``chi_{n,j}(theta) = n``."""
    f = lambda t: chi(n, j, t)
    d = _THETA_OFFSET
    while f(1.0 + d) <= n:
        d *= 2.0
        if d > 1e6:
            raise NumericalError(f"chi_({n},{j}) never exceeds n beyond 1")
    brackets = bracket_scan(f, float(n), 1.0 + 1e-9, 1.0 + d, _SCAN_STEPS)
    if len(brackets) != 1:
        raise NumericalError(
            f"expected one crossing of chi_({n},{j}) = n beyond 1, found {len(brackets)}"
        )
    return solve_monotone(f, float(n), brackets[0]).root


def classify(n: int, j: int) -> ThresholdResult:
    """Sign behaviour of ``lambda_{n,j}(lam) - 1/n`` for ``lam`` in ``(1/n, inf]``."""
    _check_n(n)
    if isinstance(j, bool) or not isinstance(j, int) or not 1 <= j <= n + 2:
        raise DomainError(f"j must be an integer in [1, {n + 2}], got {j!r}")
    if n == 1 and j == 2:
        # lambda_{1,2} = 1 for every lam
        return ThresholdResult(n, j, Classification.IDENTICALLY_DIRICHLET)
    if j <= 2:
        return ThresholdResult(n, j, Classification.ALWAYS_ABOVE)
    if j >= n + 1 or n <= 2 * j - 3:
        return ThresholdResult(n, j, Classification.ALWAYS_BELOW)
    theta = _theta_root(n, j)
    tilde = theta ** (j - 1) / n
    return ThresholdResult(n, j, Classification.CROSSES_ONCE, tilde, theta)


def sign_at(n: int, j: int, lam: float) -> int:
    """Sign of ``lambda_{n,j}(lam) - 1/n``; differences below 1e-11 count as 0."""
    params = GraphParams(n, lam)
    if not 1 <= j <= n + 2:
        raise DomainError(f"j must lie in [1, {n + 2}], got {j}")
    diff = lambda_spectrum(params).exponent(j) - 1.0 / n
    if abs(diff) < SIGN_DEAD_ZONE:
        return 0
    return 1 if diff > 0 else -1


def schmidt_interval(n: int, T: int) -> SchmidtInterval:
    """Maximal parameter interval on which the regular graph has Schmidt's
    property for ``(n, T)``, i.e. ``lambda_{n,T+1} > 1/n > lambda_{n,T+2}``.

    The upper end is where ``lambda_{n,T+1}`` drops to ``1/n`` (``inf`` for
    ``T = 1``); the lower end is where ``lambda_{n,T+2}`` does, or ``1/n``
    if it never rises above.

    Raises:
        NotRepresentable: ``T > floor(n/2)``. Then ``lambda_{n,T+1} < 1/n``
            for all ``lam > 1/n`` and no such interval exists.
    """
    _check_n(n)
    if isinstance(T, bool) or not isinstance(T, int) or T < 1:
        raise DomainError(f"T must be a positive integer, got {T!r}")
    if T > n // 2:
        raise NotRepresentable(
            f"T={T} exceeds floor(n/2)={n // 2}: lambda_(n,T+1) < 1/n for every "
            f"lambda > 1/n, so no regular graph in dimension {n} has Schmidt's property for T={T}"
        )
    upper = classify(n, T + 1)
    lower = classify(n, T + 2)
    hi = upper.tilde_lambda if upper.classification is Classification.CROSSES_ONCE else math.inf
    lo = lower.tilde_lambda if lower.classification is Classification.CROSSES_ONCE else 1.0 / n
    interval = SchmidtInterval(n, T, lo, hi)

    spec = lambda_spectrum(GraphParams(n, interval.sample()))
    if not spec.exponent(T + 1) > 1.0 / n > spec.exponent(T + 2):
        raise NumericalError(f"interval ({lo!r}, {hi!r}) fails the check at its sample point")
    return interval
