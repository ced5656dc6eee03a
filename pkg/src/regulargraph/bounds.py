"""Upper bounds for the uniform exponents ``hat w_n`` and ``hat w*_n``.

Conditional bounds come from intersecting an increasing bound in terms of
``w_n`` (the regular-graph function ``phi_n``, or the weaker power bound
``n**(1/(n+1)) * w**(n/(n+1))``) with the decreasing transference bound
``n w / (w - n + 1)``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .errors import DomainError, NumericalError
from .numerics import Bracket, solve_monotone
from .spectra import _check_n, _check_w, phi

_LEFT_OFFSET = 1e-9


@dataclass(frozen=True)
class TauDelta:
    tau: float
    delta: float
    theta: float


@dataclass(frozen=True)
class BoundReport:
    """Bounds at dimension ``n``.

    ``conditional_star`` bounds ``hat w*_n`` assuming the Schmidt-Summerer
    conjecture. ``conditional_w`` bounds ``hat w_n`` under the same assumption
    without any side condition; it equals ``conditional_star`` when that is at
    least ``2n - 2``. ``caveat`` is set when the sharper ``conditional_star``
    applies to ``hat w_n`` only for ``zeta`` outside the exceptional case
    ``w_{n-2} < w_{n-1} = w_n``.

    When a specific ``w = w_n`` is supplied, ``pointwise_star`` is
    ``min(n w / (w - n + 1), phi_n(w))`` and ``pointwise_w`` is
    ``min(max(2n - 2, n w / (w - n + 1)), phi_n(w))``.
    """

    n: int
    unconditional: float
    conditional_star: float
    conditional_w: float
    asymptotic_gap: float
    caveat: bool
    crossing_w: float
    w: Optional[float] = None
    pointwise_star: Optional[float] = None
    pointwise_w: Optional[float] = None


def _check_n2(n: int) -> int:
    _check_n(n)
    if n < 2:
        raise DomainError(f"bounds need n >= 2, got {n}")
    return n


def transference_bound(n: int, w: float) -> float:
    """``n w / (w - n + 1)``, decreasing in ``w`` on ``[n, inf)``."""
    if math.isinf(w):
        return float(n)
    return n * w / (w - n + 1.0)


def unconditional_bound(n: int) -> float:
    _check_n2(n)
    if n == 3:
        return 3.0 + math.sqrt(2.0)
    return n - 0.5 + math.sqrt(n * n - 2 * n + 1.25)


def _crossing(n: int, log_increasing: Callable[[float], float]) -> Tuple[float, float]:
    """Intersect an increasing bound (given by its log) with the transference bound.

    Returns ``(w, value)`` at the crossing. Works with log-ratios so the
    residual stays relative for large ``n``.
    """
    diff = lambda w: log_increasing(w) - math.log(transference_bound(n, w))
    lo = n + _LEFT_OFFSET * max(1.0, n)
    hi = 4.0 * n
    while diff(hi) <= 0.0:
        hi *= 2.0
        if hi > 1e300:
            raise NumericalError(f"no crossing found for n={n}")
    w = solve_monotone(diff, 0.0, Bracket(lo, hi, "increasing")).root
    return w, math.exp(log_increasing(w))


def conditional_crossing(n: int) -> Tuple[float, float]:
    """``(w~, phi_n(w~))`` where ``phi_n(w~) = n w~ / (w~ - n + 1)``."""
    _check_n2(n)
    return _crossing(n, lambda w: math.log(phi(n, w)))


def conditional_bound(n: int) -> float:
    """Upper bound for ``hat w*_n`` implied by ``hat w_n <= phi_n(w_n)``."""
    return conditional_crossing(n)[1]


def glueck_bound(n: int) -> float:
    """Bound obtained when only ``hat w_n <= n**(1/(n+1)) w_n**(n/(n+1))`` is assumed.

    Tends to ``2n - 1 - log 2`` as ``n`` grows.
    """
    _check_n2(n)
    log_n = math.log(n)
    return _crossing(n, lambda w: (log_n + n * math.log(w)) / (n + 1))[1]


@functools.lru_cache(maxsize=None)
def tau_delta() -> TauDelta:
    """``tau`` solves ``y e**(1/y) = 2 sqrt(e)`` on ``(0, 1)``;
    ``delta = log(2/tau) + 1`` and ``theta = 2/tau``.
    """
    # log form of y * exp(1/y), decreasing on (0, 1)
    target = math.log(2.0) + 0.5
    root = solve_monotone(
        lambda y: math.log(y) + 1.0 / y, target, Bracket(0.01, 1.0, "decreasing")
    ).root
    return TauDelta(tau=root, delta=math.log(2.0 / root) + 1.0, theta=2.0 / root)


def mit_check(n: int) -> float:
    """``2/(n-2) + 3 - ((n-1)/(n-2))**n``.

    This is ``w - y + 1 - (w/y)**n`` at ``w = 2(n-1)**2/(n-2)``, ``y = 2n - 2``;
    a positive value means ``phi_n(w) < 2n - 2``.
    """
    _check_n(n)
    if n < 3:
        raise DomainError(f"needs n >= 3, got {n}")
    return 2.0 / (n - 2) + 3.0 - math.exp(n * math.log1p(1.0 / (n - 2)))


def bound_report(n: int, w: Optional[float] = None) -> BoundReport:
    _check_n2(n)
    unconditional = unconditional_bound(n)
    w_cross, star = conditional_crossing(n)
    floor = 2.0 * n - 2.0
    report = dict(
        n=n,
        unconditional=unconditional,
        conditional_star=star,
        conditional_w=max(floor, star),
        asymptotic_gap=2.0 * n - star,
        caveat=star < floor,
        crossing_w=w_cross,
    )
    if w is not None:
        w = _check_w(n, w)
        t = transference_bound(n, w)
        p = phi(n, w)
        report.update(w=w, pointwise_star=min(t, p), pointwise_w=min(max(floor, t), p))
    return BoundReport(**report)
