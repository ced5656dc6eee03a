"""Bracketed root finding for monotone scalar functions.

Every implicit equation in the package is reduced to ``f(x) = target`` with
``f`` monotone on a known interval and handed to :func:`solve_monotone`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Literal

from .errors import ConvergenceError, DomainError, NonFinite, NoSignChange

Monotonicity = Literal["increasing", "decreasing"]

DEFAULT_REL_TOL = 1e-13
MAX_ITER = 200

# bisection runs until the bracket is this narrow (relative), then secant takes over
_SAFE_WIDTH = 1e-3
# minimal secant step, in units of the local float spacing
_MIN_STEP_ULPS = 4


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    monotonicity: Monotonicity = "increasing"

    def __post_init__(self) -> None:
        if not (self.lo < self.hi):
            raise DomainError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.monotonicity not in ("increasing", "decreasing"):
            raise DomainError(f"unknown monotonicity {self.monotonicity!r}")


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int


def _evaluate(f: Callable[[float], float], x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise NonFinite(f"function returned {y} at x={x!r}")
    return y


def solve_monotone(
    f: Callable[[float], float],
    target: float,
    bracket: Bracket,
    rel_tol: float = DEFAULT_REL_TOL,
    max_iter: int = MAX_ITER,
) -> RootResult:
    """Solve ``f(x) = target`` inside a sign-changing bracket.

    Bisection narrows the bracket to a relative width of 1e-3, after which
    secant steps through the two latest iterates are tried. A secant iterate
    outside the bracket, or one that fails to halve the bracket, falls back to
    bisection. The iterate sequence does not depend on ``rel_tol``, so a
    tighter tolerance only continues the same run further.

    Returns once the bracket width is at most ``rel_tol * max(1, |x|)`` and
    ``|f(x) - target| <= rel_tol * max(1, |target|)``, or when the bracket has
    collapsed to adjacent floats.

    Raises:
        DomainError: ``rel_tol`` is not positive.
        NoSignChange: ``f - target`` does not change sign in the direction
            given by ``bracket.monotonicity``.
        NonFinite: ``f`` produced inf or nan.
        ConvergenceError: more than ``max_iter`` iterations were needed.
    """
    if not rel_tol > 0:
        raise DomainError(f"rel_tol must be positive, got {rel_tol}")
    orient = 1.0 if bracket.monotonicity == "increasing" else -1.0
    ftol = rel_tol * max(1.0, abs(target))

    lo, hi = float(bracket.lo), float(bracket.hi)
    # oriented residuals: g(lo) <= 0 <= g(hi)
    glo = orient * (_evaluate(f, lo) - target)
    ghi = orient * (_evaluate(f, hi) - target)
    if glo == 0.0:
        return RootResult(lo, 0.0, 0)
    if ghi == 0.0:
        return RootResult(hi, 0.0, 0)
    if glo > 0.0 or ghi < 0.0:
        raise NoSignChange(
            f"f - target has values {orient * glo:.6g} and {orient * ghi:.6g} at "
            f"[{lo!r}, {hi!r}]; no {bracket.monotonicity} crossing of {target!r}"
        )

    x_prev, g_prev = lo, glo
    x_last, g_last = hi, ghi
    last_was_secant = False
    width_before_last = math.inf
    iterations = 0
    while True:
        width = hi - lo
        x_best, g_best = (lo, glo) if -glo <= ghi else (hi, ghi)
        if width <= rel_tol * max(1.0, abs(x_best)) and abs(g_best) <= ftol:
            return RootResult(x_best, orient * g_best, iterations)
        mid = lo + 0.5 * width
        if not lo < mid < hi:
            return RootResult(x_best, orient * g_best, iterations)
        if iterations >= max_iter:
            raise ConvergenceError(
                f"no convergence after {max_iter} iterations; bracket [{lo!r}, {hi!r}]"
            )

        scale = max(1.0, abs(mid))
        x = mid
        secant = False
        halved = (not last_was_secant) or width <= 0.5 * width_before_last
        if width <= _SAFE_WIDTH * scale and halved and g_last != g_prev:
            candidate = x_last - g_last * (x_last - x_prev) / (g_last - g_prev)
            if lo < candidate < hi:
                step = _MIN_STEP_ULPS * math.ulp(scale)
                lower, upper = lo + step, hi - step
                if lower < upper:
                    x = min(max(candidate, lower), upper)
                    secant = True

        gx = orient * (_evaluate(f, x) - target)
        iterations += 1
        if gx == 0.0:
            return RootResult(x, 0.0, iterations)
        width_before_last = width
        last_was_secant = secant
        if gx < 0.0:
            lo, glo = x, gx
        else:
            hi, ghi = x, gx
        x_prev, g_prev = x_last, g_last
        x_last, g_last = x, gx


def bracket_scan(
    f: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    steps: int,
) -> List[Bracket]:
    """Split ``[lo, hi]`` into ``steps`` equal cells and return those where
    ``f - target`` changes sign, in increasing order.

    A grid point where ``f`` hits ``target`` exactly is reported once, as the
    right end of the cell before it (or the first cell, at ``lo``).
    """
    if not lo < hi:
        raise DomainError(f"scan needs lo < hi, got [{lo}, {hi}]")
    if steps < 2:
        raise DomainError(f"steps must be at least 2, got {steps}")
    xs = [lo + (hi - lo) * i / steps for i in range(steps)] + [hi]
    ds = [_evaluate(f, x) - target for x in xs]
    out: List[Bracket] = []
    for i in range(steps):
        d0, d1 = ds[i], ds[i + 1]
        crossing = (d0 < 0.0 < d1) or (d0 > 0.0 > d1)
        touching = (d1 == 0.0 and d0 != 0.0) or (i == 0 and d0 == 0.0 and d1 != 0.0)
        if crossing or touching:
            out.append(Bracket(xs[i], xs[i + 1], "increasing" if d1 > d0 else "decreasing"))
    return out
