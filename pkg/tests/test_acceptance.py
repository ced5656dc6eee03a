"""Acceptance criteria, one test per criterion.

Each criterion is an evaluator returning ``(passed, detail)``. The test
asserts on it, and a one-line PASS/FAIL summary per criterion is printed at
the end of the pytest run (see ``conftest.py``). Running this file directly
prints the same lines without pytest.
"""

import math
import random
import time

import pytest

from regulargraph import bounds, spectra, thresholds
from regulargraph.errors import NotRepresentable
from regulargraph.spectra import GraphParams
from regulargraph.thresholds import Classification

RESULTS = {}

# tolerances as stated in the criteria
REPORTED_ATOL = 5e-4
GAP_ATOL = 5e-4
RUNTIME_S = 1.0
CLOSED_FORM_ATOL = 1e-9
TAU_ATOL = 5e-5
DELTA_ATOL = 5e-5
THETA_ATOL = 5e-4
IDENTITY_RTOL = 1e-9
THRESHOLD_ATOL = 1e-9
LIMIT_ATOL = 1e-2
LARGE_LAMBDA_ATOL = 0.01
GLUECK_ATOL = 0.05


def _lambda_grid():
    for n in range(1, 31):
        for k in range(51):
            yield GraphParams(n, (1 + k / 10) / n)


def _random_params(count=300, seed=20260101):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 30)
        yield GraphParams(n, (1 + 10 ** rng.uniform(-6, 4)) / n)


def criterion_1():
    parts, ok = [], True
    for n, value in ((4, 6.2875), (20, 37.8787), (50, 97.7996)):
        t0 = time.perf_counter()
        got = bounds.conditional_bound(n)
        dt = time.perf_counter() - t0
        good = abs(got - value) <= REPORTED_ATOL and dt < RUNTIME_S
        ok &= good
        parts.append(f"c({n})={got:.4f}")
    gap = 2 * 50 - bounds.conditional_bound(50)
    gap_ok = abs(gap - 0.2004) <= GAP_ATOL
    ok &= gap_ok
    parts.append(f"2*50-c(50)={gap:.4f} vs 0.2004{'' if gap_ok else ' MISMATCH'}")
    return ok, "; ".join(parts)


def criterion_2():
    e2 = abs(bounds.conditional_bound(2) - (3 + math.sqrt(5)) / 2)
    e3 = abs(bounds.conditional_bound(3) - (3 + math.sqrt(2)))
    return max(e2, e3) <= CLOSED_FORM_ATOL, f"errors n=2 {e2:.1e}, n=3 {e3:.1e}"


def criterion_3():
    c = bounds.tau_delta()
    ok = abs(c.tau - 0.5693) <= TAU_ATOL
    ok &= abs(c.delta - 2.2564) <= DELTA_ATOL
    ok &= abs(2 / c.tau - 3.5128) <= THETA_ATOL
    return ok, f"tau={c.tau:.5f} Delta={c.delta:.5f} 2/tau={2 / c.tau:.5f}"


def _identity_residuals(p):
    n, lam = p.n, p.lam
    lf = lambda x: (n + 1) * math.log1p(x) - math.log(x)
    spec = spectra.lambda_spectrum(p)
    x = spectra.last_minimum(p)
    total = abs(math.expm1(lf(lam) - lf(x)))
    t = spectra.vartheta(p)
    uniform_poly = abs((t - 1) + t / lam - t * (t / lam) ** n)
    per_index = 0.0
    for j in range(2, n + 3):
        e = (n + 1) / (j - 1)
        y = math.exp((1 - e) * math.log(lam) + e * math.log(spec.exponent(j)))
        per_index = max(per_index, abs(math.expm1(lf(lam) - lf(y))))
    v = spec.values
    ratios = [v[i] / v[i + 1] for i in range(n + 1)]
    quot = max(abs(r / ratios[0] - 1) for r in ratios)
    return total, uniform_poly, per_index, quot


def criterion_4():
    worst = [0.0, 0.0, 0.0, 0.0, 0.0]
    params = list(_lambda_grid()) + list(_random_params())
    for p in params:
        for i, r in enumerate(_identity_residuals(p)):
            worst[i] = max(worst[i], r)
    rng = random.Random(7)
    w_points = [(n, n * 100 ** (i / 59)) for n in range(1, 31) for i in range(60)]
    w_points += [(rng.randint(1, 30), 0) for _ in range(300)]
    for n, w in w_points:
        w = w or n * 100 ** rng.random()
        f = spectra.phi(n, w)
        worst[4] = max(worst[4], abs(w - f + 1 - (w / f) ** n) / max(1.0, w))
    names = ("last-minimum", "uniform-poly", "per-index", "quotient", "dual-eq")
    ok = all(r <= IDENTITY_RTOL for r in worst)
    return ok, ", ".join(f"{k} {r:.1e}" for k, r in zip(names, worst)) + f" over {len(params)} graphs"


def criterion_5():
    bad = []
    for n in range(1, 13):
        for j in range(1, n + 3):
            r = thresholds.classify(n, j)
            if n == 1 and j == 2:
                expected = Classification.IDENTICALLY_DIRICHLET
            elif j <= 2:
                expected = Classification.ALWAYS_ABOVE
            elif 3 <= j <= n and n >= 2 * j - 2:
                expected = Classification.CROSSES_ONCE
            else:
                expected = Classification.ALWAYS_BELOW
            if r.classification is not expected:
                bad.append(f"({n},{j}) class")
            if r.classification is Classification.CROSSES_ONCE:
                v = spectra.lambda_spectrum(GraphParams(n, r.tilde_lambda)).exponent(j)
                if abs(v - 1 / n) > THRESHOLD_ATOL:
                    bad.append(f"({n},{j}) root")
                if not 1 / n < r.tilde_lambda < n:
                    bad.append(f"({n},{j}) range")
    crosses = lambda n: any(
        thresholds.classify(n, j).classification is Classification.CROSSES_ONCE for j in range(1, n + 3)
    )
    if crosses(2) or crosses(3) or not crosses(4):
        bad.append("n<=3 pattern")
    return not bad, "all (n, j) with n <= 12 consistent" if not bad else ", ".join(bad)


def criterion_6():
    bad = []
    for n in (4, 6, 8, 10):
        for T in range(1, n // 2 + 1):
            iv = thresholds.schmidt_interval(n, T)
            mid = iv.sample()
            spec = spectra.lambda_spectrum(GraphParams(n, mid))
            if not spec.exponent(T + 1) > 1 / n > spec.exponent(T + 2):
                bad.append(f"({n},{T})")
        try:
            thresholds.schmidt_interval(n, n // 2 + 1)
            bad.append(f"({n},{n // 2 + 1}) accepted")
        except NotRepresentable:
            pass
    return not bad, "midpoints hold, T = n//2 + 1 rejected" if not bad else ", ".join(bad)


def criterion_7():
    bad = []
    # decrease in n; once an entry reaches its limit only rounding noise remains
    for lam in (0.05, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0):
        for j in range(2, 8):
            n0 = max(math.ceil(1 / lam - 1e-12), j - 1, 1)
            limit = lam / (1 + lam) ** (j - 1)
            seq = [spectra.lambda_spectrum(GraphParams(n, lam)).exponent(j) for n in range(n0, 31)]
            for a, b in zip(seq, seq[1:]):
                strict = a - limit > 1e-12 * limit
                if (strict and not b < a) or (not strict and not b <= a * (1 + 1e-14)):
                    bad.append(f"monotone lam={lam} j={j}")
                    break
    worst_k = 0.0
    for lam in (0.5, 1.0, 2.0):
        for j in (2, 3, 4):
            limit = lam / (1 + lam) ** (j - 1)
            n0 = max(math.ceil(1 / lam - 1e-12), j - 1)
            gaps = [abs(spectra.lambda_spectrum(GraphParams(n, lam)).exponent(j) - limit) for n in range(n0, 201)]
            worst_k = max(worst_k, gaps[-1])
            if any(b > a + 1e-15 for a, b in zip(gaps, gaps[1:])):
                bad.append(f"limit not monotone lam={lam} j={j}")
    if worst_k >= LIMIT_ATOL:
        bad.append(f"limit gap {worst_k:.2e}")
    eq = max(abs(1e4 + 1 - 1e4 / spectra.vartheta(GraphParams(n, 1e4))) for n in range(2, 11))
    if eq >= LARGE_LAMBDA_ATOL:
        bad.append(f"large-lambda gap {eq:.2e}")
    g = abs(bounds.glueck_bound(500) - 999 + math.log(2))
    if g >= GLUECK_ATOL:
        bad.append(f"power-bound asymptote {g:.3f}")
    if not bounds.mit_check(9) < 0 or not all(bounds.mit_check(n) > 0 for n in range(10, 1001)):
        bad.append("H sign pattern")
    detail = f"limit gap {worst_k:.1e}, large-lambda gap {eq:.1e}, power-bound gap {g:.3f}"
    return not bad, detail if not bad else ", ".join(bad)


CRITERIA = {
    1: ("reported conditional bounds", criterion_1),
    2: ("closed forms n = 2, 3", criterion_2),
    3: ("constants tau, Delta, 2/tau", criterion_3),
    4: ("identity suite", criterion_4),
    5: ("threshold case split", criterion_5),
    6: ("Schmidt intervals", criterion_6),
    7: ("asymptotics", criterion_7),
}
EXCLUDED = {8: "realizing vectors and the underlying conjectures (not computable)"}


def _evaluate(k):
    title, fn = CRITERIA[k]
    try:
        ok, detail = fn()
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    RESULTS[k] = (title, ok, detail)
    return ok, detail


def summary_lines():
    lines = []
    for k in sorted(CRITERIA):
        if k in RESULTS:
            title, ok, detail = RESULTS[k]
            lines.append(f"criterion {k} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    for k, why in EXCLUDED.items():
        lines.append(f"criterion {k} EXCLUDED  {why}")
    return lines


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, detail = _evaluate(k)
    assert ok, detail


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        _evaluate(k)
    print("\n".join(summary_lines()))
