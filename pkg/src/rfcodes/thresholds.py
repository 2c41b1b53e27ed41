"""Numeric thresholds B(rho), B1(rho), rho1(q) and rate-bound comparisons.

Both minimisations are over a single variable ``r`` and their logarithms
are convex in ``log r``, so a ternary search in ``log r`` finds the
minimum; a coarse grid scan guards that assumption.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BracketFailure, NotASquare

TERNARY_ITERATIONS = 200
GRID_POINTS = 1000
REL_TOL = 1e-10
B1_LOWER = 1e-12
RHO1_BRACKET = (1e-6, 16.0)
RHO1_ITERATIONS = 100

#: q = q0^2 for the prime powers q0 <= 16
TABLE_Q = (4, 9, 16, 25, 49, 64, 81, 121, 169, 256)


@dataclass(frozen=True)
class ThresholdResult:
    value: float
    minimizer_r: float
    iterations: int
    tol: float


def _square_root(q: int) -> int:
    q0 = math.isqrt(q)
    if q < 4 or q0 * q0 != q:
        raise NotASquare(f"{q} is not a perfect square >= 4")
    return q0


def _minimize_log(logf: Callable[[float], float], lo: float, hi: float, check: bool) -> tuple[float, float]:
    """Minimise ``logf(u)`` for ``u`` in ``[lo, hi]``; returns ``(u, logf(u))``."""
    a, b = lo, hi
    for _ in range(TERNARY_ITERATIONS):
        m1 = a + (b - a) / 3
        m2 = b - (b - a) / 3
        if logf(m1) <= logf(m2):
            b = m2
        else:
            a = m1
    u = (a + b) / 2
    best = min((u, lo, hi), key=logf)
    val = logf(best)
    if check:
        step = (hi - lo) / (GRID_POINTS - 1)
        grid_min = min(logf(lo + i * step) for i in range(GRID_POINTS))
        if val > grid_min + REL_TOL:
            raise AssertionError(f"ternary search missed the minimum: {val} > grid {grid_min}")
    return best, val


def small_b_bound(q: float, rho: float) -> float:
    """``q^rho (q+1)/(q-1)``, the comparison value for both thresholds."""
    return q ** rho * (q + 1) / (q - 1)


def rho0(q: float) -> float:
    """``2q/(q^2-1)``: above this, B(rho) is strictly below :func:`small_b_bound`."""
    return 2 * q / (q * q - 1)


def b_objective(q: float, rho: float, r: float) -> float:
    return r ** (-rho / 2) * (1 - r) / ((1 - 1 / q) * (1 - q * r))


def b_rho(q: int, rho: float, check: bool = True) -> ThresholdResult:
    """``min r^(-rho/2) (1-r) / ((1-1/q)(1-qr))`` over ``q^-2 <= r <= q^-1.5``."""
    if q < 2 or rho <= 0:
        raise ValueError("need q >= 2 and rho > 0")
    const = -math.log1p(-1 / q)

    def logf(u):
        r = math.exp(u)
        return -rho / 2 * u + math.log1p(-r) - math.log1p(-q * r) + const

    u, val = _minimize_log(logf, -2 * math.log(q), -1.5 * math.log(q), check)
    return ThresholdResult(math.exp(val), math.exp(u), TERNARY_ITERATIONS, REL_TOL)


def _log_b1(q: int, rho: float, check: bool) -> tuple[float, float]:
    q0 = _square_root(q)
    kappa = 1 / (q0 - 1)
    # prefactor (q-1)/q; with (q+1)/q instead, rho1(4) moves from 4.3461 to 4.8374
    const = math.log((q - 1) / q) + kappa * math.log(q)

    def logf(u):
        return -rho / 2 * u + math.log1p(math.exp(u)) + 4 * kappa * math.log1p(q0 * math.exp(u / 2)) + const

    return _minimize_log(logf, math.log(B1_LOWER), -0.5 * math.log(q), check)


def b1_rho(q: int, rho: float, check: bool = True) -> ThresholdResult:
    """``((q-1)/q) q^k min r^(-rho/2) (1+r)(1+sqrt(qr))^(4k)`` over ``r <= q^-1/2``, ``k = 1/(sqrt q - 1)``."""
    if rho <= 0:
        raise ValueError("rho must be positive")
    u, val = _log_b1(q, rho, check)
    return ThresholdResult(math.exp(val), math.exp(u), TERNARY_ITERATIONS, REL_TOL)


def rho1(q: int) -> float:
    """The unique ``rho > 0`` with ``B1(rho) = q^rho (q+1)/(q-1)``, by bisection."""
    _square_root(q)

    def gap(rho):
        return _log_b1(q, rho, False)[1] - math.log(small_b_bound(q, rho))

    lo, hi = RHO1_BRACKET
    scan = [gap(lo + (hi - lo) * i / 64) for i in range(65)]
    changes = sum((x > 0) != (y > 0) for x, y in zip(scan, scan[1:]))
    if not (scan[0] > 0 > scan[-1]) or changes != 1:
        raise BracketFailure(f"no single sign change of B1 - bound on [{lo}, {hi}] for q={q}")
    for _ in range(RHO1_ITERATIONS):
        mid = (lo + hi) / 2
        if gap(mid) > 0:
            lo = mid
        else:
            hi = mid
    root = (lo + hi) / 2
    _log_b1(q, root, True)
    if root <= rho0(q):
        raise BracketFailure(f"rho1({q}) = {root} does not exceed 2q/(q^2-1)")
    return root


def rho1_table(qs: Sequence[int] = TABLE_Q) -> list[tuple[int, float]]:
    return [(q, rho1(q)) for q in qs]


# ---------------------------------------------------------------------------
# rate bounds

def q_ary_entropy(delta: float, Q: int) -> float:
    """``H_Q(d) = d log_Q(Q-1) - d log_Q d - (1-d) log_Q(1-d)``."""
    if delta <= 0:
        return 0.0
    if delta >= 1:
        return math.log(Q - 1, Q)
    return (delta * math.log(Q - 1) - delta * math.log(delta) - (1 - delta) * math.log1p(-delta)) / math.log(Q)


def gv_rate(delta: float, Q: int) -> float:
    """Gilbert-Varshamov rate ``1 - H_Q(delta)``, zero past ``delta = 1 - 1/Q``."""
    if delta >= 1 - 1 / Q:
        return 0.0
    return 1 - q_ary_entropy(delta, Q)


@dataclass(frozen=True)
class RateRow:
    delta: float
    goppa: float
    goppa_q1: float
    new_rate: float
    gv: float


@dataclass(frozen=True)
class RateBounds:
    q: int
    q0: int
    goppa_rhs: float
    extrapolated_rhs: float
    new_lhs_slope: float
    new_rhs_gain: float
    crossover_1mR: float
    dv_ratio: float
    rows: tuple[RateRow, ...] = field(default=())

    def gv(self, delta: float) -> float:
        return gv_rate(delta, self.q + 1)

    def to_csv(self) -> str:
        lines = ["delta,goppa,goppa_q1,new_rate,gv"]
        for r in self.rows:
            lines.append(",".join(f"{x:.6g}" for x in (r.delta, r.goppa, r.goppa_q1, r.new_rate, r.gv)))
        return "\n".join(lines) + "\n"


def rate_bounds(q: int, deltas: Sequence[float]) -> RateBounds:
    """Per-delta comparison of Goppa, extrapolated (q+1)-ary Goppa, the new codes and GV.

    ``new_rate`` solves ``(log(q+1)/log q) R + delta = goppa + log((q+1)/q)/log q``
    for R, floored at zero.
    """
    q0 = _square_root(q)
    goppa = 1 - 1 / (q0 - 1)
    extrapolated = 1 - 1 / (math.sqrt(q + 1) - 1)
    slope = math.log(q + 1) / math.log(q)
    gain = math.log((q + 1) / q) / math.log(q)
    crossover = (1 / (math.sqrt(q) - 1) - 1 / (math.sqrt(q + 1) - 1)) / gain
    rows = []
    for d in deltas:
        if not 0 < d < 1:
            raise ValueError(f"delta {d} outside (0, 1)")
        new_rate = max(0.0, (goppa + gain - d) / slope)
        rows.append(RateRow(d, goppa, extrapolated, new_rate, gv_rate(d, q + 1)))
    return RateBounds(q, q0, goppa, extrapolated, slope, gain, crossover, math.sqrt(q) - 1, tuple(rows))


def parse_grid(text: str) -> list[float]:
    """``a:b:step`` inclusive of ``b`` (up to rounding), e.g. ``0.1:0.9:0.1``."""
    a, b, step = (float(x) for x in text.split(":"))
    if step <= 0:
        raise ValueError("grid step must be positive")
    n = int(math.floor((b - a) / step + 1e-9))
    return [round(a + i * step, 12) for i in range(n + 1)]
