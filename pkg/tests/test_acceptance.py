"""Exit criteria.  Each test prints one PASS/FAIL line (collected in the summary)."""
import itertools
import math
import random
import statistics
import time

import pytest

from rfcodes import thresholds as th
from rfcodes.rfcode import (
    brute_force_code,
    codebook,
    decode,
    enumerate_code,
    iota,
    point_list,
    recognize,
    sample_forbidden,
    degrade,
    Codeword,
    word_of,
)
from rfcodes.zeta import (
    LPolynomial,
    ah_from_mn,
    closed_points,
    convolution_holds,
    degradation_expectation,
    euler_product_series,
    jacobian_size,
    m_closed_form,
    mn_from_l,
)

from oracles import count_weierstrass_points

pytestmark = pytest.mark.slow

RHO1_TABLE = {
    4: 4.3461, 9: 1.8541, 16: 1.1606, 25: 0.8348, 49: 0.5276,
    64: 0.4440, 81: 0.3827, 121: 0.2990, 169: 0.2448, 256: 0.1919,
}


def test_1_rho1_table(report):
    t0 = time.perf_counter()
    got = dict(th.rho1_table(tuple(RHO1_TABLE)))
    elapsed = time.perf_counter() - t0
    worst = max(abs(got[q] - v) for q, v in RHO1_TABLE.items())
    ok = worst <= 1e-4 and elapsed < 5
    report("1 rho1 table reproduction", ok, f"max |err| {worst:.2e}, {elapsed:.2f}s")
    assert worst <= 1e-4
    assert elapsed < 5


def test_2_exact_code_size(report, code):
    t0 = time.perf_counter()
    sizes = {}
    for qs, h in [("2^1", 1), ("3^1", 1), ("2^2", 1), ("5^1", 1), ("5^1", 2)]:
        P = code(qs, h)
        brute = len(brute_force_code(P))
        words = [w for _, w in enumerate_code(P)]
        sizes[(P.q, h)] = (brute, len(words), len(set(words)), P.q ** (2 * h + 1))
    elapsed = time.perf_counter() - t0
    ok = all(b == n == d == e for b, n, d, e in sizes.values()) and elapsed < 30
    report("2 exact code size q^(2h+1)", ok, f"{sizes}, {elapsed:.1f}s")
    assert ok


def test_3_distance_bound(report, code):
    t0 = time.perf_counter()
    worst_slack = None
    for qs, h in [("2^1", 1), ("3^1", 1), ("5^1", 1)]:
        P = code(qs, h)
        fs = [(f, word_of(f, P)) for f in brute_force_code(P)]
        for (f1, w1), (f2, w2) in itertools.combinations(fs, 2):
            agree = sum(a == b for a, b in zip(w1, w2))
            slack = f1.degree + f2.degree - agree
            worst_slack = slack if worst_slack is None else min(worst_slack, slack)
            assert agree <= f1.degree + f2.degree, (f1, f2)
            assert P.N - agree >= P.d0
    elapsed = time.perf_counter() - t0
    ok = worst_slack >= 0 and elapsed < 60
    report("3 distance bound (agree <= h1+h2)", ok, f"min slack {worst_slack}, {elapsed:.1f}s")
    assert elapsed < 60


def test_4_decoder_completeness(report, code):
    P = code("7^1", 1)
    rng = random.Random(20240601)
    alphabet = point_list(P.field)
    words = codebook(P)
    t0 = time.perf_counter()
    trials = failures = 0
    for e in (0, 1, 2):
        for m, w in enumerate(words):
            for positions in itertools.combinations(range(P.N), e):
                for _ in range(3 if e else 1):
                    bad = list(w)
                    for i in positions:
                        bad[i] = rng.choice([s for s in alphabet if s != w[i]])
                    trials += 1
                    try:
                        f = decode(Codeword(bad, P), P, e)
                        failures += iota(f, P) != m
                    except Exception:
                        failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 300
    report("4 decoder completeness (q=7, h=1, e<=2)", ok, f"{trials} decodes, {failures} failures, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 300


def test_5_iota_bijection(report, code):
    details = []
    ok = True
    for qs, h in [("2^1", 1), ("3^1", 1), ("5^1", 1)]:
        P = code(qs, h)
        round_trip = all(iota(recognize(w, P), P) == m for m, w in enumerate_code(P))
        images = {iota(f, P) for f in brute_force_code(P)}
        injective = len(images) == P.q ** (2 * h + 1)
        ok &= round_trip and injective
        details.append(f"q={P.q}: round-trip {round_trip}, injective {injective}")
    report("5 bijection iota", ok, "; ".join(details))
    assert ok


ELLIPTIC_FIXTURES = [
    # (L-polynomial, (p, curve a-invariants a1, a2, a3, a4, a6)), expected #J
    (LPolynomial(2, 1, (1, 0, 2)), (2, dict(a3=1)), 3),       # y^2 + y = x^3
    (LPolynomial(5, 1, (1, 3, 5)), (5, dict(a4=1, a6=1)), 9),  # y^2 = x^3 + x + 1
]


def test_6_counting_identities(report):
    Ls = [LPolynomial.trivial(q) for q in (2, 3, 5)] + [L for L, _, _ in ELLIPTIC_FIXTURES]
    conv = all(convolution_holds(M := mn_from_l(L, 12), ah_from_mn(M)) for L in Ls)
    euler = all(euler_product_series(closed_points(L, 10), 10) == mn_from_l(L, 10) for L in Ls)
    closed = all(
        m_closed_form(L, n) == mn_from_l(L, 12)[n] for L in Ls for n in range(max(2 * L.genus - 1, 0), 13)
    )
    jac = []
    for L, (p, curve), expected in ELLIPTIC_FIXTURES:
        pts = count_weierstrass_points(p, 1, **curve)
        jac.append((jacobian_size(L), pts, expected))
    jac_ok = all(a == b == c for a, b, c in jac)
    ok = conv and euler and closed and jac_ok
    report("6 counting identities", ok, f"convolution {conv}, euler {euler}, closed form {closed}, #J {jac}")
    assert ok


def test_7_threshold_bounds(report):
    grid = [2 * (i + 1) / 200 for i in range(200)]
    worst_excess = -math.inf
    strict_margin = math.inf
    for q in (4, 9, 49):
        for rho in grid:
            bound = th.small_b_bound(q, rho)
            B = th.b_rho(q, rho).value
            worst_excess = max(worst_excess, B - bound)
            if rho >= th.rho0(q) + 0.05:
                strict_margin = min(strict_margin, bound - B)
    above = all(th.rho1(q) > th.rho0(q) for q in RHO1_TABLE)
    ok = worst_excess <= 1e-9 and strict_margin >= 1e-6 and above
    report("7 threshold bound properties", ok,
           f"max B - bound {worst_excess:.2e}, min strict margin {strict_margin:.2e}, rho1 > 2q/(q^2-1): {above}")
    assert ok


def test_8_degradation_expectation(report, code):
    details = []
    ok = True
    for qs, h in [("2^1", 1), ("3^1", 1)]:
        P = code(qs, h)
        rng = random.Random(8 * P.q + h)
        counts = [len(degrade(P, sample_forbidden(P, rng))) for _ in range(10_000)]
        mean = statistics.fmean(counts)
        se = statistics.stdev(counts) / math.sqrt(len(counts))
        expected = float(degradation_expectation(P.q, P.N, P.q ** (2 * h + 1)))
        z = abs(mean - expected) / se
        ok &= z <= 4
        details.append(f"q={P.q}: mean {mean:.4f} vs {expected:.4f} ({z:.2f} SE)")
    report("8 degradation expectation", ok, "; ".join(details))
    assert ok
