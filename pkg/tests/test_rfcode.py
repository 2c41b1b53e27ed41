import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from rfcodes.errors import (
    DegreeTooLarge,
    IndexOutOfRange,
    LengthMismatch,
    MessageOutOfRange,
    NoSolution,
    NotAFunction,
    TooLarge,
    VerificationFailed,
)
from rfcodes.gf import Polynomial, field_make
from rfcodes.rfcode import (
    INF,
    CodeParams,
    Codeword,
    RationalFunction,
    brute_force_code,
    codebook,
    constant_function,
    decode,
    degrade,
    encode,
    finite,
    function_of_message,
    hamming_distance,
    iota,
    point_list,
    recognize,
    rf_evaluate,
    rf_normalize,
    solution_space,
    word_of,
)

from oracles import nearest


def P(F, *cs):
    return Polynomial(F, cs)


def W(text, params):
    return Codeword.parse(text, params)


def test_point_list_order():
    assert [s.token() for s in point_list(field_make(3, 1))] == ["0", "1", "2", "inf"]


def test_params_basics(code):
    C = code("5^1", 2)
    assert (C.q, C.N, C.d0) == (5, 6, 2)
    assert CodeParams.parse("q=5^1 h=2") == C
    with pytest.raises(ValueError):
        code("5^1", 3)


def test_rf_normalize_examples():
    F = field_make(5, 1)
    f = rf_normalize(P(F, 0, 2), P(F, 0, 0, 4))  # 2x / 4x^2 = 3/x
    assert f.a == P(F, 3) and f.b == P(F, 0, 1)
    assert str(f) == "3/x"
    with pytest.raises(NotAFunction):
        rf_normalize(Polynomial.zero(F), Polynomial.zero(F))
    with pytest.raises(NotAFunction):
        rf_normalize(P(F, 1), Polynomial.zero(F))


def test_rational_function_invariants():
    F = field_make(3, 1)
    with pytest.raises(ValueError):
        RationalFunction(P(F, 1), P(F, 0, 2))
    with pytest.raises(ValueError):
        RationalFunction(P(F, 0, 1), P(F, 0, 1))
    assert RationalFunction(P(F, 1, 1), P(F, 0, 1)).degree == 1
    assert constant_function(F, 0).degree == 0


def test_rf_evaluate_examples():
    F = field_make(5, 1)
    inv_x = RationalFunction(P(F, 1), P(F, 0, 1))
    assert rf_evaluate(inv_x, finite(0)) == INF
    assert rf_evaluate(inv_x, finite(2)) == finite(3)
    assert rf_evaluate(inv_x, INF) == finite(0)
    x = RationalFunction(P(F, 0, 1), P(F, 1))
    assert rf_evaluate(x, INF) == INF
    lin = RationalFunction(P(F, 1, 2), P(F, 1, 1))  # (2x+1)/(x+1) at inf is 2
    assert rf_evaluate(lin, INF) == finite(2)


def test_encode_example(code):
    assert str(encode(2, code("2^1", 1))) == "0 1 inf"


def test_iota_message_range(code):
    C = code("2^1", 1)
    with pytest.raises(MessageOutOfRange):
        encode(8, C)
    with pytest.raises(MessageOutOfRange):
        function_of_message(-1, C)


def test_iota_degree_check(code):
    F = field_make(5, 1)
    f = RationalFunction(P(F, 0, 0, 1), P(F, 1))
    with pytest.raises(DegreeTooLarge):
        iota(f, code("5^1", 1))


def test_recognize_examples(code):
    C = code("2^1", 1)
    assert recognize(W("0 1 inf", C), C) is not None
    assert iota(recognize(W("0 1 inf", C), C), C) == 2
    # (1, 1, inf): a degree-1 function taking 1 twice is constant
    assert recognize(W("1 1 inf", C), C) is None


def test_decode_example(code):
    C = code("5^1", 1)
    f = decode(W("inf 0 3 2 4 0", C), C, 1)
    assert str(f) == "1/x"
    assert iota(f, C) == 104


def test_decode_rejects_bad_e(code):
    C = code("5^1", 1)
    with pytest.raises(ValueError):
        decode(W("inf 0 3 2 4 0", C), C, 2)
    with pytest.raises(ValueError):
        decode(W("inf 0 3 2 4 0", C), C, -1)


def test_decode_no_solution_and_verification(code):
    C = code("7^1", 1)
    w = list(encode(0, C))
    # too many errors: either there is no solution or the candidate fails verification
    far = [finite(0), finite(1), INF, finite(0), finite(1), INF, finite(3), finite(5)]
    try:
        f = decode(Codeword(far, C), C, 1)
    except (NoSolution, VerificationFailed):
        pass
    else:
        assert hamming_distance(word_of(f, C), Codeword(far, C)) <= 1
    assert len(w) == 8


def test_hamming_examples(code):
    C = code("3^1", 1)
    a, b = W("0 1 2 inf", C), W("0 2 2 0", C)
    assert hamming_distance(a, b) == 2
    assert hamming_distance(a, a) == 0
    with pytest.raises(LengthMismatch):
        hamming_distance(a, (finite(0), INF))


def test_codeword_parse_errors(code):
    C = code("3^1", 1)
    with pytest.raises(LengthMismatch):
        W("0 1 2", C)
    with pytest.raises(IndexOutOfRange):
        W("0 1 3 inf", C)


def test_brute_force_q2_lists_eight_functions(code):
    C = code("2^1", 1)
    got = {str(f) for f in brute_force_code(C)}
    assert got == {"0", "1", "x", "x + 1", "1/x", "1/(x + 1)", "x/(x + 1)", "(x + 1)/x"}
    assert len(codebook(C)) == 8


def test_brute_force_limit(code):
    with pytest.raises(TooLarge):
        brute_force_code(code("7^2", 2))


def test_degrade_all_infinity_forbidden(code):
    C = code("2^1", 1)
    survivors = degrade(C, [INF] * 3)
    # only the constants 0 and 1 never take the value infinity
    assert sorted(str(w) for w in survivors) == ["0 0 0", "1 1 1"]
    with pytest.raises(LengthMismatch):
        degrade(C, [INF] * 2)


def test_degrade_is_reproducible(code):
    C = code("3^1", 1)
    assert degrade(C, rng=7) == degrade(C, rng=random.Random(7))


def test_scalar_action_commutes_with_encoding(code):
    # multiplying a function by theta multiplies its message by theta (embedded)
    C = code("5^1", 1)
    ext = C.messages.ext
    for m in range(0, C.messages.size, 7):
        f = function_of_message(m, C)
        for theta in range(1, 5):
            g = rf_normalize(f.a.scale(theta), f.b)
            assert iota(g, C) == ext.ext.mul(ext.embed(theta), m)


@pytest.mark.parametrize("q_spec,h", [("5^1", 1), ("5^1", 2), ("2^2", 1), ("7^1", 2)])
def test_solution_space_dimension(code, q_spec, h):
    C = code(q_spec, h)
    rng = random.Random(1)
    for m in rng.sample(range(C.messages.size), 20):
        f = function_of_message(m, C)
        assert len(solution_space(word_of(f, C), C, h)) == h - f.degree + 1


@pytest.mark.parametrize("q_spec,h", [("2^2", 1), ("5^1", 2), ("3^2", 2)])
def test_round_trip(code, q_spec, h):
    C = code(q_spec, h)
    rng = random.Random(2)
    ms = range(C.messages.size) if C.messages.size <= 4096 else rng.sample(range(C.messages.size), 300)
    for m in ms:
        w = encode(m, C)
        f = recognize(w, C)
        assert f is not None and f.degree <= h and iota(f, C) == m


def test_codewords_distinct_and_distance(code):
    C = code("2^2", 1)
    words = codebook(C)
    assert len(set(words)) == 4 ** 3
    assert min(hamming_distance(u, v) for u, v in itertools.combinations(words, 2)) >= C.d0


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from(["0", "1", "2", "3", "4", "5", "6", "inf"]), min_size=8, max_size=8),
       st.integers(0, 2))
def test_decode_matches_nearest_oracle(tokens, e):
    C = CodeParams(field_make(7, 1), 1)
    words = codebook(C)
    w = Codeword.parse(" ".join(tokens), C)
    d, idx = nearest(words, w)
    if d <= e:
        f = decode(w, C, e)
        assert idx == [iota(f, C)]
    else:
        with pytest.raises((NoSolution, VerificationFailed)):
            decode(w, C, e)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5 ** 5 - 1), st.data())
def test_decode_corrects_random_errors(m, data):
    C = CodeParams(field_make(5, 1), 2)
    e = 0  # 2(h+e) < 6 forces e = 0 at h = 2
    w = encode(m, C)
    assert iota(decode(w, C, e), C) == m
    C1 = CodeParams(field_make(5, 1), 1)
    m1 = m % 125
    bad = list(encode(m1, C1))
    i = data.draw(st.integers(0, 5))
    bad[i] = data.draw(st.sampled_from([s for s in point_list(C1.field) if s != bad[i]]))
    assert iota(decode(Codeword(bad, C1), C1, 1), C1) == m1
