import itertools
import random

import pytest

from rmgb.decoder import (
    CLEAN,
    CORRECTED_LOW,
    CORRECTED_OMEGA,
    FAILURE,
    decode,
    decode_m2,
    hat_set,
    hat_symdiff,
    ml_decode_bruteforce,
    random_error,
    syndrome,
)
from rmgb.polyring import Poly, parse_poly
from rmgb.rmcode import (
    CodeParams,
    Word,
    codewords,
    encode,
    poly_to_word,
    random_message,
    word_to_poly,
)

P32 = CodeParams(3, 2)


def test_syndrome_golden():
    syn = syndrome(Word.from_string("10100010"), P32)
    assert syn.remainder == parse_poly("x2 + x3 + 1", 3)
    assert syn.weight == 3


def test_syndrome_of_codewords_is_zero():
    rng = random.Random(17)
    for _ in range(20):
        c = encode(random_message(P32, rng), P32)
        assert syndrome(c, P32).weight == 0


def test_syndrome_unit_vector():
    # position 7 carries the monomial x3, which no leading term divides
    w = Word.zeros(8).flip(7)
    assert syndrome(w, P32).remainder == parse_poly("x3", 3)


def test_syndrome_shift_invariance():
    # adding a codeword never changes the syndrome: exhaustive for m = 3
    for c in codewords(P32):
        for value in range(256):
            e = Word(8, value)
            assert syndrome(c + e, P32).remainder == syndrome(e, P32).remainder


def test_syndrome_shift_invariance_m4_random():
    params = CodeParams(4, 3)
    rng = random.Random(23)
    for _ in range(200):
        c = encode(random_message(params, rng), params)
        e = Word(16, rng.getrandbits(16))
        assert syndrome(c + e, params).remainder == syndrome(e, params).remainder


def test_syndrome_length_mismatch():
    with pytest.raises(ValueError):
        syndrome(Word(4, 0), P32)


def test_hat_set_examples():
    assert hat_set({3}, P32).hat == frozenset({frozenset({3})})
    assert hat_set({1, 3}, P32).hat == frozenset(
        {frozenset(), frozenset({1}), frozenset({3})}
    )
    assert hat_set({1, 2, 3}, P32).hat == frozenset(
        {frozenset({1}), frozenset({2}), frozenset({3})}
    )


def test_hat_set_structure():
    for params in (CodeParams(4, 2), CodeParams(4, 3)):
        for k in range(0, params.m + 1):
            for combo in itertools.combinations(range(1, params.m + 1), k):
                loc = frozenset(combo)
                hs = hat_set(loc, params)
                if k < params.l:
                    assert hs.hat == frozenset({loc})
                elif k == params.l:
                    proper = frozenset(
                        frozenset(sub)
                        for r in range(k)
                        for sub in itertools.combinations(combo, r)
                    )
                    assert hs.hat == proper
                    assert len(hs.hat) == params.min_distance - 1


def test_hat_symdiff_examples():
    assert hat_symdiff([{1}, {2}], P32) == parse_poly("x1 + x2", 3)
    assert hat_symdiff([{1, 2}, {1, 3}], P32) == parse_poly("x2 + x3", 3)
    assert hat_symdiff([{2, 3}], P32) == parse_poly("x2 + x3 + 1", 3)


def test_hat_symdiff_rejects_duplicates():
    with pytest.raises(ValueError):
        hat_symdiff([{1, 2}, {1, 2}], P32)


def test_hat_symdiff_routes_agree_random():
    # the function itself cross-checks division against hat-set symmetric
    # difference and raises on any disagreement
    rng = random.Random(31)
    for params in (CodeParams(4, 2), CodeParams(4, 3)):
        all_subsets = [
            frozenset(c)
            for k in range(0, params.m + 1)
            for c in itertools.combinations(range(1, params.m + 1), k)
        ]
        for _ in range(100):
            family = rng.sample(all_subsets, rng.randint(1, 5))
            hat_symdiff(family, params)


def test_decode_golden():
    result = decode(Word.from_string("10100010"), P32)
    assert result.status == CORRECTED_OMEGA
    assert str(result.codeword) == "10101010"
    assert result.error == parse_poly("x2*x3", 3)
    assert result.chosen_locations == (frozenset({2, 3}),)


def test_decode_clean():
    c = encode(parse_poly("y1 + 1", 3), P32)
    result = decode(c, P32)
    assert result.status == CLEAN
    assert result.codeword == c
    assert not result.error
    assert result.chosen_locations is None


def test_decode_low_weight_error():
    c = encode(parse_poly("y2", 3), P32)
    v = c.flip(8)  # position 8 carries the constant monomial
    result = decode(v, P32)
    assert result.status == CORRECTED_LOW
    assert result.codeword == c
    assert result.error == Poly.one(3)


def test_decode_failure_on_double_error():
    v = Word.from_string("11000000")  # two high-degree error locations
    result = decode(v, P32)
    assert result.status == FAILURE
    assert result.codeword is None and result.error is None


def test_decode_result_reconstructs_received():
    rng = random.Random(41)
    for params in (P32, CodeParams(4, 3)):
        for _ in range(50):
            c = encode(random_message(params, rng), params)
            e = random_error(params, "fixed_weight", rng, weight=rng.randint(0, params.t))
            v = c + e
            result = decode(v, params)
            assert result.status != FAILURE
            assert result.codeword + poly_to_word(result.error) == v
            assert (result.status == CLEAN) == (not result.error)


def test_decode_m2_requires_l2():
    with pytest.raises(ValueError):
        decode_m2(Word.zeros(16), CodeParams(4, 3))


def test_decode_m2_matches_decode_on_single_errors():
    for params in (P32, CodeParams(4, 2)):
        zero = Word.zeros(params.n)
        for position in range(1, params.n + 1):
            v = zero.flip(position)
            assert decode_m2(v, params) == decode(v, params)
        assert decode_m2(zero, params).status == CLEAN


def test_decode_m2_falls_back_on_heavier_errors():
    v = Word.from_string("11000000")
    assert decode_m2(v, P32) == decode(v, P32)


def test_ml_bruteforce_golden():
    res = ml_decode_bruteforce(Word.from_string("10100010"), P32)
    assert str(res.codeword) == "10101010"
    assert res.distance == 1
    assert not res.is_tie


def test_ml_bruteforce_tie():
    res = ml_decode_bruteforce(Word.from_string("11000000"), P32)
    assert res.distance == 2
    assert res.is_tie


def test_random_error_fixed_weight():
    params = CodeParams(4, 3)
    e1 = random_error(params, "fixed_weight", 9, weight=3)
    e2 = random_error(params, "fixed_weight", 9, weight=3)
    assert e1 == e2
    assert e1.weight() == 3
    assert random_error(params, "fixed_weight", 9, weight=0) == Word.zeros(16)


def test_random_error_bsc():
    params = CodeParams(4, 3)
    e1 = random_error(params, "bsc", 9, flip_prob=0.3)
    e2 = random_error(params, "bsc", 9, flip_prob=0.3)
    assert e1 == e2
    assert random_error(params, "bsc", 9, flip_prob=0.0) == Word.zeros(16)
    assert random_error(params, "bsc", 9, flip_prob=1.0).weight() == 16


def test_random_error_shared_stream():
    params = CodeParams(3, 2)
    rng = random.Random(1)
    draws = {random_error(params, "fixed_weight", rng, weight=1) for _ in range(30)}
    assert len(draws) > 1


def test_random_error_bad_args():
    params = CodeParams(3, 2)
    with pytest.raises(ValueError):
        random_error(params, "fixed_weight", 0)
    with pytest.raises(ValueError):
        random_error(params, "fixed_weight", 0, weight=9)
    with pytest.raises(ValueError):
        random_error(params, "bsc", 0, flip_prob=1.5)
    with pytest.raises(ValueError):
        random_error(params, "burst", 0)
