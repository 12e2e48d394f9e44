"""Syndrome decoding of radical-power codes by Groebner remainders.

The syndrome of a received word is the remainder of its polynomial on
division by the degree-l product generators.  It vanishes exactly on
codewords, and it only depends on the error: adding a codeword does not
change it.  Writing the error as a sum of square-free monomials X_I
(the error locations), the decoder exploits a weight dichotomy:

* if every location has |I| < l, the syndrome simply equals the error
  polynomial and has weight at most t;
* if some location has |I| >= l, the syndrome weight exceeds t.

In the second case the decoder searches for the set S of high-degree
locations: it tries candidate sets in a fixed deterministic order and
accepts the first S whose shifted syndrome drops to weight at most
t - |S|; the leftover monomials are the low-degree locations.  For
errors of weight at most t the recovered codeword is exact.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .division import remainder
from .polyring import GRLEX, Poly
from .rmcode import (
    CodeParams,
    Word,
    codewords,
    groebner_basis,
    monomial_subset,
    poly_to_word,
    subset_monomial,
    word_to_poly,
)

CLEAN = "clean"
CORRECTED_LOW = "corrected_low"
CORRECTED_OMEGA = "corrected_omega"
FAILURE = "failure"


@dataclass(frozen=True)
class Syndrome:
    remainder: Poly

    @property
    def weight(self) -> int:
        return len(self.remainder.support)


def syndrome(v: Word, params: CodeParams) -> Syndrome:
    """Remainder of the received word's polynomial modulo the basis."""
    if v.n != params.n:
        raise ValueError(f"word length {v.n} does not match code length {params.n}")
    return Syndrome(remainder(word_to_poly(v), groebner_basis(params), GRLEX))


@lru_cache(maxsize=None)
def _location_remainder(params: CodeParams, location: frozenset) -> Poly:
    mono = subset_monomial(params.m, location)
    return remainder(Poly.monomial(params.m, mono), groebner_basis(params), GRLEX)


@dataclass(frozen=True)
class HatSet:
    location: frozenset
    hat: frozenset  # of frozensets: the subsets L with X_L in the remainder of X_I


def hat_set(location, params: CodeParams) -> HatSet:
    """Support of the remainder of X_I, as a set of subsets of {1..m}.

    For |I| < l the monomial is already irreducible, so the hat set is
    {I}; for |I| = l it is the set of proper subsets of I.
    """
    location = frozenset(location)
    rem = _location_remainder(params, location)
    return HatSet(location, frozenset(monomial_subset(mono) for mono in rem.support))


def hat_symdiff(locations, params: CodeParams) -> Poly:
    """Remainder of a sum of location monomials, computed two ways.

    Route one reduces the sum of the X_I by division; route two takes
    the iterated symmetric difference of the individual hat sets.  By
    linearity of remainders the routes must agree, and this function
    asserts that they do before returning the result.
    """
    locations = [frozenset(loc) for loc in locations]
    if len(set(locations)) != len(locations):
        raise ValueError("locations must be distinct")
    total = Poly(params.m, [subset_monomial(params.m, loc) for loc in locations])
    by_division = remainder(total, groebner_basis(params), GRLEX) if total else Poly.zero(params.m)
    acc: set = set()
    for loc in locations:
        acc ^= hat_set(loc, params).hat
    by_hats = Poly(params.m, [subset_monomial(params.m, sub) for sub in acc])
    if by_division != by_hats:
        raise AssertionError(
            f"hat symmetric difference mismatch: division gave {by_division}, hats gave {by_hats}"
        )
    return by_division


@dataclass(frozen=True)
class DecodeResult:
    status: str
    codeword: Optional[Word]
    error: Optional[Poly]
    chosen_locations: Optional[tuple] = None  # the accepted set S, omega path only


def _candidate_locations(params: CodeParams):
    # subsets with |I| >= l, in descending X_I order (degree first, then lex)
    out = []
    for k in range(params.m, params.l - 1, -1):
        for combo in itertools.combinations(range(1, params.m + 1), k):
            out.append(frozenset(combo))
    return out


def decode(v: Word, params: CodeParams) -> DecodeResult:
    """Correct up to t errors in the received word.

    Clean words come back unchanged.  A syndrome of weight at most t is
    itself the error polynomial (all locations below degree l).  A
    heavier syndrome triggers the search over candidate sets S of
    locations with |I| >= l, increasing |S| from 1 to t; the first S
    whose shifted syndrome has weight at most t - |S| is accepted, and
    the shifted syndrome contributes the remaining low-degree locations.
    Every emitted codeword is re-checked to have zero syndrome.  If no
    candidate set qualifies, status is ``failure`` and codeword and
    error are None.
    """
    syn = syndrome(v, params)
    rem = syn.remainder
    m = params.m
    if not rem:
        return DecodeResult(CLEAN, v, Poly.zero(m))
    t = params.t
    if syn.weight <= t:
        return DecodeResult(CORRECTED_LOW, v + poly_to_word(rem), rem)
    candidates = _candidate_locations(params)
    for size in range(1, t + 1):
        for chosen in itertools.combinations(candidates, size):
            shifted = rem
            for loc in chosen:
                shifted = shifted + _location_remainder(params, loc)
            if len(shifted) > t - size:
                continue
            error = Poly(m, [subset_monomial(m, loc) for loc in chosen]) + shifted
            cw = v + poly_to_word(error)
            if syndrome(cw, params).weight == 0:
                return DecodeResult(CORRECTED_OMEGA, cw, error, tuple(chosen))
    return DecodeResult(FAILURE, None, None)


def decode_m2(v: Word, params: CodeParams) -> DecodeResult:
    """Fast single-error decoder for l = 2.

    For l = 2 the syndrome of a single error at X_I is the sum of the
    X_i over i in I, plus possibly a constant term, so the location can
    be read straight off the degree-one monomials.  The reconstructed
    codeword is verified by a zero-syndrome check; on any mismatch
    (for instance more than one error) this falls back to the general
    decoder.
    """
    if params.l != 2:
        raise ValueError(f"fast path requires l = 2, got l = {params.l}")
    syn = syndrome(v, params)
    rem = syn.remainder
    m = params.m
    if not rem:
        return DecodeResult(CLEAN, v, Poly.zero(m))
    if all(sum(mono) <= 1 for mono in rem.support):
        location = frozenset(
            i + 1 for mono in rem.support for i, e in enumerate(mono) if e
        )
        error = Poly.monomial(m, subset_monomial(m, location))
        cw = v + poly_to_word(error)
        if syndrome(cw, params).weight == 0:
            if len(location) < params.l:
                return DecodeResult(CORRECTED_LOW, cw, error)
            return DecodeResult(CORRECTED_OMEGA, cw, error, (location,))
    return decode(v, params)


@dataclass(frozen=True)
class MLResult:
    codeword: Word
    distance: int
    is_tie: bool


def ml_decode_bruteforce(v: Word, params: CodeParams) -> MLResult:
    """Nearest codeword by scanning the full code (m <= 4 only).

    Returns the first codeword at minimum Hamming distance in the
    enumeration order, flagging whether another codeword ties it.
    """
    if v.n != params.n:
        raise ValueError(f"word length {v.n} does not match code length {params.n}")
    best = None
    best_dist = None
    tie = False
    for c in codewords(params):
        dist = (c + v).weight()
        if best_dist is None or dist < best_dist:
            best, best_dist, tie = c, dist, False
        elif dist == best_dist:
            tie = True
    return MLResult(best, best_dist, tie)


def random_error(params: CodeParams, mode: str, seed, *, weight=None, flip_prob=None) -> Word:
    """Random error word, reproducible from the seed.

    ``mode="fixed_weight"`` flips exactly ``weight`` positions chosen
    uniformly; ``mode="bsc"`` flips each position independently with
    probability ``flip_prob``.  ``seed`` may be an int or an existing
    random.Random (useful for drawing several errors from one stream).
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = params.n
    value = 0
    if mode == "fixed_weight":
        if weight is None or not 0 <= weight <= n:
            raise ValueError(f"fixed_weight mode needs a weight in 0..{n}")
        for pos in rng.sample(range(n), weight):
            value |= 1 << pos
    elif mode == "bsc":
        if flip_prob is None or not 0.0 <= flip_prob <= 1.0:
            raise ValueError("bsc mode needs a flip probability in [0, 1]")
        for pos in range(n):
            if rng.random() < flip_prob:
                value |= 1 << (n - 1 - pos)
    else:
        raise ValueError(f"unknown error mode {mode!r}, expected fixed_weight or bsc")
    return Word(n, value)
