"""
Channel simulation: decoding under random errors
================================================

Push random codewords through two error channels and tally the decoder
outcomes.  Everything is seeded, so reruns reproduce the same numbers.

The command line gives the same experiment with a CSV trace:

    rmgb simulate -m 4 -l 3 --mode fixed:3 --trials 500 --seed 7 --out trace.csv
"""

import random
from collections import Counter

from rmgb import CodeParams, decode, encode, random_error, random_message

params = CodeParams(4, 3)  # n=16, d=8, corrects up to t=3 errors
rng = random.Random(7)

# Channel 1: exactly t errors per word, the worst case still inside the
# correction radius.  Every trial must come back corrected and correct.
trials = 500
statuses = Counter()
wrong = 0
for _ in range(trials):
    c = encode(random_message(params, rng), params)
    e = random_error(params, "fixed_weight", rng, weight=params.t)
    r = decode(c + e, params)
    statuses[r.status] += 1
    wrong += r.codeword != c
print(f"fixed weight {params.t}, {trials} trials:", dict(statuses))
print("miscorrections:", wrong)
assert wrong == 0 and statuses["failure"] == 0

# Channel 2: binary symmetric channel.  Above-radius patterns may fail
# or miscorrect; both are counted honestly.
flip_p = 0.12
statuses = Counter()
wrong = 0
overweight = 0
for _ in range(trials):
    c = encode(random_message(params, rng), params)
    e = random_error(params, "bsc", rng, flip_prob=flip_p)
    overweight += e.weight() > params.t
    r = decode(c + e, params)
    statuses[r.status] += 1
    if r.status != "failure":
        wrong += r.codeword != c
print(f"\nBSC p={flip_p}, {trials} trials:", dict(statuses))
print(f"patterns above radius: {overweight}, miscorrections: {wrong}")
print("word error rate:", (statuses["failure"] + wrong) / trials)
