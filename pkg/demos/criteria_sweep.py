"""Counting, entropy and property attribution over random states.

Random states in d = 2..8 are classified and compared with the
both-constituent property reading and with single-projector attainment.
The last column counts states where one constituent has a definite state
but the state is still entangled.  They are all d = 2 bosons.

Run with ``python demos/criteria_sweep.py [states-per-cell]``.
"""
import sys
from collections import Counter

from identent import classify, find_property_projector, random_state

n = int(sys.argv[1]) if len(sys.argv) > 1 else 100
print(f"{'statistics':>10} {'d':>2} {'entangled':>10} {'both agree':>11} {'one-only':>9}")
for statistics in ("fermion", "boson"):
    for d in range(2, 9):
        tally = Counter()
        for seed in range(n):
            state = random_state(d, statistics, seed)
            report, prop = classify(state), find_property_projector(state)
            tally["entangled"] += report.entangled
            tally["agree"] += report.entangled != prop.both_attained
            tally["one-only"] += report.entangled and prop.attained
        print(f"{statistics:>10} {d:2d} {tally['entangled']:10d} {tally['agree']:11d} {tally['one-only']:9d}")
