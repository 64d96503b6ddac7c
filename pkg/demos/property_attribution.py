"""Attributing definite states to the constituents.

E(p) is the probability of finding at least one particle in |p>.  E(p) = 1
means one constituent has a definite state.  Non-entanglement needs both:
<P(x)P> = 1, or <P(x)Q + Q(x)P> = 1 for orthogonal p and q.

For b = (sqrt .8, sqrt .2) the first holds at either factor of the state,
but the factors overlap, so the second fails.  Sampling with the explicit
operators shows both readings.

Run with ``python demos/property_attribution.py``.
"""
import numpy as np

from identent import classify, find_property_projector, from_matrix
from identent.oracle import brute_max_ep, brute_max_pair

states = {
    "singlet": from_matrix(2, "fermion", np.array([[0, 1], [-1, 0]]) / np.sqrt(2)),
    "two determinants": from_matrix(4, "fermion", np.array(
        [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]) / 2),
    "boson equal": from_matrix(2, "boson", np.diag([1, 1]) / np.sqrt(2)),
    "boson sqrt(.8), sqrt(.2)": from_matrix(2, "boson", np.diag(np.sqrt([0.8, 0.2]))),
    "boson uniform x3": from_matrix(3, "boson", np.eye(3) / np.sqrt(3)),
}

print(f"{'state':26} {'max E':>9} {'sampled':>9} {'both':>9} {'sampled':>9}  verdict")
for name, state in states.items():
    prop = find_property_projector(state)
    print(
        f"{name:26} {prop.max_value:9.6f} {brute_max_ep(state, 20_000, 1):9.6f} "
        f"{prop.both_value:9.6f} {brute_max_pair(state, 20_000, 1):9.6f}  {classify(state).verdict.value}"
    )
