"""Two bosons with Schmidt number 2.

Every state b1|11> + b2|22> is a symmetrized product of two vectors.
The vectors are orthogonal only when b1 = b2, which is when the state is
non-entangled and its entropy is exactly one bit.  Otherwise their overlap
is (b1 - b2)/(b1 + b2) and the entropy falls strictly between 0 and 1.

Run with ``python demos/boson_schmidt_two.py``.
"""
import numpy as np

from identent import classify, from_matrix, symmetrize
from identent.states import fidelity

print(f"{'b1^2':>6} {'entropy':>10} {'overlap':>10} {'(b1-b2)/(b1+b2)':>16}  verdict")
for w in (0.5, 0.6, 0.8, 0.95, 1.0):
    b = np.sqrt([w, 1 - w])
    state = from_matrix(2, "boson", np.diag(b))
    report = classify(state)
    expected = (b[0] - b[1]) / (b[0] + b[1])
    phi, chi = report.factorizing_pair
    assert fidelity(state, symmetrize(phi, chi)) > 1 - 1e-12
    print(f"{w:6.2f} {report.entropy:10.6f} {report.overlap:10.6f} {expected:16.6f}  {report.verdict.value}")

# For b1 != b2 the larger of b1^2, b2^2 is the chance of finding both
# bosons in the same basis state, and it exceeds one half.
