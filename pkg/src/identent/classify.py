"""Entanglement verdict for two identical particles.

Fermions are non-entangled exactly when the Slater number is 1, which is
the same as a reduced entropy of 1 bit.  Bosons are non-entangled when the
Schmidt number is 1 (entropy 0), or when it is 2 with entropy 1 bit, i.e.
with equal coefficients.  Both readings of each rule are evaluated and must
agree.

Exact equalities become tolerances here: counting uses ``eps`` on the
coefficients, entropy equality uses ``ENTROPY_TOL`` bits, coefficient
equality ``COEFF_TOL``.  Near these thresholds the two readings can
legitimately disagree (the entropy is quadratically flat in the small
coefficient); such states are reported with a ``marginal`` rule instead of
raising.
"""
import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analysis import entropy_from_schmidt, entropy_from_slater, reduced_density, von_neumann_entropy
from .decomp import DEFAULT_EPS, SlaterDecomposition, counting_number, decompose
from .errors import NumericalInconsistency
from .states import FERMION, Statistics

ENTROPY_TOL = 1e-7
COEFF_TOL = 1e-8
# Spectral and closed-form entropies must agree this well, or the numerics are broken.
ENTROPY_CONSISTENCY_TOL = 1e-9


class Verdict(enum.Enum):
    NON_ENTANGLED = "non-entangled"
    ENTANGLED = "entangled"


@dataclass(frozen=True, eq=False)
class ClassificationReport:
    statistics: Statistics
    number: int
    entropy: float
    verdict: Verdict
    rule: str
    coefficients: np.ndarray
    factorizing_pair: Optional[tuple] = None
    overlap: Optional[float] = None
    marginal: bool = False

    @property
    def entangled(self):
        return self.verdict is Verdict.ENTANGLED


def _near(x, threshold):
    return threshold / 10 <= x <= 10 * threshold


def pair_from_decomposition(dec):
    """Desymmetrized pair read off a decomposition; see :func:`desymmetrize`."""
    if isinstance(dec, SlaterDecomposition):
        if dec.slater_number != 1:
            return None
        return dec.pair(0)
    b, U = dec.coefficients, dec.basis
    n = dec.schmidt_number
    if n == 1:
        return U[:, 0].copy(), U[:, 0].copy()
    if n == 2:
        # b1 u1 u1^T + b2 u2 u2^T is the symmetrized product of these two.
        x, y = np.sqrt(b[0]) * U[:, 0], 1j * np.sqrt(b[1]) * U[:, 1]
        norm = np.sqrt(b[0] + b[1])
        return (x + y) / norm, (x - y) / norm
    return None


def desymmetrize(state, eps=DEFAULT_EPS):
    """Single-particle vectors whose (anti)symmetrized product is ``state``.

    Returns ``None`` when no such pair exists: fermions with Slater number
    above 1 and bosons with Schmidt number 3 or more.  For a boson with
    Schmidt coefficients ``b1 >= b2 > 0`` the pair is
    ``(sqrt(b1) u1 +/- i sqrt(b2) u2) / sqrt(b1 + b2)``, whose overlap is
    ``(b1 - b2) / (b1 + b2)``; it is orthogonal exactly when ``b1 == b2``.
    """
    return pair_from_decomposition(decompose(state, eps))


def _check_consistent(state, spectral, closed):
    if abs(spectral - closed) > ENTROPY_CONSISTENCY_TOL:
        raise NumericalInconsistency(
            f"spectral entropy {spectral!r} and closed-form entropy {closed!r} "
            f"of a {state.statistics.value} state disagree"
        )


def classify(state, eps=DEFAULT_EPS):
    """Decide whether a two-particle state is entangled.

    Parameters
    ----------
    state : TwoParticleState
    eps : float
        Coefficients above ``eps`` count towards the Slater/Schmidt number.

    Returns
    -------
    ClassificationReport

    Raises
    ------
    NumericalInconsistency
        If the spectral entropy and the entropy implied by the decomposition
        coefficients differ by more than 1e-9.  A disagreement between the
        counting and entropy readings that both entropies reproduce is a
        threshold effect and is reported as marginal instead.
    """
    dec = decompose(state, eps)
    number = counting_number(dec)
    coeffs = dec.coefficients
    S = von_neumann_entropy(reduced_density(state))
    near_one = abs(S - 1) <= ENTROPY_TOL
    marginal = any(_near(c, eps) for c in coeffs) or _near(abs(S - 1), ENTROPY_TOL)

    if state.statistics is FERMION:
        closed = entropy_from_slater(coeffs)
        non_entangled = number == 1
        rule = "fermion-slater-1" if non_entangled else "fermion-slater-gt1"
        disagree = non_entangled != near_one
    else:
        closed = entropy_from_schmidt(coeffs)
        near_zero = S <= ENTROPY_TOL
        marginal = marginal or _near(S, ENTROPY_TOL)
        if number == 1:
            non_entangled, rule = True, "boson-schmidt-1"
        elif number == 2:
            non_entangled = near_one
            rule = "boson-schmidt-2-equal" if near_one else "boson-schmidt-2-unequal"
            gap = abs(coeffs[0] - coeffs[1])
            marginal = marginal or _near(gap, COEFF_TOL)
            by_coefficients = gap <= COEFF_TOL
        else:
            non_entangled, rule = False, "boson-schmidt-ge3"
        # Same rule read from the entropy side.
        by_entropy = near_zero or (near_one and number == 2)
        disagree = non_entangled != by_entropy
        if number == 2:
            disagree = disagree or non_entangled != by_coefficients

    _check_consistent(state, S, closed)
    if disagree:
        # Both entropies agree, so the split comes from the thresholds
        # themselves: a state this close to the boundary is marginal.
        marginal = True
    if marginal:
        rule += " (marginal)"

    pair = pair_from_decomposition(dec)
    overlap = None if pair is None else float(abs(np.vdot(pair[0], pair[1])))
    return ClassificationReport(
        statistics=state.statistics,
        number=number,
        entropy=S,
        verdict=Verdict.NON_ENTANGLED if non_entangled else Verdict.ENTANGLED,
        rule=rule,
        coefficients=np.array(coeffs),
        factorizing_pair=pair,
        overlap=overlap,
        marginal=marginal,
    )
