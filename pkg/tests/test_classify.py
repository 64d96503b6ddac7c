import importlib

import numpy as np
import pytest
from hypothesis import given, settings

from identent.classify import Verdict, classify, desymmetrize
from identent.errors import NumericalInconsistency
from identent.properties import find_property_projector
from identent.states import BOSON, FERMION, fidelity, random_state, symmetrize

from conftest import (
    H_08_02,
    LOG2_3,
    SQ2,
    SQRT_02,
    SQRT_08,
    boson_from_schmidt,
    complex_vectors,
    dims,
    fermion_from_slater,
    random_unitary,
    seeds,
)

NON, ENT = Verdict.NON_ENTANGLED, Verdict.ENTANGLED


@pytest.mark.parametrize(
    "state, stats, number, entropy, verdict, rule",
    [
        (fermion_from_slater([1.0]), FERMION, 1, 1.0, NON, "fermion-slater-1"),
        (fermion_from_slater([1 / SQ2] * 2), FERMION, 2, 2.0, ENT, "fermion-slater-gt1"),
        (boson_from_schmidt([1.0], d=2), BOSON, 1, 0.0, NON, "boson-schmidt-1"),
        (boson_from_schmidt([1 / SQ2] * 2), BOSON, 2, 1.0, NON, "boson-schmidt-2-equal"),
        (boson_from_schmidt([SQRT_08, SQRT_02]), BOSON, 2, H_08_02, ENT, "boson-schmidt-2-unequal"),
        (boson_from_schmidt([1 / np.sqrt(3)] * 3), BOSON, 3, LOG2_3, ENT, "boson-schmidt-ge3"),
    ],
)
def test_examples(state, stats, number, entropy, verdict, rule):
    report = classify(state)
    assert report.statistics is stats
    assert report.number == number
    assert report.entropy == pytest.approx(entropy, abs=1e-9)
    assert report.verdict is verdict
    assert report.rule == rule
    assert (report.factorizing_pair is None) == (report.overlap is None)


class TestDesymmetrize:
    def test_equal_boson_pair_is_orthogonal(self):
        phi, chi = desymmetrize(boson_from_schmidt([1 / SQ2] * 2))
        np.testing.assert_allclose(phi, np.array([1, 1j]) / SQ2, atol=1e-12)
        np.testing.assert_allclose(chi, np.array([1, -1j]) / SQ2, atol=1e-12)
        assert abs(np.vdot(phi, chi)) < 1e-12

    def test_unequal_boson_pair_overlap(self):
        # (b1 - b2) / (b1 + b2) with b = (sqrt .8, sqrt .2) is exactly 1/3.
        state = boson_from_schmidt([SQRT_08, SQRT_02])
        phi, chi = desymmetrize(state)
        assert abs(np.vdot(phi, chi)) == pytest.approx(1 / 3, abs=1e-12)
        assert fidelity(state, symmetrize(phi, chi)) > 1 - 1e-12

    def test_two_determinants_absent(self):
        assert desymmetrize(fermion_from_slater([1 / SQ2] * 2)) is None

    def test_schmidt_three_absent(self):
        assert desymmetrize(boson_from_schmidt([1 / np.sqrt(3)] * 3)) is None

    @given(phi=complex_vectors(4), chi=complex_vectors(4))
    @settings(max_examples=60, deadline=None)
    def test_resymmetrization(self, phi, chi):
        state = symmetrize(phi, chi)
        pair = desymmetrize(state)
        assert pair is not None
        assert fidelity(state, symmetrize(*pair)) > 1 - 1e-9
        b = classify(state).coefficients
        if b[1] > 1e-9:
            assert abs(np.vdot(*pair)) == pytest.approx((b[0] - b[1]) / (b[0] + b[1]), abs=1e-9)

    @given(seed=seeds)
    @settings(max_examples=20, deadline=None)
    def test_schmidt_three_has_no_rank_two_preimage(self, seed):
        # Symmetrized products have rank <= 2, so the best rank-2 fit is bounded away from 1.
        rng = np.random.default_rng(seed)
        state = boson_from_schmidt([1 / np.sqrt(3)] * 3, U=random_unitary(3, rng))
        for _ in range(50):
            phi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            chi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            assert fidelity(state, symmetrize(phi, chi)) < 1 - 1e-4


class TestRules:
    @given(seed=seeds, d=dims)
    @settings(max_examples=40, deadline=None)
    def test_fermion_counting_matches_entropy(self, seed, d):
        report = classify(random_state(d, FERMION, seed))
        assert (report.number == 1) == (abs(report.entropy - 1) <= 1e-7)

    @given(seed=seeds)
    @settings(max_examples=40, deadline=None)
    def test_unequal_schmidt_two_majority_above_half(self, seed):
        report = classify(random_state(2, BOSON, seed))
        b = report.coefficients
        if abs(b[0] - b[1]) > 1e-3:
            assert report.entangled
            assert 1e-6 < report.entropy < 1 - 1e-6
            assert max(b**2) > 0.5

    @given(seed=seeds, d=dims)
    @settings(max_examples=30, deadline=None)
    def test_verdict_matches_both_constituent_attribution(self, seed, d):
        for stats in (FERMION, BOSON):
            state = random_state(d, stats, seed)
            assert classify(state).entangled != find_property_projector(state).both_attained

    def test_near_threshold_is_marginal(self):
        report = classify(fermion_from_slater([np.sqrt(1 - 1e-16), 1e-8]))
        assert report.marginal and report.rule.endswith("(marginal)")

    def test_inconsistent_entropies_raise(self, monkeypatch):
        # The package re-exports ``classify``, which hides the submodule attribute.
        module = importlib.import_module("identent.classify")
        monkeypatch.setattr(module, "entropy_from_slater", lambda a: 1.5)
        with pytest.raises(NumericalInconsistency):
            classify(fermion_from_slater([1.0]))
