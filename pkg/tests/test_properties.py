import numpy as np
import pytest
from hypothesis import given, settings

from identent.errors import DimensionMismatch
from identent.oracle import brute_ep_values, brute_max_ep, brute_max_pair
from identent.properties import (
    ep_expectation,
    find_property_projector,
    pair_expectation,
    same_expectation,
)
from identent.states import BOSON, FERMION, antisymmetrize, random_state, symmetrize

from conftest import SQ2, SQRT_02, SQRT_08, boson_from_schmidt, complex_vectors, dims, fermion_from_slater, seeds


class TestExpectation:
    def test_boson_product(self):
        assert ep_expectation(boson_from_schmidt([1.0], d=2), [1, 0]) == pytest.approx(1, abs=1e-15)

    def test_singlet(self, singlet):
        assert ep_expectation(singlet, [1, 0]) == pytest.approx(1, abs=1e-15)

    @given(p=complex_vectors(4))
    @settings(max_examples=50, deadline=None)
    def test_maximally_mixed_fermion_is_flat(self, p):
        state = fermion_from_slater([1 / SQ2, 1 / SQ2])
        assert ep_expectation(state, p) == pytest.approx(0.5, abs=1e-12)

    def test_dimension_mismatch(self, singlet):
        with pytest.raises(DimensionMismatch):
            ep_expectation(singlet, [1, 0, 0])

    @given(seed=seeds, d=dims.filter(lambda d: d <= 6))
    @settings(max_examples=40, deadline=None)
    def test_matches_explicit_operator(self, seed, d):
        rng = np.random.default_rng(seed)
        P = rng.standard_normal((8, d)) + 1j * rng.standard_normal((8, d))
        for stats in (FERMION, BOSON):
            state = random_state(d, stats, seed)
            fast = [ep_expectation(state, p) for p in P]
            np.testing.assert_allclose(fast, brute_ep_values(state, P), atol=1e-10)

    @given(seed=seeds, d=dims, p=complex_vectors(8))
    @settings(max_examples=40, deadline=None)
    def test_range_and_phase_invariance(self, seed, d, p):
        p = p[:d]
        if np.linalg.norm(p) < 1e-3:
            return
        for stats in (FERMION, BOSON):
            state = random_state(d, stats, seed)
            value = ep_expectation(state, p)
            assert 0 <= value <= 1
            assert ep_expectation(state, np.exp(0.7j) * p) == pytest.approx(value, abs=1e-12)

    @given(seed=seeds, d=dims, p=complex_vectors(8))
    @settings(max_examples=40, deadline=None)
    def test_fermion_quadratic_term_vanishes(self, seed, d, p):
        p = p[:d]
        if np.linalg.norm(p) < 1e-3:
            return
        p = p / np.linalg.norm(p)
        C = random_state(d, FERMION, seed).coeffs
        assert abs(p.conj() @ C @ p.conj()) < 1e-12

    def test_pair_requires_orthogonality(self, singlet):
        with pytest.raises(ValueError):
            pair_expectation(singlet, [1, 0], [1, 1])


class TestSearch:
    def test_singlet(self, singlet):
        report = find_property_projector(singlet)
        assert report.attained and report.max_value >= 1 - 1e-9
        assert report.restarts_used == 0
        assert report.both_attained

    def test_orthogonal_boson_pair(self):
        report = find_property_projector(boson_from_schmidt([1 / SQ2, 1 / SQ2]))
        assert report.attained and report.both_attained
        p, q = report.both_pair
        assert abs(np.vdot(p, q)) < 1e-12

    def test_unequal_boson_pair(self):
        # One factor carries a definite state; the two constituents do not
        # jointly, since the factors overlap.
        state = boson_from_schmidt([SQRT_08, SQRT_02])
        report = find_property_projector(state)
        assert report.attained
        assert report.both_value == pytest.approx((SQRT_08 + SQRT_02) ** 2 / 2, abs=1e-12)
        assert not report.both_attained
        assert brute_max_ep(state, 100_000, 0) > 0.999
        assert brute_max_pair(state, 100_000, 0) <= report.both_value + 1e-12

    def test_unequal_boson_factor_attains_single_projector(self):
        # The explicit operator evaluated at a factor of the entangled state gives exactly 1.
        from identent.classify import desymmetrize

        state = boson_from_schmidt([SQRT_08, SQRT_02])
        phi, chi = desymmetrize(state)
        np.testing.assert_allclose(brute_ep_values(state, np.vstack([phi, chi])), 1.0, atol=1e-12)

    def test_two_determinants(self):
        state = fermion_from_slater([1 / SQ2, 1 / SQ2])
        report = find_property_projector(state)
        assert report.max_value == pytest.approx(0.5, abs=1e-12)
        assert not report.attained and not report.both_attained

    def test_boson_schmidt_three_refines(self):
        report = find_property_projector(boson_from_schmidt([1 / np.sqrt(3)] * 3), restarts=8)
        assert report.restarts_used == 8
        assert not report.attained and not report.both_attained

    def test_deterministic(self):
        state = random_state(4, BOSON, 5)
        a, b = find_property_projector(state, seed=3), find_property_projector(state, seed=3)
        assert a.max_value == b.max_value
        np.testing.assert_array_equal(a.argmax, b.argmax)

    @given(phi=complex_vectors(4), chi=complex_vectors(4))
    @settings(max_examples=40, deadline=None)
    def test_antisymmetrized_products_attain(self, phi, chi):
        cos = abs(np.vdot(phi, chi)) / np.linalg.norm(phi) / np.linalg.norm(chi)
        if cos > 1 - 1e-6:
            return
        report = find_property_projector(antisymmetrize(phi, chi))
        assert report.attained and report.both_attained

    @given(phi=complex_vectors(4), chi=complex_vectors(4))
    @settings(max_examples=40, deadline=None)
    def test_orthogonal_symmetrized_products_attain(self, phi, chi):
        chi = chi - np.vdot(phi, chi) / np.vdot(phi, phi) * phi
        if np.linalg.norm(chi) < 1e-3:
            return
        assert find_property_projector(symmetrize(phi, chi)).both_attained
        assert find_property_projector(symmetrize(phi, phi)).both_attained

    @given(seed=seeds, d=dims.filter(lambda d: d <= 5))
    @settings(max_examples=25, deadline=None)
    def test_search_beats_sampling(self, seed, d):
        for stats in (FERMION, BOSON):
            state = random_state(d, stats, seed)
            report = find_property_projector(state)
            assert brute_max_ep(state, 2000, seed) <= report.max_value + 1e-9
            assert brute_max_pair(state, 2000, seed) <= report.both_value + 1e-9

    def test_same_expectation(self):
        state = boson_from_schmidt([SQRT_08, SQRT_02])
        assert same_expectation(state, [1, 0]) == pytest.approx(0.8, abs=1e-12)
