import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import cases
from triadcomplete import (
    is_pc_plus,
    is_pcm,
    koczkodaj_index,
    max_triad,
    mt,
    oracle,
    specified_triads,
    tree_weights,
    triad_sets_for_entry,
    validate,
)
from triadcomplete.errors import EntrySpecifiedError

weight_vectors = st.lists(
    st.floats(0.2, 5.0, allow_nan=False), min_size=3, max_size=6
).map(np.array)


def tree_prm(rng, n):
    from triadcomplete import SpecGraph

    return cases.prm_on_graph(rng, SpecGraph.from_edges(n, cases.random_tree_edges(rng, n)))


class TestSpecifiedTriads:
    def test_tree_pattern_has_none(self, rng):
        assert specified_triads(tree_prm(rng, 6)) == []

    def test_sub_four_triangles(self):
        triads = specified_triads(cases.sub_four())
        assert [(t.i, t.j, t.k) for t in triads] == [(0, 1, 2), (1, 2, 3)]
        assert triads[0].value == pytest.approx(4 / 3, rel=1e-12)
        assert triads[1].value == pytest.approx(1 / 2, rel=1e-12)

    def test_complete_four_by_four(self, rng):
        m = cases.consistent_matrix(cases.random_weights(rng, 4))
        assert len(specified_triads(m)) == 4

    def test_orientations(self):
        t = specified_triads(cases.sub_four())[1]
        assert t.reciprocal == pytest.approx(2.0)
        assert t.max_value == pytest.approx(2.0)
        assert t.worst_orientation() == ((3, 2, 1), pytest.approx(2.0))


class TestMt:
    def test_sub_four(self):
        assert mt(cases.sub_four()) == pytest.approx(2.0, rel=1e-12)

    def test_five_with_first_fill(self):
        b = cases.five_partial().with_entry(1, 4, cases.SQRT6 / 6)
        assert mt(b) == pytest.approx(4.0, rel=1e-12)

    def test_consistent_is_one(self, rng):
        m = cases.consistent_matrix(cases.random_weights(rng, 5))
        assert mt(m) == pytest.approx(1.0, rel=1e-12)

    def test_no_triads_is_one(self, rng):
        assert mt(tree_prm(rng, 5)) == 1.0

    def test_at_least_one(self, rng):
        for _ in range(50):
            assert mt(cases.random_prm(rng, int(rng.integers(1, 8)))) >= 1.0

    def test_permutation_and_transpose_invariance(self, rng):
        for _ in range(20):
            m = cases.random_prm(rng, 6)
            perm = rng.permutation(6)
            permuted = np.full((6, 6), np.nan)
            for i in range(6):
                for j in range(6):
                    if m.mask[i, j]:
                        permuted[perm[i], perm[j]] = m.entries[i, j]
            assert mt(validate(permuted)) == pytest.approx(mt(m), rel=1e-12)
            transposed = np.where(m.mask, m.entries.T, np.nan)
            assert mt(validate(transposed)) == pytest.approx(mt(m), rel=1e-12)


class TestIsPcm:
    def test_cycle_pattern_is_pcm(self):
        assert is_pcm(validate(cases.CYCLE_PCM))

    def test_five_partial_is_not(self):
        assert not is_pcm(cases.five_partial())

    def test_tree_pattern_vacuously_pcm(self, rng):
        assert is_pcm(tree_prm(rng, 6))

    def test_equivalent_to_all_triads_near_one(self, rng):
        for _ in range(40):
            m = cases.random_prm(rng, int(rng.integers(3, 7)))
            triads = specified_triads(m)
            all_one = all(abs(t.value - 1.0) <= 1e-9 for t in triads)
            assert is_pcm(m) == all_one


class TestIsPcPlus:
    def test_cycle_pattern_violates(self):
        ok, witness = is_pc_plus(validate(cases.CYCLE_PCM))
        assert not ok
        # BFS tree from vertex 0 takes edges (0,1), (0,3), (1,2); the
        # remaining specified edge closes the violating cycle.
        assert witness == (2, 3)

    def test_witness_cycle_product_differs_from_one(self):
        m = validate(cases.CYCLE_PCM)
        _, witness = is_pc_plus(m)
        products = dict(oracle.brute_cycle_products(m))
        violating = [p for cyc, p in products.items() if set(witness) <= set(cyc)]
        assert violating and all(abs(p - 1.0) > 1e-9 for p in violating)

    def test_corrected_entry_restores_pc_plus(self):
        assert is_pc_plus(validate(cases.CYCLE_PC_PLUS)) == (True, None)

    def test_forest_pattern_vacuously_pc_plus(self, rng):
        assert is_pc_plus(tree_prm(rng, 6)) == (True, None)

    def test_pc_plus_implies_pcm(self, rng):
        for _ in range(30):
            m = cases.random_prm(rng, int(rng.integers(3, 7)), p=0.4)
            if is_pc_plus(m)[0]:
                assert is_pcm(m)

    def test_agrees_with_cycle_enumeration(self, rng):
        for _ in range(150):
            n = int(rng.integers(2, 7))
            m = cases.random_prm(rng, n, p=float(rng.uniform(0.3, 0.9)))
            brute = all(abs(p - 1.0) <= 1e-9 for _, p in oracle.brute_cycle_products(m))
            assert is_pc_plus(m)[0] == brute

    def test_masked_consistent_matrix_always_pc_plus(self, rng):
        for _ in range(20):
            full = cases.consistent_matrix(cases.random_weights(rng, 6))
            m = cases.random_prm(rng, 6)  # borrow its pattern
            masked = np.where(m.mask, full.entries, np.nan)
            assert is_pc_plus(validate(masked))[0]


class TestTreeWeights:
    def test_reproduces_tree_entries(self, rng):
        m = tree_prm(rng, 6)
        w = tree_weights(m, range(6))
        for i in range(6):
            for j in range(6):
                if i != j and m.mask[i, j]:
                    assert w[i] / w[j] == pytest.approx(float(m.entries[i, j]), rel=1e-12)


class TestTriadSetsForEntry:
    def test_five_by_five_second_row_entry(self):
        ts = triad_sets_for_entry(cases.five_partial(), 1, 4)
        assert sorted(v for _, v in ts.s) == pytest.approx([1 / 4, 2 / 3], rel=1e-12)
        assert ts.s_max == pytest.approx(2 / 3, rel=1e-12)
        assert ts.s_min == pytest.approx(1 / 4, rel=1e-12)

    def test_five_by_five_top_entry_after_fill(self):
        b = cases.five_partial().with_entry(1, 4, cases.SQRT6 / 6)
        ts = triad_sets_for_entry(b, 0, 4)
        assert sorted(v for _, v in ts.s) == pytest.approx(
            [1 / 2, 1.0, cases.SQRT6], rel=1e-12
        )

    def test_no_common_neighbor_flagged(self):
        m = validate([[1, 2, None], [0.5, 1, None], [None, None, 1]])
        ts = triad_sets_for_entry(m, 0, 2)
        assert ts.is_unconstrained and ts.s_min is None and ts.s_max is None

    def test_specified_entry_rejected(self):
        with pytest.raises(EntrySpecifiedError):
            triad_sets_for_entry(cases.five_partial(), 0, 1)

    def test_c0_products_pair_up(self):
        ts = triad_sets_for_entry(cases.five_partial(), 1, 4)
        prods = dict(ts.c0_products(0.5))
        assert prods[(1, 2, 4)] == pytest.approx((2 / 3) / 0.5, rel=1e-12)
        assert prods[(4, 2, 1)] == pytest.approx(0.5 / (2 / 3), rel=1e-12)

    def test_spread_bound_on_single_missing_entry(self, rng):
        # With every other entry specified, any two constraining products
        # differ by at most the squared measure.
        for _ in range(60):
            n = int(rng.integers(4, 8))
            m = cases.random_prm(rng, n, p=1.0).without_entry(0, n - 1)
            ts = triad_sets_for_entry(m, 0, n - 1)
            bound = mt(m) ** 2 * ts.s_min
            assert ts.s_max <= bound * (1 + 1e-12)


class TestMaxTriadAndKoczkodaj:
    def test_consistent_ties(self, rng):
        m = cases.consistent_matrix(cases.random_weights(rng, 4))
        triad, tie = max_triad(m)
        assert triad.max_value == pytest.approx(1.0) and tie

    def test_unique_maximum(self):
        m = validate([[1, 2, 1], [0.5, 1, 2], [1, 0.5, 1]])
        triad, tie = max_triad(m)
        assert (triad.i, triad.j, triad.k) == (0, 1, 2)
        assert triad.max_value == pytest.approx(4.0) and not tie

    def test_koczkodaj_values(self, rng):
        assert koczkodaj_index(cases.consistent_matrix([1, 2, 3])) == pytest.approx(0.0)
        assert koczkodaj_index(cases.sub_four()) == pytest.approx(0.5, rel=1e-12)
        assert koczkodaj_index(cases.five_partial()) == pytest.approx(0.75, rel=1e-12)

    @given(weight_vectors)
    def test_koczkodaj_zero_iff_pcm(self, w):
        m = cases.consistent_matrix(w)
        assert koczkodaj_index(m) == pytest.approx(0.0, abs=1e-9)
