import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kghier.grouping import generate_groups
from kghier.similarity import all_pairs_bruteforce, all_pairs_indexed, pair_similarity

from helpers import matrix_as_dict, oracle_pairwise, random_table, table_from_sets


class TestPairSimilarity:
    def test_nested_pair_from_the_venn_sample(self):
        # LiveIn_Europe = {p1..p6}, LiveIn_Ireland = {p2,p3,p4}: the smaller
        # group is fully contained, so hpi = 3 / min(3, 6) = 1.
        europe = {1, 2, 3, 4, 5, 6}
        ireland = {2, 3, 4}
        inter, jaccard, hpi = pair_similarity(europe, ireland)
        assert inter == 3
        assert hpi == 1.0
        assert jaccard == 0.5

    def test_identical_sets(self):
        inter, jaccard, hpi = pair_similarity({1, 2, 3}, {1, 2, 3})
        assert (inter, jaccard, hpi) == (3, 1.0, 1.0)

    def test_disjoint_sets(self):
        inter, jaccard, hpi = pair_similarity({1, 2}, {3, 4})
        assert (inter, jaccard, hpi) == (0, 0.0, 0.0)

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            pair_similarity(set(), {1})

    @settings(max_examples=100, deadline=None)
    @given(
        a=st.sets(st.integers(0, 100), min_size=1, max_size=40),
        b=st.sets(st.integers(0, 100), min_size=1, max_size=40),
    )
    def test_symmetry_bounds_and_subset_detection(self, a, b):
        fwd = pair_similarity(a, b)
        rev = pair_similarity(b, a)
        assert fwd == rev
        inter, jaccard, hpi = fwd
        assert inter == len(a & b)
        assert 0.0 <= jaccard <= hpi <= 1.0
        small, large = (a, b) if len(a) <= len(b) else (b, a)
        assert (hpi == 1.0) == (small <= large)
        if jaccard == hpi:
            assert len(a) == len(b) or inter == 0


ENGINES = [("bruteforce", all_pairs_bruteforce), ("indexed", all_pairs_indexed)]


@pytest.mark.parametrize("name,engine", ENGINES, ids=[n for n, _ in ENGINES])
class TestEngines:
    def test_venn_sample_records(self, venn_triples, name, engine):
        table = generate_groups(venn_triples, alpha=1)
        matrix = engine(table)
        got = matrix_as_dict(matrix, table)
        # hand-enumerated overlaps of the four groups
        assert set(got) == {
            ("LiveIn_Europe", "LiveIn_Ireland"),
            ("LiveIn_Dublin", "LiveIn_Europe"),
            ("LiveIn_Europe", "Play_Rugby"),
            ("LiveIn_Dublin", "LiveIn_Ireland"),
        }
        assert got[("LiveIn_Europe", "LiveIn_Ireland")] == (3, 0.5, 1.0)
        assert got[("LiveIn_Dublin", "LiveIn_Europe")] == (1, 1 / 6, 1.0)
        assert got[("LiveIn_Europe", "Play_Rugby")] == (2, 2 / 6, 1.0)
        assert got[("LiveIn_Dublin", "LiveIn_Ireland")] == (1, 1 / 3, 1.0)

    def test_single_group_table(self, name, engine):
        table = table_from_sets({"only": {1, 2, 3}})
        assert len(engine(table)) == 0

    def test_disjoint_groups_give_empty_matrix(self, name, engine):
        table = table_from_sets({"a": {1, 2}, "b": {3, 4}, "c": {5}})
        assert len(engine(table)) == 0

    def test_empty_table(self, name, engine):
        table = table_from_sets({})
        assert len(engine(table)) == 0

    def test_matches_set_oracle(self, name, engine):
        rng = random.Random(11)
        for _ in range(10):
            table = random_table(rng, max_groups=30, max_entities=120)
            assert matrix_as_dict(engine(table), table) == oracle_pairwise(table)

    def test_job_count_invariance(self, name, engine):
        rng = random.Random(5)
        table = random_table(rng, max_groups=60, max_entities=300)
        reference = engine(table, jobs=1)
        for jobs in (2, 3, 8):
            assert engine(table, jobs=jobs) == reference

    def test_records_are_canonical_and_positive(self, name, engine):
        rng = random.Random(23)
        table = random_table(rng, max_groups=40, max_entities=150)
        matrix = engine(table)
        pairs = [(r.g1.sort_key, r.g2.sort_key) for r in matrix]
        assert pairs == sorted(pairs)
        assert all(r.g1.sort_key < r.g2.sort_key for r in matrix)
        assert all(r.intersection > 0 for r in matrix)


class TestEngineEquivalence:
    def test_engines_agree_on_random_tables(self):
        rng = random.Random(42)
        for _ in range(25):
            table = random_table(rng, max_groups=50, max_entities=400)
            assert all_pairs_indexed(table) == all_pairs_bruteforce(table)

    def test_engines_agree_on_the_venn_sample(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1)
        assert all_pairs_indexed(table) == all_pairs_bruteforce(table)


member_sets = st.lists(
    st.sets(st.integers(0, 60), min_size=1, max_size=25),
    min_size=2, max_size=12,
)


@settings(max_examples=80, deadline=None)
@given(sets=member_sets, jobs=st.integers(1, 5))
def test_engine_equivalence_property(sets, jobs):
    table = table_from_sets({f"g{i:02d}": s for i, s in enumerate(sets)})
    assert all_pairs_indexed(table, jobs=jobs) == all_pairs_bruteforce(table, jobs=jobs)
