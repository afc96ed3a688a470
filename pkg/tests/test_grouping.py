import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kghier.errors import ConfigError
from kghier.grouping import GroupKey, generate_groups, group_stats
from kghier.ingest import TripleSet, SymbolTable

from helpers import random_triple_lines


def table_names(table):
    return {key.display_name: set(members.tolist()) for key, members in table.groups.items()}


def names_of(table, triples):
    sym = triples.symbols
    return {
        key.display_name: {sym.entity(int(e)) for e in members}
        for key, members in table.groups.items()
    }


class TestVennSample:
    # The six-person sample: everyone lives in Europe, three in Ireland,
    # one in Dublin, two play rugby.
    def test_groups_at_alpha_one(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1)
        groups = names_of(table, venn_triples)
        assert groups["LiveIn_Europe"] == {"p1", "p2", "p3", "p4", "p5", "p6"}
        assert groups["LiveIn_Ireland"] == {"p2", "p3", "p4"}
        assert groups["LiveIn_Dublin"] == {"p3"}
        assert groups["Play_Rugby"] == {"p5", "p6"}
        assert len(table) == 4

    def test_alpha_ten_filters_everything(self, venn_triples):
        table = generate_groups(venn_triples, alpha=10)
        assert len(table) == 0

    def test_stats_cover_all_groups(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1)
        stats = group_stats(table)
        assert stats["group_count"] == 4
        assert sum(stats["histogram"].values()) == 4
        assert ("LiveIn_Europe", 6) in stats["largest"]


class TestContracts:
    def test_alpha_below_one_rejected(self, venn_triples):
        with pytest.raises(ConfigError):
            generate_groups(venn_triples, alpha=0)

    def test_jobs_below_one_rejected(self, venn_triples):
        with pytest.raises(ConfigError):
            generate_groups(venn_triples, jobs=0)

    def test_members_sorted_unique(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1)
        for members in table.groups.values():
            assert (np.diff(members) > 0).all()

    def test_keys_in_canonical_order(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1)
        keys = table.sorted_keys()
        assert keys == sorted(keys, key=lambda k: k.sort_key)

    def test_group_key_identity_is_the_id_pair(self):
        a = GroupKey(1, 2, "one_name")
        b = GroupKey(1, 2, "other_name")
        assert a == b and hash(a) == hash(b)
        assert GroupKey(1, 2, "x") != GroupKey(2, 1, "x")
        assert GroupKey(1, 2, "x", inverse=True) != GroupKey(1, 2, "x")


def triples_from_lines(tmp_path, lines):
    from kghier.ingest import join_splits

    path = tmp_path / "g.tsv"
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return join_splits([path])


class TestJobInvariance:
    def test_random_graph_jobs_match_serial_oracle(self, tmp_path):
        rng = random.Random(7)
        triples = triples_from_lines(tmp_path, random_triple_lines(rng, 1000))
        reference = table_names(generate_groups(triples, alpha=1, jobs=1))
        for jobs in (2, 4, 13):
            assert table_names(generate_groups(triples, alpha=1, jobs=jobs)) == reference

    def test_jobs_larger_than_triple_count(self, venn_triples):
        ref = table_names(generate_groups(venn_triples, alpha=1, jobs=1))
        assert table_names(generate_groups(venn_triples, alpha=1, jobs=64)) == ref


class TestInverseGrouping:
    def test_inverse_adds_object_side_groups(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1, inverse=True)
        groups = names_of(table, venn_triples)
        # forward groups still present
        assert groups["LiveIn_Europe"] == {"p1", "p2", "p3", "p4", "p5", "p6"}
        # p3 lives in Europe, Ireland and Dublin
        assert groups["p3_LiveIn"] == {"Europe", "Ireland", "Dublin"}

    def test_inverse_off_by_default(self, venn_triples):
        table = generate_groups(venn_triples, alpha=1)
        assert all(not key.inverse for key in table)


small_graph = st.lists(
    st.tuples(st.integers(0, 12), st.integers(0, 3), st.integers(0, 6)),
    min_size=1, max_size=80,
)


def triple_set_from_tuples(tuples):
    symbols = SymbolTable()
    rows = []
    seen = set()
    for s, p, o in tuples:
        row = (
            symbols.intern_entity(f"e{s}"),
            symbols.intern_predicate(f"r{p}"),
            symbols.intern_entity(f"e{o}"),
        )
        if row not in seen:
            seen.add(row)
            rows.append(row)
    return TripleSet(np.array(rows, dtype=np.int64), symbols)


@settings(max_examples=80, deadline=None)
@given(tuples=small_graph, alpha=st.integers(1, 5), jobs=st.integers(1, 6))
def test_membership_follows_triples_exactly(tuples, alpha, jobs):
    ts = triple_set_from_tuples(tuples)
    table = generate_groups(ts, alpha=alpha, jobs=jobs)
    # oracle: group (p, o) membership straight from the deduplicated triples
    expected = {}
    for s, p, o in ts.triples.tolist():
        expected.setdefault((p, o), set()).add(s)
    surviving = {k: v for k, v in expected.items() if len(v) >= alpha}
    actual = {(k.predicate, k.object): set(m.tolist()) for k, m in table.groups.items()}
    assert actual == surviving


@settings(max_examples=40, deadline=None)
@given(tuples=small_graph, alpha=st.integers(1, 4))
def test_raising_alpha_only_removes_groups(tuples, alpha):
    ts = triple_set_from_tuples(tuples)
    low = {(k.predicate, k.object): set(m.tolist())
           for k, m in generate_groups(ts, alpha=alpha).groups.items()}
    high = {(k.predicate, k.object): set(m.tolist())
            for k, m in generate_groups(ts, alpha=alpha + 1).groups.items()}
    assert set(high) <= set(low)
    for key, members in high.items():
        assert members == low[key]


def test_empty_table_stats():
    from helpers import table_from_sets

    stats = group_stats(table_from_sets({}))
    assert stats == {"group_count": 0, "histogram": {}, "largest": []}


def test_single_group_histogram():
    from helpers import table_from_sets

    stats = group_stats(table_from_sets({"g": set(range(10))}))
    assert stats["group_count"] == 1
    assert stats["histogram"] == {"8-15": 1}
    assert stats["largest"] == [("g", 10)]
