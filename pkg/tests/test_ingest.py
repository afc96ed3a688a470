import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kghier.errors import KghierError, ParseError
from kghier.ingest import join_splits, parse_triples, write_tsv


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return str(path)


class TestParseTsv:
    def test_basic_line(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["p1\tLiveIn\tEurope"])
        assert list(parse_triples(path)) == [("p1", "LiveIn", "Europe")]

    def test_skips_blank_and_comment_lines(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["", "# header", "a\tr\tb", "   "])
        assert list(parse_triples(path)) == [("a", "r", "b")]

    def test_extra_fields_tolerated(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["a\tr\tb\t0.97"])
        assert list(parse_triples(path)) == [("a", "r", "b")]

    def test_too_few_fields_raises_with_line_number(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["a\tr\tb", "p1\tLiveIn"])
        with pytest.raises(ParseError) as err:
            list(parse_triples(path))
        assert err.value.lineno == 2
        assert "a.tsv" in str(err.value)

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(OSError):
            list(parse_triples(tmp_path / "missing.tsv"))

    def test_unknown_format(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["a\tr\tb"])
        with pytest.raises(KghierError):
            list(parse_triples(path, format="turtle"))


class TestParseNtriples:
    def test_brackets_stripped(self, tmp_path):
        path = write_lines(tmp_path / "a.nt", ["<a> <b> <c> ."])
        assert list(parse_triples(path, format="ntriples")) == [("a", "b", "c")]

    def test_literal_object(self, tmp_path):
        path = write_lines(tmp_path / "a.nt", ['<a> <b> "two words" .'])
        assert list(parse_triples(path, format="ntriples")) == [("a", "b", "two words")]

    def test_literal_with_language_tag(self, tmp_path):
        path = write_lines(tmp_path / "a.nt", ['<a> <b> "chat"@fr .'])
        assert list(parse_triples(path, format="ntriples")) == [("a", "b", "chat")]

    def test_literal_with_datatype(self, tmp_path):
        path = write_lines(
            tmp_path / "a.nt",
            ['<a> <b> "42"^^<http://www.w3.org/2001/XMLSchema#integer> .'],
        )
        assert list(parse_triples(path, format="ntriples")) == [("a", "b", "42")]

    def test_missing_terminator(self, tmp_path):
        path = write_lines(tmp_path / "a.nt", ["<a> <b> <c>"])
        with pytest.raises(ParseError) as err:
            list(parse_triples(path, format="ntriples"))
        assert err.value.lineno == 1

    def test_wrong_term_count(self, tmp_path):
        path = write_lines(tmp_path / "a.nt", ["<a> <b> ."])
        with pytest.raises(ParseError):
            list(parse_triples(path, format="ntriples"))

    def test_unterminated_literal(self, tmp_path):
        path = write_lines(tmp_path / "a.nt", ['<a> <b> "oops .'])
        with pytest.raises(ParseError):
            list(parse_triples(path, format="ntriples"))


class TestJoinSplits:
    def test_duplicates_collapse_across_files(self, tmp_path):
        train = write_lines(tmp_path / "train.tsv", ["a\tr\tb"])
        valid = write_lines(tmp_path / "valid.tsv", ["a\tr\tb"])
        test = write_lines(tmp_path / "test.tsv", ["c\tr\tb"])
        ts = join_splits([train, valid, test])
        assert len(ts) == 2
        assert set(ts.string_triples()) == {("a", "r", "b"), ("c", "r", "b")}

    def test_duplicates_collapse_within_file(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["a\tr\tb", "a\tr\tb", "a\tr\tb"])
        assert len(join_splits([path])) == 1

    def test_empty_union_is_an_error(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["", "# nothing"])
        with pytest.raises(KghierError, match="no triples"):
            join_splits([path])

    def test_no_paths_is_an_error(self):
        with pytest.raises(KghierError):
            join_splits([])

    def test_interning_is_first_appearance_order(self, tmp_path):
        path = write_lines(tmp_path / "a.tsv", ["s1\tr\to1", "o1\tr\ts1"])
        ts = join_splits([path])
        assert ts.symbols.entity(0) == "s1"
        assert ts.symbols.entity(1) == "o1"
        assert ts.symbols.predicate(0) == "r"

    def test_order_insensitive_at_string_level(self, tmp_path):
        a = write_lines(tmp_path / "a.tsv", ["a\tr\tb", "b\tr\tc"])
        b = write_lines(tmp_path / "b.tsv", ["x\tq\ty", "a\tr\tb"])
        forward = set(join_splits([a, b]).string_triples())
        backward = set(join_splits([b, a]).string_triples())
        assert forward == backward

    def test_join_is_idempotent_over_repeats(self, tmp_path):
        a = write_lines(tmp_path / "a.tsv", ["a\tr\tb", "b\tr\tc"])
        once = join_splits([a]).string_triples()
        twice = join_splits([a, a]).string_triples()
        assert once == twice

    def test_roundtrip_through_tsv(self, tmp_path):
        a = write_lines(tmp_path / "a.tsv", ["a\tr\tb", "b\tr\tc", "a\tq\tc"])
        ts = join_splits([a])
        out = tmp_path / "out.tsv"
        write_tsv(ts, out)
        again = join_splits([out])
        assert again.string_triples() == ts.string_triples()
        assert (again.triples == ts.triples).all()


name = st.text(
    alphabet=st.characters(whitelist_categories=("L", "N"), max_codepoint=0x2FF),
    min_size=1, max_size=8,
)
triples_strategy = st.lists(st.tuples(name, name, name), min_size=1, max_size=60)


@settings(max_examples=60, deadline=None)
@given(triples=triples_strategy)
def test_roundtrip_stability_property(tmp_path_factory, triples):
    tmp = tmp_path_factory.mktemp("rt")
    src = tmp / "src.tsv"
    src.write_text("".join("\t".join(t) + "\n" for t in triples), encoding="utf-8")
    ts = join_splits([src])
    out = tmp / "out.tsv"
    write_tsv(ts, out)
    again = join_splits([out])
    assert again.string_triples() == ts.string_triples()
