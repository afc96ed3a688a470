"""Load triple dumps into an interned, deduplicated triple set.

Two input formats are supported: tab-separated ``s\\tp\\to`` lines (the way
the common benchmark dumps ship) and a minimal N-Triples subset (``<s> <p>
<o> .`` statements, no blank nodes, literals kept as opaque strings).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from .errors import KghierError, ParseError

FORMATS = ("tsv", "ntriples")


class Triple(NamedTuple):
    """One fact, with all three positions interned to integer ids."""

    subject: int
    predicate: int
    object: int


class SymbolTable:
    """Bijection between strings and dense integer ids.

    Entities and predicates live in separate namespaces. Ids are assigned in
    first-appearance order, so they are a deterministic function of the input
    sequence.
    """

    def __init__(self):
        self._entities: list[str] = []
        self._predicates: list[str] = []
        self._entity_ids: dict[str, int] = {}
        self._predicate_ids: dict[str, int] = {}

    def intern_entity(self, s: str) -> int:
        i = self._entity_ids.get(s)
        if i is None:
            i = len(self._entities)
            self._entity_ids[s] = i
            self._entities.append(s)
        return i

    def intern_predicate(self, s: str) -> int:
        i = self._predicate_ids.get(s)
        if i is None:
            i = len(self._predicates)
            self._predicate_ids[s] = i
            self._predicates.append(s)
        return i

    def entity(self, i: int) -> str:
        return self._entities[i]

    def predicate(self, i: int) -> str:
        return self._predicates[i]

    @property
    def n_entities(self) -> int:
        return len(self._entities)

    @property
    def n_predicates(self) -> int:
        return len(self._predicates)


@dataclass
class TripleSet:
    """Deduplicated triples plus the symbol table that interned them.

    ``triples`` is an ``(n, 3)`` int64 array of (subject, predicate, object)
    ids in first-appearance order.
    """

    triples: np.ndarray
    symbols: SymbolTable
    source_files: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return int(self.triples.shape[0])

    def iter_triples(self) -> Iterator[Triple]:
        for s, p, o in self.triples.tolist():
            yield Triple(s, p, o)

    def string_triples(self) -> list[tuple[str, str, str]]:
        sym = self.symbols
        return [
            (sym.entity(s), sym.predicate(p), sym.entity(o))
            for s, p, o in self.triples.tolist()
        ]


def parse_triples(path, format: str = "tsv") -> Iterator[tuple[str, str, str]]:
    """Yield one (subject, predicate, object) string triple per data line.

    Blank lines and lines starting with ``#`` are skipped. Malformed lines
    raise :class:`ParseError` carrying the file and line number.
    """
    if format not in FORMATS:
        raise KghierError(f"unknown format {format!r}, expected one of {FORMATS}")
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if format == "tsv":
                fields = line.rstrip("\r\n").split("\t")
                if len(fields) < 3:
                    raise ParseError(
                        path, lineno,
                        f"expected at least 3 tab-separated fields, got {len(fields)}",
                    )
                yield fields[0], fields[1], fields[2]
            else:
                yield _parse_ntriples_line(stripped, path, lineno)


def _parse_ntriples_line(stmt: str, path, lineno: int) -> tuple[str, str, str]:
    if not stmt.endswith("."):
        raise ParseError(path, lineno, "statement does not end with '.'")
    stmt = stmt[:-1].rstrip()
    terms = []
    i, n = 0, len(stmt)
    while i < n:
        while i < n and stmt[i] in " \t":
            i += 1
        if i >= n:
            break
        c = stmt[i]
        if c == "<":
            j = stmt.find(">", i + 1)
            if j < 0:
                raise ParseError(path, lineno, "unterminated '<' term")
            terms.append(stmt[i + 1:j])
            i = j + 1
        elif c == '"':
            j = i + 1
            while j < n and stmt[j] != '"':
                j += 2 if stmt[j] == "\\" else 1
            if j >= n:
                raise ParseError(path, lineno, "unterminated string literal")
            terms.append(stmt[i + 1:j])
            i = j + 1
            # Ignore any @lang / ^^<datatype> tail; the lexical form is kept
            # as an opaque string.
            while i < n and stmt[i] not in " \t":
                if stmt[i] == "<":
                    k = stmt.find(">", i + 1)
                    if k < 0:
                        raise ParseError(path, lineno, "unterminated '<' term")
                    i = k + 1
                else:
                    i += 1
        else:
            j = i
            while j < n and stmt[j] not in " \t":
                j += 1
            terms.append(stmt[i:j])
            i = j
    if len(terms) != 3:
        raise ParseError(path, lineno, f"expected 3 terms, got {len(terms)}")
    return terms[0], terms[1], terms[2]


def join_splits(paths, format: str = "tsv") -> TripleSet:
    """Parse and union several triple files into one deduplicated set.

    Files are processed in the given order; within a triple the subject is
    interned before the object. A triple seen twice (within or across files)
    is kept once.
    """
    paths = [str(p) for p in paths]
    if not paths:
        raise KghierError("no input files")
    symbols = SymbolTable()
    seen: set[tuple[int, int, int]] = set()
    rows: list[tuple[int, int, int]] = []
    for path in paths:
        for s, p, o in parse_triples(path, format=format):
            row = (
                symbols.intern_entity(s),
                symbols.intern_predicate(p),
                symbols.intern_entity(o),
            )
            if row not in seen:
                seen.add(row)
                rows.append(row)
    if not rows:
        raise KghierError("no triples")
    triples = np.array(rows, dtype=np.int64)
    return TripleSet(triples=triples, symbols=symbols, source_files=paths)


def write_tsv(triple_set: TripleSet, path) -> None:
    """Serialize a triple set back to tab-separated lines, in stored order."""
    with open(path, "w", encoding="utf-8") as fh:
        for s, p, o in triple_set.string_triples():
            fh.write(f"{s}\t{p}\t{o}\n")
