from pathlib import Path

import pytest

from kghier.ingest import join_splits

DATA_DIR = Path(__file__).parent / "data"
VENN_TSV = DATA_DIR / "europe_people.tsv"


@pytest.fixture
def venn_path():
    return VENN_TSV


@pytest.fixture
def venn_triples():
    return join_splits([VENN_TSV])
