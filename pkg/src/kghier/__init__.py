"""kghier: named entity groups and containment hierarchies from KG triples."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402,F401
    ConfigError,
    DocumentError,
    IntegrityError,
    KghierError,
    ParseError,
)
from .ingest import SymbolTable, Triple, TripleSet, join_splits, parse_triples, write_tsv  # noqa: E402,F401
from .grouping import GroupKey, GroupTable, generate_groups, group_stats  # noqa: E402,F401
from .similarity import (  # noqa: E402,F401
    SimilarityMatrix,
    SimilarityRecord,
    all_pairs_bruteforce,
    all_pairs_indexed,
    pair_similarity,
)
from .hierarchy import (  # noqa: E402,F401
    HierarchyDag,
    HierarchyNode,
    build_hierarchy,
    dag_stats,
    forest_view,
)
from .export import (  # noqa: E402,F401
    build_document,
    emit_viewer,
    export_dot,
    export_json,
    load_document,
    validate_document,
    write_similarity_csv,
)
