"""splitsearch: a desk-scale sharded search engine with isolated write and read paths.

Write nodes consume document updates from per-field topics, build immutable
segments, and upload them to a shared object store.  Search nodes serve
queries from full in-memory indexes, polling the store for new segments and
consuming scalar-field updates directly into O(1) forward arrays.
"""

from .codec import DocIdSet, choose_kind
from .schema import (
    ColumnFamily,
    FieldSpec,
    IndexSchema,
    parse_schema,
    route_of,
    validate_update,
)

__all__ = [
    "ColumnFamily",
    "DocIdSet",
    "FieldSpec",
    "IndexSchema",
    "choose_kind",
    "parse_schema",
    "route_of",
    "validate_update",
]

__version__ = "0.1.0"
