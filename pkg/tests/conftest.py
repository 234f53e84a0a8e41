import json

import pytest

from splitsearch.schema import parse_schema

PRODUCTS_SCHEMA = {
    "index": "products",
    "primary_key": "id",
    "families": [
        {"name": "cf-text", "freshness_sla_ms": 300_000, "path": "segment"},
        {"name": "cf-realtime", "freshness_sla_ms": 1_000, "path": "in-place"},
    ],
    "fields": [
        {"name": "id", "kind": "keyword", "family": "cf-text"},
        {"name": "title", "kind": "text", "family": "cf-text"},
        {"name": "brand", "kind": "keyword", "family": "cf-text"},
        {"name": "price", "kind": "float64", "family": "cf-realtime", "fast_search": True},
        {"name": "stock_level", "kind": "int64", "family": "cf-realtime"},
        {"name": "tags", "kind": "keyword", "family": "cf-realtime"},
    ],
}


@pytest.fixture
def products_schema():
    return parse_schema(json.dumps(PRODUCTS_SCHEMA))
