import json

import pytest

from splitsearch.errors import (
    SchemaError,
    SchemaSyntaxError,
    TypeMismatchError,
    UnknownFieldError,
)
from splitsearch.schema import parse_schema, route_of, validate_update

from conftest import PRODUCTS_SCHEMA


def _doc(**overrides):
    base = json.loads(json.dumps(PRODUCTS_SCHEMA))
    base.update(overrides)
    return json.dumps(base)


def test_parse_products_schema(products_schema):
    assert products_schema.index_name == "products"
    assert len(products_schema.families) == 2
    assert {f.name for f in products_schema.fields} == {
        "id", "title", "brand", "price", "stock_level", "tags",
    }
    assert products_schema.field_spec("title").path == "segment"
    assert products_schema.field_spec("price").path == "in-place"
    assert products_schema.field_spec("price").fast_search


def test_parse_is_pure(products_schema):
    text = json.dumps(PRODUCTS_SCHEMA)
    assert parse_schema(text) == parse_schema(text)


def test_zero_non_key_fields_is_valid():
    schema = parse_schema(_doc(fields=[{"name": "id", "kind": "keyword", "family": "cf-text"}]))
    assert len(schema.fields) == 1
    assert schema.primary_key_field == "id"


def test_text_field_cannot_be_in_place():
    fields = json.loads(json.dumps(PRODUCTS_SCHEMA["fields"]))
    fields[1]["family"] = "cf-realtime"  # title
    with pytest.raises(SchemaError):
        parse_schema(_doc(fields=fields))


def test_fast_search_requires_in_place():
    fields = json.loads(json.dumps(PRODUCTS_SCHEMA["fields"]))
    fields[2]["fast_search"] = True  # brand, segment path
    with pytest.raises(SchemaError):
        parse_schema(_doc(fields=fields))


def test_unknown_family_rejected():
    fields = json.loads(json.dumps(PRODUCTS_SCHEMA["fields"]))
    fields[0]["family"] = "cf-bogus"
    with pytest.raises(SchemaError):
        parse_schema(_doc(fields=fields))


def test_duplicate_field_rejected():
    fields = json.loads(json.dumps(PRODUCTS_SCHEMA["fields"]))
    fields.append(dict(fields[1]))
    with pytest.raises(SchemaError, match="duplicate"):
        parse_schema(_doc(fields=fields))


def test_duplicate_family_rejected():
    fams = json.loads(json.dumps(PRODUCTS_SCHEMA["families"]))
    fams.append(dict(fams[0]))
    with pytest.raises(SchemaError):
        parse_schema(_doc(families=fams))


def test_primary_key_must_be_segment_keyword():
    with pytest.raises(SchemaError):
        parse_schema(_doc(primary_key="price"))
    with pytest.raises(SchemaError):
        parse_schema(_doc(primary_key="nope"))


def test_syntax_error_reports_position():
    with pytest.raises(SchemaSyntaxError) as exc:
        parse_schema('{"index": "x", ')
    assert exc.value.line >= 1


def test_non_positive_sla_rejected():
    fams = json.loads(json.dumps(PRODUCTS_SCHEMA["families"]))
    fams[0]["freshness_sla_ms"] = 0
    with pytest.raises(SchemaError):
        parse_schema(_doc(families=fams))


def test_route_of(products_schema):
    assert route_of(products_schema, "price") == ("in-place", "products.price")
    assert route_of(products_schema, "title") == ("segment", "products.title")
    with pytest.raises(UnknownFieldError):
        route_of(products_schema, "nonexistent")


def test_routes_partition_field_set(products_schema):
    seg = {f.name for f in products_schema.segment_fields()}
    inp = {f.name for f in products_schema.in_place_fields()}
    assert seg & inp == set()
    assert seg | inp == {f.name for f in products_schema.fields}
    for name in seg | inp:
        path, _ = route_of(products_schema, name)
        assert (path == "segment") == (name in seg)


def test_validate_update(products_schema):
    validate_update(products_schema, "price", 9.99)
    validate_update(products_schema, "stock_level", 0)
    validate_update(products_schema, "tags", "sale")
    with pytest.raises(TypeMismatchError):
        validate_update(products_schema, "price", "cheap")
    with pytest.raises(TypeMismatchError):
        validate_update(products_schema, "stock_level", 1.5)
    with pytest.raises(TypeMismatchError):
        validate_update(products_schema, "stock_level", True)
    with pytest.raises(UnknownFieldError):
        validate_update(products_schema, "nope", 1)


def test_int_accepted_for_float64(products_schema):
    validate_update(products_schema, "price", 10)
