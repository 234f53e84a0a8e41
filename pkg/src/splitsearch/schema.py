"""Index schema: field kinds, column families, and per-field update routing.

Every field is assigned to a column family, and the family fixes the
field's update path: ``segment`` fields are (re)indexed by write nodes
into immutable segments, ``in-place`` fields are written directly into
RAM-resident forward arrays on search nodes.  The routing is declared
once, at index-creation time, and never changes afterwards.

Schema documents are JSON::

    {
      "index": "products",
      "primary_key": "id",
      "families": [
        {"name": "cf-text", "freshness_sla_ms": 300000, "path": "segment"},
        {"name": "cf-realtime", "freshness_sla_ms": 1000, "path": "in-place"}
      ],
      "fields": [
        {"name": "id", "kind": "keyword", "family": "cf-text"},
        {"name": "title", "kind": "text", "family": "cf-text"},
        {"name": "price", "kind": "float64", "family": "cf-realtime",
         "fast_search": true}
      ]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import SchemaError, SchemaSyntaxError, TypeMismatchError, UnknownFieldError

SEGMENT = "segment"
IN_PLACE = "in-place"

FIELD_KINDS = ("text", "keyword", "int64", "float64")
UPDATE_PATHS = (SEGMENT, IN_PLACE)


@dataclass(frozen=True)
class FieldSpec:
    """One field's declaration: kind, family, routing, and options."""

    name: str
    kind: str
    path: str
    column_family: str
    fast_search: bool = False

    def __post_init__(self):
        if self.kind not in FIELD_KINDS:
            raise SchemaError(f"field {self.name!r}: unknown kind {self.kind!r}")
        if self.path not in UPDATE_PATHS:
            raise SchemaError(f"field {self.name!r}: unknown path {self.path!r}")
        if self.kind == "text" and self.path != SEGMENT:
            raise SchemaError(
                f"field {self.name!r}: text fields require tokenization and must "
                f"travel the segment path"
            )
        if self.path == IN_PLACE and self.kind not in ("keyword", "int64", "float64"):
            raise SchemaError(
                f"field {self.name!r}: kind {self.kind!r} cannot be routed in-place"
            )
        if self.fast_search and self.path != IN_PLACE:
            raise SchemaError(
                f"field {self.name!r}: fast_search requires the in-place path"
            )


@dataclass(frozen=True)
class ColumnFamily:
    """A group of fields sharing an update path and freshness SLA."""

    name: str
    freshness_sla_ms: int
    path: str

    def __post_init__(self):
        if self.freshness_sla_ms <= 0:
            raise SchemaError(
                f"family {self.name!r}: freshness_sla_ms must be positive"
            )
        if self.path not in UPDATE_PATHS:
            raise SchemaError(f"family {self.name!r}: unknown path {self.path!r}")


@dataclass(frozen=True)
class IndexSchema:
    """Validated, immutable schema for one index.

    Immutable after construction; safe to share across threads without
    synchronization.
    """

    index_name: str
    primary_key_field: str
    fields: tuple[FieldSpec, ...]
    families: tuple[ColumnFamily, ...]
    _by_name: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        fam_names = [f.name for f in self.families]
        if len(set(fam_names)) != len(fam_names):
            raise SchemaError("duplicate column family names")
        fams = {f.name: f for f in self.families}

        names = [f.name for f in self.fields]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise SchemaError(f"duplicate field names: {dupes}")

        for spec in self.fields:
            fam = fams.get(spec.column_family)
            if fam is None:
                raise SchemaError(
                    f"field {spec.name!r}: unknown family {spec.column_family!r}"
                )
            if fam.path != spec.path:
                raise SchemaError(
                    f"field {spec.name!r}: path {spec.path!r} differs from family "
                    f"{fam.name!r} path {fam.path!r}"
                )

        pk = next((f for f in self.fields if f.name == self.primary_key_field), None)
        if pk is None:
            raise SchemaError(
                f"primary key {self.primary_key_field!r} is not a declared field"
            )
        if pk.kind != "keyword" or pk.path != SEGMENT:
            raise SchemaError("primary key must be a keyword field on the segment path")

        object.__setattr__(self, "_by_name", {f.name: f for f in self.fields})

    def field_spec(self, name: str) -> FieldSpec:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownFieldError(f"unknown field {name!r}") from None

    def family(self, name: str) -> ColumnFamily:
        for fam in self.families:
            if fam.name == name:
                return fam
        raise SchemaError(f"unknown family {name!r}")

    def topic_name(self, field_name: str) -> str:
        """Derived per-field topic name ``<index>.<field>``."""
        self.field_spec(field_name)
        return f"{self.index_name}.{field_name}"

    def segment_fields(self) -> tuple[FieldSpec, ...]:
        return tuple(f for f in self.fields if f.path == SEGMENT)

    def in_place_fields(self) -> tuple[FieldSpec, ...]:
        return tuple(f for f in self.fields if f.path == IN_PLACE)

    def indexed_fields(self) -> tuple[FieldSpec, ...]:
        """Fields that appear in segment term dictionaries."""
        return tuple(
            f for f in self.fields
            if f.path == SEGMENT and f.kind in ("text", "keyword")
        )


def parse_schema(document: str) -> IndexSchema:
    """Parse and validate a JSON schema document.

    Args:
        document: schema text in the format shown in the module docstring.

    Returns:
        A validated :class:`IndexSchema`.

    Raises:
        SchemaSyntaxError: malformed JSON (position reported) or a section
            with the wrong shape.
        SchemaError: a violated schema constraint (text field routed
            in-place, unknown family, duplicate field, ...).
    """
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise SchemaSyntaxError("schema document must be a JSON object", 1, 1)

    def _require(obj, key, typ, where):
        if key not in obj:
            raise SchemaSyntaxError(f"{where}: missing {key!r}", 1, 1)
        val = obj[key]
        if not isinstance(val, typ) or (typ is int and isinstance(val, bool)):
            raise SchemaSyntaxError(f"{where}: {key!r} has the wrong type", 1, 1)
        return val

    index_name = _require(raw, "index", str, "schema")
    primary_key = _require(raw, "primary_key", str, "schema")

    families = []
    for i, fam in enumerate(_require(raw, "families", list, "schema")):
        if not isinstance(fam, dict):
            raise SchemaSyntaxError(f"families[{i}] must be an object", 1, 1)
        families.append(
            ColumnFamily(
                name=_require(fam, "name", str, f"families[{i}]"),
                freshness_sla_ms=_require(fam, "freshness_sla_ms", int, f"families[{i}]"),
                path=_require(fam, "path", str, f"families[{i}]"),
            )
        )
    fam_paths = {f.name: f.path for f in families}

    fields = []
    for i, fld in enumerate(_require(raw, "fields", list, "schema")):
        if not isinstance(fld, dict):
            raise SchemaSyntaxError(f"fields[{i}] must be an object", 1, 1)
        name = _require(fld, "name", str, f"fields[{i}]")
        family_name = _require(fld, "family", str, f"fields[{i}]")
        if family_name not in fam_paths:
            raise SchemaError(f"field {name!r}: unknown family {family_name!r}")
        fields.append(
            FieldSpec(
                name=name,
                kind=_require(fld, "kind", str, f"fields[{i}]"),
                path=fam_paths[family_name],
                column_family=family_name,
                fast_search=bool(fld.get("fast_search", False)),
            )
        )

    return IndexSchema(
        index_name=index_name,
        primary_key_field=primary_key,
        fields=tuple(fields),
        families=tuple(families),
    )


def route_of(schema: IndexSchema, field_name: str) -> tuple[str, str]:
    """Return ``(update_path, topic_name)`` for a field.

    Raises:
        UnknownFieldError: the field is not declared in the schema.
    """
    spec = schema.field_spec(field_name)
    return spec.path, f"{schema.index_name}.{field_name}"


def validate_update(schema: IndexSchema, field_name: str, value) -> None:
    """Check that ``value``'s type matches the field's declared kind.

    Raises:
        UnknownFieldError: the field is not declared.
        TypeMismatchError: the value's type does not match the kind.
    """
    spec = schema.field_spec(field_name)
    kind = spec.kind
    if kind in ("text", "keyword"):
        ok = isinstance(value, str)
    elif kind == "int64":
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:  # float64; ints promote safely
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    if not ok:
        raise TypeMismatchError(
            f"field {field_name!r} expects {kind}, got {type(value).__name__}"
        )
