"""Exception hierarchy shared across the engine."""

from __future__ import annotations


class SplitSearchError(Exception):
    """Base class for every error raised by this package."""


class SchemaError(SplitSearchError):
    """Invalid schema document or a violated schema constraint."""


class SchemaSyntaxError(SchemaError):
    """Schema text is not well formed; carries the offending position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownFieldError(SplitSearchError):
    """A field name that does not exist in the index schema."""


class TypeMismatchError(SplitSearchError):
    """A value whose type does not match the field's declared kind."""


class CorruptPayloadError(SplitSearchError):
    """Serialized bytes that cannot be decoded; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class SegmentFormatError(SplitSearchError):
    """Segment bytes violate the on-disk format contract."""


class BadMagicError(SegmentFormatError):
    """Segment bytes do not start with the expected magic."""


class ChecksumMismatchError(SegmentFormatError):
    """Segment body does not match its trailer checksum."""


class UnsupportedVersionError(SegmentFormatError):
    """Segment format version this reader does not understand."""


class EmptyBufferError(SplitSearchError):
    """Attempt to seal a segment buffer holding no documents."""


class BufferConsumedError(SplitSearchError):
    """Attempt to reuse a segment buffer after it was sealed."""


class DocumentError(SplitSearchError):
    """A document that does not conform to the index schema."""


class OutOfOrderSegmentError(SplitSearchError):
    """Segment incorporated with a non-increasing segment id."""


class LogError(SplitSearchError):
    """Base class for update-log errors."""


class UnknownTopicError(LogError):
    """Topic name not present in the broker."""


class UnknownGroupError(LogError):
    """Consumer group that was never registered."""


class RoutingMismatchError(LogError):
    """Record shape does not match the topic's update path."""


class OffsetRegressionError(LogError):
    """Commit below the group's already committed offset."""


class StoreError(SplitSearchError):
    """Base class for object-store errors."""


class ObjectExistsError(StoreError):
    """Put of a key that already holds an object."""


class ObjectNotFoundError(StoreError):
    """Get of a key with no object."""


class QuerySyntaxError(SplitSearchError):
    """Query text that does not parse; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class FieldMisuseError(SplitSearchError):
    """Query clause applied to a field whose routing does not support it."""
