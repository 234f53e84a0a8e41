"""Compressed sets of 32-bit document ordinals.

A :class:`DocIdSet` splits its members by the high 16 bits into chunks of
up to 65536 values and stores each chunk in whichever of three container
shapes is cheapest:

* ``array``  — sorted u16 values, at most 4096 of them (2 bytes/value);
* ``bitmap`` — a fixed 8192-byte bit field;
* ``run``    — sorted, disjoint, non-adjacent (start, length) intervals.

Sets are immutable from the caller's point of view: every operation
returns a new set (unchanged chunks are shared structurally), so a set
may be handed to concurrent readers without synchronization.

Wire format (little-endian): ``u32 chunk_count`` then per chunk
``u16 key, u8 kind, u16 cardinality_minus_1, payload`` where the payload
is the u16 values for an array, 8192 raw bytes for a bitmap, or
``u16 run_count`` followed by ``(u16 start, u16 length_minus_1)`` pairs
for a run container.
"""

from __future__ import annotations

import struct
from array import array
from bisect import bisect_left, bisect_right, insort
from typing import Iterable, Iterator

from .errors import CorruptPayloadError

ARRAY_MAX = 4096          # largest cardinality stored as a sorted u16 array
BITMAP_BYTES = 8192       # 65536 bits
CHUNK_SIZE = 1 << 16
MAX_ORDINAL = (1 << 32) - 1

KIND_ARRAY = 0
KIND_BITMAP = 1
KIND_RUN = 2
_KIND_NAMES = {KIND_ARRAY: "array", KIND_BITMAP: "bitmap", KIND_RUN: "run"}

# Set-bit positions per byte value, for bitmap iteration.
_BYTE_BITS = tuple(
    tuple(bit for bit in range(8) if byte & (1 << bit)) for byte in range(256)
)

_HEADER = struct.Struct("<I")
_CHUNK_HEAD = struct.Struct("<HBH")


def choose_kind(cardinality: int, run_count: int) -> str:
    """Pick the cheapest container shape for the given shape statistics.

    The decision compares serialized payload sizes: 2 bytes per value for
    an array (only allowed up to 4096 values), ``4 * run_count + 4`` bytes
    for a run container, 8192 bytes for a bitmap.  Deterministic.
    """
    if cardinality < 0 or run_count < 0 or run_count > cardinality:
        raise ValueError(f"inconsistent counts ({cardinality}, {run_count})")
    array_bytes = 2 * cardinality
    run_bytes = 4 * run_count + 4
    if cardinality <= ARRAY_MAX and array_bytes <= run_bytes:
        return "array"
    if run_bytes < min(array_bytes, BITMAP_BYTES):
        return "run"
    return "bitmap"


def _runs_of_sorted(values) -> int:
    """Number of maximal consecutive runs in a strictly increasing sequence."""
    if not values:
        return 0
    runs = 1
    prev = values[0]
    for v in values[1:]:
        if v != prev + 1:
            runs += 1
        prev = v
    return runs


# ---------------------------------------------------------------------------
# Containers.  All hold values in [0, 65536) and are treated as immutable
# after construction; mutating helpers return fresh containers.
# ---------------------------------------------------------------------------


class _Array:
    __slots__ = ("vals", "_runs")
    kind = KIND_ARRAY

    def __init__(self, vals: array, runs: int | None = None):
        self.vals = vals
        self._runs = runs

    def card(self) -> int:
        return len(self.vals)

    def runs(self) -> int:
        if self._runs is None:
            self._runs = _runs_of_sorted(self.vals)
        return self._runs

    def __contains__(self, v: int) -> bool:
        i = bisect_left(self.vals, v)
        return i < len(self.vals) and self.vals[i] == v

    def __iter__(self) -> Iterator[int]:
        return iter(self.vals)

    def rank(self, v: int) -> int:
        return bisect_left(self.vals, v)

    def min(self) -> int:
        return self.vals[0]

    def max(self) -> int:
        return self.vals[-1]

    def to_u16(self) -> array:
        return self.vals

    def payload_bytes(self) -> int:
        return 2 * len(self.vals)

    def serialize_into(self, out: bytearray):
        out += self.vals.tobytes()


class _Bitmap:
    __slots__ = ("buf", "_card", "_runs")
    kind = KIND_BITMAP

    def __init__(self, buf: bytes, card: int | None = None, runs: int | None = None):
        self.buf = buf
        self._card = card
        self._runs = runs

    def card(self) -> int:
        if self._card is None:
            self._card = int.from_bytes(self.buf, "little").bit_count()
        return self._card

    def runs(self) -> int:
        if self._runs is None:
            x = int.from_bytes(self.buf, "little")
            self._runs = (x & ~(x << 1)).bit_count()
        return self._runs

    def __contains__(self, v: int) -> bool:
        return bool(self.buf[v >> 3] & (1 << (v & 7)))

    def __iter__(self) -> Iterator[int]:
        base = 0
        for byte in self.buf:
            if byte:
                for bit in _BYTE_BITS[byte]:
                    yield base + bit
            base += 8

    def rank(self, v: int) -> int:
        nbytes = v >> 3
        r = int.from_bytes(self.buf[:nbytes], "little").bit_count()
        rem = self.buf[nbytes] & ((1 << (v & 7)) - 1)
        return r + rem.bit_count()

    def min(self) -> int:
        for i, byte in enumerate(self.buf):
            if byte:
                return (i << 3) + _BYTE_BITS[byte][0]
        raise ValueError("empty bitmap")

    def max(self) -> int:
        for i in range(len(self.buf) - 1, -1, -1):
            if self.buf[i]:
                return (i << 3) + _BYTE_BITS[self.buf[i]][-1]
        raise ValueError("empty bitmap")

    def to_u16(self) -> array:
        return array("H", self)

    def payload_bytes(self) -> int:
        return BITMAP_BYTES

    def serialize_into(self, out: bytearray):
        out += self.buf


class _Run:
    __slots__ = ("runs_list", "_card")
    kind = KIND_RUN

    def __init__(self, runs_list: tuple, card: int | None = None):
        # runs_list: sorted, disjoint, non-adjacent (start, length) pairs
        # with length >= 1; serialized as (start, length - 1).
        self.runs_list = runs_list
        self._card = card

    def card(self) -> int:
        if self._card is None:
            self._card = sum(n for _, n in self.runs_list)
        return self._card

    def runs(self) -> int:
        return len(self.runs_list)

    def __contains__(self, v: int) -> bool:
        i = bisect_right(self.runs_list, (v, CHUNK_SIZE + 1)) - 1
        if i < 0:
            return False
        start, length = self.runs_list[i]
        return start <= v < start + length

    def __iter__(self) -> Iterator[int]:
        for start, length in self.runs_list:
            yield from range(start, start + length)

    def rank(self, v: int) -> int:
        r = 0
        for start, length in self.runs_list:
            if v < start:
                break
            if v < start + length:
                return r + (v - start)
            r += length
        return r

    def min(self) -> int:
        return self.runs_list[0][0]

    def max(self) -> int:
        start, length = self.runs_list[-1]
        return start + length - 1

    def to_u16(self) -> array:
        out = array("H")
        for start, length in self.runs_list:
            out.extend(range(start, start + length))
        return out

    def payload_bytes(self) -> int:
        return 2 + 4 * len(self.runs_list)

    def serialize_into(self, out: bytearray):
        out += struct.pack("<H", len(self.runs_list))
        for start, length in self.runs_list:
            out += struct.pack("<HH", start, length - 1)


def _bits_of(ctr) -> int:
    """Container membership as a 65536-bit integer."""
    if ctr.kind == KIND_BITMAP:
        return int.from_bytes(ctr.buf, "little")
    if ctr.kind == KIND_RUN:
        x = 0
        for start, length in ctr.runs_list:
            x |= ((1 << length) - 1) << start
        return x
    x = 0
    for v in ctr.vals:
        x |= 1 << v
    return x


def _from_bits(bits: int):
    """Best container for a 65536-bit membership integer."""
    card = bits.bit_count()
    runs = (bits & ~(bits << 1)).bit_count()
    kind = choose_kind(card, runs)
    if kind == "bitmap":
        return _Bitmap(bits.to_bytes(BITMAP_BYTES, "little"), card, runs)
    if kind == "run":
        runs_list = []
        x = bits
        while x:
            start = (x & -x).bit_length() - 1
            y = x >> start
            length = (~y & -~y).bit_length() - 1  # trailing ones of y
            runs_list.append((start, length))
            x &= ~(((1 << length) - 1) << start)
        return _Run(tuple(runs_list), card)
    vals = array("H")
    x = bits
    base = 0
    while x:
        low = x & 0xFF
        if low:
            for bit in _BYTE_BITS[low]:
                vals.append(base + bit)
        x >>= 8
        base += 8
    return _Array(vals, runs)


def _from_sorted_u16(vals: array, runs: int | None = None):
    """Best container for a strictly increasing u16 array."""
    if runs is None:
        runs = _runs_of_sorted(vals)
    kind = choose_kind(len(vals), runs)
    if kind == "array":
        return _Array(vals, runs)
    if kind == "run":
        runs_list = []
        start = vals[0]
        prev = vals[0]
        for v in vals[1:]:
            if v != prev + 1:
                runs_list.append((start, prev - start + 1))
                start = v
            prev = v
        runs_list.append((start, prev - start + 1))
        return _Run(tuple(runs_list), len(vals))
    buf = bytearray(BITMAP_BYTES)
    for v in vals:
        buf[v >> 3] |= 1 << (v & 7)
    return _Bitmap(bytes(buf), len(vals), runs)


def _with_added(ctr, v: int):
    """Container with v inserted, or None when v is already present.

    Re-selects the shape with the mutation-path rule: counting runs on
    every insert would cost a full scan, so the rule assumes the worst
    (run_count = cardinality), which reduces to the plain 4096 threshold
    between array and bitmap.  Run containers absorb inserts in place.
    """
    if ctr is None:
        return _Array(array("H", (v,)), 1)
    if v in ctr:
        return None
    if ctr.kind == KIND_BITMAP:
        buf = bytearray(ctr.buf)
        buf[v >> 3] |= 1 << (v & 7)
        return _Bitmap(bytes(buf), ctr.card() + 1)
    if ctr.kind == KIND_RUN:
        runs_list = list(ctr.runs_list)
        i = bisect_right(runs_list, (v, CHUNK_SIZE + 1))
        runs_list.insert(i, (v, 1))
        return _Run(_normalize_runs(runs_list), ctr.card() + 1)
    vals = array("H", ctr.vals)
    insort(vals, v)
    if len(vals) > ARRAY_MAX:
        buf = bytearray(BITMAP_BYTES)
        for u in vals:
            buf[u >> 3] |= 1 << (u & 7)
        return _Bitmap(bytes(buf), len(vals))
    return _Array(vals)


def _with_discarded(ctr, v: int):
    """(container-or-None, removed?) after discarding v."""
    if ctr is None or v not in ctr:
        return ctr, False
    card = ctr.card() - 1
    if card == 0:
        return None, True
    if ctr.kind == KIND_ARRAY:
        vals = array("H", ctr.vals)
        del vals[bisect_left(vals, v)]
        return _Array(vals), True
    if ctr.kind == KIND_BITMAP:
        buf = bytearray(ctr.buf)
        buf[v >> 3] &= ~(1 << (v & 7)) & 0xFF
        if card <= ARRAY_MAX:
            return _from_sorted_u16(_Bitmap(bytes(buf), card).to_u16()), True
        return _Bitmap(bytes(buf), card), True
    runs_list = []
    for start, length in ctr.runs_list:
        if start <= v < start + length:
            if v > start:
                runs_list.append((start, v - start))
            if v < start + length - 1:
                runs_list.append((v + 1, start + length - 1 - v))
        else:
            runs_list.append((start, length))
    return _Run(tuple(runs_list), card), True


def _normalize_runs(runs_list: list) -> tuple:
    """Merge adjacent/overlapping sorted runs into the canonical form."""
    out = [runs_list[0]]
    for start, length in runs_list[1:]:
        pstart, plen = out[-1]
        if start <= pstart + plen:
            end = max(pstart + plen, start + length)
            out[-1] = (pstart, end - pstart)
        else:
            out.append((start, length))
    return tuple(out)


def _ctr_op(a, b, op: str):
    """Pairwise container set operation; returns a container or None."""
    if op == "and":
        if a.kind == KIND_BITMAP and b.kind == KIND_BITMAP:
            bits = int.from_bytes(a.buf, "little") & int.from_bytes(b.buf, "little")
            return _from_bits(bits) if bits else None
        if a.kind != KIND_BITMAP and b.kind != KIND_BITMAP:
            small, big = (a, b) if a.card() <= b.card() else (b, a)
            vals = array("H", (v for v in small.to_u16() if v in big))
            return _from_sorted_u16(vals) if vals else None
        bm, other = (a, b) if a.kind == KIND_BITMAP else (b, a)
        vals = array("H", (v for v in other.to_u16() if v in bm))
        return _from_sorted_u16(vals) if vals else None
    if op == "or":
        if a.kind == KIND_BITMAP or b.kind == KIND_BITMAP or (
            a.card() + b.card() > 2 * ARRAY_MAX
        ):
            return _from_bits(_bits_of(a) | _bits_of(b))
        # disjoint-range fast path: merged structures concatenate
        if a.min() > b.max():
            a, b = b, a
        if a.max() < b.min():
            adjacent = a.max() + 1 == b.min()
            runs = a.runs() + b.runs() - (1 if adjacent else 0)
            if a.kind == KIND_RUN or b.kind == KIND_RUN:
                return _Run(
                    _normalize_runs(list(_as_runs(a)) + list(_as_runs(b))),
                    a.card() + b.card(),
                )
            vals = array("H", a.vals)
            vals.extend(b.vals)
            return _from_sorted_u16(vals, runs)
        merged = array("H", sorted(set(a.to_u16()) | set(b.to_u16())))
        return _from_sorted_u16(merged)
    # difference a \ b
    if a.kind == KIND_BITMAP and (b.kind == KIND_BITMAP or b.card() > 256):
        mask = (1 << CHUNK_SIZE) - 1
        bits = _bits_of(a) & (~_bits_of(b) & mask)
        return _from_bits(bits) if bits else None
    if a.kind == KIND_BITMAP:
        buf = bytearray(a.buf)
        removed = 0
        for v in b.to_u16():
            if buf[v >> 3] & (1 << (v & 7)):
                buf[v >> 3] &= ~(1 << (v & 7)) & 0xFF
                removed += 1
        card = a.card() - removed
        if card == 0:
            return None
        ctr = _Bitmap(bytes(buf), card)
        return ctr if card > ARRAY_MAX else _from_sorted_u16(ctr.to_u16())
    vals = array("H", (v for v in a.to_u16() if v not in b))
    return _from_sorted_u16(vals) if vals else None


def _as_runs(ctr) -> tuple:
    if ctr.kind == KIND_RUN:
        return ctr.runs_list
    runs_list = []
    start = prev = None
    for v in ctr:
        if start is None:
            start = prev = v
        elif v == prev + 1:
            prev = v
        else:
            runs_list.append((start, prev - start + 1))
            start = prev = v
    if start is not None:
        runs_list.append((start, prev - start + 1))
    return tuple(runs_list)


# ---------------------------------------------------------------------------
# DocIdSet
# ---------------------------------------------------------------------------


class DocIdSet:
    """Immutable compressed set of 32-bit document ordinals."""

    __slots__ = ("_keys", "_ctrs", "_card")

    def __init__(self, keys: tuple = (), ctrs: tuple = ()):
        self._keys = keys
        self._ctrs = ctrs
        self._card = sum(c.card() for c in ctrs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def empty(cls) -> "DocIdSet":
        return _EMPTY

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "DocIdSet":
        return cls.from_sorted(sorted(set(values)))

    @classmethod
    def from_sorted(cls, values) -> "DocIdSet":
        """Build from strictly increasing ordinals (list/array/sequence)."""
        if not values:
            return _EMPTY
        if values[-1] > MAX_ORDINAL or values[0] < 0:
            raise ValueError("ordinals must fit in 32 bits")
        keys: list[int] = []
        ctrs: list = []
        lo = 0
        n = len(values)
        while lo < n:
            key = values[lo] >> 16
            hi = bisect_right(values, ((key + 1) << 16) - 1, lo)
            chunk = array("H", (v & 0xFFFF for v in values[lo:hi]))
            keys.append(key)
            ctrs.append(_from_sorted_u16(chunk))
            lo = hi
        return cls(tuple(keys), tuple(ctrs))

    # -- basic protocol --------------------------------------------------

    def __len__(self) -> int:
        return self._card

    def __bool__(self) -> bool:
        return self._card > 0

    def __contains__(self, doc: int) -> bool:
        i = bisect_left(self._keys, doc >> 16)
        if i == len(self._keys) or self._keys[i] != doc >> 16:
            return False
        return (doc & 0xFFFF) in self._ctrs[i]

    def __iter__(self) -> Iterator[int]:
        for key, ctr in zip(self._keys, self._ctrs):
            base = key << 16
            for v in ctr:
                yield base + v

    def __eq__(self, other) -> bool:
        if not isinstance(other, DocIdSet):
            return NotImplemented
        if self._card != other._card or self._keys != other._keys:
            return False
        for a, b in zip(self._ctrs, other._ctrs):
            if a.card() != b.card() or a.to_u16() != b.to_u16():
                return False
        return True

    def __hash__(self):
        raise TypeError("DocIdSet is not hashable")

    def __repr__(self) -> str:
        if self._card <= 8:
            return f"DocIdSet({list(self)})"
        return f"DocIdSet(<{self._card} ordinals>)"

    def min(self) -> int:
        if not self._card:
            raise ValueError("empty set")
        return (self._keys[0] << 16) + self._ctrs[0].min()

    def max(self) -> int:
        if not self._card:
            raise ValueError("empty set")
        return (self._keys[-1] << 16) + self._ctrs[-1].max()

    def rank(self, doc: int) -> int:
        """Number of members strictly below ``doc``."""
        key = doc >> 16
        i = bisect_left(self._keys, key)
        r = sum(self._ctrs[j].card() for j in range(i))
        if i < len(self._keys) and self._keys[i] == key:
            r += self._ctrs[i].rank(doc & 0xFFFF)
        return r

    def container_kinds(self) -> tuple[str, ...]:
        """Shape of each chunk, for tests and stats."""
        return tuple(_KIND_NAMES[c.kind] for c in self._ctrs)

    def footprint(self) -> int:
        """Accounted bytes: 5-byte chunk headers plus container payloads."""
        return 4 + sum(5 + c.payload_bytes() for c in self._ctrs)

    # -- point mutations (return new sets) -------------------------------

    def add(self, doc: int) -> "DocIdSet":
        """Set with ``doc`` included; idempotent.

        The affected chunk re-selects its shape under the mutation-path
        rule (array up to 4096 values, bitmap beyond); untouched chunks
        are shared with the receiver.
        """
        if not 0 <= doc <= MAX_ORDINAL:
            raise ValueError(f"ordinal {doc} out of 32-bit range")
        key = doc >> 16
        i = bisect_left(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            ctr = _with_added(self._ctrs[i], doc & 0xFFFF)
            if ctr is None:
                return self
            return DocIdSet(self._keys, self._ctrs[:i] + (ctr,) + self._ctrs[i + 1:])
        ctr = _with_added(None, doc & 0xFFFF)
        return DocIdSet(
            self._keys[:i] + (key,) + self._keys[i:],
            self._ctrs[:i] + (ctr,) + self._ctrs[i:],
        )

    def discard(self, doc: int) -> "DocIdSet":
        """Set with ``doc`` removed; no-op when absent."""
        key = doc >> 16
        i = bisect_left(self._keys, key)
        if i == len(self._keys) or self._keys[i] != key:
            return self
        ctr, removed = _with_discarded(self._ctrs[i], doc & 0xFFFF)
        if not removed:
            return self
        if ctr is None:
            return DocIdSet(self._keys[:i] + self._keys[i + 1:],
                            self._ctrs[:i] + self._ctrs[i + 1:])
        return DocIdSet(self._keys, self._ctrs[:i] + (ctr,) + self._ctrs[i + 1:])

    # -- set algebra ------------------------------------------------------

    def intersect(self, other: "DocIdSet") -> "DocIdSet":
        if not self._card or not other._card:
            return _EMPTY
        keys: list[int] = []
        ctrs: list = []
        i = j = 0
        while i < len(self._keys) and j < len(other._keys):
            ka, kb = self._keys[i], other._keys[j]
            if ka == kb:
                ctr = _ctr_op(self._ctrs[i], other._ctrs[j], "and")
                if ctr is not None:
                    keys.append(ka)
                    ctrs.append(ctr)
                i += 1
                j += 1
            elif ka < kb:
                i += 1
            else:
                j += 1
        return DocIdSet(tuple(keys), tuple(ctrs))

    def union(self, other: "DocIdSet") -> "DocIdSet":
        if not self._card:
            return other
        if not other._card:
            return self
        keys: list[int] = []
        ctrs: list = []
        i = j = 0
        na, nb = len(self._keys), len(other._keys)
        while i < na or j < nb:
            if j == nb or (i < na and self._keys[i] < other._keys[j]):
                keys.append(self._keys[i])
                ctrs.append(self._ctrs[i])
                i += 1
            elif i == na or other._keys[j] < self._keys[i]:
                keys.append(other._keys[j])
                ctrs.append(other._ctrs[j])
                j += 1
            else:
                keys.append(self._keys[i])
                ctrs.append(_ctr_op(self._ctrs[i], other._ctrs[j], "or"))
                i += 1
                j += 1
        return DocIdSet(tuple(keys), tuple(ctrs))

    def difference(self, other: "DocIdSet") -> "DocIdSet":
        if not self._card or not other._card:
            return self
        keys: list[int] = []
        ctrs: list = []
        j = 0
        nb = len(other._keys)
        for key, ctr in zip(self._keys, self._ctrs):
            while j < nb and other._keys[j] < key:
                j += 1
            if j < nb and other._keys[j] == key:
                res = _ctr_op(ctr, other._ctrs[j], "sub")
                if res is not None:
                    keys.append(key)
                    ctrs.append(res)
            else:
                keys.append(key)
                ctrs.append(ctr)
        return DocIdSet(tuple(keys), tuple(ctrs))

    __and__ = intersect
    __or__ = union
    __sub__ = difference

    # -- serialization ----------------------------------------------------

    def serialize(self) -> bytes:
        out = bytearray(_HEADER.pack(len(self._keys)))
        for key, ctr in zip(self._keys, self._ctrs):
            out += _CHUNK_HEAD.pack(key, ctr.kind, ctr.card() - 1)
            ctr.serialize_into(out)
        return bytes(out)

    @classmethod
    def deserialize(cls, data, offset: int = 0) -> "DocIdSet":
        """Decode bytes produced by :meth:`serialize` starting at ``offset``.

        Raises:
            CorruptPayloadError: truncated or inconsistent payload; the
                error carries the offset where decoding failed.
        """
        ds, _ = cls.deserialize_from(data, offset)
        return ds

    @classmethod
    def deserialize_from(cls, data, offset: int = 0) -> tuple["DocIdSet", int]:
        """Like :meth:`deserialize`, also returning the end offset."""
        pos = offset
        if len(data) < pos + 4:
            raise CorruptPayloadError("truncated chunk count", pos)
        (chunk_count,) = _HEADER.unpack_from(data, pos)
        pos += 4
        keys: list[int] = []
        ctrs: list = []
        prev_key = -1
        for _ in range(chunk_count):
            if len(data) < pos + 5:
                raise CorruptPayloadError("truncated chunk header", pos)
            key, kind, card_m1 = _CHUNK_HEAD.unpack_from(data, pos)
            pos += 5
            if key <= prev_key:
                raise CorruptPayloadError("chunk keys not increasing", pos - 5)
            prev_key = key
            card = card_m1 + 1
            if kind == KIND_ARRAY:
                if card > ARRAY_MAX:
                    raise CorruptPayloadError("array container too large", pos - 5)
                end = pos + 2 * card
                if len(data) < end:
                    raise CorruptPayloadError("truncated array payload", pos)
                vals = array("H")
                vals.frombytes(bytes(data[pos:end]))
                for a, b in zip(vals, vals[1:] if card > 1 else ()):
                    if b <= a:
                        raise CorruptPayloadError("array values not increasing", pos)
                ctrs.append(_Array(vals))
                pos = end
            elif kind == KIND_BITMAP:
                end = pos + BITMAP_BYTES
                if len(data) < end:
                    raise CorruptPayloadError("truncated bitmap payload", pos)
                ctr = _Bitmap(bytes(data[pos:end]))
                if ctr.card() != card:
                    raise CorruptPayloadError("bitmap cardinality mismatch", pos)
                ctrs.append(ctr)
                pos = end
            elif kind == KIND_RUN:
                if len(data) < pos + 2:
                    raise CorruptPayloadError("truncated run count", pos)
                (run_count,) = struct.unpack_from("<H", data, pos)
                pos += 2
                end = pos + 4 * run_count
                if len(data) < end:
                    raise CorruptPayloadError("truncated run payload", pos)
                runs_list = []
                prev_end = -2
                for _ in range(run_count):
                    start, len_m1 = struct.unpack_from("<HH", data, pos)
                    pos += 4
                    if start <= prev_end + 1:
                        raise CorruptPayloadError("runs overlap or touch", pos - 4)
                    prev_end = start + len_m1
                    if prev_end >= CHUNK_SIZE:
                        raise CorruptPayloadError("run exceeds chunk", pos - 4)
                    runs_list.append((start, len_m1 + 1))
                ctr = _Run(tuple(runs_list))
                if ctr.card() != card:
                    raise CorruptPayloadError("run cardinality mismatch", pos)
                ctrs.append(ctr)
            else:
                raise CorruptPayloadError(f"unknown container kind {kind}", pos - 4)
            if ctrs[-1].card() == 0:
                raise CorruptPayloadError("empty container", pos)
            keys.append(key)
        return cls(tuple(keys), tuple(ctrs)), pos


_EMPTY = DocIdSet()


def intersect(a: DocIdSet, b: DocIdSet) -> DocIdSet:
    return a.intersect(b)


def union(a: DocIdSet, b: DocIdSet) -> DocIdSet:
    return a.union(b)


def difference(a: DocIdSet, b: DocIdSet) -> DocIdSet:
    return a.difference(b)
