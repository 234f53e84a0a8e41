import random

import pytest

from splitsearch.codec import (
    ARRAY_MAX,
    DocIdSet,
    choose_kind,
    difference,
    intersect,
    union,
)
from splitsearch.errors import CorruptPayloadError


def random_set(rng, max_val=1 << 17):
    """Random sorted ordinals spanning densities from ~0.001 to ~0.9."""
    universe = rng.randrange(64, max_val)
    density = 10 ** rng.uniform(-3, -0.046)  # 0.001 .. 0.9
    count = max(0, int(universe * density))
    if count == 0:
        return []
    return sorted(rng.sample(range(universe), min(count, universe)))


# -- choose_kind ------------------------------------------------------------


def test_choose_kind_examples():
    assert choose_kind(10, 10) == "array"
    assert choose_kind(65536, 1) == "run"
    assert choose_kind(30000, 15000) == "bitmap"


def test_choose_kind_byte_cost_oracle():
    rng = random.Random(7)
    for _ in range(500):
        card = rng.randrange(1, 65537)
        runs = rng.randrange(1, card + 1)
        kind = choose_kind(card, runs)
        array_bytes = 2 * card if card <= 4096 else None
        run_bytes = 4 * runs + 4
        costs = {"bitmap": 8192, "run": run_bytes}
        if array_bytes is not None:
            costs["array"] = array_bytes
        # chosen kind is never beaten by a strictly cheaper legal kind,
        # with the tie order array > run > bitmap
        best = min(costs.items(), key=lambda kv: (kv[1], ["array", "run", "bitmap"].index(kv[0])))
        assert kind == best[0]


def test_choose_kind_rejects_inconsistent_counts():
    with pytest.raises(ValueError):
        choose_kind(5, 6)


# -- add / membership ---------------------------------------------------------


def test_add_single():
    s = DocIdSet.empty().add(7)
    assert list(s) == [7]
    assert s.container_kinds() == ("array",)


def test_add_idempotent():
    s = DocIdSet.empty().add(7)
    t = s.add(7)
    assert t == s
    assert len(t) == 1


def test_add_does_not_mutate_receiver():
    s = DocIdSet.from_iterable([1, 2])
    t = s.add(99)
    assert 99 not in s
    assert 99 in t


def test_array_promotes_to_bitmap_at_4097():
    # oracle: naive sorted set with the threshold rule replayed
    s = DocIdSet.empty()
    naive = set()
    for v in range(ARRAY_MAX + 1):
        s = s.add(v)
        naive.add(v)
        expected_kind = "array" if len(naive) <= ARRAY_MAX else "bitmap"
        assert s.container_kinds() == (expected_kind,)
    assert list(s) == sorted(naive)


def test_add_out_of_range():
    with pytest.raises(ValueError):
        DocIdSet.empty().add(1 << 32)
    with pytest.raises(ValueError):
        DocIdSet.empty().add(-1)


def test_discard():
    s = DocIdSet.from_iterable([1, 2, 3])
    assert list(s.discard(2)) == [1, 3]
    assert list(s.discard(99)) == [1, 2, 3]
    assert len(DocIdSet.empty().add(5).discard(5)) == 0


def test_discard_demotes_bitmap():
    s = DocIdSet.from_sorted(list(range(0, 2 * ARRAY_MAX, 2)))  # no runs: bitmap
    assert s.container_kinds() == ("bitmap",)
    t = s.discard(0)
    assert t.container_kinds() == ("array",)
    assert len(t) == ARRAY_MAX - 1


# -- set algebra --------------------------------------------------------------


def test_intersect_trivial():
    a = DocIdSet.from_iterable([1, 2, 3])
    b = DocIdSet.from_iterable([2, 3, 4])
    assert list(intersect(a, b)) == [2, 3]


def test_union_identity():
    rng = random.Random(1)
    for _ in range(20):
        x = DocIdSet.from_sorted(random_set(rng, 1 << 12))
        assert union(x, DocIdSet.empty()) == x
        assert union(DocIdSet.empty(), x) == x


def test_set_ops_match_hash_set_oracle():
    rng = random.Random(42)
    for _ in range(200):
        va, vb = random_set(rng), random_set(rng)
        a, b = DocIdSet.from_sorted(va), DocIdSet.from_sorted(vb)
        sa, sb = set(va), set(vb)
        assert list(intersect(a, b)) == sorted(sa & sb)
        assert list(union(a, b)) == sorted(sa | sb)
        assert list(difference(a, b)) == sorted(sa - sb)


def test_cardinality_bounds():
    rng = random.Random(3)
    for _ in range(50):
        a = DocIdSet.from_sorted(random_set(rng, 1 << 14))
        b = DocIdSet.from_sorted(random_set(rng, 1 << 14))
        inter, uni = intersect(a, b), union(a, b)
        assert len(inter) <= min(len(a), len(b))
        assert len(uni) == len(a) + len(b) - len(inter)


def test_iteration_strictly_increasing():
    rng = random.Random(9)
    for _ in range(30):
        a = DocIdSet.from_sorted(random_set(rng))
        b = DocIdSet.from_sorted(random_set(rng))
        for result in (a, intersect(a, b), union(a, b), difference(a, b)):
            vals = list(result)
            assert all(x < y for x, y in zip(vals, vals[1:]))
            assert len(vals) == len(result)


def test_representation_independence():
    # same membership via different construction orders → equal sets
    rng = random.Random(11)
    vals = random_set(rng, 1 << 13)
    bulk = DocIdSet.from_sorted(vals)
    one_by_one = DocIdSet.empty()
    for v in rng.sample(vals, len(vals)):
        one_by_one = one_by_one.add(v)
    assert bulk == one_by_one
    assert list(bulk) == list(one_by_one) == vals


def test_multi_chunk_sets():
    vals = [5, 70_000, 70_001, 200_000, (1 << 32) - 1]
    s = DocIdSet.from_iterable(vals)
    assert list(s) == sorted(vals)
    assert s.max() == (1 << 32) - 1
    assert s.min() == 5
    for v in vals:
        assert v in s
    assert 6 not in s


def test_rank():
    vals = sorted(random.Random(5).sample(range(1 << 18), 3000))
    s = DocIdSet.from_sorted(vals)
    for i in range(0, 3000, 97):
        assert s.rank(vals[i]) == i
    assert s.rank(0) == 0
    assert s.rank(1 << 19) == 3000


# -- serialization ------------------------------------------------------------


def test_roundtrip_empty():
    data = DocIdSet.empty().serialize()
    assert data == b"\x00\x00\x00\x00"
    assert DocIdSet.deserialize(data) == DocIdSet.empty()


def test_roundtrip_random_100k():
    rng = random.Random(123)
    vals = sorted(rng.sample(range(1 << 22), 100_000))
    s = DocIdSet.from_sorted(vals)
    t = DocIdSet.deserialize(s.serialize())
    assert t == s
    assert t.serialize() == s.serialize()


def test_roundtrip_each_kind():
    cases = [
        list(range(10)),                      # small array (contiguous → array wins ties)
        list(range(0, 9000, 2)),              # bitmap
        list(range(5000)),                    # run
        [1, 2, 3, 100_000, 100_001] + list(range(200_000, 204_097)),
    ]
    for vals in cases:
        s = DocIdSet.from_sorted(vals)
        assert DocIdSet.deserialize(s.serialize()) == s


def test_deserialize_truncated():
    data = DocIdSet.from_iterable([1, 2, 3]).serialize()
    for cut in range(len(data) - 1, 3, -1):
        with pytest.raises(CorruptPayloadError) as exc:
            DocIdSet.deserialize(data[:cut])
        assert exc.value.offset >= 0
    with pytest.raises(CorruptPayloadError):
        DocIdSet.deserialize(b"\x01")


def test_deserialize_bad_kind():
    data = bytearray(DocIdSet.from_iterable([1]).serialize())
    data[6] = 9  # kind byte of first chunk
    with pytest.raises(CorruptPayloadError):
        DocIdSet.deserialize(bytes(data))


def test_footprint_positive_and_ordered():
    small = DocIdSet.from_iterable([1])
    big = DocIdSet.from_sorted(list(range(0, 9000, 2)))
    assert 0 < small.footprint() < big.footprint()
