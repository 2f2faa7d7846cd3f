import random

import pytest

from flatgraph import BoundedHeap, CapacityError, StoreError


class TestBasics:
    def test_new_heap_is_empty(self):
        h = BoundedHeap(8)
        assert len(h) == 0
        assert h.pop_min() is None

    def test_min_extraction(self):
        h = BoundedHeap(8)
        for p, v in ((3, 1), (1, 2), (2, 3)):
            h.push(p, v)
        assert h.pop_min() == (1, 2)

    def test_tie_break_prefers_smaller_vertex(self):
        h = BoundedHeap(8)
        h.push(5, 9)
        h.push(5, 2)
        assert h.pop_min() == (5, 2)
        assert h.pop_min() == (5, 9)

    def test_single_entry_round_trip(self):
        h = BoundedHeap(4)
        h.push(7, 3)
        assert h.pop_min() == (7, 3)
        assert h.pop_min() is None

    def test_overflow_is_an_error(self):
        h = BoundedHeap(2)
        h.push(1, 1)
        h.push(2, 2)
        with pytest.raises(CapacityError):
            h.push(3, 3)

    def test_rejects_negative_entries(self):
        h = BoundedHeap(2)
        with pytest.raises(StoreError):
            h.push(-1, 1)

    def test_bad_capacity_rejected(self):
        with pytest.raises(StoreError):
            BoundedHeap(0)


class TestProperties:
    def test_pop_sequence_is_sorted_multiset(self):
        rng = random.Random(21)
        h = BoundedHeap(128)
        model = []
        for _ in range(6000):
            if len(h) < 128 and (not model or rng.random() < 0.6):
                p, v = rng.randint(0, 99), rng.randint(1, 999)
                h.push(p, v)
                model.append((p, v))
                model.sort()
            else:
                assert h.pop_min() == (model.pop(0) if model else None)
            assert len(h) == len(model)
            assert h.items() == model
        assert h.audit() == []

    def test_pops_are_nondecreasing(self):
        rng = random.Random(22)
        h = BoundedHeap(64)
        for _ in range(64):
            h.push(rng.randint(0, 50), rng.randint(1, 9))
        last = None
        while (e := h.pop_min()) is not None:
            if last is not None:
                assert e >= last
            last = e

    def test_no_allocation_after_new(self):
        h = BoundedHeap(16)
        for i in range(16):
            h.push(i, 1)
        assert len(h._prio) == 16 and len(h._vert) == 16
        for _ in range(16):
            h.pop_min()
        assert len(h._prio) == 16 and len(h._vert) == 16
