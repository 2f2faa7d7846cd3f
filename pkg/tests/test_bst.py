import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatgraph import BstView, CapacityError, StoreError


class TestLookup:
    def test_empty_tree_returns_null(self):
        t = BstView.new(8)
        assert t.get(5) == 0
        assert not t.exists(5)

    def test_single_pair(self):
        t = BstView.new(8)
        t.insert(7, 42)
        assert t.get(7) == 42
        assert t.exists(7)
        assert t.get(6) == 0

    def test_key_zero_is_total(self):
        t = BstView.new(8)
        t.insert(3, 1)
        assert t.get(0) == 0
        assert not t.exists(0)


class TestInsert:
    def test_first_insert_sets_root(self):
        t = BstView.new(8)
        t.insert(5, 10)
        assert len(t) == 1
        assert t.store.key[t.root] == 5

    def test_duplicate_key_overwrites(self):
        t = BstView.new(8)
        t.insert(5, 10)
        t.insert(5, 11)
        assert t.get(5) == 11
        assert len(t) == 1

    def test_rejects_null_key_or_value(self):
        t = BstView.new(8)
        with pytest.raises(StoreError):
            t.insert(0, 1)
        with pytest.raises(StoreError):
            t.insert(1, 0)

    def test_full_tree_signals_and_stays_unchanged(self):
        t = BstView.new(4)
        for k in (2, 1, 3, 4):
            t.insert(k, k)
        before = t.inorder()
        with pytest.raises(CapacityError):
            t.insert(9, 9)
        assert t.inorder() == before

    def test_full_tree_still_accepts_existing_key(self):
        t = BstView.new(2)
        t.insert(1, 1)
        t.insert(2, 1)
        t.insert(2, 7)  # overwrite needs no allocation
        assert t.get(2) == 7


class TestDelete:
    def test_delete_from_empty_is_noop(self):
        t = BstView.new(4)
        t.delete(3)
        assert len(t) == 0

    def test_delete_absent_key_is_noop(self):
        t = BstView.new(4)
        t.insert(2, 1)
        t.delete(9)
        assert t.inorder() == [(2, 1)]

    def test_delete_two_child_node(self):
        t = BstView.new(4)
        for k in (5, 3, 8):
            t.insert(k, 1)
        t.delete(5)
        assert [k for k, _ in t.inorder()] == [3, 8]
        assert t.audit() == []

    def test_deleted_vertex_returns_to_free_chain(self):
        t = BstView.new(2)
        t.insert(1, 1)
        t.insert(2, 1)
        t.delete(1)
        t.insert(9, 9)  # would fail if the slot were not recycled
        assert t.exists(9)


class TestMark:
    def test_mark_records_predecessor(self):
        t = BstView.new(8)
        t.mark(4, 2)
        assert t.exists(4)
        assert t.get(4) == 2

    def test_root_self_predecessor(self):
        t = BstView.new(8)
        t.mark(3, 3)
        assert t.get(3) == 3

    def test_mark_is_idempotent(self):
        t = BstView.new(8)
        t.mark(4, 2)
        snapshot = t.inorder()
        t.mark(4, 2)
        assert t.inorder() == snapshot


class TestAudit:
    def test_detects_order_violation(self):
        t = BstView.new(4)
        s = t.store
        a = s.alloc_vertex(5, 1)
        b = s.alloc_vertex(9, 1)
        s.vhd = a
        s.set_edge(a, 0, b)  # key 9 in the left subtree of key 5
        assert any("order" in p for p in t.audit())

    def test_detects_unreachable_live_vertex(self):
        t = BstView.new(4)
        t.insert(5, 1)
        t.store.alloc_vertex(7, 1)  # live but not linked
        assert any("reaches" in p for p in t.audit())


class TestDifferential:
    def test_random_workload_matches_dict(self):
        rng = random.Random(5)
        t = BstView.new(200)
        model = {}
        for i in range(5000):
            k = rng.randint(1, 200)
            r = rng.random()
            if r < 0.45:
                v = rng.randint(1, 999)
                t.insert(k, v)
                model[k] = v
            elif r < 0.75:
                assert t.get(k) == model.get(k, 0)
            elif r < 0.9:
                assert t.exists(k) == (k in model)
            else:
                t.delete(k)
                model.pop(k, None)
            assert len(t) == len(model)
            if i % 500 == 0:
                pairs = t.inorder()
                assert pairs == sorted(model.items())
                assert t.audit() == []

    def test_count_seed_suffices_for_every_present_key(self):
        rng = random.Random(6)
        t = BstView.new(300)
        keys = set()
        for _ in range(300):
            k = rng.randint(1, 500)
            t.insert(k, 1)
            keys.add(k)
        for k in keys:
            val, steps, exhausted = t.get_with_steps(k)
            assert val == 1
            assert not exhausted
            assert steps < len(t)

    def test_linear_tree_absent_key_resolves_without_exhaustion(self):
        t = BstView.new(8)
        for k in (1, 2, 3, 4):
            t.insert(k, 1)
        val, steps, exhausted = t.get_with_steps(9)
        assert val == 0
        # the descent ends on a null link exactly as the count runs out
        assert not exhausted


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.sampled_from("id"),
                          st.integers(1, 30),
                          st.integers(1, 99)),
                max_size=80))
def test_insert_delete_sequences_match_dict(ops):
    t = BstView.new(30)
    model = {}
    for op, k, v in ops:
        if op == "i":
            t.insert(k, v)
            model[k] = v
        else:
            t.delete(k)
            model.pop(k, None)
    assert t.inorder() == sorted(model.items())
    assert t.audit() == []
