"""Acceptance gate: one test per criterion, exact tolerances.

Each test prints a "criterion N: PASS" line on success (visible with -s or in
captured output).  The span and BST workload corpora are module-scoped so the
count-instrumentation criterion can reuse them without rerunning.
"""

import pathlib
import random
import time

import pytest

from flatgraph import BstView, DequeView, span_from
from flatgraph._kernels import common
from flatgraph.cli import main
from flatgraph.graphio import random_graph
from flatgraph.oracle import (abstract_graph, diff_run, oracle_apsp,
                              oracle_bfs_depth, oracle_reach)
from flatgraph.search import all_pairs

HERE = pathlib.Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
DATA_GRAPHS = ["path3", "triangle", "star5", "split4", "tangle6"]


# -- shared corpora --------------------------------------------------------

@pytest.fixture(scope="module")
def bst_workload():
    """Criterion-2 workload: 10 seeds x 10^4 ops vs a dict, instrumented."""
    t0 = time.perf_counter()
    exhausted = 0
    for seed in range(10):
        rng = random.Random(seed)
        t = BstView.new(10**4)
        model = {}
        for i in range(10**4):
            k = rng.randint(1, 10**4)
            r = rng.random()
            if r < 0.40:
                v = rng.randint(1, 10**6)
                t.insert(k, v)
                model[k] = v
            elif r < 0.70:
                val, _, ex = t.get_with_steps(k)
                exhausted += ex
                assert val == model.get(k, 0)
            elif r < 0.85:
                assert t.exists(k) == (k in model)
            else:
                t.delete(k)
                model.pop(k, None)
            if (i + 1) % 10**3 == 0:
                pairs = t.inorder()
                keys = [p[0] for p in pairs]
                assert all(a < b for a, b in zip(keys, keys[1:]))
                assert pairs == sorted(model.items())
    return {"elapsed": time.perf_counter() - t0, "exhausted": exhausted}


@pytest.fixture(scope="module")
def span_corpus():
    """Criterion-4 corpus: 100 graphs, 200 vertices, m_max 4, 5 starts each.

    Returns one record per (graph, start): the adjacency, both spanning trees,
    and both stat blocks.
    """
    t0 = time.perf_counter()
    records = []
    for seed in range(100):
        g = random_graph(200, 4, seed)
        adj = abstract_graph(g)
        rng = random.Random(10**6 + seed)
        for start in rng.sample(range(1, 201), 5):
            rec = {"adj": adj, "start": start}
            for mode in ("dfs", "bfs"):
                r = span_from(g, start, mode=mode)
                rec[mode] = dict(r.tree.inorder())
                rec[mode + "_stats"] = r.stats
            records.append(rec)
    return {"elapsed": time.perf_counter() - t0, "records": records}


# -- criteria --------------------------------------------------------------

def test_criterion_1_zero_slot_immutability():
    t0 = time.perf_counter()
    rng = random.Random(1)
    tree = BstView.new(65535)
    dq = DequeView.new(65535)
    stores = (tree.store, dq.store)

    def zeros():
        return tuple((s.vtx[0], s.data[0], s.key[0], s.edge[0], s.weight[0])
                     for s in stores)

    baseline = zeros()
    for _ in range(5 * 10**4):
        k = rng.randint(1, 10**4)
        if rng.random() < 0.6:
            tree.insert(k, rng.randint(1, 99))
        else:
            tree.delete(k)
        assert zeros() == baseline
        r = rng.random()
        if r < 0.35 or (len(dq) == 0 and r < 0.7):
            dq.push_front(k, 1)
        elif r < 0.7:
            dq.push_back(k, 1)
        elif r < 0.85:
            dq.pop_front()
        else:
            dq.pop_back()
        assert zeros() == baseline
    elapsed = time.perf_counter() - t0
    assert elapsed < 30
    print("criterion 1: PASS")


def test_criterion_2_bst_differential(bst_workload):
    assert bst_workload["elapsed"] < 60
    print("criterion 2: PASS")


def test_criterion_3_deque_heap_differential():
    t0 = time.perf_counter()
    for structure in ("deque", "heap"):
        for seed in range(10):
            report = diff_run(structure, 10**4, seed, abstract_every=10**3)
            assert report.ok, str(report)
    assert time.perf_counter() - t0 < 60
    print("criterion 3: PASS")


def test_criterion_4_spanning_correctness(span_corpus):
    for rec in span_corpus["records"]:
        adj, start = rec["adj"], rec["start"]
        reach = oracle_reach(adj, start)
        for mode in ("dfs", "bfs"):
            tree = rec[mode]
            assert set(tree) == reach
            assert tree[start] == start
            edges = {v: {t for t, _ in targets} for v, targets in adj.items()}
            for v, p in tree.items():
                if v != start:
                    assert v in edges[p]
                chain = set()
                while v != start:
                    assert v not in chain
                    chain.add(v)
                    v = tree[v]
    assert span_corpus["elapsed"] < 60
    print("criterion 4: PASS")


def test_criterion_5_dfs_bfs_set_identity(span_corpus):
    for rec in span_corpus["records"]:
        assert set(rec["dfs"]) == set(rec["bfs"])
    print("criterion 5: PASS")


def test_criterion_6_bfs_depth_optimality(span_corpus):
    for rec in span_corpus["records"]:
        tree = rec["bfs"]
        start = rec["start"]
        depth = {start: 0}
        while len(depth) < len(tree):
            for v, p in tree.items():
                if v not in depth and p in depth:
                    depth[v] = depth[p] + 1
        assert depth == oracle_bfs_depth(rec["adj"], start)
    print("criterion 6: PASS")


def test_criterion_7_dijkstra_optimality():
    t0 = time.perf_counter()
    for seed in range(100):
        n = 10 + seed % 41  # graph sizes 10..50
        g = random_graph(n, 3, 10**5 + seed)
        table = oracle_apsp(abstract_graph(g))
        for r in all_pairs(g):
            row = table[r.src]
            for v in range(1, n + 1):
                assert r.dist[v] == row[v]
    assert time.perf_counter() - t0 < 60
    print("criterion 7: PASS")


def test_criterion_8_count_bound_sufficiency(bst_workload, span_corpus):
    assert bst_workload["exhausted"] == 0
    for rec in span_corpus["records"]:
        for mode in ("dfs", "bfs"):
            stats = rec[mode + "_stats"]
            assert stats.status != common.COUNT_EXHAUSTED
            assert stats.count_left > 0
            assert stats.descent_ok
    print("criterion 8: PASS")


def test_criterion_9_scale_check(capsys):
    t0 = time.perf_counter()
    code = main(["bench", "--nodes", "1000000", "--edges-per-vertex", "4",
                 "--seed", "1", "--reps", "1", "--mode", "dfs"])
    wall = time.perf_counter() - t0
    out = capsys.readouterr().out
    assert code == 0
    assert "audit: clean" in out
    assert "array growth: none" in out
    assert wall <= 60
    print("criterion 9: PASS")


@pytest.mark.parametrize("algo", ["dfs", "bfs", "dijkstra"])
def test_criterion_10_cli_goldens(algo, tmp_path):
    for name in DATA_GRAPHS:
        out = tmp_path / "out.txt"
        code = main(["run", algo, str(DATA / f"{name}.graph"),
                     "--start", "1", "--out", str(out)])
        assert code == 0
        assert out.read_bytes() == (GOLDEN / f"{name}_{algo}.txt").read_bytes()
    print(f"criterion 10 ({algo}): PASS")
