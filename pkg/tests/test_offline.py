import math

import numpy as np
import pytest

from incscc.graph import EdgeSequence
from incscc.offline import OfflineSccIndex
from incscc.oracle import combining_matrix, scc_snapshots
from incscc.synth import random_edge_sequence


def test_t3_tree_shape(t3):
    idx = OfflineSccIndex(3, t3)
    root = idx.root
    assert (root.lo, root.hi, root.mid) == (0, 4, 2)
    # first two arrivals are a path: all singletons at the midpoint
    assert root.ncomp == 3
    assert root.left is not None and root.left.nv == 0  # no intra edges
    right = root.right
    assert (right.lo, right.hi, right.mid) == (2, 4, 3)
    assert right.ncomp == 1  # the 3-cycle has closed


def test_t3_queries(t3):
    idx = OfflineSccIndex(3, t3)
    assert not idx.query(0, 2, 1)
    assert not idx.query(0, 2, 2)
    assert idx.query(0, 2, 3)
    for t in (1, 2, 3):
        assert idx.query(1, 1, t)
    with pytest.raises(ValueError):
        idx.query(0, 1, 0)
    with pytest.raises(ValueError):
        idx.query(0, 1, 4)


def test_acyclic_left_edges_empty():
    seq = EdgeSequence.from_pairs([(0, 1), (1, 2)])
    idx = OfflineSccIndex(3, seq)
    stack = [idx.root]
    while stack:
        node = stack.pop()
        intra = node.comp[node.esrc] == node.comp[node.edst]
        assert not intra.any()
        stack.extend(c for c in (node.left, node.right) if c is not None)


def test_midpoints_cover_each_time_once(rng):
    for _ in range(10):
        n, sigma = random_edge_sequence(12, 40, rng)
        idx = OfflineSccIndex(n, sigma)
        mids = []
        stack = [idx.root]
        while stack:
            node = stack.pop()
            mids.append(node.mid)
            stack.extend(c for c in (node.left, node.right) if c is not None)
        assert sorted(mids) == list(range(1, sigma.m + 1))


def test_depth_bound(rng):
    for _ in range(10):
        n, sigma = random_edge_sequence(15, 80, rng)
        idx = OfflineSccIndex(n, sigma)
        depth = len(idx.level_edges) - 1
        assert depth <= math.ceil(math.log2(sigma.m + 1))


def test_per_level_edge_budget(rng):
    for _ in range(10):
        n, sigma = random_edge_sequence(20, 100, rng)
        idx = OfflineSccIndex(n, sigma)
        assert all(total <= sigma.m for total in idx.level_edges)


def test_per_level_edge_multiplicity(rng):
    # every edge id appears in at most one subproblem per level
    n, sigma = random_edge_sequence(15, 60, rng)
    idx = OfflineSccIndex(n, sigma)
    by_level = {}
    stack = [idx.root]
    while stack:
        node = stack.pop()
        seen = by_level.setdefault(node.depth, set())
        ids = node.eids.tolist()
        assert not seen.intersection(ids)
        seen.update(ids)
        stack.extend(c for c in (node.left, node.right) if c is not None)


def test_combining_time_placement(rng):
    # an edge lives exactly where its combining time lives: in (lo, hi],
    # or on the right spine (hi == m+1) if it never combines
    for _ in range(8):
        n, sigma = random_edge_sequence(12, 40, rng)
        idx = OfflineSccIndex(n, sigma)
        ct = combining_matrix(n, sigma)
        stack = [idx.root]
        while stack:
            node = stack.pop()
            for eid in node.eids.tolist():
                u, v = int(sigma.src[eid]), int(sigma.dst[eid])
                c = int(ct[u][v])
                if c < 0:
                    assert node.hi == sigma.m + 1
                else:
                    assert node.lo < c <= node.hi
            stack.extend(c for c in (node.left, node.right) if c is not None)


def test_queries_match_oracle_exhaustively(rng):
    for _ in range(25):
        n, sigma = random_edge_sequence(12, 20, rng)
        idx = OfflineSccIndex(n, sigma)
        snaps = scc_snapshots(n, sigma)
        for t in range(1, sigma.m + 1):
            part = snaps.partition(t)
            assert np.array_equal(idx.partition_at(t), part)
            for u in range(n):
                for v in range(n):
                    assert idx.query(u, v, t) == (part[u] == part[v]), \
                        f"(u={u}, v={v}, t={t})"


def test_rejects_empty_sequence():
    with pytest.raises(ValueError):
        OfflineSccIndex(2, EdgeSequence.from_pairs([], n=2))


def test_functional_aliases(t3):
    from incscc.offline import build_offline, query_offline
    tree = build_offline(3, t3)
    assert not query_offline(tree, 0, 2, 2)
    assert query_offline(tree, 0, 2, 3)
