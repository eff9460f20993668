"""Offline incremental SCC: full recursion tree over a known arrival order.

The arrival window [0, m+1] is split recursively at floor midpoints; a
subproblem owns the open interior of its interval, so every time 1..m is
the midpoint of exactly one node. At each node Tarjan runs on the node's
edges restricted to positions <= midpoint; intra-SCC edges descend left,
inter-SCC edges descend right with their endpoints contracted. Historical
same-SCC queries walk root-to-midpoint in O(log m).
"""

from __future__ import annotations

import numpy as np

from incscc._backend import tarjan_labels
from incscc.graph import EdgeSequence, canonical_labels


class OfflineNode:
    """One subproblem: interval, condensed graph, SCCs of the midpoint graph."""

    __slots__ = ("lo", "hi", "mid", "depth", "eids", "esrc", "edst", "nv",
                 "rep", "comp", "ncomp", "verts", "left", "right")

    def __init__(self, lo, hi, depth, eids, esrc, edst, nv, rep, verts=None):
        self.lo = lo
        self.hi = hi
        self.mid = (lo + hi) // 2
        self.depth = depth
        self.eids = eids
        self.esrc = esrc  # endpoints in this node's dense handle space
        self.edst = edst
        self.nv = nv
        self.rep = rep  # handle -> representative original vertex (min id)
        self.verts = verts  # left child only: sorted parent handles kept
        self.left = None
        self.right = None


class OfflineSccIndex:
    """Recursion tree over a full edge sequence plus historical queries."""

    def __init__(self, n: int, sigma: EdgeSequence):
        self.n = n
        self.sigma = sigma
        self.m = sigma.m
        self.work_edges = 0
        self.level_edges: list[int] = []  # sum of |E_x| per depth
        if self.m == 0:
            raise ValueError("empty edge sequence")
        root_eids = np.arange(self.m, dtype=np.int64)
        self.root = OfflineNode(0, self.m + 1, 0, root_eids,
                                sigma.src.copy(), sigma.dst.copy(),
                                n, np.arange(n, dtype=np.int64))
        self._build(self.root)

    def _build(self, node: OfflineNode) -> None:
        pos = self.sigma.pos
        self.work_edges += len(node.eids) + node.nv
        while len(self.level_edges) <= node.depth:
            self.level_edges.append(0)
        self.level_edges[node.depth] += len(node.eids)

        if len(node.eids) == 0:
            comp = np.arange(node.nv, dtype=np.int64)
            ncomp = node.nv
        else:
            sel = np.flatnonzero(pos[node.eids] <= node.mid)
            if len(sel) == 0:
                comp = np.arange(node.nv, dtype=np.int64)
                ncomp = node.nv
            else:
                comp, ncomp = tarjan_labels(node.nv, node.esrc[sel],
                                            node.edst[sel])
        node.comp = comp
        node.ncomp = ncomp

        intra = comp[node.esrc] == comp[node.edst]

        if node.mid - node.lo >= 2:
            idx = np.flatnonzero(intra)
            if len(idx):
                k = len(idx)
                verts, inverse = np.unique(
                    np.concatenate([node.esrc[idx], node.edst[idx]]),
                    return_inverse=True)
                child = OfflineNode(node.lo, node.mid, node.depth + 1,
                                    node.eids[idx],
                                    inverse[:k], inverse[k:],
                                    len(verts), node.rep[verts], verts=verts)
            else:
                # No intra edges: empty left subtree still owns its window,
                # but no SCC can change there; keep an empty node for queries.
                child = OfflineNode(node.lo, node.mid, node.depth + 1,
                                    node.eids[:0], node.esrc[:0], node.edst[:0],
                                    0, node.rep[:0],
                                    verts=np.empty(0, dtype=np.int64))
            node.left = child
            self._build(child)

        if node.hi - node.mid >= 2:
            idx = np.flatnonzero(~intra)
            rep = np.full(ncomp, self.n, dtype=np.int64)
            np.minimum.at(rep, comp, node.rep)
            child = OfflineNode(node.mid, node.hi, node.depth + 1,
                                node.eids[idx],
                                comp[node.esrc[idx]], comp[node.edst[idx]],
                                ncomp, rep)
            node.right = child
            self._build(child)

    def query(self, u: int, v: int, t: int) -> bool:
        """Were u and v in the same SCC after the first t arrivals?"""
        if not 1 <= t <= self.m:
            raise ValueError(f"time {t} out of range 1..{self.m}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError("vertex out of range")
        node = self.root
        hu, hv = u, v
        while True:
            if hu == hv:
                return True  # contracted together at an earlier midpoint
            if node.mid == t:
                return bool(node.comp[hu] == node.comp[hv])
            if t < node.mid:
                child = node.left
                iu = np.searchsorted(child.verts, hu)
                iv = np.searchsorted(child.verts, hv)
                ok_u = iu < child.nv and child.verts[iu] == hu
                ok_v = iv < child.nv and child.verts[iv] == hv
                if not (ok_u and ok_v):
                    # A handle absent from the left child has no intra edge,
                    # so its SCC cannot change anywhere in this window.
                    return False
                hu, hv = int(iu), int(iv)
                node = child
            else:
                hu = int(node.comp[hu])
                hv = int(node.comp[hv])
                node = node.right

    def partition_at(self, t: int) -> np.ndarray:
        """Canonical SCC partition of the graph after the first t arrivals."""
        if t == 0:
            return np.arange(self.n, dtype=np.int64)
        if not 1 <= t <= self.m:
            raise ValueError(f"time {t} out of range 1..{self.m}")
        key = np.arange(self.n, dtype=np.int64)  # final group key per vertex
        handle = np.arange(self.n, dtype=np.int64)
        live = np.ones(self.n, dtype=bool)
        node = self.root
        while True:
            if node.mid == t:
                rep = np.full(node.ncomp, self.n, dtype=np.int64)
                np.minimum.at(rep, node.comp, node.rep)
                key[live] = rep[node.comp[handle[live]]]
                return canonical_labels(key)
            if t < node.mid:
                child = node.left
                if child.nv == 0:
                    key[live] = node.rep[handle[live]]
                    live = np.zeros(self.n, dtype=bool)
                else:
                    idx = np.searchsorted(child.verts, handle, side="left")
                    idx_c = np.minimum(idx, child.nv - 1)
                    present = live & (child.verts[idx_c] == handle)
                    dropped = live & ~present
                    if np.any(dropped):
                        key[dropped] = node.rep[handle[dropped]]
                    live = present
                    handle[live] = idx[live]
                node = child
            else:
                handle[live] = node.comp[handle[live]]
                node = node.right


def build_offline(n: int, sigma: EdgeSequence) -> OfflineSccIndex:
    """Functional alias for OfflineSccIndex(n, sigma)."""
    return OfflineSccIndex(n, sigma)


def query_offline(tree: OfflineSccIndex, u: int, v: int, t: int) -> bool:
    """Functional alias for tree.query(u, v, t)."""
    return tree.query(u, v, t)
