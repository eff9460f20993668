"""Brute-force ground truth for correctness and invariant tests.

Deliberately naive and independent of the maintained structures: SCCs here
come from an iterative Kosaraju (two-pass DFS), a different algorithm from
the Tarjan kernel the data structures use, and every snapshot is recomputed
from scratch. Intended for desk-scale inputs only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from incscc.graph import Edge, EdgeSequence, canonical_labels


def _kosaraju(n: int, src: list[int], dst: list[int]) -> list[int]:
    """Canonical SCC labels (min member) via Kosaraju's algorithm."""
    adj = [[] for _ in range(n)]
    radj = [[] for _ in range(n)]
    for u, v in zip(src, dst):
        adj[u].append(v)
        radj[v].append(u)
    order = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        stack = [(s, 0)]
        seen[s] = True
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, 0))
            else:
                stack.pop()
                order.append(v)
    comp = [-1] * n
    for s in reversed(order):
        if comp[s] >= 0:
            continue
        stack = [s]
        comp[s] = s
        group = [s]
        while stack:
            v = stack.pop()
            for w in radj[v]:
                if comp[w] < 0:
                    comp[w] = s
                    stack.append(w)
                    group.append(w)
        root = min(group)
        for v in group:
            comp[v] = root
    return comp


def reachability_partition(n: int, src, dst) -> np.ndarray:
    """Mutual-reachability partition via transitive closure (Floyd-Warshall).

    Cross-check for the oracle itself; O(n^3), keep n tiny.
    """
    reach = np.eye(n, dtype=bool)
    for u, v in zip(list(src), list(dst)):
        reach[u][v] = True
    for k in range(n):
        reach |= np.outer(reach[:, k], reach[k, :])
    mutual = reach & reach.T
    labels = [int(np.flatnonzero(mutual[v])[0]) for v in range(n)]
    return canonical_labels(labels)


class SnapshotSeries:
    """Canonical SCC partitions of every prefix graph, t = 0..m."""

    def __init__(self, partitions: list[np.ndarray]):
        self.partitions = partitions
        self.m = len(partitions) - 1

    def partition(self, t: int) -> np.ndarray:
        return self.partitions[t]

    def same(self, u: int, v: int, t: int) -> bool:
        p = self.partitions[t]
        return bool(p[u] == p[v])


def scc_snapshots(n: int, sigma: EdgeSequence) -> SnapshotSeries:
    """Partition after every prefix, each recomputed from scratch."""
    src = sigma.src[sigma.order].tolist()
    dst = sigma.dst[sigma.order].tolist()
    parts = []
    for t in range(sigma.m + 1):
        comp = _kosaraju(n, src[:t], dst[:t])
        parts.append(canonical_labels(comp))
    return SnapshotSeries(parts)


def combining_time(u: int, v: int, seq: EdgeSequence, n: int | None = None,
                   snapshots: SnapshotSeries | None = None) -> int | None:
    """First time u and v share an SCC of the prefix graph; None if never."""
    if u == v:
        raise ValueError("combining time is defined for distinct vertices")
    if snapshots is None:
        if n is None:
            n = seq.n
        snapshots = scc_snapshots(n, seq)
    for t in range(snapshots.m + 1):
        if snapshots.same(u, v, t):
            return t
    return None


def combining_matrix(n: int, seq: EdgeSequence,
                     snapshots: SnapshotSeries | None = None) -> np.ndarray:
    """All-pairs combining times under seq; -1 where undefined."""
    if snapshots is None:
        snapshots = scc_snapshots(n, seq)
    ct = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(ct, 0)
    prev = snapshots.partition(0)
    for t in range(1, snapshots.m + 1):
        cur = snapshots.partition(t)
        if np.array_equal(cur, prev):
            continue
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(int(cur[v]), []).append(v)
        for members in groups.values():
            if len(members) < 2:
                continue
            # Only cross pairs between previously distinct classes are new,
            # so total pair work over all t is O(n^2).
            subgroups: dict[int, list[int]] = {}
            for v in members:
                subgroups.setdefault(int(prev[v]), []).append(v)
            if len(subgroups) < 2:
                continue
            parts = list(subgroups.values())
            for i, ga in enumerate(parts):
                for gb in parts[i + 1:]:
                    for a in ga:
                        for b in gb:
                            ct[a][b] = ct[b][a] = t
        prev = cur
    return ct


@dataclass
class EquivalenceReport:
    ok: bool
    first_divergence: tuple[int, str] | None = None

    def __bool__(self):
        return self.ok


def check_equivalence(algo, n: int, sigma: EdgeSequence,
                      snapshots: SnapshotSeries | None = None) -> EquivalenceReport:
    """Drive an incremental SCC structure through sigma, comparing full
    partitions against brute force after every insert.

    `algo` needs insert(Edge) and label_array(). Reports the first
    divergence (time plus a differing pair) or success.
    """
    if snapshots is None:
        snapshots = scc_snapshots(n, sigma)
    for t, edge in enumerate(sigma, start=1):
        algo.insert(edge)
        got = canonical_labels(algo.label_array())
        want = snapshots.partition(t)
        if not np.array_equal(got, want):
            bad = int(np.flatnonzero(got != want)[0])
            detail = (f"t={t}: vertex {bad} in class {int(got[bad])}, "
                      f"oracle says {int(want[bad])}")
            return EquivalenceReport(False, (t, detail))
    return EquivalenceReport(True)
