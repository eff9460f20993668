"""Prediction-augmented incremental SCC.

Maintains a single root-to-current-time path of recursion-tree subproblems
over the predicted arrival order, rebuilding lazily when an arrival lands
somewhere other than its predicted slot. The interval conventions match
the offline index: root window [0, m+1], floor midpoints, strict-interior
ownership of times. Same-SCC queries are O(1) through the node label
structure, which always reflects the true graph after the last insert.

Per insert: the prediction is spliced so the arriving edge occupies the
next arrival slot t (its old slot t_hat shifts the block between them one
later), then the path is walked backwards to the deepest subproblem whose
open window contains both t and t_hat, and that subproblem is rebuilt down
to the node whose midpoint is t. The base build at midpoint t merges the
labels of every nontrivial SCC of its arrived-edge subgraph.
"""

from __future__ import annotations

import math

import numpy as np

from incscc._backend import tarjan_labels
from incscc.graph import Edge, EdgeSequence
from incscc.labels import NodeLabels
from incscc.prediction import Prediction

_ROOT, _LEFT, _RIGHT = 0, 1, 2


class _Node:
    """One maintained subproblem on the path."""

    __slots__ = ("lo", "hi", "mid", "depth", "kind", "eids", "esrc", "edst",
                 "nv", "rep", "comp", "ncomp", "left_idx", "right_idx",
                 "has_split", "built_mut")

    def __init__(self, lo, hi, depth, kind):
        self.lo = lo
        self.hi = hi
        self.mid = (lo + hi) // 2
        self.depth = depth
        self.kind = kind
        self.left_idx = None
        self.right_idx = None
        self.has_split = False
        self.built_mut = -1  # prediction mut_version at last build


class LearnedIncScc:
    """Incremental SCC structure driven by a predicted edge order.

    Strict mode (default) rejects arrivals that are not in the prediction.
    With on_unknown="restart", an unknown edge triggers a full restart from
    scratch with the corrected prediction (arrived prefix, then the new
    edge, then the remaining predicted order); correct but expensive, and
    excluded from the performance-facing benchmarks.
    """

    def __init__(self, n: int, sigma_hat: EdgeSequence, *,
                 on_unknown: str = "error", instrument: bool = False):
        if sigma_hat.m == 0:
            raise ValueError("empty prediction sequence")
        if on_unknown not in ("error", "restart"):
            raise ValueError("on_unknown must be 'error' or 'restart'")
        self.n = n
        self.m = sigma_hat.m
        self.src = sigma_hat.src
        self.dst = sigma_hat.dst
        self.pred = Prediction(sigma_hat.order)
        self.on_unknown = on_unknown
        self.t = 0
        self.arrived = np.zeros(self.m, dtype=bool)
        self.arrived_order: list[int] = []
        self.labels = NodeLabels(n)
        self.path: list[_Node] = []
        self.work_edges = 0
        self.rebuild_count: list[int] = []
        self.instrument = instrument
        self.build_positions: dict[tuple[int, int], np.ndarray] = {}
        self.rebuild_events: list[dict] = []
        self._pending: tuple[int, int, int] | None = None
        self._arrival: tuple[int, int] | None = None
        self._all_eids = np.arange(self.m, dtype=np.int64)  # root edge set
        self._all_verts = np.arange(self.n, dtype=np.int64)  # root rep map
        self._src_l = self.src.tolist()
        self._dst_l = self.dst.tolist()
        self._init_path()

    # -- public surface ----------------------------------------------------

    def same_scc(self, u: int, v: int) -> bool:
        """Are u and v in the same SCC of the current graph? O(1)."""
        return self.labels.same_scc(u, v)

    def label_array(self) -> list[int]:
        return self.labels.label_array()

    def update_prediction(self, e: Edge) -> tuple[int, int]:
        """Move the arriving edge to the next arrival slot.

        Returns (t, t_hat): the arrival time and the slot the edge occupied
        beforehand; t <= t_hat always, since the settled prefix already
        matches the true order. Normally invoked via insert(), which reuses
        a staged update instead of splicing twice.
        """
        eid = self._check_known(e)
        if self.arrived[eid]:
            raise ValueError(f"edge {eid} already arrived")
        if self._pending is not None and self._pending[0] != eid:
            raise ValueError(
                f"prediction update for edge {self._pending[0]} was staged "
                "but never inserted")
        t = self.t + 1
        t_hat = self.pred.splice_to(eid, t)
        self._pending = (eid, t, t_hat)
        return t, t_hat

    def insert(self, e: Edge) -> None:
        """Process the next true arrival and bring labels up to date."""
        if self.on_unknown == "restart" and not self._known(e):
            self._restart_with(e)
            return
        eid = self._check_known(e)
        if self._pending is not None and self._pending[0] == eid:
            _, t, t_hat = self._pending
        else:
            t, t_hat = self.update_prediction(e)
        self._pending = None

        # Deepest maintained subproblem whose open window contains both t
        # and t_hat; the root always qualifies (t <= t_hat <= m < m+1).
        i = len(self.path) - 1
        while not (self.path[i].lo < t and t_hat < self.path[i].hi):
            i -= 1
        anchor = self.path[i]
        del self.path[i + 1:]
        self._arrival = (eid, t)
        self._build_path(anchor, t)
        self._arrival = None

        self.arrived[eid] = True
        self.arrived_order.append(eid)
        self.t = t

    def stats(self) -> dict:
        return {
            "t": self.t,
            "work_edges": self.work_edges,
            "rebuild_count": list(self.rebuild_count),
            "relabel_count": self.labels.relabel_count,
            "merges": self.labels.merges_performed,
            "path_len": len(self.path),
        }

    @property
    def max_path_len(self) -> int:
        return math.ceil(math.log2(self.m + 1))

    # -- internals ----------------------------------------------------------

    def _known(self, e: Edge) -> bool:
        eid = e.edge_id
        return (0 <= eid < self.m
                and self._src_l[eid] == e.src and self._dst_l[eid] == e.dst)

    def _check_known(self, e: Edge) -> int:
        if not self._known(e):
            raise KeyError(f"edge {e} not in prediction")
        return e.edge_id

    def _init_path(self):
        """Build the leftmost root-to-leaf chain under the initial
        prediction; t=0 is never a midpoint, so no merges fire."""
        root = _Node(0, self.m + 1, 0, _ROOT)
        self.path = [root]
        self._build_path(root, 0)

    def _build_path(self, node: _Node, t: int) -> None:
        while True:
            # A node whose prediction inputs did not move since its last
            # build would rebuild to bit-identical state; reuse it. Only
            # possible at the walk-back anchor (fresh children are new).
            reusable = (node.built_mut == self.pred.mut_version
                        and (node.has_split or node.mid == t))
            if not reusable:
                self._build_node(node)
            if node.mid == t:
                self._fire_merges(node)
                return
            if t < node.mid:
                if node.mid - node.lo < 2:
                    return  # initial descent (t=0) bottoming out at a leaf
                if not node.has_split:
                    self._split(node)
                child = _Node(node.lo, node.mid, node.depth + 1, _LEFT)
            else:
                if not node.has_split:
                    self._split(node)
                child = _Node(node.mid, node.hi, node.depth + 1, _RIGHT)
            self.path.append(child)
            node = child

    def _build_node(self, node: _Node) -> None:
        """(Re)derive the node's condensed graph from its parent's stored
        split and run Tarjan on the prefix predicted at most mid."""
        if node.kind == _ROOT:
            node.eids = self._all_eids
            node.esrc = self.src
            node.edst = self.dst
            node.nv = self.n
            node.rep = self._all_verts
        else:
            parent = self.path[node.depth - 1]
            if node.kind == _LEFT:
                idx = parent.left_idx
                k = len(idx)
                if k == 0:
                    node.eids = idx
                    node.esrc = idx
                    node.edst = idx
                    node.nv = 0
                    node.rep = idx
                else:
                    verts, inverse = np.unique(
                        np.concatenate([parent.esrc[idx], parent.edst[idx]]),
                        return_inverse=True)
                    node.eids = parent.eids[idx]
                    node.esrc = inverse[:k]
                    node.edst = inverse[k:]
                    node.nv = len(verts)
                    node.rep = parent.rep[verts]
            else:
                idx = parent.right_idx
                node.eids = parent.eids[idx]
                node.esrc = parent.comp[parent.esrc[idx]]
                node.edst = parent.comp[parent.edst[idx]]
                node.nv = parent.ncomp
                rep = np.full(parent.ncomp, self.n, dtype=np.int64)
                np.minimum.at(rep, parent.comp, parent.rep)
                node.rep = rep
        if len(node.eids) == 0:
            # Tarjan on an edgeless graph labels vertices in index order.
            node.comp = np.arange(node.nv, dtype=np.int64)
            node.ncomp = node.nv
        else:
            sel = np.flatnonzero(self.pred.pos[node.eids] <= node.mid)
            if len(sel) == 0:
                node.comp = np.arange(node.nv, dtype=np.int64)
                node.ncomp = node.nv
            else:
                node.comp, node.ncomp = tarjan_labels(
                    node.nv, node.esrc[sel], node.edst[sel])
        node.has_split = False
        node.left_idx = None
        node.right_idx = None
        node.built_mut = self.pred.mut_version

        self.work_edges += len(node.eids) + node.nv
        while len(self.rebuild_count) <= node.depth:
            self.rebuild_count.append(0)
        self.rebuild_count[node.depth] += 1
        if self.instrument:
            key = (node.lo, node.hi)
            snap = self.build_positions.get(key)
            if snap is not None and self._arrival is not None:
                # A previously built window is being rebuilt: record the
                # triggering edge's slot in the prediction it was last
                # built under.
                eid, t = self._arrival
                self.rebuild_events.append({
                    "lo": node.lo, "hi": node.hi, "mid": node.mid, "t": t,
                    "t_hat_at_build": int(snap[eid]),
                })
            self.build_positions[key] = self.pred.pos.copy()

    def _split(self, node: _Node) -> None:
        intra = node.comp[node.esrc] == node.comp[node.edst]
        node.left_idx = np.flatnonzero(intra)
        node.right_idx = np.flatnonzero(~intra)
        node.has_split = True

    def _fire_merges(self, node: _Node) -> None:
        """Base case: merge labels of every SCC with >= 2 condensed vertices.

        Out of the node's edges, exactly the arrived ones have predicted
        position <= mid == t (the settled prefix matches the true order),
        so these SCCs are SCCs of the true current graph.
        """
        if node.ncomp == node.nv:
            return  # all singletons
        order = np.argsort(node.comp, kind="stable")
        comps = node.comp[order]
        bounds = np.flatnonzero(comps[1:] != comps[:-1]) + 1
        starts = [0] + bounds.tolist()
        ends = bounds.tolist() + [len(order)]
        reps = node.rep[order].tolist()
        merge = self.labels.merge
        for s, e in zip(starts, ends):
            if e - s >= 2:
                merge(reps[s:e])

    def _restart_with(self, e: Edge) -> None:
        """Rebuild from scratch with the unknown edge spliced in as the next
        arrival, then replay all arrivals."""
        remaining = [eid for eid in self.pred.order_list() if not self.arrived[eid]]
        old_src, old_dst = self.src, self.dst
        arrived_order = list(self.arrived_order)
        new_src = np.append(old_src, e.src).astype(np.int64)
        new_dst = np.append(old_dst, e.dst).astype(np.int64)
        new_id = len(old_src)
        order = arrived_order + [new_id] + remaining
        seq = EdgeSequence(self.n, new_src, new_dst,
                           order=np.array(order, dtype=np.int64), validate=False)
        self.__init__(self.n, seq, on_unknown=self.on_unknown,
                      instrument=self.instrument)
        for eid in arrived_order:
            self.insert(Edge(int(new_src[eid]), int(new_dst[eid]), eid))
        self.insert(Edge(e.src, e.dst, new_id))
