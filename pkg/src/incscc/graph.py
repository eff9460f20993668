"""Vertex/edge types, edge sequences, static SCC, prediction error metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from incscc._backend import tarjan_labels


@dataclass(frozen=True)
class Edge:
    """Directed edge with a stable identity.

    edge_id indexes the src/dst arrays of the owning EdgeSequence family
    and survives reorderings (a prediction is the same edges, permuted).
    """

    src: int
    dst: int
    edge_id: int


class SccPartition:
    """Partition of vertices into strongly connected components."""

    def __init__(self, component_of):
        self.component_of = np.ascontiguousarray(component_of, dtype=np.int64)
        self.n_components = int(self.component_of.max()) + 1 if self.component_of.size else 0

    @property
    def components(self):
        """Member lists per component, members in ascending vertex order."""
        buckets = [[] for _ in range(self.n_components)]
        for v, c in enumerate(self.component_of.tolist()):
            buckets[c].append(v)
        return buckets

    def same(self, u: int, v: int) -> bool:
        return self.component_of[u] == self.component_of[v]

    def canonical(self) -> np.ndarray:
        """Relabel each class by its minimum member so partitions compare
        independently of component numbering."""
        return canonical_labels(self.component_of)

    def __eq__(self, other):
        if not isinstance(other, SccPartition):
            return NotImplemented
        return np.array_equal(self.canonical(), other.canonical())

    def __repr__(self):
        return f"SccPartition(n={len(self.component_of)}, n_components={self.n_components})"


def canonical_labels(labels) -> np.ndarray:
    """Map any labeling to the labeling by minimum class member."""
    labels = np.asarray(labels)
    out = np.empty(len(labels), dtype=np.int64)
    first: dict = {}
    for v, lab in enumerate(labels.tolist()):
        out[v] = first.setdefault(lab, v)
    return out


class EdgeSequence:
    """A fixed vertex set plus directed edges in a specific arrival order.

    Positions are 1-based: order[k] is the edge_id arriving at position
    k + 1 and pos[edge_id] is that edge's 1-based position. src/dst are
    indexed by edge_id and shared between reorderings of the same edges.
    """

    def __init__(self, n: int, src, dst, order=None, validate: bool = True):
        self.n = int(n)
        self.src = np.ascontiguousarray(src, dtype=np.int64)
        self.dst = np.ascontiguousarray(dst, dtype=np.int64)
        self.m = int(self.src.shape[0])
        if order is None:
            order = np.arange(self.m, dtype=np.int64)
        self.order = np.ascontiguousarray(order, dtype=np.int64)
        if validate:
            self._validate()
        self.pos = np.empty(self.m, dtype=np.int64)
        self.pos[self.order] = np.arange(1, self.m + 1, dtype=np.int64)

    def _validate(self):
        if self.dst.shape[0] != self.m or self.order.shape[0] != self.m:
            raise ValueError("src, dst and order must have equal length")
        if self.n < 1 and self.m > 0:
            raise ValueError("edges over an empty vertex set")
        if self.m:
            if self.src.min() < 0 or self.dst.min() < 0 \
                    or self.src.max() >= self.n or self.dst.max() >= self.n:
                raise ValueError("edge endpoint out of range")
            if np.any(self.src == self.dst):
                raise ValueError("self-loops are not allowed in an edge sequence")
            packed = self.src * self.n + self.dst
            if len(np.unique(packed)) != self.m:
                raise ValueError("duplicate (src, dst) pair in edge sequence")
        if not np.array_equal(np.sort(self.order), np.arange(self.m)):
            raise ValueError("order is not a permutation of edge ids")

    @classmethod
    def from_pairs(cls, pairs, n: int | None = None) -> "EdgeSequence":
        """Build a sequence from (src, dst) pairs in arrival order; edge ids
        are assigned by that order."""
        pairs = list(pairs)
        if pairs:
            src = np.array([p[0] for p in pairs], dtype=np.int64)
            dst = np.array([p[1] for p in pairs], dtype=np.int64)
        else:
            src = np.empty(0, dtype=np.int64)
            dst = np.empty(0, dtype=np.int64)
        if n is None:
            n = int(max(src.max(), dst.max())) + 1 if pairs else 0
        return cls(n, src, dst)

    def reordered(self, new_order) -> "EdgeSequence":
        """Same edges (shared src/dst arrays), different arrival order."""
        return EdgeSequence(self.n, self.src, self.dst, order=new_order, validate=False)

    def edge(self, edge_id: int) -> Edge:
        return Edge(int(self.src[edge_id]), int(self.dst[edge_id]), int(edge_id))

    def edge_at(self, position: int) -> Edge:
        """Edge at a 1-based position."""
        if not 1 <= position <= self.m:
            raise IndexError(f"position {position} out of range 1..{self.m}")
        return self.edge(int(self.order[position - 1]))

    def position_of(self, edge_id: int) -> int:
        return int(self.pos[edge_id])

    def permutation_of(self, other: "EdgeSequence") -> bool:
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.src, other.src)
            and np.array_equal(self.dst, other.dst)
        )

    def __len__(self) -> int:
        return self.m

    def __iter__(self):
        for eid in self.order.tolist():
            yield self.edge(eid)

    def __repr__(self):
        return f"EdgeSequence(n={self.n}, m={self.m})"


def tarjan_scc(n_vertices: int, edges) -> SccPartition:
    """Exact strongly connected components of a static digraph.

    `edges` may be an EdgeSequence, an iterable of Edge, or a pair of
    endpoint arrays. Linear in n_vertices + len(edges).
    """
    if isinstance(edges, EdgeSequence):
        src, dst = edges.src, edges.dst
    elif isinstance(edges, tuple) and len(edges) == 2:
        src, dst = (np.ascontiguousarray(a, dtype=np.int64) for a in edges)
    else:
        edges = list(edges)
        src = np.array([e.src for e in edges], dtype=np.int64)
        dst = np.array([e.dst for e in edges], dtype=np.int64)
    if len(src) and (src.min() < 0 or dst.min() < 0
                     or src.max() >= n_vertices or dst.max() >= n_vertices):
        raise ValueError("edge endpoint out of range")
    comp, _ = tarjan_labels(n_vertices, src, dst)
    return SccPartition(comp)


def edge_errors(sigma: EdgeSequence, sigma_hat: EdgeSequence) -> tuple[int, float]:
    """Displacement metrics between two orderings of the same edge set.

    For each edge, the error is the absolute difference of its 1-based
    positions in the two sequences; returns (max, mean) over all edges.
    Symmetric in its arguments.
    """
    if not sigma.permutation_of(sigma_hat):
        raise ValueError("sequences are not permutations of the same edge set")
    if sigma.m == 0:
        return 0, 0.0
    diff = np.abs(sigma.pos - sigma_hat.pos)
    return int(diff.max()), int(diff.sum()) / sigma.m
