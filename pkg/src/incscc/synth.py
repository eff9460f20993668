"""Synthetic instance generators for tests, verification, and benchmarks.

All generators are seeded through numpy's PCG64 generator so instances are
reproducible across runs and machines.
"""

from __future__ import annotations

import numpy as np

from incscc.graph import EdgeSequence


def _densify(src: np.ndarray, dst: np.ndarray) -> tuple[int, np.ndarray, np.ndarray]:
    """Renumber vertices densely over edge endpoints (drops isolated ids)."""
    verts = np.unique(np.concatenate([src, dst]))
    return len(verts), np.searchsorted(verts, src), np.searchsorted(verts, dst)


def random_edge_sequence(n_max: int, m_max: int, rng: np.random.Generator,
                         n_min: int = 2, m_min: int = 1) -> tuple[int, EdgeSequence]:
    """Random digraph stream: distinct ordered pairs, no self-loops, vertices
    renumbered densely so none is isolated. Sizes are drawn up to the caps."""
    n0 = int(rng.integers(max(n_min, 2), n_max + 1))
    cap = n0 * (n0 - 1)
    m = int(rng.integers(m_min, min(m_max, cap) + 1))
    codes = rng.choice(cap, size=m, replace=False)
    src = codes // (n0 - 1)
    rem = codes % (n0 - 1)
    dst = np.where(rem >= src, rem + 1, rem)  # skip the diagonal
    n, src, dst = _densify(src.astype(np.int64), dst.astype(np.int64))
    return n, EdgeSequence(n, src, dst)


def dense_fixture(m: int, n: int, seed: int) -> tuple[int, EdgeSequence]:
    """Fixed-size random instance (used by the work-bound fixtures)."""
    rng = np.random.default_rng(seed)
    cap = n * (n - 1)
    if m > cap:
        raise ValueError("too many edges for the vertex count")
    codes = rng.choice(cap, size=m, replace=False)
    src = codes // (n - 1)
    rem = codes % (n - 1)
    dst = np.where(rem >= src, rem + 1, rem)
    n2, src, dst = _densify(src.astype(np.int64), dst.astype(np.int64))
    return n2, EdgeSequence(n2, src, dst)


def synthetic_stream(m: int, seed: int, attach: int = 3,
                     reciprocate: float = 0.35) -> tuple[int, EdgeSequence]:
    """Temporal-style stream: vertices activate over time, targets are
    degree-biased, and a fraction of arcs reciprocate earlier ones, so SCCs
    form and grow the way they do in timestamped interaction graphs."""
    rng = np.random.default_rng(seed)
    src_l: list[int] = [0]
    dst_l: list[int] = [1]
    seen = {(0, 1)}
    endpoints = [0, 1]  # one entry per arc endpoint: degree-biased sampling
    n_active = 2
    while len(src_l) < m:
        r = rng.random()
        if r < reciprocate:
            k = int(rng.integers(len(src_l)))
            u, v = dst_l[k], src_l[k]
        elif r < reciprocate + 1.0 / attach:
            u = n_active  # new vertex links to a degree-biased target
            v = endpoints[int(rng.integers(len(endpoints)))]
        else:
            u = endpoints[int(rng.integers(len(endpoints)))]
            v = endpoints[int(rng.integers(len(endpoints)))]
        if u == v or (u, v) in seen:
            continue
        if u == n_active:
            n_active += 1
        seen.add((u, v))
        src_l.append(u)
        dst_l.append(v)
        endpoints.append(u)
        endpoints.append(v)
    src = np.array(src_l, dtype=np.int64)
    dst = np.array(dst_l, dtype=np.int64)
    n, src, dst = _densify(src, dst)
    return n, EdgeSequence(n, src, dst)


def reversed_sequence(sigma: EdgeSequence) -> EdgeSequence:
    """Worst-case prediction: the arrival order exactly reversed."""
    return sigma.reordered(sigma.order[::-1].copy())
