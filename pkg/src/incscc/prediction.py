"""Splicable positionally-indexed permutation of edge ids.

Backing store is a pair of flat arrays (position -> edge id, edge id ->
position), so position lookups are O(1). The arrival splice (move an edge
from its predicted slot t_hat back to the arrival slot t) rotates only the
block [t, t_hat], i.e. it touches at most eta + 1 slots per insert; the
generic remove_at/insert_at below shift a whole suffix and exist for
completeness, not for the hot path.
"""

from __future__ import annotations

import numpy as np


class Prediction:
    """A predicted arrival order, updated as true arrivals come in."""

    def __init__(self, order):
        self.seq = np.ascontiguousarray(order, dtype=np.int64).copy()
        self.m = len(self.seq)
        self.pos = np.empty(self.m, dtype=np.int64)
        self.pos[self.seq] = np.arange(1, self.m + 1, dtype=np.int64)
        self.version = 0
        self.mut_version = 0  # counts updates that actually moved something

    def edge_at(self, position: int) -> int:
        if not 1 <= position <= self.m:
            raise IndexError(f"position {position} out of range 1..{self.m}")
        return int(self.seq[position - 1])

    def position_of(self, edge_id: int) -> int:
        if not 0 <= edge_id < self.m:
            raise KeyError(f"edge {edge_id} not in prediction")
        return int(self.pos[edge_id])

    def splice_to(self, edge_id: int, t: int) -> int:
        """Move edge_id from its current position t_hat >= t to position t.

        Edges formerly at positions t..t_hat-1 shift one later; everything
        past t_hat is untouched. Returns t_hat.
        """
        t_hat = self.position_of(edge_id)
        if t_hat < t:
            raise ValueError(
                f"edge {edge_id} predicted at {t_hat}, before arrival slot {t}")
        if t_hat > t:
            block = self.seq[t - 1:t_hat - 1].copy()
            self.seq[t:t_hat] = block
            self.seq[t - 1] = edge_id
            self.pos[block] += 1
            self.pos[edge_id] = t
            self.mut_version += 1
        self.version += 1
        return t_hat

    def remove_at(self, position: int) -> int:
        """Delete and return the edge at a position (suffix shift, O(m))."""
        eid = self.edge_at(position)
        self.seq = np.delete(self.seq, position - 1)
        self.pos[self.seq[position - 1:]] -= 1
        self.pos[eid] = 0
        self.m -= 1
        self.version += 1
        self.mut_version += 1
        return eid

    def insert_at(self, position: int, edge_id: int) -> None:
        """Insert an edge at a position (suffix shift, O(m))."""
        if not 1 <= position <= self.m + 1:
            raise IndexError(f"position {position} out of range 1..{self.m + 1}")
        self.seq = np.insert(self.seq, position - 1, edge_id)
        self.m += 1
        self.pos[self.seq[position:]] += 1
        self.pos[edge_id] = position
        self.version += 1
        self.mut_version += 1

    def order_list(self) -> list[int]:
        return self.seq.tolist()
