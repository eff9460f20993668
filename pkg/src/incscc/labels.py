"""Node label structure: O(1) same-SCC queries, smaller-into-larger merges."""

from __future__ import annotations


class NodeLabels:
    """Vertex labels plus per-label member lists.

    label[v] identifies v's class; two vertices are in the same SCC iff
    their labels are equal. Merging relabels the smaller class into the
    larger, so each vertex is relabeled at most floor(log2 n) times over
    any merge sequence. Labels are never reused: the surviving label is
    always one of the two merged labels.
    """

    __slots__ = ("n", "label", "members", "relabel_count", "merges_performed")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one vertex")
        self.n = n
        self.label = list(range(n))
        self.members: dict[int, list[int]] = {i: [i] for i in range(n)}
        self.relabel_count = 0  # total vertex relabels (amortization counter)
        self.merges_performed = 0  # pairwise merges of distinct classes

    def same_scc(self, a: int, b: int) -> bool:
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise IndexError("vertex out of range")
        return self.label[a] == self.label[b]

    def merge(self, vertices) -> None:
        """Merge the classes of all given vertices into one class.

        Performed as pairwise merges left to right; a singleton list is a
        no-op. Pairs already sharing a class are skipped.
        """
        vs = list(vertices)
        if not vs:
            raise ValueError("merge of an empty vertex list")
        for v in vs:
            if not 0 <= v < self.n:
                raise IndexError("vertex out of range")
        for a, b in zip(vs, vs[1:]):
            self._merge_pair(a, b)

    def _merge_pair(self, a: int, b: int) -> None:
        la = self.label[a]
        lb = self.label[b]
        if la == lb:
            return
        ma = self.members[la]
        mb = self.members[lb]
        # Smaller class is relabeled; on ties the numerically smaller label
        # survives (deterministic transcripts).
        if len(ma) > len(mb) or (len(ma) == len(mb) and la < lb):
            keep, lose, mk, ml = la, lb, ma, mb
        else:
            keep, lose, mk, ml = lb, la, mb, ma
        lab = self.label
        for v in ml:
            lab[v] = keep
        mk.extend(ml)
        del self.members[lose]
        self.relabel_count += len(ml)
        self.merges_performed += 1

    def label_array(self) -> list[int]:
        return self.label

    def n_classes(self) -> int:
        return len(self.members)

    def check_consistent(self) -> None:
        """Full-scan consistency between label array and member lists."""
        total = 0
        for lab, ms in self.members.items():
            total += len(ms)
            for v in ms:
                assert self.label[v] == lab, f"vertex {v} not labeled {lab}"
        assert total == self.n, "member lists do not partition the vertex set"
