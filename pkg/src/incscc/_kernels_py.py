"""Pure-Python hot-loop kernels.

`incscc._backend` prefers the compiled twin (incscc._kernels, built from
_kernels.pyx) and falls back to this module. Both implementations must
produce bit-identical output; keep them in sync.
"""

import numpy as np


def tarjan_labels(n, src, dst):
    """Strongly connected components of a directed multigraph.

    Iterative Tarjan over vertices 0..n-1 and arcs (src[i], dst[i]).
    Parallel arcs and self-loops are tolerated. Returns (comp, ncomp)
    where comp maps each vertex to a component index; components are
    numbered in completion order (a reverse topological order of the
    condensation), which both backends reproduce exactly.
    """
    src = np.ascontiguousarray(src, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    m = src.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int64), 0
    s = src.tolist()
    d = dst.tolist()

    # CSR adjacency by counting sort; input order preserved per source.
    indptr = [0] * (n + 1)
    for u in s:
        indptr[u + 1] += 1
    for i in range(n):
        indptr[i + 1] += indptr[i]
    adj = [0] * m
    cur = indptr[:n]
    cur = list(cur)
    for i in range(m):
        u = s[i]
        adj[cur[u]] = d[i]
        cur[u] += 1

    index = [-1] * n
    low = [0] * n
    onstack = bytearray(n)
    comp = [-1] * n
    scc_stack = []
    vstack = []  # DFS frames: vertex
    pstack = []  # DFS frames: adjacency cursor
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        scc_stack.append(root)
        onstack[root] = 1
        vstack.append(root)
        pstack.append(indptr[root])
        while vstack:
            v = vstack[-1]
            p = pstack[-1]
            if p < indptr[v + 1]:
                pstack[-1] = p + 1
                w = adj[p]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    scc_stack.append(w)
                    onstack[w] = 1
                    vstack.append(w)
                    pstack.append(indptr[w])
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                vstack.pop()
                pstack.pop()
                if low[v] == index[v]:
                    while True:
                        w = scc_stack.pop()
                        onstack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                if vstack:
                    pv = vstack[-1]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
    return np.array(comp, dtype=np.int64), ncomp
