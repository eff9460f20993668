# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot-loop kernels.

Must stay in lockstep with incscc._kernels_py: identical algorithms,
identical output (component numbering included).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def tarjan_labels(Py_ssize_t n, src, dst):
    """Strongly connected components of a directed multigraph.

    See incscc._kernels_py.tarjan_labels; this is its compiled twin.
    """
    cdef cnp.ndarray[cnp.int64_t, ndim=1] src_a = np.ascontiguousarray(src, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] dst_a = np.ascontiguousarray(dst, dtype=np.int64)
    cdef Py_ssize_t m = src_a.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] comp_a = np.empty(n, dtype=np.int64)
    if n == 0:
        return comp_a, 0

    cdef cnp.int64_t[::1] s = src_a
    cdef cnp.int64_t[::1] d = dst_a
    cdef cnp.int64_t[::1] comp = comp_a
    cdef cnp.int64_t[::1] indptr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] cur = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] adj = np.empty(max(m, 1), dtype=np.int64)
    cdef cnp.int64_t[::1] index = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] low = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] onstack = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] scc_stack = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] vstack = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] pstack = np.empty(n, dtype=np.int64)

    cdef Py_ssize_t i, u, root
    cdef cnp.int64_t v, w, p, pv
    cdef cnp.int64_t counter = 0, ncomp = 0
    cdef Py_ssize_t scc_top = 0, sp = 0

    # CSR adjacency by counting sort; input order preserved per source.
    for i in range(m):
        indptr[s[i] + 1] += 1
    for i in range(n):
        indptr[i + 1] += indptr[i]
        cur[i] = indptr[i]
    for i in range(m):
        u = s[i]
        adj[cur[u]] = d[i]
        cur[u] += 1

    for i in range(n):
        index[i] = -1
        comp[i] = -1

    for root in range(n):
        if index[root] >= 0:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        scc_stack[scc_top] = root
        scc_top += 1
        onstack[root] = 1
        vstack[sp] = root
        pstack[sp] = indptr[root]
        sp += 1
        while sp > 0:
            v = vstack[sp - 1]
            p = pstack[sp - 1]
            if p < indptr[v + 1]:
                pstack[sp - 1] = p + 1
                w = adj[p]
                if index[w] < 0:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    scc_stack[scc_top] = w
                    scc_top += 1
                    onstack[w] = 1
                    vstack[sp] = w
                    pstack[sp] = indptr[w]
                    sp += 1
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                sp -= 1
                if low[v] == index[v]:
                    while True:
                        scc_top -= 1
                        w = scc_stack[scc_top]
                        onstack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                if sp > 0:
                    pv = vstack[sp - 1]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
    return comp_a, int(ncomp)
