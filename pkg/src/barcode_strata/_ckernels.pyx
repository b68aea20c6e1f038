# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled assignment kernels; same functions and results as ``_pykernels``.

Graphs are dense n x n byte matrices. Assignments are 0-based lists.
"""
from libc.stdlib cimport malloc, free
from libc.math cimport INFINITY

import numpy as np

NAME = "cython"

cdef double _TIGHT_ULPS = 64.0
cdef double _DBL_EPS = 2.220446049250313e-16


cdef int _hopcroft_karp(const unsigned char* adj, int n, int* match_r, int* match_c,
                        int* dist, int* queue, int* it, int* stack, int* cols):
    cdef int r, c, r2, head, tail, size = 0, r0, top, ncols, k
    cdef bint found
    for r in range(n):
        match_r[r] = -1
        match_c[r] = -1
    while True:
        tail = 0
        for r in range(n):
            if match_r[r] == -1:
                dist[r] = 0
                queue[tail] = r
                tail += 1
            else:
                dist[r] = -1
        found = False
        head = 0
        while head < tail:
            r = queue[head]
            head += 1
            for c in range(n):
                if adj[r * n + c]:
                    r2 = match_c[c]
                    if r2 == -1:
                        found = True
                    elif dist[r2] == -1:
                        dist[r2] = dist[r] + 1
                        queue[tail] = r2
                        tail += 1
        if not found:
            break
        for r in range(n):
            it[r] = 0
        for r0 in range(n):
            if match_r[r0] != -1:
                continue
            top = 0
            stack[0] = r0
            ncols = 0
            while top >= 0:
                r = stack[top]
                while it[r] < n and not adj[r * n + it[r]]:
                    it[r] += 1
                if it[r] < n:
                    c = it[r]
                    it[r] += 1
                    r2 = match_c[c]
                    if r2 == -1:
                        cols[ncols] = c
                        ncols += 1
                        for k in range(top + 1):
                            match_r[stack[k]] = cols[k]
                            match_c[cols[k]] = stack[k]
                        size += 1
                        break
                    if dist[r2] == dist[r] + 1:
                        cols[ncols] = c
                        ncols += 1
                        top += 1
                        stack[top] = r2
                else:
                    dist[r] = -2
                    top -= 1
                    if ncols > 0:
                        ncols -= 1
    return size


cdef void _lexmin(const unsigned char* adj, int n, int* match_r, int* match_c,
                  int* parent, int* queue, unsigned char* locked_c):
    cdef int i, j, k, target, r, c, head, tail, prev
    cdef bint hit
    for c in range(n):
        locked_c[c] = 0
    for i in range(n):
        for j in range(n):
            if not adj[i * n + j] or locked_c[j]:
                continue
            if match_r[i] == j:
                break
            k = match_c[j]
            target = match_r[i]
            for c in range(n):
                parent[c] = -1
            queue[0] = k
            head = 0
            tail = 1
            hit = False
            while head < tail and not hit:
                r = queue[head]
                head += 1
                for c in range(n):
                    if not adj[r * n + c] or locked_c[c] or c == j or parent[c] != -1:
                        continue
                    parent[c] = r
                    if c == target:
                        hit = True
                        break
                    queue[tail] = match_c[c]
                    tail += 1
            if not hit:
                continue
            c = target
            while True:
                r = parent[c]
                prev = match_r[r]
                match_r[r] = c
                match_c[c] = r
                if r == k:
                    break
                c = prev
            match_r[i] = j
            match_c[j] = i
            break
        locked_c[match_r[i]] = 1


cdef class _Work:
    cdef int n
    cdef int* match_r
    cdef int* match_c
    cdef int* dist
    cdef int* queue
    cdef int* it
    cdef int* stack
    cdef int* cols
    cdef unsigned char* flags

    def __cinit__(self, int n):
        cdef int m = n if n > 0 else 1
        self.n = n
        self.match_r = <int*> malloc(m * sizeof(int))
        self.match_c = <int*> malloc(m * sizeof(int))
        self.dist = <int*> malloc(m * sizeof(int))
        self.queue = <int*> malloc((m * m + m) * sizeof(int))
        self.it = <int*> malloc(m * sizeof(int))
        self.stack = <int*> malloc((m + 1) * sizeof(int))
        self.cols = <int*> malloc((m + 1) * sizeof(int))
        self.flags = <unsigned char*> malloc(m * sizeof(unsigned char))
        if (not self.match_r or not self.match_c or not self.dist or not self.queue
                or not self.it or not self.stack or not self.cols or not self.flags):
            raise MemoryError()

    def __dealloc__(self):
        free(self.match_r)
        free(self.match_c)
        free(self.dist)
        free(self.queue)
        free(self.it)
        free(self.stack)
        free(self.cols)
        free(self.flags)

    cdef int matching(self, const unsigned char* adj):
        return _hopcroft_karp(adj, self.n, self.match_r, self.match_c, self.dist,
                              self.queue, self.it, self.stack, self.cols)

    cdef void lexmin(self, const unsigned char* adj):
        _lexmin(adj, self.n, self.match_r, self.match_c, self.dist, self.queue, self.flags)

    cdef list rows(self):
        return [self.match_r[i] for i in range(self.n)]


def _bool_matrix(adj_matrix):
    a = np.ascontiguousarray(np.asarray(adj_matrix, dtype=bool), dtype=np.uint8)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("adjacency must be a square matrix")
    return a


def max_matching(adj_matrix):
    """Row-to-column maximum matching of a boolean n x n matrix (-1 = unmatched)."""
    a = _bool_matrix(adj_matrix)
    cdef int n = a.shape[0]
    if n == 0:
        return []
    cdef const unsigned char[:, ::1] view = a
    cdef _Work w = _Work(n)
    w.matching(&view[0, 0])
    return w.rows()


def lexmin_perfect_matching(adj_matrix):
    """Lexicographically smallest perfect matching, or None if there is none."""
    a = _bool_matrix(adj_matrix)
    cdef int n = a.shape[0]
    if n == 0:
        return []
    cdef const unsigned char[:, ::1] view = a
    cdef _Work w = _Work(n)
    if w.matching(&view[0, 0]) < n:
        return None
    w.lexmin(&view[0, 0])
    return w.rows()


def bottleneck_assignment(cost):
    """Minimise the largest matched entry; lexicographically smallest optimal assignment."""
    c = np.ascontiguousarray(cost, dtype=np.float64)
    cdef int n = c.shape[0]
    if n == 0:
        return 0.0, []
    cdef double[:, ::1] cv = c
    values = np.unique(c)
    floor = max(c.min(axis=1).max(), c.min(axis=0).max())
    cdef double[::1] vals = values
    cdef Py_ssize_t lo = int(np.searchsorted(values, floor)), hi = values.shape[0] - 1, mid
    cdef unsigned char[:, ::1] adj = np.empty((n, n), dtype=np.uint8)
    cdef _Work w = _Work(n)
    cdef double t
    cdef int i, j
    while lo < hi:
        mid = (lo + hi) // 2
        t = vals[mid]
        for i in range(n):
            for j in range(n):
                adj[i, j] = cv[i, j] <= t
        if w.matching(&adj[0, 0]) == n:
            hi = mid
        else:
            lo = mid + 1
    t = vals[lo]
    for i in range(n):
        for j in range(n):
            adj[i, j] = cv[i, j] <= t
    w.matching(&adj[0, 0])
    w.lexmin(&adj[0, 0])
    return float(t), w.rows()


def linear_assignment(cost):
    """Minimum-sum assignment, refined to the lexicographically smallest tight assignment."""
    c = np.ascontiguousarray(cost, dtype=np.float64)
    cdef int n = c.shape[0]
    if n == 0:
        return []
    cdef double[:, ::1] a = c
    cdef double* u = <double*> malloc((n + 1) * sizeof(double))
    cdef double* v = <double*> malloc((n + 1) * sizeof(double))
    cdef double* minv = <double*> malloc((n + 1) * sizeof(double))
    cdef int* p = <int*> malloc((n + 1) * sizeof(int))
    cdef int* way = <int*> malloc((n + 1) * sizeof(int))
    cdef unsigned char* used = <unsigned char*> malloc((n + 1) * sizeof(unsigned char))
    cdef int i, j, j0, j1, i0
    cdef double delta, cur, scale, eps
    cdef _Work w = _Work(n)
    cdef unsigned char[:, ::1] adj = np.zeros((n, n), dtype=np.uint8)
    try:
        for j in range(n + 1):
            u[j] = 0.0
            v[j] = 0.0
            p[j] = 0
            way[j] = 0
        for i in range(1, n + 1):
            p[0] = i
            j0 = 0
            for j in range(n + 1):
                minv[j] = INFINITY
                used[j] = 0
            while True:
                used[j0] = 1
                i0 = p[j0]
                delta = INFINITY
                j1 = 0
                for j in range(1, n + 1):
                    if not used[j]:
                        cur = a[i0 - 1, j - 1] - u[i0] - v[j]
                        if cur < minv[j]:
                            minv[j] = cur
                            way[j] = j0
                        if minv[j] < delta:
                            delta = minv[j]
                            j1 = j
                for j in range(n + 1):
                    if used[j]:
                        u[p[j]] += delta
                        v[j] -= delta
                    else:
                        minv[j] -= delta
                j0 = j1
                if p[j0] == 0:
                    break
            while True:
                j1 = way[j0]
                p[j0] = p[j1]
                j0 = j1
                if j0 == 0:
                    break
        for j in range(1, n + 1):
            w.match_r[p[j] - 1] = j - 1
            w.match_c[j - 1] = p[j] - 1
        assignment = w.rows()
        scale = max(1.0, float(np.abs(c).max()))
        eps = _TIGHT_ULPS * n * _DBL_EPS * scale
        for i in range(n):
            for j in range(n):
                adj[i, j] = (j == w.match_r[i]) or (a[i, j] - u[i + 1] - v[j + 1] <= eps)
        w.lexmin(&adj[0, 0])
        refined = w.rows()
    finally:
        free(u)
        free(v)
        free(minv)
        free(p)
        free(way)
        free(used)
    import math
    if math.fsum(c[i, refined[i]] for i in range(n)) <= math.fsum(
        c[i, assignment[i]] for i in range(n)
    ):
        return refined
    return assignment
