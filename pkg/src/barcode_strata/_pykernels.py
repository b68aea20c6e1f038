"""Pure-Python assignment kernels.

Reference implementation of the kernels in ``_ckernels.pyx``; both modules
expose the same functions with the same results. Matrices may be numpy
arrays or nested lists. Assignments are 0-based: ``assignment[i]`` is the
column matched to row i.
"""
from __future__ import annotations

import math

__all__ = [
    "max_matching", "lexmin_perfect_matching",
    "bottleneck_assignment", "linear_assignment",
]

NAME = "python"

# reduced costs within this many ulps of the cost scale count as tight
_TIGHT_ULPS = 64.0


def _rows(matrix) -> list[list]:
    if hasattr(matrix, "tolist"):
        matrix = matrix.tolist()
    return [list(r) for r in matrix]


def _hopcroft_karp(adj: list[list[int]], n: int) -> tuple[list[int], list[int], int]:
    """Maximum matching on an n x n bipartite graph given by row adjacency lists."""
    match_r = [-1] * n
    match_c = [-1] * n
    size = 0
    while True:
        dist = [-1] * n
        queue = [r for r in range(n) if match_r[r] == -1]
        for r in queue:
            dist[r] = 0
        found = False
        head = 0
        while head < len(queue):
            r = queue[head]
            head += 1
            for c in adj[r]:
                r2 = match_c[c]
                if r2 == -1:
                    found = True
                elif dist[r2] == -1:
                    dist[r2] = dist[r] + 1
                    queue.append(r2)
        if not found:
            break
        it = [0] * n
        for r0 in range(n):
            if match_r[r0] != -1:
                continue
            stack = [r0]
            cols: list[int] = []
            while stack:
                r = stack[-1]
                if it[r] < len(adj[r]):
                    c = adj[r][it[r]]
                    it[r] += 1
                    r2 = match_c[c]
                    if r2 == -1:
                        cols.append(c)
                        for rr, cc in zip(stack, cols):
                            match_r[rr] = cc
                            match_c[cc] = rr
                        size += 1
                        break
                    if dist[r2] == dist[r] + 1:
                        cols.append(c)
                        stack.append(r2)
                else:
                    dist[r] = -2
                    stack.pop()
                    if cols:
                        cols.pop()
    return match_r, match_c, size


def _adjacency(adj_matrix) -> list[list[int]]:
    return [[j for j, ok in enumerate(row) if ok] for row in _rows(adj_matrix)]


def max_matching(adj_matrix) -> list[int]:
    """Row-to-column maximum matching of a boolean n x n matrix (-1 = unmatched)."""
    adj = _adjacency(adj_matrix)
    match_r, _, _ = _hopcroft_karp(adj, len(adj))
    return match_r


def _lexmin(adj: list[list[int]], match_r: list[int], match_c: list[int]) -> list[int]:
    """Turn a perfect matching into the lexicographically smallest one of the graph.

    Row i is moved to its smallest admissible column j by an alternating path
    from j's current partner to i's current column through unlocked vertices.
    """
    n = len(adj)
    locked_r = [False] * n
    locked_c = [False] * n
    for i in range(n):
        for j in adj[i]:
            if locked_c[j]:
                continue
            if match_r[i] == j:
                break
            k = match_c[j]
            target = match_r[i]
            parent = {}  # column -> row that reached it
            queue = [k]
            head = 0
            hit = False
            while head < len(queue) and not hit:
                r = queue[head]
                head += 1
                for c in adj[r]:
                    if locked_c[c] or c == j or c in parent:
                        continue
                    parent[c] = r
                    if c == target:
                        hit = True
                        break
                    queue.append(match_c[c])
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
        locked_r[i] = True
        locked_c[match_r[i]] = True
    return match_r


def lexmin_perfect_matching(adj_matrix) -> list[int] | None:
    """Lexicographically smallest perfect matching, or None if there is none."""
    adj = _adjacency(adj_matrix)
    match_r, match_c, size = _hopcroft_karp(adj, len(adj))
    if size < len(adj):
        return None
    return _lexmin(adj, match_r, match_c)


def bottleneck_assignment(cost) -> tuple[float, list[int]]:
    """Minimise the largest matched entry of a square cost matrix.

    Binary search over the sorted distinct entries for the smallest threshold
    whose ``cost <= threshold`` graph has a perfect matching. Among optimal
    assignments the lexicographically smallest is returned.
    """
    rows = _rows(cost)
    n = len(rows)
    if n == 0:
        return 0.0, []
    values = sorted({v for row in rows for v in row})
    # every row and every column must be matched somewhere
    floor = max(max(min(row) for row in rows), max(min(col) for col in zip(*rows)))
    lo = values.index(floor)
    hi = len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        t = values[mid]
        adj = [[j for j, v in enumerate(row) if v <= t] for row in rows]
        if _hopcroft_karp(adj, n)[2] == n:
            hi = mid
        else:
            lo = mid + 1
    t = values[lo]
    adj = [[j for j, v in enumerate(row) if v <= t] for row in rows]
    match_r, match_c, _ = _hopcroft_karp(adj, n)
    return t, _lexmin(adj, match_r, match_c)


def _hungarian(a: list[list[float]]) -> tuple[list[int], list[float], list[float]]:
    """Shortest augmenting path assignment with dual potentials, O(n^3)."""
    n = len(a)
    inf = math.inf
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row (1-based) matched to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = a[i0 - 1]
            ui0 = u[i0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - ui0 - v[j]
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
    assignment = [0] * n
    for j in range(1, n + 1):
        assignment[p[j] - 1] = j - 1
    return assignment, u[1:], v[1:]


def linear_assignment(cost) -> list[int]:
    """Minimum-sum assignment of a square cost matrix.

    The optimum is refined to the lexicographically smallest assignment of
    the tight (zero reduced cost) subgraph; the refinement is discarded if
    rounding makes it worse than the plain optimum.
    """
    a = _rows(cost)
    n = len(a)
    if n == 0:
        return []
    assignment, u, v = _hungarian(a)
    scale = max(1.0, max(abs(x) for row in a for x in row))
    eps = _TIGHT_ULPS * n * 2.220446049250313e-16 * scale
    adj = []
    for i in range(n):
        row = a[i]
        adj.append([j for j in range(n) if j == assignment[i] or row[j] - u[i] - v[j] <= eps])
    match_c = [0] * n
    for i, j in enumerate(assignment):
        match_c[j] = i
    refined = _lexmin(adj, list(assignment), match_c)
    if math.fsum(a[i][refined[i]] for i in range(n)) <= math.fsum(
        a[i][assignment[i]] for i in range(n)
    ):
        return refined
    return assignment
