"""Pure-Python kernels; same interface and results as the compiled ``_kernels``.

Pattern matrices are ``k x k`` int8 arrays with 0 = undecided,
1 = edge, 2 = non-edge.  Adjacency matrices are uint8.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def first_violation(a, p):
    """Lexicographically least increasing position tuple realizing ``p``.

    ``a`` is the adjacency matrix already permuted into ordering positions.
    Returns 0-based positions, or None when the ordering avoids ``p``.
    """
    a = np.asarray(a).tolist()
    p = np.asarray(p).tolist()
    n, k = len(a), len(p)
    if k > n:
        return None
    pos = [0] * k
    # need[j] lists (i, wanted adjacency) for decided pairs i < j
    need = [[(i, p[i][j] == 1) for i in range(j) if p[i][j]] for j in range(k)]

    def place(j, start):
        for x in range(start, n - (k - j) + 1):
            row = a[x]
            if all(bool(row[pos[i]]) == want for i, want in need[j]):
                pos[j] = x
                if j + 1 == k or place(j + 1, x + 1):
                    return True
        return False

    if place(0, 0):
        return tuple(pos)
    return None


def _ends_at(a, placed, t, p, need):
    """True iff some occurrence of ``p`` uses prefix position ``t`` as its last vertex."""
    k = len(p)
    if t + 1 < k:
        return False
    pos = [0] * k
    pos[k - 1] = t

    # assign pattern vertices k-2 .. 0 at decreasing positions
    def place(j, hi):
        for x in range(hi - 1, j - 1, -1):
            row = a[placed[x]]
            ok = True
            for i, want in need[j]:
                if bool(row[placed[pos[i]]]) != want:
                    ok = False
                    break
            if ok:
                pos[j] = x
                if j == 0 or place(j - 1, x):
                    return True
        return False

    return place(k - 2, t)


def oracle_search(a, patterns):
    """Lexicographically first vertex ordering avoiding every pattern, or None."""
    a = np.asarray(a).tolist()
    n = len(a)
    pats = []
    for p in patterns:
        p = np.asarray(p).tolist()
        k = len(p)
        # for vertex j, the decided pairs with later pattern vertices
        need = [[(i, p[j][i] == 1) for i in range(j + 1, k) if p[j][i]] for j in range(k)]
        pats.append((p, need))
    if any(len(p) <= 1 for p, _ in pats):
        return None if n >= 1 else []
    placed: list[int] = []
    used = [False] * n

    def extend():
        t = len(placed)
        if t == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            placed.append(v)
            if not any(_ends_at(a, placed, t, p, need) for p, need in pats):
                used[v] = True
                if extend():
                    return True
                used[v] = False
            placed.pop()
        return False

    return list(placed) if extend() else None


def lexbfs(indptr, indices, n):
    """LexBFS by partition refinement, ties to the least vertex id.

    Classes are kept as linked lists sorted by id; neighbours of the chosen
    vertex move, in id order, to a new class just before their old one.
    """
    indptr = np.asarray(indptr).tolist()
    indices = np.asarray(indices).tolist()
    # class records: [head, tail, prev_class, next_class, split_into, stamp]
    nxt = [v + 1 for v in range(n)]
    prv = [v - 1 for v in range(n)]
    if n:
        nxt[n - 1] = -1
    cls_of = [0] * n
    classes = [[0 if n else -1, n - 1, -1, -1, -1, -1]]
    first = 0 if n else -1
    visited = [False] * n
    out = []
    for step in range(n):
        c = classes[first]
        v = c[0]
        # unlink v
        _unlink(v, c, nxt, prv)
        visited[v] = True
        out.append(v)
        if c[0] == -1:
            first = _drop_class(first, classes, first)
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if visited[w]:
                continue
            oc_id = cls_of[w]
            oc = classes[oc_id]
            if oc[5] != step:
                oc[5] = step
                nc_id = len(classes)
                nc = [-1, -1, oc[2], oc_id, -1, step]
                classes.append(nc)
                if oc[2] != -1:
                    classes[oc[2]][3] = nc_id
                else:
                    first = nc_id
                oc[2] = nc_id
                oc[4] = nc_id
            nc_id = oc[4]
            nc = classes[nc_id]
            _unlink(w, oc, nxt, prv)
            # append w to the new class
            prv[w] = nc[1]
            nxt[w] = -1
            if nc[1] != -1:
                nxt[nc[1]] = w
            else:
                nc[0] = w
            nc[1] = w
            cls_of[w] = nc_id
            if oc[0] == -1:
                first = _drop_class(oc_id, classes, first)
    return np.asarray(out, dtype=np.int32)


def _unlink(v, c, nxt, prv):
    if prv[v] != -1:
        nxt[prv[v]] = nxt[v]
    else:
        c[0] = nxt[v]
    if nxt[v] != -1:
        prv[nxt[v]] = prv[v]
    else:
        c[1] = prv[v]


def _drop_class(cid, classes, first):
    c = classes[cid]
    if c[2] != -1:
        classes[c[2]][3] = c[3]
    if c[3] != -1:
        classes[c[3]][2] = c[2]
    return c[3] if cid == first else first


def peo_violation(indptr, indices, order):
    """Check that earlier neighbourhoods are cliques, in linear time.

    Returns None on success, else vertices ``(w, p, v)`` in ordering order
    with ``w, p`` non-adjacent earlier neighbours of ``v``.
    """
    indptr = np.asarray(indptr).tolist()
    indices = np.asarray(indices).tolist()
    order = np.asarray(order).tolist()
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    parent = [-1] * n
    reqs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for v in range(n):
        pv, best = pos[v], -1
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if pos[w] < pv and (best == -1 or pos[w] > pos[best]):
                best = w
        parent[v] = best
        if best != -1:
            for e in range(indptr[v], indptr[v + 1]):
                w = indices[e]
                if w != best and pos[w] < pv:
                    reqs[best].append((w, v))
    mark = [-1] * n
    for p in range(n):
        if not reqs[p]:
            continue
        for e in range(indptr[p], indptr[p + 1]):
            mark[indices[e]] = p
        for w, v in reqs[p]:
            if mark[w] != p:
                return (w, p, v)
    return None
