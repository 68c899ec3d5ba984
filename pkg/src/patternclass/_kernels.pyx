# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; interface mirrors ``_purepy``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

NAME = "cython"


cdef bint _place_fwd(const unsigned char[:, ::1] a, const signed char[:, ::1] p,
                     int n, int k, int j, int start, int* pos):
    cdef int x, i
    cdef bint ok
    cdef signed char s
    for x in range(start, n - (k - j) + 1):
        ok = True
        for i in range(j):
            s = p[i, j]
            if s != 0 and (a[x, pos[i]] != 0) != (s == 1):
                ok = False
                break
        if ok:
            pos[j] = x
            if j + 1 == k or _place_fwd(a, p, n, k, j + 1, x + 1, pos):
                return True
    return False


def first_violation(a, p):
    cdef const unsigned char[:, ::1] av = np.ascontiguousarray(a, dtype=np.uint8)
    cdef const signed char[:, ::1] pv = np.ascontiguousarray(p, dtype=np.int8)
    cdef int n = av.shape[0], k = pv.shape[0]
    cdef int* pos
    if k > n:
        return None
    pos = <int*>malloc(k * sizeof(int))
    try:
        if _place_fwd(av, pv, n, k, 0, 0, pos):
            return tuple(pos[i] for i in range(k))
        return None
    finally:
        free(pos)


cdef bint _place_back(const unsigned char[:, ::1] a, const signed char[:, :, ::1] P, int q,
                      int k, int j, int hi, int* placed, int* pos):
    cdef int x, i, row
    cdef bint ok
    cdef signed char s
    x = hi - 1
    while x >= j:
        row = placed[x]
        ok = True
        for i in range(j + 1, k):
            s = P[q, j, i]
            if s != 0 and (a[row, placed[pos[i]]] != 0) != (s == 1):
                ok = False
                break
        if ok:
            pos[j] = x
            if j == 0 or _place_back(a, P, q, k, j - 1, x, placed, pos):
                return True
        x -= 1
    return False


cdef bint _extend(const unsigned char[:, ::1] a, const signed char[:, :, ::1] P,
                  const int[::1] ks, int n, int t, int* placed, bint* used, int* pos):
    cdef int v, q, k
    cdef bint hit
    if t == n:
        return True
    for v in range(n):
        if used[v]:
            continue
        placed[t] = v
        hit = False
        for q in range(ks.shape[0]):
            k = ks[q]
            if t + 1 >= k:
                pos[k - 1] = t
                if _place_back(a, P, q, k, k - 2, t, placed, pos):
                    hit = True
                    break
        if not hit:
            used[v] = True
            if _extend(a, P, ks, n, t + 1, placed, used, pos):
                return True
            used[v] = False
    return False


def oracle_search(a, patterns):
    cdef const unsigned char[:, ::1] av = np.ascontiguousarray(a, dtype=np.uint8)
    cdef int n = av.shape[0]
    pats = [np.asarray(p, dtype=np.int8) for p in patterns]
    cdef int kmax = 2, i
    for p in pats:
        if p.shape[0] <= 1:
            return None if n >= 1 else []
        kmax = max(kmax, p.shape[0])
    packed = np.zeros((max(len(pats), 1), kmax, kmax), dtype=np.int8)
    for i, p in enumerate(pats):
        packed[i, :p.shape[0], :p.shape[0]] = p
    cdef const signed char[:, :, ::1] P = packed
    cdef const int[::1] ks = np.asarray([p.shape[0] for p in pats], dtype=np.int32)
    cdef int* placed = <int*>malloc((n + 1) * sizeof(int))
    cdef bint* used = <bint*>malloc((n + 1) * sizeof(bint))
    cdef int* pos = <int*>malloc(kmax * sizeof(int))
    try:
        for i in range(n):
            used[i] = False
        if _extend(av, P, ks, n, 0, placed, used, pos):
            return [placed[i] for i in range(n)]
        return None
    finally:
        free(placed)
        free(used)
        free(pos)


def lexbfs(indptr, indices, int n):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef cnp.ndarray[int, ndim=1] out_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] out = out_arr
    # vertex lists
    cdef int[::1] nxt = np.empty(n, dtype=np.int32)
    cdef int[::1] prv = np.empty(n, dtype=np.int32)
    cdef int[::1] cls_of = np.zeros(n, dtype=np.int32)
    cdef unsigned char[::1] visited = np.zeros(n, dtype=np.uint8)
    # class records; at most n + 1 classes are ever alive, but ids grow
    # with every split, bounded by 1 + number of neighbour moves (<= 2m)
    cdef Py_ssize_t cap = 1 + ix.shape[0] + 1
    cdef int[::1] head = np.empty(cap, dtype=np.int32)
    cdef int[::1] tail = np.empty(cap, dtype=np.int32)
    cdef int[::1] cprev = np.empty(cap, dtype=np.int32)
    cdef int[::1] cnext = np.empty(cap, dtype=np.int32)
    cdef int[::1] split_into = np.empty(cap, dtype=np.int32)
    cdef int[::1] stamp = np.empty(cap, dtype=np.int32)
    cdef int nclasses = 1, first, step, v, w, oc, nc
    cdef long long e
    cdef int i
    if n == 0:
        return out_arr
    for i in range(n):
        nxt[i] = i + 1
        prv[i] = i - 1
    nxt[n - 1] = -1
    head[0] = 0
    tail[0] = n - 1
    cprev[0] = -1
    cnext[0] = -1
    split_into[0] = -1
    stamp[0] = -1
    first = 0
    for step in range(n):
        oc = first
        v = head[oc]
        # unlink v
        if prv[v] != -1:
            nxt[prv[v]] = nxt[v]
        else:
            head[oc] = nxt[v]
        if nxt[v] != -1:
            prv[nxt[v]] = prv[v]
        else:
            tail[oc] = prv[v]
        visited[v] = 1
        out[step] = v
        if head[oc] == -1:
            if cprev[oc] != -1:
                cnext[cprev[oc]] = cnext[oc]
            if cnext[oc] != -1:
                cprev[cnext[oc]] = cprev[oc]
            if oc == first:
                first = cnext[oc]
        for e in range(ip[v], ip[v + 1]):
            w = ix[e]
            if visited[w]:
                continue
            oc = cls_of[w]
            if stamp[oc] != step:
                stamp[oc] = step
                nc = nclasses
                nclasses += 1
                head[nc] = -1
                tail[nc] = -1
                cprev[nc] = cprev[oc]
                cnext[nc] = oc
                split_into[nc] = -1
                stamp[nc] = step
                if cprev[oc] != -1:
                    cnext[cprev[oc]] = nc
                else:
                    first = nc
                cprev[oc] = nc
                split_into[oc] = nc
            nc = split_into[oc]
            # unlink w from oc
            if prv[w] != -1:
                nxt[prv[w]] = nxt[w]
            else:
                head[oc] = nxt[w]
            if nxt[w] != -1:
                prv[nxt[w]] = prv[w]
            else:
                tail[oc] = prv[w]
            # append to nc
            prv[w] = tail[nc]
            nxt[w] = -1
            if tail[nc] != -1:
                nxt[tail[nc]] = w
            else:
                head[nc] = w
            tail[nc] = w
            cls_of[w] = nc
            if head[oc] == -1:
                if cprev[oc] != -1:
                    cnext[cprev[oc]] = cnext[oc]
                if cnext[oc] != -1:
                    cprev[cnext[oc]] = cprev[oc]
                if oc == first:
                    first = cnext[oc]
    return out_arr


def peo_violation(indptr, indices, order):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef const long long[::1] ordv = np.ascontiguousarray(order, dtype=np.int64)
    cdef int n = ordv.shape[0]
    cdef int[::1] pos = np.empty(n, dtype=np.int32)
    cdef int[::1] parent = np.full(n, -1, dtype=np.int32)
    cdef int[::1] mark = np.full(n, -1, dtype=np.int32)
    cdef int[::1] rcount = np.zeros(n + 1, dtype=np.int32)
    cdef int[::1] rstart = np.zeros(n + 1, dtype=np.int32)
    cdef int i, v, w, p, best, pv, total
    cdef long long e
    for i in range(n):
        pos[ordv[i]] = i
    # parent = latest earlier neighbour; count requirements per parent
    for v in range(n):
        pv = pos[v]
        best = -1
        for e in range(ip[v], ip[v + 1]):
            w = ix[e]
            if pos[w] < pv and (best == -1 or pos[w] > pos[best]):
                best = w
        parent[v] = best
        if best != -1:
            for e in range(ip[v], ip[v + 1]):
                w = ix[e]
                if w != best and pos[w] < pv:
                    rcount[best] += 1
    total = 0
    for p in range(n):
        rstart[p] = total
        total += rcount[p]
    rstart[n] = total
    cdef int[::1] req_w = np.empty(max(total, 1), dtype=np.int32)
    cdef int[::1] req_v = np.empty(max(total, 1), dtype=np.int32)
    cdef int[::1] fill = np.zeros(n, dtype=np.int32)
    for v in range(n):
        best = parent[v]
        if best == -1:
            continue
        pv = pos[v]
        for e in range(ip[v], ip[v + 1]):
            w = ix[e]
            if w != best and pos[w] < pv:
                req_w[rstart[best] + fill[best]] = w
                req_v[rstart[best] + fill[best]] = v
                fill[best] += 1
    for p in range(n):
        if rcount[p] == 0:
            continue
        for e in range(ip[p], ip[p + 1]):
            mark[ix[e]] = p
        for i in range(rstart[p], rstart[p] + rcount[p]):
            if mark[req_w[i]] != p:
                return (req_w[i], p, req_v[i])
    return None
