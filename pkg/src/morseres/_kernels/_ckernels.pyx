# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_pykernels``."""
import numpy as np
cimport numpy as cnp

from libc.stdlib cimport malloc, free

ctypedef cnp.int64_t i64


def subset_labels(gens):
    cdef i64[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef Py_ssize_t q = g.shape[0], n = g.shape[1]
    out_arr = np.zeros((1 << q, n), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    cdef Py_ssize_t mask, rest, j, i
    cdef long long low
    for mask in range(1, 1 << q):
        low = mask & -mask
        rest = mask ^ low
        j = 0
        while (low >> j) != 1:
            j += 1
        for i in range(n):
            out[mask, i] = out[rest, i] if out[rest, i] > g[j, i] else g[j, i]
    return out_arr


cdef i64 _inv_mod(i64 a, i64 p):
    cdef i64 result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef Py_ssize_t _rank_inplace(i64[:, ::1] m, i64 p):
    cdef Py_ssize_t nr = m.shape[0], nc = m.shape[1]
    cdef Py_ssize_t rank = 0, col, i, c, piv
    cdef i64 inv, f, tmp
    for i in range(nr):
        for c in range(nc):
            m[i, c] = ((m[i, c] % p) + p) % p
    for col in range(nc):
        if rank == nr:
            break
        piv = -1
        for i in range(rank, nr):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(col, nc):
                tmp = m[rank, c]
                m[rank, c] = m[piv, c]
                m[piv, c] = tmp
        inv = _inv_mod(m[rank, col], p)
        for c in range(col, nc):
            m[rank, c] = m[rank, c] * inv % p
        for i in range(rank + 1, nr):
            f = m[i, col]
            if f != 0:
                for c in range(col, nc):
                    m[i, c] = (m[i, c] - f * m[rank, c]) % p
                    if m[i, c] < 0:
                        m[i, c] += p
        rank += 1
    return rank


def rank_mod_p(mat, p):
    arr = np.array(mat, dtype=np.int64, order="C", copy=True)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    return int(_rank_inplace(arr, p))


def koszul_homology(gens, u, p):
    cdef i64[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef i64[::1] uu = np.ascontiguousarray(u, dtype=np.int64)
    cdef Py_ssize_t q = g.shape[0], n = g.shape[1]
    support_l = [i for i in range(n) if uu[i] > 0]
    cdef Py_ssize_t s = len(support_l)
    dims = [0] * (s + 1)
    cdef Py_ssize_t* support = <Py_ssize_t*> malloc(max(s, 1) * sizeof(Py_ssize_t))
    cdef i64* quot = <i64*> malloc(max(n, 1) * sizeof(i64))
    cdef Py_ssize_t nw = 1 << s
    idx_arr = np.full(nw, -1, dtype=np.int64)
    size_arr = np.zeros(nw, dtype=np.int64)
    cdef i64[::1] idx = idx_arr
    cdef i64[::1] wsize = size_arr
    counts = np.zeros(s + 2, dtype=np.int64)
    cdef i64[::1] cnt = counts
    cdef Py_ssize_t w, t, j, i, k, r, c
    cdef bint ok, member
    try:
        for t in range(s):
            support[t] = support_l[t]
        for w in range(nw):
            for i in range(n):
                quot[i] = uu[i]
            k = 0
            for t in range(s):
                if (w >> t) & 1:
                    quot[support[t]] -= 1
                    k += 1
            wsize[w] = k
            member = False
            for j in range(q):
                ok = True
                for i in range(n):
                    if g[j, i] > quot[i]:
                        ok = False
                        break
                if ok:
                    member = True
                    break
            if member:
                idx[w] = cnt[k]
                cnt[k] += 1
        if cnt[0] == 0:
            return dims
        ranks = [0] * (s + 2)
        for k in range(1, s + 1):
            if cnt[k] == 0 or cnt[k - 1] == 0:
                continue
            mat = np.zeros((cnt[k], cnt[k - 1]), dtype=np.int64)
            _fill_boundary(mat, idx, wsize, s, k)
            ranks[k] = int(_rank_inplace(mat, p))
        for k in range(s + 1):
            dims[k] = int(cnt[k]) - ranks[k] - ranks[k + 1]
        return dims
    finally:
        free(support)
        free(quot)


cdef void _fill_boundary(i64[:, ::1] mat, i64[::1] idx, i64[::1] wsize,
                         Py_ssize_t s, Py_ssize_t k):
    cdef Py_ssize_t w, t, nw = 1 << s
    cdef i64 sign
    for w in range(nw):
        if wsize[w] != k or idx[w] < 0:
            continue
        sign = 1
        for t in range(s):
            if (w >> t) & 1:
                mat[idx[w], idx[w ^ (1 << t)]] = sign
                sign = -sign


cdef inline bint _is_up(i64 v, i64 w):
    return w >= 0 and (w & v) == v and w != v


def find_cycle(partner, int q):
    cdef i64[::1] pt = np.ascontiguousarray(partner, dtype=np.int64)
    cdef Py_ssize_t n = 1 << q
    color_arr = np.zeros(n, dtype=np.int8)
    parent_arr = np.full(n, -1, dtype=np.int64)
    # per-vertex cursor over candidate out-edges: 0 = up edge, then bit positions
    cursor_arr = np.zeros(n, dtype=np.int64)
    stack_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int8_t[::1] color = color_arr
    cdef i64[::1] parent = parent_arr
    cdef i64[::1] cursor = cursor_arr
    cdef i64[::1] stack = stack_arr
    cdef Py_ssize_t top, root
    cdef i64 v, w, nxt, bitpos, t
    for root in range(n):
        if pt[root] < 0 or color[root] != 0:
            continue
        top = 0
        stack[0] = root
        color[root] = 1
        cursor[root] = 0
        while top >= 0:
            v = stack[top]
            w = pt[v]
            nxt = -1
            while nxt < 0 and cursor[v] <= q:
                bitpos = cursor[v]
                cursor[v] += 1
                if bitpos == 0:
                    if _is_up(v, w):
                        nxt = w
                else:
                    if (v >> (bitpos - 1)) & 1:
                        t = v ^ (1 << (bitpos - 1))
                        if t != w and pt[t] >= 0:
                            nxt = t
            if nxt < 0:
                color[v] = 2
                top -= 1
                continue
            if color[nxt] == 0:
                color[nxt] = 1
                parent[nxt] = v
                cursor[nxt] = 0
                top += 1
                stack[top] = nxt
            elif color[nxt] == 1:
                cycle = [int(v)]
                t = v
                while t != nxt:
                    t = parent[t]
                    cycle.append(int(t))
                cycle.reverse()
                return cycle
    return None


def reach(partner, int q, sources, allowed):
    cdef i64[::1] pt = np.ascontiguousarray(partner, dtype=np.int64)
    cdef cnp.uint8_t[::1] ok = np.ascontiguousarray(allowed, dtype=np.uint8)
    cdef Py_ssize_t n = 1 << q
    seen_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] seen = seen_arr
    cdef i64[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, b
    cdef i64 v, w, t
    for s in sources:
        v = s
        if ok[v] and not seen[v]:
            seen[v] = 1
            queue[tail] = v
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        w = pt[v]
        if _is_up(v, w) and ok[w] and not seen[w]:
            seen[w] = 1
            queue[tail] = w
            tail += 1
        for b in range(q):
            if (v >> b) & 1:
                t = v ^ (1 << b)
                if t != w and ok[t] and not seen[t]:
                    seen[t] = 1
                    queue[tail] = t
                    tail += 1
    return seen_arr
