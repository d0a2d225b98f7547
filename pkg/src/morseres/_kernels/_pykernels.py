"""Pure-Python kernels.

Reference implementations of the hot loops. The compiled module
``_ckernels`` exposes the same functions with the same signatures; the two
are checked against each other in the test suite.
"""
from collections import deque

import numpy as np


def subset_labels(gens):
    """Componentwise-max label of every subset of the rows of ``gens``.

    Row ``mask`` of the result is the lcm of the generators whose bit is set
    in ``mask`` (bit ``j`` is generator ``j + 1``). Row 0 is the zero vector.
    """
    gens = np.asarray(gens, dtype=np.int64)
    q, n = gens.shape
    out = np.zeros((1 << q, n), dtype=np.int64)
    for j in range(q):
        lo = 1 << j
        np.maximum(out[:lo], gens[j], out=out[lo:2 * lo])
    return out


def rank_mod_p(mat, p):
    """Rank of an integer matrix over GF(p)."""
    rows = [[int(x) % p for x in row] for row in np.asarray(mat, dtype=np.int64)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                r = rows[i]
                for c in range(col, ncols):
                    r[c] = (r[c] - f * prow[c]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_gf2(vectors):
    # vectors are ints used as bit rows
    basis = {}
    rank = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                rank += 1
                break
            v ^= b
    return rank


def koszul_homology(gens, u, p):
    """Reduced homology of the upper Koszul complex of ``u`` over GF(p).

    Returns a list ``dims`` with ``dims[k + 1] = dim H~_k`` for
    ``k = -1, ..., s - 1`` where ``s`` is the support size of ``u``.
    The void complex (``u`` not in the ideal) gives all zeros.
    """
    gens = np.asarray(gens, dtype=np.int64)
    u = np.asarray(u, dtype=np.int64)
    support = [i for i in range(len(u)) if u[i] > 0]
    s = len(support)
    dims = [0] * (s + 1)
    glist = [tuple(int(x) for x in g) for g in gens]
    ul = [int(x) for x in u]

    def member(w):
        quot = list(ul)
        for t in range(s):
            if w >> t & 1:
                quot[support[t]] -= 1
        return any(all(g[i] <= quot[i] for i in range(len(quot))) for g in glist)

    by_size = [[] for _ in range(s + 1)]
    for w in range(1 << s):
        if member(w):
            by_size[bin(w).count("1")].append(w)
    if not by_size[0]:
        return dims
    index = [{w: i for i, w in enumerate(faces)} for faces in by_size]
    # rank of boundary from size k to size k - 1, k = 1..s
    ranks = [0] * (s + 2)
    for k in range(1, s + 1):
        faces = by_size[k]
        if not faces or not by_size[k - 1]:
            continue
        lower = index[k - 1]
        if p == 2:
            vecs = []
            for w in faces:
                v = 0
                for t in range(s):
                    if w >> t & 1:
                        v |= 1 << lower[w ^ (1 << t)]
                vecs.append(v)
            ranks[k] = _rank_gf2(vecs)
        else:
            mat = np.zeros((len(faces), len(by_size[k - 1])), dtype=np.int64)
            for r, w in enumerate(faces):
                sign = 1
                for t in range(s):
                    if w >> t & 1:
                        mat[r, lower[w ^ (1 << t)]] = sign
                        sign = -sign
            ranks[k] = rank_mod_p(mat, p)
    for k in range(s + 1):
        # faces of size k have dimension k - 1
        dims[k] = len(by_size[k]) - ranks[k] - ranks[k + 1]
    return dims


def _out_edges(partner, v, matched_only):
    w = partner[v]
    out = []
    if w >= 0 and (w & v) == v and w != v:
        out.append(w)
    b = v
    while b:
        low = b & -b
        b ^= low
        t = v ^ low
        if t == w:
            continue
        if matched_only and partner[t] < 0:
            continue
        out.append(t)
    return out


def find_cycle(partner, q):
    """Directed cycle of G^M on the matched vertices, or None.

    ``partner[v]`` is the vertex matched with ``v`` or -1. Edges of G^M are
    the down edges ``v -> v - {i}`` not in the matching plus the matched
    edges reversed to point up.
    """
    partner = [int(x) for x in partner]
    n = 1 << q
    color = [0] * n
    parent = [-1] * n
    for root in range(n):
        if partner[root] < 0 or color[root]:
            continue
        stack = [(root, iter(_out_edges(partner, root, True)))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[v] = 2
                stack.pop()
                continue
            if color[nxt] == 0:
                color[nxt] = 1
                parent[nxt] = v
                stack.append((nxt, iter(_out_edges(partner, nxt, True))))
            elif color[nxt] == 1:
                cycle = [v]
                while cycle[-1] != nxt:
                    cycle.append(parent[cycle[-1]])
                cycle.reverse()
                return cycle
    return None


def reach(partner, q, sources, allowed):
    """Vertices reachable in G^M from ``sources`` through ``allowed`` vertices.

    Returns a uint8 array of length ``2**q``; paths of length zero count.
    """
    partner_l = [int(x) for x in partner]
    allowed_l = np.asarray(allowed, dtype=np.uint8)
    seen = np.zeros(1 << q, dtype=np.uint8)
    queue = deque()
    for s in sources:
        s = int(s)
        if allowed_l[s] and not seen[s]:
            seen[s] = 1
            queue.append(s)
    while queue:
        v = queue.popleft()
        for t in _out_edges(partner_l, v, False):
            if allowed_l[t] and not seen[t]:
                seen[t] = 1
                queue.append(t)
    return seen
