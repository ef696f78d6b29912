# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``: same algorithms, same visiting order.

Masks are 64-bit, so graphs are limited to ``MAX_VERTICES`` vertices.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline int tp_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int tp_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int tp_popcount(u64 x) nogil
    int tp_ctz(u64 x) nogil

MAX_VERTICES = 63


cdef void _load(object adj, int n, u64* out) except *:
    if n > 63:
        raise ValueError("compiled kernels support at most 63 vertices")
    cdef int i
    for i in range(n):
        out[i] = <u64>adj[i]


# ---------------------------------------------------------------- max clique

cdef struct CliqueState:
    u64* adj
    int best_size
    u64 best_mask


cdef void _expand(CliqueState* st, u64 clique, int size, u64 cand) nogil:
    cdef u64 low
    cdef int v
    if cand == 0:
        if size > st.best_size:
            st.best_size = size
            st.best_mask = clique
        return
    while cand:
        if size + tp_popcount(cand) <= st.best_size:
            return
        low = cand & (~cand + 1)
        v = tp_ctz(cand)
        _expand(st, clique | low, size + 1, cand & st.adj[v])
        cand ^= low


def max_clique(adj, int n):
    cdef u64 a[64]
    _load(adj, n, a)
    cdef CliqueState st
    st.adj = a
    st.best_size = 0
    st.best_mask = 0
    cdef u64 full = (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    _expand(&st, 0, 0, full)
    return st.best_size, int(st.best_mask)


# ---------------------------------------------------------------- colouring

cdef struct ColorState:
    u64* adj
    int* order
    int n
    int k
    u64* classes
    int* colors


cdef bint _place(ColorState* st, int pos, int used) nogil:
    cdef int v, c, top
    cdef u64 bit
    if pos == st.n:
        return True
    v = st.order[pos]
    bit = <u64>1 << v
    top = used + 1 if used < st.k else st.k
    for c in range(top):
        if st.classes[c] & st.adj[v] == 0:
            st.classes[c] |= bit
            st.colors[v] = c
            if _place(st, pos + 1, used + 1 if c == used else used):
                return True
            st.classes[c] ^= bit
    return False


def chromatic(adj, int n):
    if n == 0:
        return 0, []
    cdef u64 a[64]
    cdef u64 classes[64]
    cdef int colors[64]
    cdef int order[64]
    _load(adj, n, a)
    lower, _ = max_clique(adj, n)
    py_order = sorted(range(n), key=lambda v: (-int(adj[v]).bit_count(), v))
    cdef int i
    for i in range(n):
        order[i] = py_order[i]
    cdef ColorState st
    st.adj = a
    st.order = order
    st.n = n
    st.classes = classes
    st.colors = colors
    cdef int k = lower if lower > 1 else 1
    while True:
        for i in range(n):
            classes[i] = 0
            colors[i] = -1
        st.k = k
        if _place(&st, 0, 0):
            return k, [colors[i] for i in range(n)]
        k += 1


# ---------------------------------------------------------------- holes

cdef struct HoleState:
    u64* adj
    int* path
    int length
    int start
    bint odd


cdef bint _extend(HoleState* st, u64 blocked, int last) nogil:
    cdef u64 cand, low
    cdef int w
    cand = st.adj[last] & ~blocked & ~((<u64>2 << st.start) - 1)
    while cand:
        low = cand & (~cand + 1)
        w = tp_ctz(cand)
        cand ^= low
        if (st.adj[w] >> st.start) & 1:
            if st.length >= 3 and (not st.odd or (st.length + 1) % 2 == 1):
                st.path[st.length] = w
                st.length += 1
                return True
            continue
        st.path[st.length] = w
        st.length += 1
        if _extend(st, blocked | st.adj[last] | (<u64>1 << last), w):
            return True
        st.length -= 1
    return False


def find_hole(adj, int n, bint odd):
    cdef u64 a[64]
    cdef int path[64]
    _load(adj, n, a)
    cdef HoleState st
    st.adj = a
    st.path = path
    st.odd = odd
    cdef int v, u
    cdef u64 nb, low
    for v in range(n):
        st.start = v
        path[0] = v
        nb = a[v] & ~((<u64>2 << v) - 1)
        while nb:
            low = nb & (~nb + 1)
            u = tp_ctz(nb)
            nb ^= low
            path[1] = u
            st.length = 2
            if _extend(&st, <u64>1 << v, u):
                return [path[i] for i in range(st.length)]
    return None


# ---------------------------------------------------------------- edge clique cover

cdef struct CoverState:
    u64* adj
    u64* unc
    int n
    u64* cliques
    int ncliques
    int* chosen
    int nchosen
    int* best
    int nbest
    u64* picked


cdef bint _is_clique(u64* adj, u64 mask) nogil:
    cdef u64 w = mask, lb
    cdef int x
    while w:
        lb = w & (~w + 1)
        x = tp_ctz(w)
        if (mask & ~lb) & ~adj[x]:
            return False
        w ^= lb
    return True


cdef int _packing_bound(CoverState* st) nogil:
    cdef int u, v, p, npicked = 0
    cdef u64 row, low, pair
    cdef bint ok
    for u in range(st.n):
        row = st.unc[u] & ~((<u64>2 << u) - 1)
        while row:
            low = row & (~row + 1)
            row ^= low
            pair = (<u64>1 << u) | low
            ok = True
            for p in range(npicked):
                if _is_clique(st.adj, pair | st.picked[p]):
                    ok = False
                    break
            if ok:
                st.picked[npicked] = pair
                npicked += 1
    return npicked


cdef void _search(CoverState* st) nogil:
    cdef int u = -1, v, x, ci, i
    cdef u64 need, c, w, lb
    cdef u64 saved[64]
    for x in range(st.n):
        if st.unc[x]:
            u = x
            break
    if u < 0:
        if st.nchosen < st.nbest:
            for i in range(st.nchosen):
                st.best[i] = st.chosen[i]
            st.nbest = st.nchosen
        return
    if st.nchosen + _packing_bound(st) >= st.nbest:
        return
    v = tp_ctz(st.unc[u])
    need = (<u64>1 << u) | (<u64>1 << v)
    for ci in range(st.ncliques):
        c = st.cliques[ci]
        if c & need != need:
            continue
        for x in range(st.n):
            saved[x] = st.unc[x]
        w = c
        while w:
            lb = w & (~w + 1)
            x = tp_ctz(w)
            st.unc[x] &= ~c
            w ^= lb
        st.chosen[st.nchosen] = ci
        st.nchosen += 1
        _search(st)
        st.nchosen -= 1
        for x in range(st.n):
            st.unc[x] = saved[x]
        if st.nchosen + 1 >= st.nbest:
            return


def edge_clique_cover(adj, int n, cliques):
    cdef u64 a[64]
    cdef u64 unc[64]
    _load(adj, n, a)
    cdef int i
    for i in range(n):
        unc[i] = a[i]
    if not any(int(x) for x in adj):
        return []

    # greedy upper bound, same rule as the Python kernel
    greedy = []
    work = [int(x) for x in adj]
    while any(work):
        best_c, best_gain = 0, -1
        for c in cliques:
            gain = 0
            w = c
            while w:
                lb = w & -w
                gain += (work[lb.bit_length() - 1] & c).bit_count()
                w ^= lb
            if gain > best_gain:
                best_c, best_gain = c, gain
        greedy.append(best_c)
        w = best_c
        while w:
            lb = w & -w
            work[lb.bit_length() - 1] &= ~best_c
            w ^= lb

    cdef int m = len(cliques)
    cdef int nedges = sum(int(x).bit_count() for x in adj) // 2
    cdef CoverState st
    st.adj = a
    st.unc = unc
    st.n = n
    st.ncliques = m
    st.cliques = <u64*>malloc(max(m, 1) * sizeof(u64))
    st.chosen = <int*>malloc((nedges + 1) * sizeof(int))
    st.best = <int*>malloc((nedges + 1) * sizeof(int))
    st.picked = <u64*>malloc((nedges + 1) * sizeof(u64))
    if not st.cliques or not st.chosen or not st.best or not st.picked:
        free(st.cliques); free(st.chosen); free(st.best); free(st.picked)
        raise MemoryError()
    try:
        for i in range(m):
            st.cliques[i] = <u64>cliques[i]
        st.nchosen = 0
        st.nbest = len(greedy)
        with nogil:
            _search(&st)
        if st.nbest == len(greedy):
            return greedy
        return [int(st.cliques[st.best[i]]) for i in range(st.nbest)]
    finally:
        free(st.cliques)
        free(st.chosen)
        free(st.best)
        free(st.picked)
