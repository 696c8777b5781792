# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contracts as ``_pykernels``."""


cdef enum:
    MAXR = 16


cdef int _load(object rows, long *dst, int nrows, int ncols) except -1:
    cdef int i, j
    for i in range(nrows):
        r = rows[i]
        for j in range(ncols):
            dst[i * ncols + j] = r[j]
    return 0


def dominant_rep(mu, roots, coroots):
    cdef int n = len(mu), s = len(roots), i, k
    cdef long v[MAXR]
    cdef long a[MAXR * MAXR]
    cdef long b[MAXR * MAXR]
    cdef long p
    cdef bint moved = True
    if n > MAXR or s > MAXR:
        raise ValueError("rank exceeds compiled kernel limit")
    for k in range(n):
        v[k] = mu[k]
    _load(roots, a, s, n)
    _load(coroots, b, s, n)
    while moved:
        moved = False
        for i in range(s):
            p = 0
            for k in range(n):
                p += a[i * n + k] * v[k]
            if p < 0:
                for k in range(n):
                    v[k] -= p * b[i * n + k]
                moved = True
    return tuple([v[k] for k in range(n)])


def orbit(mu, roots, coroots):
    cdef int n = len(mu), s = len(roots), i, k
    cdef long a[MAXR * MAXR]
    cdef long b[MAXR * MAXR]
    cdef long v[MAXR]
    cdef long p
    if n > MAXR or s > MAXR:
        raise ValueError("rank exceeds compiled kernel limit")
    _load(roots, a, s, n)
    _load(coroots, b, s, n)
    start = tuple(mu)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for k in range(n):
                v[k] = t[k]
            for i in range(s):
                p = 0
                for k in range(n):
                    p += a[i * n + k] * v[k]
                if p != 0:
                    w = tuple([v[k] - p * b[i * n + k] for k in range(n)])
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    return sorted(seen)


cdef inline void _enter(int k, int s, long *cart, long *neg, long *base, long *load,
                        long *hi, long *c, long *top):
    cdef long lo = 0, up = hi[k], r, q
    cdef int i
    for i in range(s):
        q = cart[i * s + k]
        r = base[i] - load[i] - neg[(k + 1) * s + i]
        if q > 0:
            if r // q < up:
                up = r // q
        elif q < 0:
            if -(r // -q) > lo:
                lo = -(r // -q)
        elif r < 0:
            up = -1
    c[k] = lo - 1
    top[k] = up


def dominant_box(lam, bounds, roots, coroots):
    cdef int n = len(lam), s = len(bounds), i, j, k
    cdef long a[MAXR * MAXR]
    cdef long b[MAXR * MAXR]
    cdef long cart[MAXR * MAXR]
    cdef long neg[(MAXR + 1) * MAXR]
    cdef long base[MAXR]
    cdef long hi[MAXR]
    cdef long c[MAXR]
    cdef long top[MAXR]
    cdef long load[MAXR]
    cdef long p
    if n > MAXR or len(roots) > MAXR:
        raise ValueError("rank exceeds compiled kernel limit")
    _load(roots, a, len(roots), n)
    if s == 0:
        for i in range(len(roots)):
            p = 0
            for k in range(n):
                p += a[i * n + k] * lam[k]
            if p < 0:
                return []
        return [()]
    _load(coroots, b, s, n)
    for i in range(s):
        p = 0
        for k in range(n):
            p += a[i * n + k] * lam[k]
        base[i] = p
        hi[i] = bounds[i]
        load[i] = 0
        neg[s * s + i] = 0
        for j in range(s):
            p = 0
            for k in range(n):
                p += a[i * n + k] * b[j * n + k]
            cart[i * s + j] = p
    for k in range(s - 1, -1, -1):
        for i in range(s):
            p = cart[i * s + k] * hi[k]
            neg[k * s + i] = neg[(k + 1) * s + i] + (p if p < 0 else 0)
    out = []
    k = 0
    _enter(0, s, cart, neg, base, load, hi, c, top)
    while True:
        c[k] += 1
        if c[k] > top[k]:
            k -= 1
            if k < 0:
                return out
            for i in range(s):
                load[i] -= cart[i * s + k] * c[k]
            continue
        if k == s - 1:
            out.append(tuple([c[j] for j in range(s)]))
            continue
        for i in range(s):
            load[i] += cart[i * s + k] * c[k]
        k += 1
        _enter(k, s, cart, neg, base, load, hi, c, top)
