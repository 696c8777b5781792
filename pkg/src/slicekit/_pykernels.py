"""Pure-Python integer kernels.

These mirror ``_ckernels.pyx`` exactly and are used when the compiled module is
unavailable or ``SLICEKIT_PURE_PYTHON`` is set.  ``roots`` is the tuple of
simple roots (covectors), ``coroots`` the tuple of simple coroots (vectors).
"""


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def dominant_rep(mu, roots, coroots):
    mu = list(mu)
    n = len(mu)
    moved = True
    while moved:
        moved = False
        for a, b in zip(roots, coroots):
            p = _dot(a, mu)
            if p < 0:
                for k in range(n):
                    mu[k] -= p * b[k]
                moved = True
    return tuple(mu)


def orbit(mu, roots, coroots):
    start = tuple(mu)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for a, b in zip(roots, coroots):
                p = _dot(a, v)
                if p:
                    w = tuple(x - p * y for x, y in zip(v, b))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    return sorted(seen)


def dominant_box(lam, bounds, roots, coroots):
    """Coefficient vectors n, 0 <= n_i <= bounds[i], with lam - sum n_i a_i dominant.

    Depth-first over the box in lexicographic order.  Each row of
    ``cartan . n <= base`` is linear in the current coordinate, so the
    admissible values at a level form an interval computed on entry, given
    the most favourable choice of the remaining coordinates.
    """
    s = len(bounds)
    if s == 0:
        return [()] if all(_dot(a, lam) >= 0 for a in roots) else []
    base = [_dot(a, lam) for a in roots]
    cartan = [[_dot(a, b) for b in coroots] for a in roots]
    # neg[k][i]: least possible contribution of coordinates k.. to row i
    neg = [[0] * s for _ in range(s + 1)]
    for k in range(s - 1, -1, -1):
        for i in range(s):
            neg[k][i] = neg[k + 1][i] + min(0, cartan[i][k] * bounds[k])
    load = [0] * s
    n = [0] * s
    top = [0] * s
    out = []

    def enter(k):
        lo, hi = 0, bounds[k]
        tail = neg[k + 1]
        for i in range(s):
            c = cartan[i][k]
            r = base[i] - load[i] - tail[i]
            if c > 0:
                hi = min(hi, r // c)
            elif c < 0:
                lo = max(lo, -(r // -c))
            elif r < 0:
                hi = -1
        n[k] = lo - 1
        top[k] = hi

    k = 0
    enter(0)
    while True:
        n[k] += 1
        if n[k] > top[k]:
            k -= 1
            if k < 0:
                return out
            for i in range(s):
                load[i] -= cartan[i][k] * n[k]
            continue
        if k == s - 1:
            out.append(tuple(n))
            continue
        for i in range(s):
            load[i] += cartan[i][k] * n[k]
        k += 1
        enter(k)
