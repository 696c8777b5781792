"""Independent brute-force routes used to freeze and cross-check expected values.

Nothing here calls the code path it is used to check.
"""

import itertools
from fractions import Fraction

from slicekit.reps import invariant_form


def ssyt_count(shape, content):
    """Number of semistandard tableaux of ``shape`` with ``content`` (Kostka number)."""
    shape = [s for s in shape if s > 0]
    n = len(content)
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return 0
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    remaining = list(content)
    filling = {}

    def place(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(n):
            if not remaining[v]:
                continue
            if c > 0 and filling[(r, c - 1)] > v:
                continue
            if r > 0 and filling[(r - 1, c)] >= v:
                continue
            filling[(r, c)] = v
            remaining[v] -= 1
            total += place(idx + 1)
            remaining[v] += 1
        filling.pop((r, c), None)
        return total

    return place(0)


def gl_multiplicity(lam, mu):
    """Weight multiplicity for GL_n through Kostka numbers, after a central shift."""
    shift = -min(min(lam), min(mu))
    return ssyt_count([x + shift for x in lam], [x + shift for x in mu])


def raw_freudenthal(rd, lam):
    """Freudenthal over every lattice point between w0(lam) and lam, no symmetry used.

    Points are written mu = lam - sum c_i alpha_i and handled in the
    coefficient coordinates c; the invariant form's Gram matrix is used
    directly with rho = 2rho / 2.
    """
    form = invariant_form(rd)
    n = rd.rank
    s = len(rd.simple_coroots)

    def ip(u, v):
        return sum(u[i] * form[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])

    rho = [Fraction(x, 2) for x in rd.two_rho]
    low = rd.antidominant_representative(lam)
    bounds = rd.coroot_coefficients(tuple(a - b for a, b in zip(lam, low)))
    pos = [(rd.coroot_coefficients(a), a) for a in rd.positive_coroots]
    # (lam, alpha) and (alpha_i, alpha) for the linear part of (mu, alpha)
    lam_dot = [ip(lam, a) for _, a in pos]
    simple_dot = [[ip(b, a) for _, a in pos] for b in rd.simple_coroots]
    lr = [a + b for a, b in zip(lam, rho)]
    top = ip(lr, lr)
    mult = {}
    for c in sorted(itertools.product(*(range(b + 1) for b in bounds)), key=sum):
        if not any(c):
            mult[c] = 1
            continue
        num = Fraction(0)
        for r, (coef, _) in enumerate(pos):
            k = 1
            while True:
                nc = tuple(x - k * y for x, y in zip(c, coef))
                if min(nc) < 0:
                    break
                m = mult.get(nc)
                if m:
                    num += m * (lam_dot[r] - sum(nc[i] * simple_dot[i][r] for i in range(s) if nc[i]))
                k += 1
        mu = tuple(l - x for l, x in zip(lam, rd._combine(c, rd.simple_coroots)))
        mr = [a + b for a, b in zip(mu, rho)]
        den = top - ip(mr, mr)
        if den == 0:
            assert num == 0
            continue
        m = 2 * num / den
        assert m.denominator == 1 and m >= 0, (lam, mu, m)
        if m:
            mult[c] = int(m)
    return {tuple(l - x for l, x in zip(lam, rd._combine(c, rd.simple_coroots))): m
            for c, m in mult.items()}


def brute_fixed_points(rd, lambdas, mu, weight_lists):
    """Every tuple from the product of the weight lists summing to mu."""
    out = []
    for combo in itertools.product(*weight_lists):
        total = tuple(sum(c) for c in zip(*combo))
        if total == tuple(mu):
            out.append(tuple(combo))
    return sorted(out)


def numeric_attracting(ch, xi, d_sign=1):
    """Attracting count with an explicit numeric d larger than every |<beta, xi>|."""
    d = 1 + sum(abs(sum(a * b for a, b in zip(w, xi))) for (_, w), _ in ch.items())
    count = 0
    for (h, w), c in ch.items():
        weight = sum(a * b for a, b in zip(w, xi)) + h * d_sign * d
        assert weight != 0
        if weight > 0:
            count += c
    return count


def coordinate_box_dominant_interval(rd, mu, lam, radius):
    """Dominant points of a coordinate box lying between mu and lam."""
    out = []
    for p in itertools.product(range(-radius, radius + 1), repeat=rd.rank):
        if rd.is_dominant(p) and rd.dominance_leq(mu, p) and rd.dominance_leq(p, lam):
            out.append(p)
    return sorted(out)
