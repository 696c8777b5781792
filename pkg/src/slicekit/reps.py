"""Weights of irreducible representations of the Langlands dual group.

The dual group has roots = coroots of the datum, so weights of ``V^lam`` live
in the cocharacter lattice.  Multiplicities come from the Freudenthal
recursion, computed in integers via the symmetrizer: for a simple coroot
``alpha_i`` and any ``x``, ``(alpha_i, x) = d_i * <alpha_check_i, x>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import NotDominant
from .rootdatum import RootDatum, _dot


@dataclass(frozen=True)
class WeightDiagram:
    highest: tuple
    mults: dict  # weight -> multiplicity > 0

    @property
    def dimension(self) -> int:
        return sum(self.mults.values())

    def weights(self) -> list:
        return sorted(self.mults)


def invariant_form(rd: RootDatum) -> list[list[Fraction]]:
    """W-invariant symmetric form on the lattice, as a rational Gram matrix.

    Normalized so the shortest simple coroot in each simple factor has square
    length 2.  Central directions are orthogonal to the coroot span and carry
    the restriction of the standard dot product, which for GL_n makes the
    whole form the dot product on Z^n.
    """
    n, s = rd.rank, rd.ss_rank
    d = rd.symmetrizer
    # basis: simple coroots, then a basis of the common kernel of the simple roots
    kernel = _kernel_basis(rd.simple_roots, n)
    basis = list(rd.simple_coroots) + kernel
    gram_b = [[Fraction(0)] * n for _ in range(n)]
    for i in range(s):
        for j in range(s):
            gram_b[i][j] = Fraction(d[i] * rd.cartan[i][j])
    for a, u in enumerate(kernel):
        for b, v in enumerate(kernel):
            gram_b[s + a][s + b] = Fraction(_dot(u, v))
    # change of basis: x = B y  =>  form = B^{-T} G_b B^{-1}
    from .rootdatum import _invert
    bmat = [[basis[j][i] for j in range(n)] for i in range(n)]
    binv = _invert(bmat)
    return [[sum(binv[a][i] * gram_b[a][b] * binv[b][j] for a in range(n) for b in range(n))
             for j in range(n)] for i in range(n)]


def _kernel_basis(rows, n):
    """Integer basis of {x : <r, x> = 0 for all rows} via rational RREF."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append(tuple(int(x * den) for x in v))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _require_dominant(rd, lam):
    if not rd.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant for {rd.label}")


def _dominant_weights(rd, lam):
    """Dominant weights of V^lam keyed by depth: every one lies above w0(lam)."""
    return rd.dominant_interval(rd.antidominant_representative(lam), lam)


def _freudenthal(rd: RootDatum, lam) -> dict:
    """Multiplicities of the dominant weights of V^lam."""
    key = ("freudenthal", lam)
    cached = rd._memo.get(key)
    if cached is not None:
        return cached
    d = rd.symmetrizer
    roots, coroots = rd.simple_roots, rd.simple_coroots
    pos = list(zip(rd.positive_coroots, rd.positive_coroot_coeffs))
    two_rho = rd.two_rho
    dom = _dominant_weights(rd, lam)
    depth = {mu: sum(rd.coroot_coefficients(tuple(a - b for a, b in zip(lam, mu))))
             for mu in dom}
    mult = {}

    def form_with(coeffs, x):
        # (sum_j c_j alpha_j, x) = sum_j c_j d_j <alpha_check_j, x>
        return sum(c * d[j] * _dot(roots[j], x) for j, c in enumerate(coeffs) if c)

    for mu in sorted(dom, key=lambda m: (depth[m], m)):
        if mu == lam:
            mult[mu] = 1
            continue
        diff = rd.coroot_coefficients(tuple(a - b for a, b in zip(lam, mu)))
        lam_mu_2rho = tuple(a + b + c for a, b, c in zip(lam, mu, two_rho))
        denom = form_with(diff, lam_mu_2rho)
        total = 0
        for alpha, coeffs in pos:
            k = 1
            while True:
                nu = tuple(x + k * a for x, a in zip(mu, alpha))
                m = mult.get(kernels.dominant_rep(nu, roots, coroots))
                if not m:
                    break
                total += m * form_with(coeffs, nu)
                k += 1
        assert denom > 0 and (2 * total) % denom == 0, (lam, mu, total, denom)
        value = 2 * total // denom
        if value:
            mult[mu] = value
    rd._memo[key] = mult
    return mult


def weight_multiplicity(rd: RootDatum, lam, mu) -> int:
    lam, mu = rd.check(lam), rd.check(mu)
    _require_dominant(rd, lam)
    if not rd.dominance_leq(mu, lam):
        return 0
    return _freudenthal(rd, lam).get(rd.dominant_representative(mu), 0)


def weights_of(rd: RootDatum, lam) -> WeightDiagram:
    lam = rd.check(lam)
    _require_dominant(rd, lam)
    key = ("diagram", lam)
    cached = rd._memo.get(key)
    if cached is not None:
        return cached
    mults = {}
    for mu, m in _freudenthal(rd, lam).items():
        for w in rd.weyl_orbit(mu):
            mults[w] = m
    diagram = WeightDiagram(lam, dict(sorted(mults.items())))
    rd._memo[key] = diagram
    return diagram


def weyl_dimension(rd: RootDatum, lam) -> int:
    """prod over positive roots of <a, lam + rho> / <a, rho>, i.e. with 2rho."""
    lam = rd.check(lam)
    _require_dominant(rd, lam)
    shifted = tuple(2 * a + b for a, b in zip(lam, rd.two_rho))
    num = den = 1
    for a in rd.positive_roots:
        num *= _dot(a, shifted)
        den *= _dot(a, rd.two_rho)
    assert num % den == 0
    return num // den


def is_minuscule(rd: RootDatum, lam) -> bool:
    lam = rd.check(lam)
    _require_dominant(rd, lam)
    return all(_dot(a, lam) <= 1 for a in rd.positive_roots)


def is_minuscule_slow(rd: RootDatum, lam) -> bool:
    """Every weight of V^lam lies in the Weyl orbit of lam."""
    lam = rd.check(lam)
    _require_dominant(rd, lam)
    return set(weights_of(rd, lam).mults) == set(rd.weyl_orbit(lam))


def minuscule_fundamental_coweights(rd: RootDatum) -> list:
    """Minuscule fundamental coweights; for GL_n the basis sums e_1+...+e_k, 1 <= k < n."""
    return [rd.fundamental_coweight(i) for i in range(1, rd.ss_rank + 1)
            if is_minuscule(rd, rd.fundamental_coweight(i))]
