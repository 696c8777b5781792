"""Torus fixed points, tangent characters and Poincare polynomials of
convolution diagrams over slices.

A fixed point is an N-tuple ``(mu_1, ..., mu_N)`` of coweights with
``mu_i`` a weight of ``V^{lam_i}`` and ``sum mu_i == mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial

from ._parallel import pmap
from .characters import EquivariantCharacter, QPolynomial, attracting_dimension
from .errors import (InvalidInput, MalformedSubset, NotDominant, NotInDominanceOrder,
                     NotMinuscule, TupleNotFixedPoint)
from .reps import is_minuscule, weights_of
from .rootdatum import RootDatum, _dot, build_root_datum
from .slices import delta_mu_minus, require_mu_condition


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class ConvolutionDatum:
    rd: RootDatum
    lambdas: tuple
    mu: tuple

    def __post_init__(self):
        rd = self.rd
        lams = tuple(rd.check(l, "lambda") for l in self.lambdas)
        if not lams:
            raise InvalidInput("need at least one lambda")
        for l in lams:
            if not rd.is_dominant(l):
                raise NotDominant(f"lambda={l} is not dominant")
        object.__setattr__(self, "lambdas", lams)
        object.__setattr__(self, "mu", rd.check(self.mu, "mu"))
        if not rd.dominance_leq(self.mu, self.lam):
            raise NotInDominanceOrder(f"mu={self.mu} is not <= {self.lam}")

    @property
    def lam(self) -> tuple:
        total = (0,) * self.rd.rank
        for l in self.lambdas:
            total = _add(total, l)
        return total

    @property
    def dimension(self) -> int:
        return _dot(self.rd.two_rho_check, _sub(self.lam, self.mu))


# -- fixed points ------------------------------------------------------------

def _search_tables(c: ConvolutionDatum):
    rd = c.rd
    weights = [weights_of(rd, l).weights() for l in c.lambdas]
    n = len(c.lambdas)
    zero = (0,) * rd.rank
    hi = [zero] * (n + 1)
    lo = [zero] * (n + 1)
    for i in range(n - 1, -1, -1):
        hi[i] = _add(hi[i + 1], c.lambdas[i])
        lo[i] = _add(lo[i + 1], rd.antidominant_representative(c.lambdas[i]))
    return weights, frozenset(weights[-1]), hi, lo


def _reachable(rd, rem, tables, i):
    _, _, hi, lo = tables
    return rd.dominance_leq(rem, hi[i]) and rd.dominance_leq(lo[i], rem)


def _dfs(c, tables, prefix, partial_sum):
    weights, last, _, _ = tables
    n = len(c.lambdas)
    i = len(prefix)
    if i == n - 1:
        rem = _sub(c.mu, partial_sum)
        return [prefix + (rem,)] if rem in last else []
    out = []
    for w in weights[i]:
        s = _add(partial_sum, w)
        if _reachable(c.rd, _sub(c.mu, s), tables, i + 1):
            out.extend(_dfs(c, tables, prefix + (w,), s))
    return out


def _subtree(args):
    label, lambdas, mu, first = args
    c = ConvolutionDatum(build_root_datum(label), lambdas, mu)
    return _dfs(c, _search_tables(c), (first,), first)


def fixed_points(c: ConvolutionDatum, jobs=1) -> list:
    """All fixed-point tuples in lexicographic order.

    Depth-first over the weights of each factor, pruning partial sums whose
    remainder is not between the sums of lowest and highest weights of the
    remaining factors.  With ``jobs > 1`` the first-factor subtrees run in
    worker processes; the result is identical.
    """
    tables = _search_tables(c)
    rd = c.rd
    if len(c.lambdas) == 1:
        return sorted(_dfs(c, tables, (), (0,) * rd.rank))
    firsts = [w for w in tables[0][0] if _reachable(rd, _sub(c.mu, w), tables, 1)]
    if jobs == 1:
        parts = [_dfs(c, tables, (w,), w) for w in firsts]
    else:
        parts = pmap(_subtree, [(rd.label, c.lambdas, c.mu, w) for w in firsts], jobs)
    return sorted(t for part in parts for t in part)


def is_fixed_point(c: ConvolutionDatum, t) -> bool:
    rd = c.rd
    if len(t) != len(c.lambdas):
        return False
    t = tuple(rd.check(m) for m in t)
    total = (0,) * rd.rank
    for m in t:
        total = _add(total, m)
    if total != c.mu:
        return False
    return all(m in weights_of(rd, l).mults for m, l in zip(t, c.lambdas))


# -- tangent characters --------------------------------------------------------

def _require_minuscule(c: ConvolutionDatum):
    for l in c.lambdas:
        if not is_minuscule(c.rd, l):
            raise NotMinuscule(f"lambda={l} is not minuscule")


def _indexed_roots(rd, t):
    """Yield (a, <a, mu_1 + ... + mu_{i-1}>) for each i and each a in delta_mu_minus(mu_i)."""
    partial_sum = (0,) * rd.rank
    for m in t:
        for a in delta_mu_minus(rd, m):
            yield a, _dot(a, partial_sum)
        partial_sum = _add(partial_sum, m)


def tangent_character(c: ConvolutionDatum, t) -> EquivariantCharacter:
    """T x C*-character of the tangent space at the fixed point ``t``.

    Sum over i and over negative roots a with <a, mu_i> > 0 of
    hbar^{-p} e^a + hbar^{1+p} e^{-a}, where p = <a, mu_1 + ... + mu_{i-1}>.
    """
    _require_minuscule(c)
    t = tuple(tuple(m) for m in t)
    if not is_fixed_point(c, t):
        raise TupleNotFixedPoint(f"{t} is not a fixed point")
    terms = []
    for a, p in _indexed_roots(c.rd, t):
        terms.append(((-p, a), 1))
        terms.append(((1 + p, tuple(-x for x in a)), 1))
    return EquivariantCharacter(terms)


def gl2_tangent_character(n: int, k: int, subset) -> EquivariantCharacter:
    """Closed form for GL2, lambdas = (w1,)*n, at the point labelled by ``subset``.

    ``subset`` lists the k positions i_1 < ... < i_k (1-based) where mu_i = (0, 1);
    the result is sum_l hbar^{i_l - 2l + 1} e^{-a} + hbar^{2l - i_l} e^{a}.
    """
    subset = tuple(subset)
    if len(subset) != k or any(not isinstance(i, int) for i in subset) or any(
            not 1 <= i <= n for i in subset) or list(subset) != sorted(set(subset)):
        raise MalformedSubset(f"{subset} is not an increasing {k}-subset of 1..{n}")
    alpha = (1, -1)
    neg = (-1, 1)
    terms = []
    for l, i in enumerate(subset, 1):
        terms.append(((i - 2 * l + 1, neg), 1))
        terms.append(((2 * l - i, alpha), 1))
    return EquivariantCharacter(terms)


def gl2_tuple(n: int, subset) -> tuple:
    chosen = set(subset)
    return tuple((0, 1) if i in chosen else (1, 0) for i in range(1, n + 1))


# -- Poincare polynomials ------------------------------------------------------

def _require_smooth_contracting(c):
    _require_minuscule(c)
    require_mu_condition(c.rd, c.mu)


def cell_dimension(c: ConvolutionDatum, t) -> int:
    """Attracting dimension at ``t`` for the cocharacter (-2rho, d), d >> 0."""
    xi = tuple(-x for x in c.rd.two_rho)
    return attracting_dimension(tangent_character(c, t), xi)


def poincare_polynomial(c: ConvolutionDatum, jobs=1) -> QPolynomial:
    """Compactly supported Poincare polynomial: sum over fixed points of q^(2 * cell dim)."""
    _require_smooth_contracting(c)
    total = QPolynomial()
    for t in fixed_points(c, jobs=jobs):
        total = total + QPolynomial.monomial(2 * cell_dimension(c, t))
    return total


def closed_form_cell_dimension(c: ConvolutionDatum, t, offset: int) -> int:
    """sum_i |D(mu_i)| + #{a in D(mu_i) : <a, mu_1+...+mu_{i-1}> == offset}."""
    if offset not in (0, -1):
        raise InvalidInput("offset must be 0 or -1")
    return sum(1 + (p == offset) for _, p in _indexed_roots(c.rd, t))


def poincare_closed_form(c: ConvolutionDatum, offset: int) -> QPolynomial:
    _require_smooth_contracting(c)
    total = QPolynomial()
    for t in fixed_points(c):
        total = total + QPolynomial.monomial(2 * closed_form_cell_dimension(c, t, offset))
    return total


def closed_form_report(c: ConvolutionDatum) -> dict:
    """Per-point direct cell dimensions next to both closed-form variants."""
    _require_smooth_contracting(c)
    rows = []
    for t in fixed_points(c):
        rows.append({
            "tuple": [list(m) for m in t],
            "direct": cell_dimension(c, t),
            "offset0": closed_form_cell_dimension(c, t, 0),
            "as_printed": closed_form_cell_dimension(c, t, -1),
        })
    direct = poincare_polynomial(c)
    variants = {"offset0": poincare_closed_form(c, 0), "as_printed": poincare_closed_form(c, -1)}
    return {
        "points": rows,
        "direct": direct.to_json(),
        **{k: v.to_json() for k, v in variants.items()},
        "offset0_matches": variants["offset0"] == direct,
        "as_printed_matches": variants["as_printed"] == direct,
        "per_point_as_printed_matches": all(r["direct"] == r["as_printed"] for r in rows),
    }


# -- covering charts -------------------------------------------------------------

@dataclass(frozen=True)
class ChartRecord:
    tuple: tuple
    chart_dims: tuple
    affine: bool  # every factor minuscule: the chart is an affine space

    @property
    def total_dim(self) -> int:
        return sum(self.chart_dims)

    def to_json(self) -> dict:
        return {"tuple": [list(m) for m in self.tuple], "chart_dims": list(self.chart_dims),
                "total_dim": self.total_dim, "affine": self.affine}


def covering_charts(c: ConvolutionDatum, jobs=1) -> list:
    """One chart per fixed point; chart i of a record has dim <2rho_check, lam_i - mu_i>."""
    rd = c.rd
    require_mu_condition(rd, c.mu)
    affine = all(is_minuscule(rd, l) for l in c.lambdas)
    out = []
    for t in fixed_points(c, jobs=jobs):
        dims = tuple(_dot(rd.two_rho_check, _sub(l, m)) for l, m in zip(c.lambdas, t))
        if affine:
            assert sum(dims) == c.dimension
        out.append(ChartRecord(t, dims, affine))
    return out
