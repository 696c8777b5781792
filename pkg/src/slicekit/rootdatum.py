"""Root data of reductive groups with exact integer arithmetic.

Conventions: the cocharacter lattice is ``Z^rank``.  Coweights (elements of
the lattice) and root characters (elements of the dual lattice) are plain
tuples of ints.  Simple roots are covectors ``alpha_check[i]``, simple coroots
are vectors ``alpha[j]``, and ``pairing(alpha_check[i], alpha[j]) == C[i][j]``
where ``C`` is the Cartan matrix of the named type in its usual orientation.
For simple types the lattice basis is the fundamental coweights, so
``alpha_check[i]`` is the i-th unit covector and ``alpha[j]`` is column ``j``
of ``C``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import kernels
from .errors import InvalidInput, UnknownGroup

Coweight = tuple  # tuple[int, ...] in the cocharacter lattice
RootChar = tuple  # tuple[int, ...] in the character lattice

_RANK_LIMITS = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E6", "E7", "E8", "F4", "G2"}


def _chain(n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    """Cartan matrix with Bourbaki node labels.

    >>> cartan_matrix("B", 2)
    [[2, -1], [-2, 2]]
    """
    kind = kind.upper()
    if kind in _RANK_LIMITS:
        if n < _RANK_LIMITS[kind]:
            raise UnknownGroup(f"rank {n} out of range for type {kind}")
    elif f"{kind}{n}" not in _EXCEPTIONAL:
        raise UnknownGroup(f"unknown type {kind}{n}")
    if kind == "A":
        return _chain(n)
    if kind == "B":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if kind == "C":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if kind == "D":
        c = _chain(n)
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        return c
    if kind == "E":
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for i, j in edges:
            if i <= n and j <= n:
                c[i - 1][j - 1] = c[j - 1][i - 1] = -1
        return c
    if kind == "F":
        c = _chain(4)
        c[2][1] = -2
        return c
    # G2, node 1 short
    return [[2, -3], [-1, 2]]


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _invert(m):
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _closure(simple_count, cartan, transpose):
    """Positive roots as simple-coefficient vectors, by reflection closure.

    With ``transpose`` False the reflection of a root ``c`` in node ``j`` is
    ``c_j -= sum_i c_i C[i][j]`` (roots); with it True it uses ``C[j][i]``
    (coroots).
    """
    simples = [tuple(int(i == j) for j in range(simple_count))
               for i in range(simple_count)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for c in frontier:
            for j in range(simple_count):
                if transpose:
                    p = sum(cartan[j][i] * c[i] for i in range(simple_count))
                else:
                    p = sum(c[i] * cartan[i][j] for i in range(simple_count))
                if p == 0:
                    continue
                d = list(c)
                d[j] -= p
                d = tuple(d)
                if all(x >= 0 for x in d) and any(d) and d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return sorted(seen, key=lambda c: (sum(c), c))


@dataclass(frozen=True, eq=False)
class RootDatum:
    label: str
    rank: int
    simple_roots: tuple  # covectors alpha_check_i
    simple_coroots: tuple  # vectors alpha_i
    cartan: tuple
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def ss_rank(self) -> int:
        return len(self.simple_roots)

    # -- derived root data ---------------------------------------------
    @cached_property
    def positive_root_coeffs(self) -> list:
        return _closure(self.ss_rank, self.cartan, transpose=False)

    @cached_property
    def positive_coroot_coeffs(self) -> list:
        return _closure(self.ss_rank, self.cartan, transpose=True)

    @cached_property
    def positive_roots(self) -> list:
        return [self._combine(c, self.simple_roots) for c in self.positive_root_coeffs]

    @cached_property
    def positive_coroots(self) -> list:
        return [self._combine(c, self.simple_coroots) for c in self.positive_coroot_coeffs]

    @cached_property
    def two_rho_check(self) -> RootChar:
        return tuple(sum(col) for col in zip(*self.positive_roots)) if self.positive_roots \
            else (0,) * self.rank

    @cached_property
    def two_rho(self) -> Coweight:
        return tuple(sum(col) for col in zip(*self.positive_coroots)) if self.positive_coroots \
            else (0,) * self.rank

    @cached_property
    def symmetrizer(self) -> tuple:
        """Integers d_i with d_i C[i][j] symmetric, minimal d_i = 1 per component.

        ``d_i`` is half the squared length of the simple coroot ``alpha_i``.
        """
        s = self.ss_rank
        d = [None] * s
        for start in range(s):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            comp, stack = [start], [start]
            while stack:
                i = stack.pop()
                for j in range(s):
                    if self.cartan[i][j] and d[j] is None:
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        comp.append(j)
                        stack.append(j)
            low = min(d[i] for i in comp)
            for i in comp:
                d[i] /= low
        for i in range(s):
            for j in range(s):
                assert d[i] * self.cartan[i][j] == d[j] * self.cartan[j][i]
        assert all(x.denominator == 1 for x in d)
        return tuple(int(x) for x in d)

    @cached_property
    def _left_inverse(self):
        # (A^T A)^{-1} A^T for the rank x ss matrix A whose columns are the coroots
        a = self.simple_coroots
        if not a:
            return []
        gram = [[_dot(u, v) for v in a] for u in a]
        inv = _invert(gram)
        return [[sum(inv[i][k] * a[k][j] for k in range(len(a))) for j in range(self.rank)]
                for i in range(len(a))]

    @cached_property
    def _root_left_inverse(self):
        a = self.simple_roots
        if not a:
            return []
        gram = [[_dot(u, v) for v in a] for u in a]
        inv = _invert(gram)
        return [[sum(inv[i][k] * a[k][j] for k in range(len(a))) for j in range(self.rank)]
                for i in range(len(a))]

    def _combine(self, coeffs, basis):
        out = [0] * self.rank
        for c, b in zip(coeffs, basis):
            if c:
                for k in range(self.rank):
                    out[k] += c * b[k]
        return tuple(out)

    # -- lattice operations --------------------------------------------
    def check(self, v, what="coweight"):
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise InvalidInput(f"{what} {v} has length {len(v)}, expected {self.rank}")
        return v

    @staticmethod
    def pairing(beta_check, mu) -> int:
        if len(beta_check) != len(mu):
            raise InvalidInput("rank mismatch in pairing")
        return _dot(beta_check, mu)

    def simple_pairings(self, mu) -> tuple:
        return tuple(_dot(a, mu) for a in self.simple_roots)

    def is_dominant(self, mu) -> bool:
        return all(_dot(a, mu) >= 0 for a in self.simple_roots)

    def coroot_coefficients(self, v):
        """Integer n with ``v == sum n_i alpha_i``, or None if no such n exists."""
        v = tuple(v)
        if not self.simple_coroots:
            return () if not any(v) else None
        n = [sum(p * x for p, x in zip(row, v)) for row in self._left_inverse]
        if any(x.denominator != 1 for x in n):
            return None
        n = tuple(int(x) for x in n)
        return n if self._combine(n, self.simple_coroots) == v else None

    def root_coefficients(self, beta):
        """Integer expansion of a covector in simple roots, or None."""
        beta = tuple(beta)
        if not self.simple_roots:
            return () if not any(beta) else None
        n = [sum(p * x for p, x in zip(row, beta)) for row in self._root_left_inverse]
        if any(x.denominator != 1 for x in n):
            return None
        n = tuple(int(x) for x in n)
        return n if self._combine(n, self.simple_roots) == beta else None

    def dominance_leq(self, mu, lam) -> bool:
        n = self.coroot_coefficients(tuple(b - a for a, b in zip(mu, lam)))
        return n is not None and all(x >= 0 for x in n)

    def reflect(self, i: int, mu) -> Coweight:
        p = _dot(self.simple_roots[i], mu)
        return tuple(x - p * y for x, y in zip(mu, self.simple_coroots[i]))

    def reflect_char(self, i: int, beta) -> RootChar:
        p = _dot(beta, self.simple_coroots[i])
        return tuple(x - p * y for x, y in zip(beta, self.simple_roots[i]))

    def dominant_representative(self, mu) -> Coweight:
        return kernels.dominant_rep(tuple(mu), self.simple_roots, self.simple_coroots)

    def antidominant_representative(self, mu) -> Coweight:
        neg = tuple(-x for x in mu)
        return tuple(-x for x in self.dominant_representative(neg))

    def dominant_interval(self, mu, lam) -> list:
        """All dominant lam' with mu <= lam' <= lam, in lexicographic order.

        Scans the box ``lam' = lam - sum n_i alpha_i`` with ``0 <= n <= bounds``
        where ``bounds`` are the coroot coefficients of ``lam - mu``.
        """
        mu, lam = tuple(mu), tuple(lam)
        bounds = self.coroot_coefficients(tuple(b - a for a, b in zip(mu, lam)))
        if bounds is None or any(x < 0 for x in bounds):
            return []
        found = kernels.dominant_box(lam, bounds, self.simple_roots, self.simple_coroots)
        return sorted(tuple(x - y for x, y in zip(lam, self._combine(n, self.simple_coroots)))
                      for n in found)

    def weyl_orbit(self, mu) -> list:
        return kernels.orbit(tuple(mu), self.simple_roots, self.simple_coroots)

    def exponents(self) -> list:
        """Exponents of W, read off as the partition dual to the root-height counts."""
        heights = [sum(c) for c in self.positive_root_coeffs]
        count = [heights.count(k) for k in range(max(heights, default=0) + 2)]
        out = []
        for m in range(1, len(count) - 1):
            out += [m] * (count[m] - count[m + 1])
        return out

    def weyl_group_order(self) -> int:
        order = 1
        for m in self.exponents():
            order *= m + 1
        return order

    def fundamental_coweight(self, i: int) -> Coweight:
        """The coweight w_i (1-based) with pairing(alpha_check_j, w_i) = delta_ij.

        For GL_n this is e_1 + ... + e_i, and i = n gives the determinant.
        """
        if self.label.startswith("GL"):
            if not 1 <= i <= self.rank:
                raise InvalidInput(f"w{i} out of range for {self.label}")
            return tuple(int(k < i) for k in range(self.rank))
        if not 1 <= i <= self.ss_rank:
            raise InvalidInput(f"w{i} out of range for {self.label}")
        return tuple(int(k == i - 1) for k in range(self.rank))

    def fundamental_coefficients(self, mu) -> tuple:
        return self.simple_pairings(mu)

    def __reduce__(self):
        return (build_root_datum, (self.label,))


_GL = re.compile(r"^GL(\d+)$", re.I)
_SIMPLE = re.compile(r"^([A-GA-g])(\d+)$")


def build_root_datum(descriptor) -> RootDatum:
    """Build a root datum from ``"GL<n>"``, ``"<TYPE><rank>"`` or ``(type, rank)``."""
    if isinstance(descriptor, tuple):
        kind, n = descriptor
        descriptor = f"{kind}{n}"
    if not isinstance(descriptor, str):
        raise UnknownGroup(f"cannot parse group descriptor {descriptor!r}")
    descriptor = descriptor.strip()
    key = descriptor.upper()
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    m = _GL.match(descriptor)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise UnknownGroup("GL_n needs n >= 1")
        roots = tuple(tuple(int(k == i) - int(k == i + 1) for k in range(n))
                      for i in range(n - 1))
        c = tuple(tuple(_dot(a, b) for b in roots) for a in roots)
        datum = RootDatum(f"GL{n}", n, roots, roots, c)
    else:
        m = _SIMPLE.match(descriptor)
        if not m:
            raise UnknownGroup(f"cannot parse group descriptor {descriptor!r}")
        kind, n = m.group(1).upper(), int(m.group(2))
        c = cartan_matrix(kind, n)
        roots = tuple(tuple(int(k == i) for k in range(n)) for i in range(n))
        coroots = tuple(tuple(c[k][j] for k in range(n)) for j in range(n))
        datum = RootDatum(f"{kind}{n}", n, roots, coroots, tuple(map(tuple, c)))
    _validate(datum)
    _CACHE[key] = datum
    return datum


_CACHE: dict = {}


def _validate(rd: RootDatum):
    s = rd.ss_rank
    for i in range(s):
        for j in range(s):
            assert _dot(rd.simple_roots[i], rd.simple_coroots[j]) == rd.cartan[i][j]
    assert len(rd.positive_roots) == len(rd.positive_coroots)
    for i in range(s):
        assert _dot(rd.simple_roots[i], rd.two_rho) == 2
        assert _dot(rd.two_rho_check, rd.simple_coroots[i]) == 2
