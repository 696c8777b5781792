"""Equivariant characters and q-polynomials.

A character is a finite sum of terms ``coeff * hbar^a * e^beta`` with
``beta`` in the character lattice.  The loop-rotation exponent of the
cocharacter ``t -> (xi(t), t^d)`` is never given a number: for ``d >> 0``
the weight ``<beta, xi> + a*d`` has the sign of ``a`` unless ``a == 0``.
"""

from __future__ import annotations

import json

from .errors import InvalidInput, ZeroWeightTerm
from .rootdatum import _dot


class EquivariantCharacter:
    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (hbar, weight), coeff in items:
            key = (int(hbar), tuple(int(x) for x in weight))
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    @classmethod
    def monomial(cls, hbar, weight, coeff=1):
        return cls([((hbar, weight), coeff)])

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, EquivariantCharacter):
            if other == 0:
                return self
            return NotImplemented
        return EquivariantCharacter(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return EquivariantCharacter({key: c * k for key, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, EquivariantCharacter):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"EquivariantCharacter({list(self._terms.items())!r})"

    def total_dimension(self) -> int:
        return sum(self._terms.values())

    def to_json(self) -> dict:
        return {"terms": [{"hbar": h, "weight": list(w), "coeff": c}
                          for (h, w), c in self._terms.items()]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls([((t["hbar"], t["weight"]), t["coeff"]) for t in data["terms"]])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed character JSON: {exc}") from exc


class QPolynomial:
    """Polynomial in q with nonnegative integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        acc = {}
        for deg, c in (coeffs or {}).items():
            deg, c = int(deg), int(c)
            if deg < 0 or c < 0:
                raise InvalidInput("QPolynomial needs nonnegative degrees and coefficients")
            acc[deg] = acc.get(deg, 0) + c
        self._coeffs = {d: acc[d] for d in sorted(acc) if acc[d]}

    @classmethod
    def monomial(cls, deg, coeff=1):
        return cls({deg: coeff})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, deg) -> int:
        return self._coeffs.get(deg, 0)

    def degree(self):
        return max(self._coeffs) if self._coeffs else None

    def __call__(self, q):
        return sum(c * q ** d for d, c in self._coeffs.items())

    def __add__(self, other):
        if not isinstance(other, QPolynomial):
            if other == 0:
                return self
            return NotImplemented
        merged = dict(self._coeffs)
        for d, c in other._coeffs.items():
            merged[d] = merged.get(d, 0) + c
        return QPolynomial(merged)

    __radd__ = __add__

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, dict):
            return self == QPolynomial(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __repr__(self):
        return f"QPolynomial({self._coeffs!r})"

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {str(d): c for d, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(k): v for k, v in data.items()})


def char_add(a: EquivariantCharacter, b: EquivariantCharacter) -> EquivariantCharacter:
    return a + b


def char_scale(a: EquivariantCharacter, k: int) -> EquivariantCharacter:
    return a * k


def char_equal(a: EquivariantCharacter, b: EquivariantCharacter) -> bool:
    return a == b


def total_dimension(ch: EquivariantCharacter) -> int:
    return ch.total_dimension()


def _term_sign(hbar, weight, xi, d_sign):
    if hbar:
        return d_sign if hbar > 0 else -d_sign
    p = _dot(weight, xi)
    if p == 0:
        raise ZeroWeightTerm(hbar, weight)
    return 1 if p > 0 else -1


def attracting_dimension(ch: EquivariantCharacter, xi, d_sign: int = 1) -> int:
    """Number of tangent lines with positive weight under ``t -> (xi(t), t^(d_sign*d))``.

    Raises ZeroWeightTerm when some term has ``hbar`` exponent 0 and weight
    orthogonal to ``xi``.
    """
    return sum(c for (h, w), c in ch.items() if _term_sign(h, w, xi, d_sign) > 0)


def repelling_dimension(ch: EquivariantCharacter, xi, d_sign: int = 1) -> int:
    return sum(c for (h, w), c in ch.items() if _term_sign(h, w, xi, d_sign) < 0)


# -- rendering -------------------------------------------------------------

def _root_coords(weight, rd):
    if rd is None:
        return None
    coeffs = rd.root_coefficients(weight)
    if coeffs is None:
        raise InvalidInput(f"weight {weight} is not in the root lattice of {rd.label}")
    return coeffs


def _plain_term(hbar, weight, coeff, rd):
    factors = []
    if hbar:
        factors.append("h" if hbar == 1 else f"h^{hbar}")
    coords = _root_coords(weight, rd)
    if coords is None:
        if any(weight):
            factors.append("e^(" + ",".join(map(str, weight)) + ")")
    else:
        for i, c in enumerate(coords, 1):
            if c:
                factors.append(f"a{i}" if c == 1 else f"a{i}^{c}")
    body = "*".join(factors)
    mag = abs(coeff)
    if not body:
        return str(mag)
    return body if mag == 1 else f"{mag}*{body}"


def _latex_term(hbar, weight, coeff, rd):
    out = ""
    if hbar:
        out += r"\hbar" if hbar == 1 else rf"\hbar^{{{hbar}}}"
    coords = _root_coords(weight, rd)
    if coords is None:
        if any(weight):
            out += (" " if out.endswith("hbar") else "") + "e^{(" + ",".join(map(str, weight)) + ")}"
    else:
        for i, c in enumerate(coords, 1):
            if c:
                mult = {1: "", -1: "-"}.get(c, str(c))
                out += (" " if out.endswith("hbar") else "") + rf"e^{{{mult}\alpha^\vee_{{{i}}}}}"
    mag = abs(coeff)
    if not out:
        return str(mag)
    return out if mag == 1 else f"{mag}{out}"


def _join(pieces):
    if not pieces:
        return "0"
    text = ""
    for i, (neg, p) in enumerate(pieces):
        if i == 0:
            text = f"-{p}" if neg else p
        else:
            text += f" - {p}" if neg else f" + {p}"
    return text


def render(obj, fmt: str = "plain", rd=None) -> str:
    """Render a character or q-polynomial as ``plain``, ``json`` or ``latex`` text.

    Character weights are written in simple-root coordinates when a root
    datum is given (``a1^-1`` is e^{-alpha_1}); without one the raw covector
    is printed.
    """
    if fmt not in ("plain", "json", "latex"):
        raise InvalidInput(f"unknown format {fmt!r}")
    if fmt == "json":
        return json.dumps(obj.to_json(), separators=(",", ":"))
    if isinstance(obj, QPolynomial):
        pieces = []
        sep = "*" if fmt == "plain" else ""
        for d, c in obj.coeffs.items():
            if d == 0:
                pieces.append((False, str(c)))
                continue
            mono = "q" if d == 1 else (f"q^{d}" if fmt == "plain" else f"q^{{{d}}}")
            pieces.append((False, mono if c == 1 else f"{c}{sep}{mono}"))
        return _join(pieces)
    term = _plain_term if fmt == "plain" else _latex_term
    return _join([(c < 0, term(h, w, c, rd)) for (h, w), c in obj.items()])
