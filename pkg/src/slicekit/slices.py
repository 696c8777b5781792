"""Invariants of a single generalized slice attached to a pair (lam, mu)."""

from __future__ import annotations

from dataclasses import dataclass

from .characters import EquivariantCharacter
from .errors import MuConditionFailed, MuNotInOrbit, NotDominant, NotInDominanceOrder, NotMinuscule
from .reps import is_minuscule, weight_multiplicity
from .rootdatum import RootDatum, _dot


@dataclass(frozen=True)
class SliceDatum:
    rd: RootDatum
    lam: tuple
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", self.rd.check(self.lam, "lambda"))
        object.__setattr__(self, "mu", self.rd.check(self.mu, "mu"))
        if not self.rd.is_dominant(self.lam):
            raise NotDominant(f"lambda={self.lam} is not dominant")
        if not self.rd.dominance_leq(self.mu, self.lam):
            raise NotInDominanceOrder(f"mu={self.mu} is not <= lambda={self.lam}")


@dataclass(frozen=True)
class FibrationDecomposition:
    base_lambda: tuple
    base_mu_plus: tuple
    affine_dim: int
    base_dim: int
    is_affine_space: bool  # mu in W.lam: the base is a point


def two_rho_check_pairing(rd: RootDatum, v) -> int:
    return _dot(rd.two_rho_check, v)


def _diff(a, b):
    return tuple(x - y for x, y in zip(a, b))


def slice_dimension(s: SliceDatum) -> int:
    return two_rho_check_pairing(s.rd, _diff(s.lam, s.mu))


def repellent_dimension(s: SliceDatum) -> int:
    twice = slice_dimension(s)
    assert twice % 2 == 0, "lam - mu outside the coroot lattice"
    return twice // 2


def has_torus_fixed_point(s: SliceDatum) -> bool:
    return weight_multiplicity(s.rd, s.lam, s.mu) > 0


def _worst_pairing(rd, mu):
    """(min pairing, root achieving it) over positive roots; (None, None) if no roots."""
    best = (None, None)
    for a in rd.positive_roots:
        p = _dot(a, mu)
        if best[0] is None or p < best[0]:
            best = (p, a)
    return best


def mu_condition(rd: RootDatum, mu) -> bool:
    """<a, mu> >= -1 for every positive root a."""
    mu = rd.check(mu)
    return all(_dot(a, mu) >= -1 for a in rd.positive_roots)


def require_mu_condition(rd: RootDatum, mu):
    p, root = _worst_pairing(rd, mu)
    if p is not None and p < -1:
        raise MuConditionFailed(mu, root, p)


def fibration_decomposition(s: SliceDatum) -> FibrationDecomposition:
    rd = s.rd
    require_mu_condition(rd, s.mu)
    mu_plus = rd.dominant_representative(s.mu)
    affine = two_rho_check_pairing(rd, _diff(mu_plus, s.mu))
    base = two_rho_check_pairing(rd, _diff(s.lam, mu_plus))
    return FibrationDecomposition(s.lam, mu_plus, affine, base, mu_plus == s.lam)


def delta_mu_minus(rd: RootDatum, mu) -> list:
    """Negative roots a with <a, mu> > 0, sorted."""
    mu = rd.check(mu)
    return sorted(tuple(-x for x in a) for a in rd.positive_roots if _dot(a, mu) < 0)


def minuscule_slice_character(s: SliceDatum) -> EquivariantCharacter:
    """Sum over a in delta_mu_minus of e^a + hbar e^-a."""
    rd = s.rd
    if not is_minuscule(rd, s.lam):
        raise NotMinuscule(f"lambda={s.lam} is not minuscule")
    if s.mu not in rd.weyl_orbit(s.lam):
        raise MuNotInOrbit(f"mu={s.mu} is not in the Weyl orbit of {s.lam}")
    terms = []
    for a in delta_mu_minus(rd, s.mu):
        terms.append(((0, a), 1))
        terms.append(((1, tuple(-x for x in a)), 1))
    return EquivariantCharacter(terms)


def dominant_interval(rd: RootDatum, mu, lam) -> list:
    mu, lam = rd.check(mu), rd.check(lam)
    if not rd.dominance_leq(mu, lam):
        raise NotInDominanceOrder(f"mu={mu} is not <= lambda={lam}")
    return rd.dominant_interval(mu, lam)


@dataclass(frozen=True)
class DeepestStratumReport:
    mu: tuple
    mu_plus: tuple
    interval: tuple
    min_pairing: int | None
    cond_pairing: bool
    cond_no_intermediate: bool

    @property
    def agree(self) -> bool:
        return self.cond_pairing == self.cond_no_intermediate

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "mu_plus": list(self.mu_plus),
                "interval": [list(x) for x in self.interval],
                "min_pairing": self.min_pairing,
                "cond_pairing": self.cond_pairing,
                "cond_no_intermediate": self.cond_no_intermediate,
                "agree": self.agree}


def deepest_stratum_report(rd: RootDatum, mu) -> DeepestStratumReport:
    mu = rd.check(mu)
    mu_plus = rd.dominant_representative(mu)
    interval = tuple(rd.dominant_interval(mu, mu_plus))
    p, _ = _worst_pairing(rd, mu)
    return DeepestStratumReport(
        mu, mu_plus, interval, p,
        cond_pairing=p is None or p >= -1,
        cond_no_intermediate=interval == (mu_plus,),
    )
