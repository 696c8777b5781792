"""Exhaustive sweeps of the representation-theoretic lemmas over bounded boxes.

Each sweep returns a SweepReport; an empty counterexample list means the
claim held on every case examined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import partial

from ._parallel import pmap
from .errors import MuConditionFailed, NotDominant, NotInDominanceOrder
from .reps import weight_multiplicity
from .rootdatum import RootDatum, _dot, build_root_datum
from .slices import deepest_stratum_report, mu_condition, require_mu_condition


@dataclass
class SweepReport:
    group: str
    suite: str
    bound: int
    cases_checked: int = 0
    lambdas_checked: int | None = None
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        out = {"group": self.group, "suite": self.suite}
        out["lambda_bound" if self.suite == "weight-rep" else "box_radius"] = self.bound
        out["cases_checked"] = self.cases_checked
        if self.lambdas_checked is not None:
            out["lambdas_checked"] = self.lambdas_checked
        out["counterexamples"] = self.counterexamples
        return out


def default_bounds(rd: RootDatum) -> tuple:
    """(lambda_bound, box_radius) defaults by rank."""
    if rd.rank <= 2:
        return 4, 3
    if rd.rank <= 4:
        return 3, 2
    return 2, 1


# -- weight-rep lemma ------------------------------------------------------------

def check_weight_rep(rd: RootDatum, lam, mu) -> bool:
    """mu <= lam dominant with the mu-condition must be a weight of V^lam."""
    lam, mu = rd.check(lam), rd.check(mu)
    if not rd.is_dominant(lam):
        raise NotDominant(f"lambda={lam} is not dominant")
    if not rd.dominance_leq(mu, lam):
        raise NotInDominanceOrder(f"mu={mu} is not <= lambda={lam}")
    require_mu_condition(rd, mu)
    return weight_multiplicity(rd, lam, mu) > 0


def _compositions(parts, total):
    """Nonnegative integer vectors of length ``parts`` with sum <= total, lexicographic."""
    if parts == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(parts - 1, total - first):
            yield (first,) + rest


def sweep_lambdas(rd: RootDatum, lambda_bound: int) -> list:
    """Dominant lam = sum a_i w_i over simple nodes with sum a_i <= bound.

    For GL_n only w_1..w_{n-1} are used, so the last coordinate of lam is 0;
    central shifts change neither side of the lemma.
    """
    fund = [rd.fundamental_coweight(i) for i in range(1, rd.ss_rank + 1)]
    out = []
    for a in _compositions(rd.ss_rank, lambda_bound):
        lam = rd._combine(a, fund)
        out.append(lam)
    return sorted(out)


def mu_candidates(rd: RootDatum, lam) -> list:
    """All mu <= lam satisfying the mu-condition.

    Pairing mu = lam - sum n_i alpha_i with 2rho_check gives
    <2rho_check, lam> - 2 sum n_i >= -(number of positive roots), which bounds
    sum n_i without assuming anything about weights.
    """
    depth = (_dot(rd.two_rho_check, lam) + len(rd.positive_roots)) // 2
    out = []
    for n in _compositions(rd.ss_rank, depth):
        mu = tuple(l - c for l, c in zip(lam, rd._combine(n, rd.simple_coroots)))
        if mu_condition(rd, mu):
            out.append(mu)
    return sorted(out)


def _weight_rep_for(label, lam):
    rd = build_root_datum(label)
    cases, bad = 0, []
    for mu in mu_candidates(rd, lam):
        cases += 1
        m = weight_multiplicity(rd, lam, mu)
        if m == 0:
            bad.append({
                "lambda": list(lam), "mu": list(mu),
                "mu_plus": list(rd.dominant_representative(mu)),
                "interval": [list(x) for x in rd.dominant_interval(mu, lam)],
                "pairings": [_dot(a, mu) for a in rd.positive_roots],
                "multiplicity": m,
            })
    return cases, bad


def sweep_weight_rep(group, lambda_bound: int | None = None, jobs=1) -> SweepReport:
    rd = build_root_datum(group) if not isinstance(group, RootDatum) else group
    if lambda_bound is None:
        lambda_bound = default_bounds(rd)[0]
    lams = sweep_lambdas(rd, lambda_bound)
    report = SweepReport(rd.label, "weight-rep", lambda_bound, lambdas_checked=len(lams))
    for cases, bad in pmap(partial(_weight_rep_for, rd.label), lams, jobs):
        report.cases_checked += cases
        report.counterexamples.extend(bad)
    return report


# -- pairing / orbit equivalence ---------------------------------------------------

def check_no_dom_est(rd: RootDatum, mu) -> bool:
    """No dominant lam' strictly between mu and mu+ implies the mu-condition."""
    r = deepest_stratum_report(rd, mu)
    return (not r.cond_no_intermediate) or r.cond_pairing


def _pairing_orbit_slab(label, radius, first):
    rd = build_root_datum(label)
    rng = range(-radius, radius + 1)
    bad = []
    cases = 0
    for rest in itertools.product(rng, repeat=rd.rank - 1):
        mu = (first,) + rest
        cases += 1
        r = deepest_stratum_report(rd, mu)
        if not r.agree:
            bad.append(r.to_json())
    return cases, bad


def sweep_pairing_orbit_equiv(group, box_radius: int | None = None, jobs=1) -> SweepReport:
    rd = build_root_datum(group) if not isinstance(group, RootDatum) else group
    if box_radius is None:
        box_radius = default_bounds(rd)[1]
    report = SweepReport(rd.label, "pairing-orbit", box_radius)
    slabs = range(-box_radius, box_radius + 1)
    for cases, bad in pmap(partial(_pairing_orbit_slab, rd.label, box_radius), slabs, jobs):
        report.cases_checked += cases
        report.counterexamples.extend(bad)
    return report


SUITES = {
    "weight-rep": sweep_weight_rep,
    "pairing-orbit": sweep_pairing_orbit_equiv,
}
