import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from slicekit import reps
from slicekit.errors import NotDominant
from slicekit.rootdatum import RootDatum, build_root_datum

from oracles import gl_multiplicity, raw_freudenthal


def test_invariant_form_gl2_is_dot_product():
    form = reps.invariant_form(build_root_datum("GL2"))
    assert form == [[1, 0], [0, 1]]


def _ip(form, u, v):
    return sum(u[i] * form[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def test_invariant_form_a2_normalization():
    rd = build_root_datum("A2")
    form = reps.invariant_form(rd)
    a1, a2 = rd.simple_coroots
    assert _ip(form, a1, a1) == 2
    assert _ip(form, a2, a2) == 2
    assert _ip(form, a1, a2) == -1


def test_invariant_form_g2_length_ratio():
    rd = build_root_datum("G2")
    form = reps.invariant_form(rd)
    lengths = sorted(_ip(form, a, a) for a in rd.simple_coroots)
    assert lengths == [2, 6]


def test_invariant_form_is_weyl_invariant_and_matches_pairing(small_rd):
    rd = small_rd
    form = reps.invariant_form(rd)
    basis = [tuple(int(i == j) for j in range(rd.rank)) for i in range(rd.rank)]
    for i, alpha in enumerate(rd.simple_coroots):
        aa = _ip(form, alpha, alpha)
        assert aa > 0
        for u in basis:
            # <alpha_check_i, u> = 2 (alpha_i, u) / (alpha_i, alpha_i)
            assert rd.pairing(rd.simple_roots[i], u) == Fraction(2) * _ip(form, alpha, u) / aa
            for v in basis:
                assert _ip(form, rd.reflect(i, u), rd.reflect(i, v)) == _ip(form, u, v)


def test_multiplicity_examples():
    gl2, gl3 = build_root_datum("GL2"), build_root_datum("GL3")
    assert reps.weight_multiplicity(gl2, (1, 0), (0, 1)) == 1
    assert reps.weight_multiplicity(gl3, (1, 0, -1), (0, 0, 0)) == 2
    assert reps.weight_multiplicity(gl2, (2, 0), (0, 1)) == 0
    with pytest.raises(NotDominant):
        reps.weight_multiplicity(gl2, (0, 1), (0, 1))


def test_weights_of_examples():
    gl2, gl3 = build_root_datum("GL2"), build_root_datum("GL3")
    assert reps.weights_of(gl2, (1, 0)).weights() == [(0, 1), (1, 0)]
    sym2 = reps.weights_of(gl2, (2, 0))
    assert sym2.mults == {(0, 2): 1, (1, 1): 1, (2, 0): 1}
    adj = reps.weights_of(gl3, (1, 0, -1))
    assert len(adj.mults) == 7 and adj.dimension == 8


def test_weyl_dimension_examples():
    assert reps.weyl_dimension(build_root_datum("GL2"), (1, 0)) == 2
    assert reps.weyl_dimension(build_root_datum("GL3"), (1, 0, -1)) == 8
    assert reps.weyl_dimension(build_root_datum("E8"), (0,) * 8) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gl_multiplicities_match_kostka(n):
    rd = build_root_datum(f"GL{n}")
    for lam in itertools.product(range(3, -1, -1), repeat=n):
        if list(lam) != sorted(lam, reverse=True) or sum(lam) > 5:
            continue
        diagram = reps.weights_of(rd, lam)
        for mu, m in diagram.mults.items():
            assert m == gl_multiplicity(lam, mu)
        # nothing missing: every content with positive Kostka number is a weight
        for mu in itertools.product(range(sum(lam) + 1), repeat=n):
            if sum(mu) == sum(lam):
                assert diagram.mults.get(mu, 0) == gl_multiplicity(lam, mu)


@pytest.mark.parametrize("label,lam", [("A2", (2, 1)), ("B2", (1, 1)), ("C2", (2, 1)),
                                       ("G2", (1, 1)), ("B3", (1, 0, 1)), ("A3", (1, 0, 2)),
                                       ("GL3", (2, 0, -1))])
def test_multiplicities_match_unsymmetrized_freudenthal(label, lam):
    rd = build_root_datum(label)
    assert reps.weights_of(rd, lam).mults == raw_freudenthal(rd, lam)


def test_scale_invariance():
    # rescaling the form per simple factor leaves multiplicities unchanged
    rd = build_root_datum("B2")
    lam = (2, 1)
    base = reps.weights_of(rd, lam).mults
    for k in (2, 3):
        scaled = RootDatum(rd.label, rd.rank, rd.simple_roots, rd.simple_coroots, rd.cartan)
        scaled.__dict__["symmetrizer"] = tuple(k * x for x in rd.symmetrizer)
        assert reps.weights_of(scaled, lam).mults == base
    assert build_root_datum("B2").symmetrizer == (2, 1)


@pytest.mark.parametrize("label", ["GL2", "GL3", "A2", "B2", "C3", "G2"])
def test_sum_of_multiplicities_is_weyl_dimension(label):
    rd = build_root_datum(label)
    for a in itertools.product(range(3), repeat=rd.ss_rank):
        lam = rd._combine(a, [rd.fundamental_coweight(i) for i in range(1, rd.ss_rank + 1)])
        d = reps.weights_of(rd, lam)
        assert d.dimension == reps.weyl_dimension(rd, lam)
        for mu, m in d.mults.items():
            assert rd.dominance_leq(mu, lam)
            for i in range(rd.ss_rank):
                assert d.mults[rd.reflect(i, mu)] == m


def test_is_minuscule_examples():
    gl2 = build_root_datum("GL2")
    assert reps.is_minuscule(gl2, (1, 0))
    assert not reps.is_minuscule(gl2, (2, 0))
    assert reps.is_minuscule(gl2, (0, 0))
    with pytest.raises(NotDominant):
        reps.is_minuscule(gl2, (0, 1))


@pytest.mark.parametrize("label", ["GL2", "GL3", "A2", "B2", "G2", "A3"])
def test_minuscule_paths_agree_in_box(label):
    rd = build_root_datum(label)
    for mu in itertools.product(range(-3, 4), repeat=rd.rank):
        if not rd.is_dominant(mu):
            continue
        fast = reps.is_minuscule(rd, mu)
        assert fast == reps.is_minuscule_slow(rd, mu)
        if fast:
            d = reps.weights_of(rd, mu)
            assert set(d.mults.values()) == {1}
            assert d.weights() == rd.weyl_orbit(mu)


def test_minuscule_census():
    a3 = build_root_datum("A3")
    census = reps.minuscule_fundamental_coweights(a3)
    assert census == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert [len(a3.weyl_orbit(w)) for w in census] == [4, 6, 4]
    assert reps.minuscule_fundamental_coweights(build_root_datum("G2")) == []
    for n in (2, 3, 4, 5):
        rd = build_root_datum(f"GL{n}")
        census = reps.minuscule_fundamental_coweights(rd)
        assert [len(rd.weyl_orbit(w)) for w in census] == [comb(n, k) for k in range(1, n)]


def test_random_lambdas_reproducible():
    rng = random.Random(7)
    rd = build_root_datum("C3")
    for _ in range(5):
        a = [rng.randint(0, 2) for _ in range(3)]
        lam = tuple(a)
        assert reps.weights_of(rd, lam).dimension == reps.weyl_dimension(rd, lam)
