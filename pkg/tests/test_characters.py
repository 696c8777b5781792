import json

import pytest
from hypothesis import given, settings, strategies as st

from slicekit.characters import (EquivariantCharacter as Ch, QPolynomial, attracting_dimension,
                                 char_add, char_equal, char_scale, render, repelling_dimension,
                                 total_dimension)
from slicekit.errors import InvalidInput, ZeroWeightTerm
from slicekit.rootdatum import build_root_datum

from oracles import numeric_attracting

A = (1, -1)
NEG_A = (-1, 1)
GL2 = build_root_datum("GL2")

terms = st.lists(
    st.tuples(st.tuples(st.integers(-3, 3), st.tuples(st.integers(-2, 2), st.integers(-2, 2))),
              st.integers(-3, 3)),
    max_size=6)


def test_add_examples():
    a = Ch([((0, A), 1), ((1, NEG_A), 2)])
    assert a + Ch() == a
    summed = Ch([((0, A), 1), ((1, NEG_A), 1)]) + Ch.monomial(0, NEG_A)
    assert len(summed) == 3


@given(terms, terms)
def test_addition_commutes(t1, t2):
    a, b = Ch(t1), Ch(t2)
    assert char_equal(char_add(a, b), char_add(b, a))
    assert char_add(a, char_scale(a, -1)) == Ch()


def test_canonical_form_drops_zeros():
    ch = Ch([((0, A), 2), ((0, A), -2), ((1, A), 1)])
    assert ch.terms == {(1, A): 1}


def test_total_dimension_examples():
    assert total_dimension(Ch()) == 0
    assert total_dimension(Ch([((0, NEG_A), 1), ((1, A), 1)])) == 2


def test_attracting_examples():
    xi = tuple(-x for x in GL2.two_rho)
    assert attracting_dimension(Ch([((0, NEG_A), 1), ((1, A), 1)]), xi) == 2
    assert attracting_dimension(Ch([((1, NEG_A), 1), ((0, A), 1)]), xi) == 1
    assert attracting_dimension(Ch(), xi) == 0


def test_zero_weight_term_is_reported():
    with pytest.raises(ZeroWeightTerm) as info:
        attracting_dimension(Ch([((0, (1, 1)), 1)]), (1, -1))
    assert info.value.weight == (1, 1)


positive_terms = st.lists(
    st.tuples(st.tuples(st.integers(-3, 3), st.tuples(st.integers(-2, 2), st.integers(-2, 2))),
              st.integers(1, 3)),
    min_size=5, max_size=5)


@settings(max_examples=200)
@given(positive_terms, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_attracting_matches_numeric_large_d(t, xi):
    ch = Ch(t)
    if any(h == 0 and w[0] * xi[0] + w[1] * xi[1] == 0 for (h, w), _ in ch.items()):
        with pytest.raises(ZeroWeightTerm):
            attracting_dimension(ch, xi)
        return
    for d_sign in (1, -1):
        assert attracting_dimension(ch, xi, d_sign) == numeric_attracting(ch, xi, d_sign)
    neg = tuple(-x for x in xi)
    # each line attracts for exactly one of (xi, d) and (-xi, -d)
    assert attracting_dimension(ch, xi) + attracting_dimension(ch, neg, -1) == ch.total_dimension()
    assert attracting_dimension(ch, xi) + repelling_dimension(ch, xi) == ch.total_dimension()


def test_render_examples():
    assert render(Ch(), "plain", GL2) == "0"
    assert render(Ch.monomial(0, NEG_A), "plain", GL2) == "a1^-1"
    assert render(QPolynomial({2: 1, 4: 1}), "json") == '{"2":1,"4":1}'
    assert render(QPolynomial({2: 1, 4: 1})) == "q^2 + q^4"
    assert render(QPolynomial({0: 1})) == "1"
    assert render(QPolynomial({0: 2, 1: 1, 10: 3})) == "2 + q + 3*q^10"
    assert render(QPolynomial({2: 1, 10: 1}), "json") == '{"2":1,"10":1}'
    assert render(QPolynomial({2: 1, 4: 1}), "latex") == "q^{2} + q^{4}"


def test_render_character_forms():
    ch = Ch([((0, NEG_A), 1), ((1, A), 1)])
    assert render(ch, "plain", GL2) == "a1^-1 + h*a1"
    assert render(ch, "latex", GL2) == r"e^{-\alpha^\vee_{1}} + \hbar e^{\alpha^\vee_{1}}"
    a2 = build_root_datum("A2")
    ch2 = Ch([((2, (-1, -1)), 2), ((-1, (0, 0)), 1)])
    assert render(ch2, "plain", a2) == "h^-1 + 2*h^2*a1^-1*a2^-1"
    assert render(Ch([((0, (1, 0)), -1)]), "plain") == "-e^(1,0)"


def test_render_refuses_weights_outside_root_lattice():
    with pytest.raises(InvalidInput):
        render(Ch.monomial(0, (1, 0)), "plain", GL2)
    with pytest.raises(InvalidInput):
        render(Ch(), "yaml")


@given(terms)
def test_json_round_trip(t):
    ch = Ch(t)
    text = render(ch, "json")
    assert Ch.from_json(text) == ch
    assert render(Ch.from_json(json.loads(text)), "json") == text


@given(st.dictionaries(st.integers(0, 30), st.integers(1, 5)))
def test_qpoly_json_round_trip(coeffs):
    p = QPolynomial(coeffs)
    assert QPolynomial.from_json(render(p, "json")) == p
    assert p(1) == sum(coeffs.values())


def test_qpoly_rejects_negative():
    with pytest.raises(InvalidInput):
        QPolynomial({-1: 1})
    with pytest.raises(InvalidInput):
        Ch.from_json({"terms": [{"hbar": 0}]})
