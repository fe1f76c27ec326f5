import pytest
from hypothesis import given, strategies as st

from sl3web.polyring import (
    Polynomial,
    PolynomialError,
    VariableOrder,
    format_polynomial,
    grevlex_compare,
    leading_term,
    parse_polynomial,
)

ORDER = VariableOrder(("B", "W", "W", "B"))
monomials = st.lists(st.integers(0, 3), min_size=12, max_size=12).map(tuple)


def test_variable_layout():
    o = ORDER
    assert [o.name(k) for k in range(6)] == ["x[-1,1]", "x[0,1]", "x[1,1]", "y[2,1]", "y[2,0]", "y[2,-1]"]
    for k in range(o.nvars):
        assert o.index(*o.variable(k)) == k


def test_h_leading_term_beats_runner_up():
    lead = ORDER.monomial([(1, 1), (2, -1), (3, 1), (4, -1)])
    other = ORDER.monomial([(1, 1), (2, 0), (3, 1), (4, 0)])
    assert grevlex_compare(lead, other) == 1
    assert grevlex_compare(other, lead) == -1
    assert grevlex_compare(lead, lead) == 0


def test_degree_dominates():
    o = VariableOrder(("B",))
    assert grevlex_compare(o.monomial([(1, -1), (1, -1)]), o.monomial([(1, 1)])) == 1


def test_within_vertex_order():
    black = VariableOrder(("B",))
    assert grevlex_compare(black.monomial([(1, 1)]), black.monomial([(1, 0)])) == 1
    assert grevlex_compare(black.monomial([(1, 0)]), black.monomial([(1, -1)])) == 1
    white = VariableOrder(("W",))
    assert grevlex_compare(white.monomial([(1, -1)]), white.monomial([(1, 0)])) == 1
    assert grevlex_compare(white.monomial([(1, 0)]), white.monomial([(1, 1)])) == 1


@given(monomials, monomials, monomials)
def test_order_compatible_with_multiplication(a, b, c):
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert grevlex_compare(a, b) == grevlex_compare(ac, bc)


@given(monomials, monomials)
def test_order_is_total_and_antisymmetric(a, b):
    assert grevlex_compare(a, b) == -grevlex_compare(b, a)
    assert (grevlex_compare(a, b) == 0) == (a == b)


polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=6).map(lambda d: Polynomial(ORDER, d))


@given(polys, polys)
def test_leading_term_multiplicative(p, q):
    if not p or not q:
        return
    (cp, mp), (cq, mq) = p.leading_term(), q.leading_term()
    cpq, mpq = (p * q).leading_term()
    assert mpq == tuple(x + y for x, y in zip(mp, mq))
    assert cpq == cp * cq


@given(polys)
def test_additive_inverse_and_identity(p):
    assert not (p + (-p))
    one = Polynomial.monomial(ORDER, (0,) * 12)
    assert p * one == p
    assert p.scale(0) == Polynomial.zero(ORDER)


@given(polys)
def test_text_round_trip(p):
    assert parse_polynomial(format_polynomial(p), ORDER) == p


def test_pairing_squared():
    o = VariableOrder(("B", "W"))
    pairing = Polynomial(o, {o.monomial([(1, c), (2, c)]): 1 for c in (-1, 0, 1)})
    sq = pairing * pairing
    assert len(sq) == 6
    assert sorted(sq.terms.values()) == [1, 1, 1, 2, 2, 2]
    assert pairing * 1 == pairing


def test_leading_term_examples():
    o = VariableOrder(("B",))
    p = Polynomial.monomial(o, o.monomial([(1, 0)]), 5)
    assert leading_term(p) == (5, o.monomial([(1, 0)]))
    with pytest.raises(PolynomialError):
        leading_term(Polynomial.zero(o))


def test_format():
    o = VariableOrder(("B", "W"))
    p = Polynomial(o, {o.monomial([(1, 1), (1, 1), (2, -1)]): -3, (0,) * 6: 2})
    assert format_polynomial(p) == "-3*x[1,1]^2*y[2,-1] + 2"
    assert format_polynomial(Polynomial.zero(o)) == "0"


def test_parse_rejects_mismatched_variables():
    o = VariableOrder(("B", "W"))
    with pytest.raises(PolynomialError):
        parse_polynomial("y[1,1]*x[1,2]", o)
    with pytest.raises(PolynomialError):
        parse_polynomial("x[1,3]", o)
    with pytest.raises(PolynomialError):
        parse_polynomial("z[1,1]", o)


def test_mixing_rings_rejected():
    a = Polynomial.zero(VariableOrder(("B",)))
    b = Polynomial.zero(VariableOrder(("W",)))
    with pytest.raises(PolynomialError):
        a + b
