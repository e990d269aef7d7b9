"""Exact multivariate integer polynomials: arithmetic, ordering, text and
JSON round-trips, substitution."""

import pytest
from hypothesis import given, settings, strategies as st

from ellchow import IntPolynomial
from ellchow.exactring.poly import (
    name_elements,
    subset_name,
    symbol_degree,
    symbol_key,
)


L = IntPolynomial.symbol("l")
NU = IntPolynomial.symbol("nu")
XI = IntPolynomial.symbol("xi")


def t(*elems):
    return IntPolynomial.symbol(subset_name("t", elems))


# -- symbol bookkeeping -----------------------------------------------------


def test_subset_name_sorts_elements():
    assert subset_name("t", (2, 1)) == "t{1,2}"
    assert subset_name("d", (3, 1, 2)) == "d{1,2,3}"


def test_name_elements_round_trip():
    assert name_elements("t{1,2,5}") == (1, 2, 5)
    assert name_elements("d{4,6}") == (4, 6)


def test_symbol_degree():
    assert symbol_degree("l") == 1
    assert symbol_degree("xi") == 1
    assert symbol_degree("t{1,2}") == 1
    assert symbol_degree("nu") == 2


def test_symbol_order_plain_before_braced():
    # plain symbols first (l < nu < xi), then braced by (size, elements)
    # regardless of prefix letter
    names = ["t{1,2}", "nu", "xi", "l", "t{1,2,3}", "d{2,3}", "t{1,3}"]
    ordered = sorted(names, key=symbol_key)
    assert ordered == [
        "l",
        "nu",
        "xi",
        "t{1,2}",
        "t{1,3}",
        "d{2,3}",
        "t{1,2,3}",
    ]


def test_symbol_key_rejects_malformed():
    with pytest.raises(ValueError):
        symbol_key("t{1,")
    with pytest.raises(ValueError):
        symbol_key("T{1,2}")
    with pytest.raises(ValueError):
        symbol_key("lambda")


# -- arithmetic -------------------------------------------------------------


def test_zero_and_one():
    assert IntPolynomial.zero().is_zero()
    assert not IntPolynomial.one().is_zero()
    assert IntPolynomial.one().constant() == 1
    assert (L - L).is_zero()
    assert IntPolynomial.const(0).is_zero()


def test_ring_axioms_spot():
    a = 3 * L + t(1, 2)
    b = L - 2 * t(1, 2)
    c = NU + L**2
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a - a == IntPolynomial.zero()
    assert a * IntPolynomial.zero() == IntPolynomial.zero()


def test_integer_coefficients_exact():
    big = 10**40
    f = big * L
    assert (f * f).coefficient((("l", 2),)) == big * big


def test_power():
    f = L + t(1, 2)
    assert f**0 == IntPolynomial.one()
    assert f**1 == f
    assert f**3 == f * f * f
    with pytest.raises(ValueError):
        f ** (-1)


def test_degree_bookkeeping():
    f = 2 * L**3 + NU * L  # both terms have degree 3 (nu counts double)
    assert f.degree() == 3
    assert f.is_homogeneous()
    g = L + NU
    assert not g.is_homogeneous()
    comps = g.homogeneous_components()
    assert comps[1] == L and comps[2] == NU


def test_degree_in_and_coefficient_in():
    f = 3 * L**2 * t(1, 2) + 5 * L - 7 * t(1, 2) ** 3
    assert f.degree_in("l") == 2
    assert f.degree_in("t{1,2}") == 3
    assert f.coefficient_in("l", 2) == 3 * t(1, 2)
    assert f.coefficient_in("l", 1) == IntPolynomial.const(5)
    assert f.coefficient_in("l", 0) == -7 * t(1, 2) ** 3


def test_substitute_is_ring_hom():
    f = 2 * L**2 - 3 * L * t(1, 2) + t(1, 2) ** 2
    images = {"l": XI + IntPolynomial.one(), "t{1,2}": 2 * XI}
    g = f.substitute(images)
    x = XI + IntPolynomial.one()
    y = 2 * XI
    assert g == 2 * x**2 - 3 * x * y + y * y


def test_rename_symbols():
    f = L * t(1, 2) + t(1, 2, 3)
    g = f.rename_symbols({"t{1,2}": "d{1,2}", "t{1,2,3}": "d{1,2,3}"})
    d12 = IntPolynomial.symbol("d{1,2}")
    d123 = IntPolynomial.symbol("d{1,2,3}")
    assert g == L * d12 + d123


# -- canonical text ---------------------------------------------------------


def test_text_canonical_forms():
    assert IntPolynomial.zero().text() == "0"
    assert (24 * L**3 + 24 * L**2 * t(1, 2)).text() == (
        "24*l^3 + 24*l^2*t{1,2}"
    )
    assert (L - t(1, 2)).text() == "l - t{1,2}"
    assert (-L).text() == "-l"
    assert IntPolynomial.const(-7).text() == "-7"


def test_text_orders_terms_by_degree_then_lex():
    f = t(1, 2) ** 2 + L + L**2
    # degree ascending; within a degree, exponent-vectors lex descending
    assert f.text() == "l + l^2 + t{1,2}^2"


def test_parse_round_trip_examples():
    for s in [
        "0",
        "-7",
        "24*l^3 + 24*l^2*t{1,2}",
        "l - t{1,2} + 3*nu",
        "l^2*nu - nu^2",
        "-l - t{1,2,3}",
    ]:
        assert IntPolynomial.parse(s).text() == s


def test_parse_accepts_whitespace_and_signs():
    assert IntPolynomial.parse(" l+t{1,2} ") == L + t(1, 2)
    assert IntPolynomial.parse("l -2*nu") == L - 2 * NU
    assert IntPolynomial.parse("+3") == IntPolynomial.const(3)


def test_parse_rejects_garbage():
    for s in ["l +", "t{1,", "2**l", "l^", "{1,2}", "x y", "", "- "]:
        with pytest.raises(ValueError):
            IntPolynomial.parse(s)


# -- random round-trip properties ------------------------------------------


@st.composite
def polynomials(draw):
    symbols = ["l", "nu", "t{1,2}", "t{1,3}", "t{1,2,3}"]
    n_terms = draw(st.integers(min_value=0, max_value=6))
    poly = IntPolynomial.zero()
    for _ in range(n_terms):
        coeff = draw(st.integers(min_value=-10**6, max_value=10**6))
        mono = IntPolynomial.one()
        for name in draw(
            st.lists(st.sampled_from(symbols), max_size=3)
        ):
            mono = mono * IntPolynomial.symbol(name) ** draw(
                st.integers(min_value=1, max_value=3)
            )
        poly = poly + coeff * mono
    return poly


@given(polynomials())
@settings(max_examples=120, deadline=None)
def test_text_parse_round_trip(poly):
    assert IntPolynomial.parse(poly.text()) == poly


@given(polynomials())
@settings(max_examples=120, deadline=None)
def test_json_round_trip(poly):
    assert IntPolynomial.from_json_obj(poly.to_json_obj()) == poly


@given(polynomials(), polynomials())
@settings(max_examples=60, deadline=None)
def test_hash_consistent_with_eq(a, b):
    if a == b:
        assert hash(a) == hash(b)


@given(polynomials(), polynomials(), polynomials())
@settings(max_examples=40, deadline=None)
def test_distributivity_random(a, b, c):
    assert a * (b + c) == a * b + a * c
