import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep.laurent import (
    LaurentPoly,
    PolyParseError,
    Universe,
    UniverseMismatch,
    q_var,
    single_t,
    t_var,
)

U3 = Universe.multi(3)
US = Universe.single_t()


def poly(text, universe=U3):
    return LaurentPoly.parse(text, universe)


# -- random polynomial strategy ------------------------------------------------

VARS = [("t", 1), ("t", 2), ("t", 3), ("q", 1), ("q", 2), ("q", 3)]


@st.composite
def polys(draw, universe=U3, max_terms=4):
    n_terms = draw(st.integers(0, max_terms))
    result = LaurentPoly.zero(universe)
    for _ in range(n_terms):
        coeff = draw(st.integers(-4, 4))
        n_vars = draw(st.integers(0, 3))
        exps = {}
        for _ in range(n_vars):
            var = draw(st.sampled_from(VARS))
            exps[var] = draw(st.integers(-2, 2))
        result = result + LaurentPoly.monomial(universe, coeff, exps)
    return result


@st.composite
def unit_polys(draw, universe=U3):
    coeff = draw(st.sampled_from([1, -1]))
    exps = {}
    for var in draw(st.lists(st.sampled_from(VARS), max_size=3, unique=True)):
        exps[var] = draw(st.integers(-2, 2))
    return LaurentPoly.monomial(universe, coeff, exps)


# -- arithmetic ---------------------------------------------------------------


def test_distributivity_example():
    t = single_t(US)
    assert (1 - t) * t == t - t * t


def test_cancellation_example():
    t2 = t_var(U3, 2)
    assert (1 - t2) + t2 == LaurentPoly.one(U3)


def test_subtraction_of_equal_values():
    a = poly("1 - t1 + t1*t2")
    assert (a * 1 - a).is_zero()


@given(polys(), polys(), polys())
@settings(max_examples=80)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a
    assert a * 1 == a
    assert a * 0 == LaurentPoly.zero(U3)


def test_universe_mismatch():
    with pytest.raises(UniverseMismatch):
        t_var(U3, 1) + single_t(US)


# -- units ---------------------------------------------------------------------


def test_is_unit_examples():
    minus_unit = LaurentPoly.monomial(U3, -1, {("t", 1): 2, ("q", 3): -1})
    assert minus_unit.is_unit()
    t = single_t(US)
    assert not (1 + t).is_unit()
    assert not LaurentPoly.zero(U3).is_unit()


@given(unit_polys())
@settings(max_examples=60)
def test_unit_inverse_verifies(u):
    assert u.is_unit()
    assert u * u.unit_inverse() == LaurentPoly.one(U3)


def test_non_unit_has_no_inverse():
    with pytest.raises(ValueError):
        poly("1 + t1").unit_inverse()


# -- specialization -------------------------------------------------------------


def test_specialize_all_t_to_t():
    a = poly("1 - t1 + t1*t2")
    t = single_t(US)
    image = a.specialize({("t", 1): t, ("t", 2): t, ("t", 3): t})
    assert image == 1 - t + t * t


def test_specialize_unit_substitution():
    a = poly("q2*t2^-1")
    assert a.specialize({("q", 2): LaurentPoly.one(U3)}) == poly("t2^-1")


def test_specialize_empty_map_is_identity():
    a = poly("1 - t1 + q3^-2")
    assert a.specialize({}) == a


def test_specialize_non_unit_for_inverted_variable():
    a = poly("t1^-1")
    with pytest.raises(ValueError):
        a.specialize({("t", 1): poly("1 + t2")})


@given(polys(), polys())
@settings(max_examples=60)
def test_specialize_is_multiplicative(a, b):
    one = LaurentPoly.one(U3)
    images = {("t", 1): t_var(U3, 2), ("q", 2): one, ("t", 3): q_var(U3, 1)}
    assert (a * b).specialize(images) == a.specialize(images) * b.specialize(images)
    assert (a + b).specialize(images) == a.specialize(images) + b.specialize(images)


# -- text and JSON forms ---------------------------------------------------------


def test_format_examples():
    assert str(poly("1 - t2")) == "1 - t2"
    assert poly("t1*(1 - t1)") == poly("t1 - t1^2")
    assert str(poly("t1*(1 - t1)")) == "t1 - t1^2"


def test_parse_round_trip_example():
    a = poly("q2^-1*t3")
    assert LaurentPoly.parse(str(a), U3) == a


@given(polys())
@settings(max_examples=80)
def test_parse_format_round_trip(a):
    assert LaurentPoly.parse(str(a), U3) == a


@given(polys())
@settings(max_examples=60)
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json(), U3) == a


def test_parse_error_reports_position():
    with pytest.raises(PolyParseError) as err:
        poly("t1 + + t2")
    assert err.value.position == 5


def test_parse_rejects_unknown_variable():
    with pytest.raises(PolyParseError):
        poly("t9")
    with pytest.raises(PolyParseError):
        LaurentPoly.parse("t1", US)
