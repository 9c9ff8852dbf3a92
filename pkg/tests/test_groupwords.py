import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep.groupwords import (
    Factor,
    FreeProduct,
    GeneratorMap,
    GroupWord,
    abelian_factor,
    abelianized,
    fox_derivative,
    free_factor,
)
from braidrep.laurent import LaurentPoly, Universe, t_var

# The header-syntax universe F(x,3) * A(u,3) * A(v,4).
U = FreeProduct((free_factor("x", 3), abelian_factor("u", 3), abelian_factor("v", 4)))
F3 = FreeProduct((free_factor("x", 3),))
L3 = Universe.multi(3)


def word(text, universe=U):
    return GroupWord.parse(text, universe)


@st.composite
def words(draw, universe=U, max_len=6):
    gens = universe.generators()
    letters = draw(
        st.lists(
            st.tuples(st.sampled_from(gens), st.sampled_from([1, -1])), max_size=max_len
        )
    )
    return GroupWord.from_letters(universe, letters)


@st.composite
def free_words(draw, universe=F3, max_len=8):
    gens = universe.generators()
    letters = draw(
        st.lists(
            st.tuples(st.sampled_from(gens), st.sampled_from([1, -1])), max_size=max_len
        )
    )
    return GroupWord.from_letters(universe, letters)


# -- normal form -----------------------------------------------------------------


def test_abelian_cancellation_merges_free_syllables():
    w = word("x1 u1 u1^-1 x2")
    assert w == word("x1 x2")
    assert len(w.syllables) == 1


def test_free_cancellation():
    assert word("x1 x1^-1").is_identity()


def test_distinct_abelian_factors_do_not_merge():
    w = word("u1 v2")
    assert len(w.syllables) == 2
    assert w != word("v2 u1")


def test_abelian_syllable_is_a_vector():
    assert word("u2 u1") == word("u1 u2")
    assert word("u1 u2 u1") == word("u1^2 u2")


def test_unknown_generator_rejected():
    with pytest.raises(ValueError):
        word("w1")


@given(words())
@settings(max_examples=60)
def test_normalization_idempotent(w):
    assert GroupWord.from_letters(U, w.letters()) == w


@given(words(), words(), words())
@settings(max_examples=60)
def test_concatenation_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words())
@settings(max_examples=60)
def test_inverse_cancels(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


def test_conjugation_helpers():
    x1, x2 = U.gen("x1"), U.gen("x2")
    assert x1.conj(x2) == x2.inverse() * x1 * x2


# -- Fox calculus ------------------------------------------------------------------

# Independent oracle: the recursive product rule on the leading letter.


def fox_oracle(letters, i, universe):
    if not letters:
        return LaurentPoly.zero(universe)
    (j, e), rest = letters[0], letters[1:]
    tj = t_var(universe, j)
    if e == 1:
        head = LaurentPoly.one(universe) if j == i else LaurentPoly.zero(universe)
        prefix = tj
    else:
        head = -tj.unit_inverse() if j == i else LaurentPoly.zero(universe)
        prefix = tj.unit_inverse()
    return head + prefix * fox_oracle(rest, i, universe)


def letters_of(w):
    return [(int(name[1:]), e) for name, e in w.letters()]


def test_fox_conjugate_by_x1():
    w = GroupWord.parse("x1 x2 x1^-1", F3)
    expected1 = fox_oracle(letters_of(w), 1, L3)
    expected2 = fox_oracle(letters_of(w), 2, L3)
    assert expected1 == LaurentPoly.parse("1 - t2", L3)
    assert expected2 == LaurentPoly.parse("t1", L3)
    assert fox_derivative(w, 1, L3) == expected1
    assert fox_derivative(w, 2, L3) == expected2


def test_fox_of_identity():
    assert fox_derivative(F3.identity(), 1, L3).is_zero()


def test_fox_rejects_mixed_words():
    with pytest.raises(ValueError):
        fox_derivative(word("x1 u1"), 1, L3)


@given(free_words())
@settings(max_examples=60)
def test_fox_matches_oracle(w):
    for i in (1, 2, 3):
        assert fox_derivative(w, i, L3) == fox_oracle(letters_of(w), i, L3)


@given(free_words(max_len=5), free_words(max_len=5))
@settings(max_examples=60)
def test_fox_product_rule(u, v):
    for i in (1, 2, 3):
        lhs = fox_derivative(u * v, i, L3)
        rhs = fox_derivative(u, i, L3) + abelianized(u, L3) * fox_derivative(v, i, L3)
        assert lhs == rhs


@given(free_words())
@settings(max_examples=60)
def test_fox_fundamental_identity(w):
    total = LaurentPoly.zero(L3)
    for i in (1, 2, 3):
        total = total + fox_derivative(w, i, L3) * (t_var(L3, i) - 1)
    assert total == abelianized(w, L3) - 1


# -- text round trip ---------------------------------------------------------------


@given(words())
@settings(max_examples=60)
def test_parse_format_round_trip(w):
    assert GroupWord.parse(str(w), U) == w
