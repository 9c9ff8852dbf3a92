import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep.braids import (
    BraidWord,
    lambda_generator,
    pure_generator,
    relator_catalog,
    rho,
    sigma,
)


@st.composite
def braid_words(draw, min_n=2, max_n=4, max_len=8):
    n = draw(st.integers(min_n, max_n))
    length = draw(st.integers(0, max_len))
    letters = []
    for _ in range(length):
        kind = draw(st.sampled_from(["s", "r"]))
        index = draw(st.integers(1, n - 1))
        exp = draw(st.sampled_from([1, -1])) if kind == "s" else 1
        letters.append((kind, index, exp))
    return BraidWord(n, tuple(letters))


# -- reduction -------------------------------------------------------------


def test_reduce_inverse_pair():
    w = BraidWord.parse("s1 s1^-1", 2)
    assert w.reduce() == BraidWord.identity(2)


def test_reduce_rho_square():
    w = BraidWord.parse("r2 r2", 3)
    assert w.reduce() == BraidWord.identity(3)


def test_reduce_no_cancellation():
    w = BraidWord.parse("s1 r2", 3)
    assert w.reduce() == w


def test_reduce_cascades():
    w = BraidWord.parse("s1 s2 s2^-1 s1^-1", 3)
    assert w.reduce() == BraidWord.identity(3)


@given(braid_words())
@settings(max_examples=80)
def test_reduce_preserves_permutation(w):
    assert w.reduce().permutation() == w.permutation()


# -- permutations ------------------------------------------------------------


def test_sigma_maps_to_transposition():
    assert sigma(2, 1).permutation() == (2, 1)


def test_rho_sigma_inverse_is_pure():
    w = BraidWord.parse("r1 s1^-1", 3)
    assert w.permutation() == (1, 2, 3)


def test_empty_word_is_identity():
    assert BraidWord.identity(3).permutation() == (1, 2, 3)


def test_right_action_order():
    # s1 then s2 sends strand 1 -> 2 -> 3 under the right-action convention.
    w = BraidWord.parse("s1 s2", 3)
    assert w.permutation() == (3, 1, 2)


# -- relator catalog ------------------------------------------------------------


def test_catalog_n2_classical_empty():
    assert relator_catalog(2, virtual=False) == []


def test_catalog_n3_classical():
    relators = relator_catalog(3, virtual=False)
    assert len(relators) == 1
    rel = relators[0]
    assert rel.tag == "b1"
    assert rel.lhs == BraidWord.parse("s1 s2 s1", 3)
    assert rel.rhs == BraidWord.parse("s2 s1 s2", 3)


def test_catalog_n3_virtual_shapes():
    relators = relator_catalog(3, virtual=True)
    by_tag = {}
    for rel in relators:
        by_tag.setdefault(rel.tag, []).append(rel)
    assert sorted(by_tag) == ["b1", "vb3", "vb5", "vb6"]
    assert len(by_tag["b1"]) == 1
    assert len(by_tag["vb3"]) == 1
    assert len(by_tag["vb5"]) == 2
    assert len(by_tag["vb6"]) == 1


def test_catalog_n4_has_distant_pairs():
    tags = {rel.tag for rel in relator_catalog(4, virtual=True)}
    assert tags == {"b1", "b2", "vb3", "vb4", "vb5", "vb6", "vb7"}


def test_catalog_rejects_small_n():
    with pytest.raises(ValueError):
        relator_catalog(1, virtual=False)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_relators_are_permutation_identities(n):
    for rel in relator_catalog(n, virtual=True):
        assert rel.lhs.permutation() == rel.rhs.permutation()


# -- distinguished elements -------------------------------------------------------


def test_pure_generator_adjacent():
    assert pure_generator(1, 2, 3) == BraidWord.parse("s1 s1", 3)


def test_pure_generator_examples():
    assert pure_generator(1, 3, 3) == BraidWord.parse("s2 s1 s1 s2^-1", 3)
    assert pure_generator(2, 4, 4) == BraidWord.parse("s3 s2 s2 s3^-1", 4)


def test_pure_generator_length_and_purity():
    for n in range(2, 7):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                w = pure_generator(i, j, n)
                assert len(w) == 2 * (j - i - 1) + 2
                assert w.is_pure()


def test_pure_generator_rejects_bad_indices():
    with pytest.raises(ValueError):
        pure_generator(2, 2, 3)


def test_lambda_generators():
    assert lambda_generator(1, 2) == BraidWord.parse("r1 s1^-1", 3)
    assert lambda_generator(1, 3) == BraidWord.parse("r2 r1 s1^-1 r2", 3)
    assert lambda_generator(2, 3) == BraidWord.parse("r2 s2^-1", 3)
    for pair in [(1, 2), (1, 3), (2, 3)]:
        assert lambda_generator(*pair).is_pure()
    with pytest.raises(ValueError):
        lambda_generator(2, 1)


# -- text round trip ----------------------------------------------------------------


@given(braid_words())
@settings(max_examples=60)
def test_parse_format_round_trip(w):
    assert BraidWord.parse(str(w), w.n) == w


def test_parse_exponent_expansion():
    assert BraidWord.parse("s1^3", 2) == BraidWord.parse("s1 s1 s1", 2)
    assert BraidWord.parse("s1^-2", 2) == BraidWord.parse("s1^-1 s1^-1", 2)
    assert BraidWord.parse("r1^-1", 2) == rho(2, 1)
