import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep.braids import BraidWord, relator_catalog
from braidrep.groupreps import artin_rep, builtin_group_rep, phi_m_rep, phi_m_tilde_rep
from braidrep.groupwords import FreeProduct, GeneratorMap, GroupWord, abelian_factor, free_factor


def gw(text, universe):
    return GroupWord.parse(text, universe)


# -- generator images match the defining formulas -----------------------------------


def test_artin_sigma_image():
    rep = artin_rep(2)
    image = rep.image(("s", 1, 1))
    assert image.images["x1"] == gw("x1 x2 x1^-1", rep.universe)
    assert image.images["x2"] == gw("x1", rep.universe)


def test_phi_m_tilde_rho_image():
    rep = phi_m_tilde_rep(2)
    image = rep.image(("r", 1, 1))
    assert image.images["x1"] == gw("y1 x2 y1^-1", rep.universe)
    assert image.images["x2"] == gw("y2^-1 x1 y2", rep.universe)
    assert image.images["y1"] == gw("y2", rep.universe)


def test_phi_m_tilde_sigma_image():
    rep = phi_m_tilde_rep(3)
    image = rep.image(("s", 1, 1))
    assert image.images["x1"] == gw("x1 x2 x1^-1", rep.universe)
    assert image.images["x2"] == gw("x1", rep.universe)
    assert image.images["y1"] == gw("y2", rep.universe)
    assert image.images["x3"] == gw("x3", rep.universe)
    assert image.images["y3"] == gw("y3", rep.universe)


def test_phi_m_sigma_image():
    rep = phi_m_rep(2)
    image = rep.image(("s", 1, 1))
    u = rep.universe
    assert image.images["x1"] == gw("x1", u).conj(u.identity()) * gw("x2", u).conj(
        gw("u1", u)
    ) * gw("x1^-1", u).conj(gw("v0 u2", u))
    assert image.images["x2"] == gw("x1", u).conj(gw("v0", u))
    assert image.images["u1"] == gw("u2", u)
    assert image.images["v1"] == gw("v2", u)
    assert image.images["v0"] == gw("v0", u)


def test_phi_m_rho_image():
    rep = phi_m_rep(2)
    image = rep.image(("r", 1, 1))
    u = rep.universe
    assert image.images["x1"] == gw("v1 x2 v1^-1", u)
    assert image.images["x2"] == gw("v2^-1 x1 v2", u)


def test_missing_letter_rejected():
    rep = artin_rep(3, virtual=False)
    with pytest.raises(ValueError):
        rep.image(("r", 1, 1))


# -- automorphism witnesses -----------------------------------------------------------


@pytest.mark.parametrize("name", ["artin_b", "artin_vb", "phi_m", "phi_m_tilde"])
def test_generator_images_have_two_sided_inverses(name):
    rep = builtin_group_rep(name, 3)
    for i in (1, 2):
        fwd = rep.image(("s", i, 1))
        back = rep.image(("s", i, -1))
        assert fwd.compose(back).is_identity()
        assert back.compose(fwd).is_identity()
        if rep.virtual:
            flip = rep.image(("r", i, 1))
            assert flip.compose(flip).is_identity()


def test_rho_square_fixes_generators():
    # Composing the rho_1 image with itself must fix x1, x2, y1, y2.
    rep = phi_m_tilde_rep(2)
    flip = rep.image(("r", 1, 1))
    square = flip.compose(flip)
    for name in ("x1", "x2", "y1", "y2"):
        assert square.images[name] == rep.universe.gen(name)


def test_apply_to_identity_word():
    rep = phi_m_rep(2)
    image = rep.image(("s", 1, 1))
    assert image.apply(rep.universe.identity()).is_identity()


@given(st.data())
@settings(max_examples=40)
def test_generator_map_is_homomorphic(data):
    rep = phi_m_tilde_rep(2)
    image = rep.image(("s", 1, 1))
    gens = rep.universe.generators()
    letters = st.lists(
        st.tuples(st.sampled_from(gens), st.sampled_from([1, -1])), max_size=5
    )
    a = GroupWord.from_letters(rep.universe, data.draw(letters))
    b = GroupWord.from_letters(rep.universe, data.draw(letters))
    assert image.apply(a * b) == image.apply(a) * image.apply(b)


def test_noncommuting_abelian_images_rejected():
    universe = FreeProduct((free_factor("x", 2), abelian_factor("y", 2)))
    with pytest.raises(ValueError):
        GeneratorMap(universe, {"y1": gw("x1", universe), "y2": gw("x2", universe)})


# -- relator audits --------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_artin_classical_audit(n):
    rep = artin_rep(n)
    assert rep.failed_relators(relator_catalog(n, virtual=False)) == []


@pytest.mark.parametrize("name", ["artin_vb", "phi_m", "phi_m_tilde"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_virtual_audits(name, n):
    rep = builtin_group_rep(name, n)
    assert rep.failed_relators(relator_catalog(n, virtual=True)) == []


def test_word_map_respects_reduction():
    rep = phi_m_rep(3)
    w = BraidWord.parse("s1 r2 r2 s1^-1 r1", 3)
    assert rep.word_map(w) == rep.word_map(w.reduce())
