"""Representations of (virtual) braid groups by free-product automorphisms.

Each builtin supplies, for every generator letter, a GeneratorMap together
with an explicit two-sided inverse witness, so every image is a certified
automorphism.  Words evaluate by right-action composition: the first
letter of a word acts first.
"""

from __future__ import annotations

from .braids import BraidWord, Letter, Relator
from .groupwords import Factor, FreeProduct, GeneratorMap, GroupWord, abelian_factor, free_factor

ABELIAN = "abelian"


class GroupRep:
    def __init__(self, name: str, n: int, universe: FreeProduct, virtual: bool,
                 images: dict[Letter, GeneratorMap]):
        self.name = name
        self.n = n
        self.universe = universe
        self.virtual = virtual
        self._images = images

    def image(self, letter: Letter) -> GeneratorMap:
        kind, index, exp = letter
        if kind == "r":
            letter = (kind, index, 1)
        if letter not in self._images:
            raise ValueError(f"{self.name} has no image for letter {letter}")
        return self._images[letter]

    def word_map(self, word: BraidWord) -> GeneratorMap:
        if word.n != self.n:
            raise ValueError(f"word is on {word.n} strands but the representation has n={self.n}")
        result = GeneratorMap.identity(self.universe)
        for letter in word.letters:
            result = result.compose(self.image(letter))
        return result

    def failed_relators(self, relators: list[Relator]) -> list[Relator]:
        return [rel for rel in relators if self.word_map(rel.lhs) != self.word_map(rel.rhs)]


def _conj(a: GroupWord, b: GroupWord) -> GroupWord:
    return a.conj(b)


def artin_rep(n: int, virtual: bool = False) -> GroupRep:
    """The Artin action on the free group: x_i -> x_i x_{i+1} x_i^{-1},
    x_{i+1} -> x_i; its virtual extension sends rho_i to the swap of
    x_i and x_{i+1} (the twist pairing)."""
    if n < 2:
        raise ValueError("need n >= 2")
    universe = FreeProduct((free_factor("x", n),))
    x = [None] + [universe.gen(f"x{i}") for i in range(1, n + 1)]
    images: dict[Letter, GeneratorMap] = {}
    for i in range(1, n):
        images[("s", i, 1)] = GeneratorMap(
            universe,
            {f"x{i}": x[i] * x[i + 1] * x[i].inverse(), f"x{i+1}": x[i]},
        )
        images[("s", i, -1)] = GeneratorMap(
            universe,
            {f"x{i}": x[i + 1], f"x{i+1}": _conj(x[i], x[i + 1])},
        )
        if virtual:
            images[("r", i, 1)] = GeneratorMap(
                universe, {f"x{i}": x[i + 1], f"x{i+1}": x[i]}
            )
    name = "artin_vb" if virtual else "artin_b"
    return GroupRep(name, n, universe, virtual, images)


def phi_m_rep(n: int) -> GroupRep:
    """The automorphic action on F_n * Z^{2n+1} (free generators x_i,
    commuting generators u_1..u_n, v_0, v_1..v_n):

        sigma_i: x_i -> x_i x_{i+1}^{u_i} x_i^{-v_0 u_{i+1}},
                 x_{i+1} -> x_i^{v_0},  u_i <-> u_{i+1},  v_i <-> v_{i+1};
        rho_i:   x_i -> x_{i+1}^{v_i^{-1}},  x_{i+1} -> x_i^{v_{i+1}},
                 u_i <-> u_{i+1},  v_i <-> v_{i+1}.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    uv_names = tuple(f"u{i}" for i in range(1, n + 1)) + ("v0",) + tuple(
        f"v{i}" for i in range(1, n + 1)
    )
    universe = FreeProduct((free_factor("x", n), Factor(ABELIAN, uv_names)))
    g = {name: universe.gen(name) for name in universe.generators()}

    images: dict[Letter, GeneratorMap] = {}
    for i in range(1, n):
        xi, xj = g[f"x{i}"], g[f"x{i+1}"]
        ui, uj = g[f"u{i}"], g[f"u{i+1}"]
        vi, vj = g[f"v{i}"], g[f"v{i+1}"]
        v0 = g["v0"]
        swaps = {f"u{i}": uj, f"u{i+1}": ui, f"v{i}": vj, f"v{i+1}": vi}

        sigma_images = dict(swaps)
        sigma_images[f"x{i}"] = xi * _conj(xj, ui) * _conj(xi.inverse(), v0 * uj)
        sigma_images[f"x{i+1}"] = _conj(xi, v0)
        images[("s", i, 1)] = GeneratorMap(universe, sigma_images)

        # Inverse witness, solved from the sigma_i formulas.
        sigma_inv = dict(swaps)
        sigma_inv[f"x{i}"] = _conj(xj, v0.inverse())
        sigma_inv[f"x{i+1}"] = (
            uj * _conj(xj.inverse(), v0.inverse()) * xi * _conj(xj, ui) * uj.inverse()
        )
        images[("s", i, -1)] = GeneratorMap(universe, sigma_inv)

        rho_images = dict(swaps)
        rho_images[f"x{i}"] = _conj(xj, vi.inverse())
        rho_images[f"x{i+1}"] = _conj(xi, vj)
        images[("r", i, 1)] = GeneratorMap(universe, rho_images)
    return GroupRep("phi_m", n, universe, True, images)


def phi_m_tilde_rep(n: int) -> GroupRep:
    """The automorphic action on F_n * Z^n (free x_i, commuting y_i):

        sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, y_i <-> y_{i+1};
        rho_i:   x_i -> y_i x_{i+1} y_i^{-1},
                 x_{i+1} -> y_{i+1}^{-1} x_i y_{i+1},  y_i <-> y_{i+1}.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    universe = FreeProduct((free_factor("x", n), abelian_factor("y", n)))
    g = {name: universe.gen(name) for name in universe.generators()}

    images: dict[Letter, GeneratorMap] = {}
    for i in range(1, n):
        xi, xj = g[f"x{i}"], g[f"x{i+1}"]
        yi, yj = g[f"y{i}"], g[f"y{i+1}"]
        swaps = {f"y{i}": yj, f"y{i+1}": yi}

        sigma_images = dict(swaps)
        sigma_images[f"x{i}"] = xi * xj * xi.inverse()
        sigma_images[f"x{i+1}"] = xi
        images[("s", i, 1)] = GeneratorMap(universe, sigma_images)

        sigma_inv = dict(swaps)
        sigma_inv[f"x{i}"] = xj
        sigma_inv[f"x{i+1}"] = _conj(xi, xj)
        images[("s", i, -1)] = GeneratorMap(universe, sigma_inv)

        rho_images = dict(swaps)
        rho_images[f"x{i}"] = yi * xj * yi.inverse()
        rho_images[f"x{i+1}"] = _conj(xi, yj)
        images[("r", i, 1)] = GeneratorMap(universe, rho_images)
    return GroupRep("phi_m_tilde", n, universe, True, images)


_BUILTINS = {
    "artin_b": lambda n: artin_rep(n, virtual=False),
    "artin_vb": lambda n: artin_rep(n, virtual=True),
    "phi_m": phi_m_rep,
    "phi_m_tilde": phi_m_tilde_rep,
}


def builtin_group_rep(name: str, n: int) -> GroupRep:
    if name not in _BUILTINS:
        raise ValueError(f"unknown group representation {name!r}; choose from {sorted(_BUILTINS)}")
    return _BUILTINS[name](n)
