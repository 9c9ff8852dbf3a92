"""Semilinear automorphisms of the rank-n free module over the Laurent ring.

An automorphism is a pair (perm, mat): the variable permutation acts on
the indices of t_i and q_i in every coefficient, then the matrix combines
basis vectors (row k is the image of e_k, vectors are coefficient rows).
Composition follows the right-action convention, so for f then g the
composite is (g.perm o f.perm, g.perm(f.mat) * g.mat).

Three representations are built in: the extended Gassner map on
Z[t_i^{±1}] (sigma only), its virtual extension on Z[t_i^{±1}, q_i^{±1}],
and the classical one-variable Burau matrices (where rho acts by the
coordinate swap coming from the twist pairing).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, Letter, Relator, lambda_generator, pure_generator
from .groupwords import Factor, FreeProduct, GroupWord, fox_derivative
from .groupreps import artin_rep
from .laurent import LaurentPoly, Universe, single_t, t_var, q_var

Matrix = tuple[tuple[LaurentPoly, ...], ...]


def _identity_matrix(n: int, universe: Universe) -> Matrix:
    one, zero = LaurentPoly.one(universe), LaurentPoly.zero(universe)
    return tuple(
        tuple(one if r == c else zero for c in range(n)) for r in range(n)
    )


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    zero = LaurentPoly.zero(a[0][0].universe)
    return tuple(
        tuple(sum((a[r][k] * b[k][c] for k in range(n)), start=zero) for c in range(n))
        for r in range(n)
    )


def _mat_perm(mat: Matrix, perm: tuple[int, ...]) -> Matrix:
    mapping = {i + 1: perm[i] for i in range(len(perm))}
    return tuple(tuple(entry.permute_indices(mapping) for entry in row) for row in mat)


@dataclass(frozen=True)
class SemilinearAuto:
    n: int
    universe: Universe
    perm: tuple[int, ...]
    mat: Matrix

    @staticmethod
    def identity(n: int, universe: Universe) -> SemilinearAuto:
        return SemilinearAuto(
            n, universe, tuple(range(1, n + 1)), _identity_matrix(n, universe)
        )

    @staticmethod
    def linear(n: int, universe: Universe, mat: Matrix) -> SemilinearAuto:
        return SemilinearAuto(n, universe, tuple(range(1, n + 1)), mat)

    def compose(self, other: SemilinearAuto) -> SemilinearAuto:
        """The composite 'self first, then other'."""
        if self.n != other.n or self.universe != other.universe:
            raise ValueError("cannot compose automorphisms of different modules")
        perm = tuple(other.perm[p - 1] for p in self.perm)
        mat = _mat_mul(_mat_perm(self.mat, other.perm), other.mat)
        return SemilinearAuto(self.n, self.universe, perm, mat)

    def apply(self, vector: tuple[LaurentPoly, ...]) -> tuple[LaurentPoly, ...]:
        """Image of a coefficient row: permute variables in each coefficient,
        then combine the matrix rows."""
        mapping = {i + 1: self.perm[i] for i in range(self.n)}
        permuted = [entry.permute_indices(mapping) for entry in vector]
        return tuple(
            sum(
                (permuted[k] * self.mat[k][c] for k in range(self.n)),
                start=LaurentPoly.zero(self.universe),
            )
            for c in range(self.n)
        )

    def is_linear(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def is_upper_triangular(self) -> bool:
        return all(
            self.mat[r][c].is_zero() for r in range(self.n) for c in range(r)
        )

    def is_identity(self) -> bool:
        return self.is_linear() and self.mat == _identity_matrix(self.n, self.universe)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "perm": list(self.perm),
            "rows": [[entry.to_json() for entry in row] for row in self.mat],
        }

    @staticmethod
    def from_json(data: dict, universe: Universe) -> SemilinearAuto:
        n = data["n"]
        mat = tuple(
            tuple(LaurentPoly.from_json(entry, universe) for entry in row)
            for row in data["rows"]
        )
        return SemilinearAuto(n, universe, tuple(data["perm"]), mat)

    def render(self) -> str:
        lines = []
        if not self.is_linear():
            lines.append(f"variable permutation: {list(self.perm)}")
        for r in range(self.n):
            terms = [
                f"({self.mat[r][c]})*e{c + 1}"
                for c in range(self.n)
                if not self.mat[r][c].is_zero()
            ]
            lines.append(f"e{r + 1} |-> " + (" + ".join(terms) if terms else "0"))
        return "\n".join(lines)


@dataclass(frozen=True)
class WordImage:
    word: BraidWord
    auto: SemilinearAuto

    @property
    def is_linear(self) -> bool:
        return self.auto.is_linear()

    @property
    def is_upper_triangular(self) -> bool:
        return self.auto.is_upper_triangular()


class LinearRep:
    """A representation of B_n or VB_n by semilinear automorphisms."""

    def __init__(self, name: str, n: int, universe: Universe, virtual: bool,
                 images: dict[Letter, SemilinearAuto]):
        self.name = name
        self.n = n
        self.universe = universe
        self.virtual = virtual
        self._images = images

    def generator(self, letter: Letter) -> SemilinearAuto:
        kind, index, exp = letter
        if kind == "r":
            letter = (kind, index, 1)
        if letter not in self._images:
            raise ValueError(f"{self.name} has no image for letter {letter}")
        return self._images[letter]

    def word_auto(self, word: BraidWord) -> SemilinearAuto:
        if word.n != self.n:
            raise ValueError(f"word is on {word.n} strands but the representation has n={self.n}")
        result = SemilinearAuto.identity(self.n, self.universe)
        for letter in word.letters:
            result = result.compose(self.generator(letter))
        return result

    def evaluate(self, word: BraidWord) -> WordImage:
        return WordImage(word, self.word_auto(word))

    def failed_relators(self, relators: list[Relator]) -> list[Relator]:
        return [
            rel for rel in relators if self.word_auto(rel.lhs) != self.word_auto(rel.rhs)
        ]


def _swap_perm(n: int, j: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    perm[j - 1], perm[j] = perm[j], perm[j - 1]
    return tuple(perm)


def _multi_images(n: int, universe: Universe, with_rho: bool) -> dict[Letter, SemilinearAuto]:
    one, zero = LaurentPoly.one(universe), LaurentPoly.zero(universe)
    images: dict[Letter, SemilinearAuto] = {}
    for j in range(1, n):
        tj, tj1 = t_var(universe, j), t_var(universe, j + 1)
        perm = _swap_perm(n, j)

        fwd = [[one if r == c else zero for c in range(n)] for r in range(n)]
        fwd[j - 1][j - 1] = one - tj1
        fwd[j - 1][j] = tj
        fwd[j][j - 1] = one
        fwd[j][j] = zero
        images[("s", j, 1)] = SemilinearAuto(n, universe, perm, tuple(map(tuple, fwd)))

        back = [[one if r == c else zero for c in range(n)] for r in range(n)]
        back[j - 1][j - 1] = zero
        back[j - 1][j] = one
        back[j][j - 1] = tj1.unit_inverse()
        back[j][j] = tj1.unit_inverse() * (tj - 1)
        images[("s", j, -1)] = SemilinearAuto(n, universe, perm, tuple(map(tuple, back)))

        if with_rho:
            qj, qj1 = q_var(universe, j), q_var(universe, j + 1)
            flip = [[one if r == c else zero for c in range(n)] for r in range(n)]
            flip[j - 1][j - 1] = zero
            flip[j - 1][j] = qj
            flip[j][j - 1] = qj1.unit_inverse()
            flip[j][j] = zero
            images[("r", j, 1)] = SemilinearAuto(n, universe, perm, tuple(map(tuple, flip)))
    return images


def phi_2b_rep(n: int) -> LinearRep:
    """sigma_j: e_j -> (1 - t_{j+1}) e_j + t_j e_{j+1}, e_{j+1} -> e_j,
    with the variable swap t_j <-> t_{j+1} (and q_j <-> q_{j+1}); defined
    on braid words only."""
    if n < 2:
        raise ValueError("need n >= 2")
    universe = Universe.multi(n)
    return LinearRep("phi2b", n, universe, False, _multi_images(n, universe, with_rho=False))


def phi_3b_rep(n: int) -> LinearRep:
    """The virtual extension: sigma_j as in the t-variable map, and
    rho_j: e_j -> q_j e_{j+1}, e_{j+1} -> q_{j+1}^{-1} e_j with the same
    index swap on both variable families."""
    if n < 2:
        raise ValueError("need n >= 2")
    universe = Universe.multi(n)
    return LinearRep("phi3b", n, universe, True, _multi_images(n, universe, with_rho=True))


def burau_rep(n: int) -> LinearRep:
    """The classical one-variable Burau matrices
    I ⊕ ((1-t, t), (1, 0)) ⊕ I; rho_j acts by the coordinate swap."""
    if n < 2:
        raise ValueError("need n >= 2")
    universe = Universe.single_t()
    one, zero = LaurentPoly.one(universe), LaurentPoly.zero(universe)
    t = single_t(universe)
    identity_perm = tuple(range(1, n + 1))
    images: dict[Letter, SemilinearAuto] = {}
    for j in range(1, n):
        fwd = [[one if r == c else zero for c in range(n)] for r in range(n)]
        fwd[j - 1][j - 1] = one - t
        fwd[j - 1][j] = t
        fwd[j][j - 1] = one
        fwd[j][j] = zero
        images[("s", j, 1)] = SemilinearAuto(n, universe, identity_perm, tuple(map(tuple, fwd)))

        back = [[one if r == c else zero for c in range(n)] for r in range(n)]
        back[j - 1][j - 1] = zero
        back[j - 1][j] = one
        back[j][j - 1] = t.unit_inverse()
        back[j][j] = t.unit_inverse() * (t - 1)
        images[("s", j, -1)] = SemilinearAuto(n, universe, identity_perm, tuple(map(tuple, back)))

        flip = [[one if r == c else zero for c in range(n)] for r in range(n)]
        flip[j - 1][j - 1] = zero
        flip[j - 1][j] = one
        flip[j][j - 1] = one
        flip[j][j] = zero
        images[("r", j, 1)] = SemilinearAuto(n, universe, identity_perm, tuple(map(tuple, flip)))
    return LinearRep("burau", n, universe, True, images)


_BUILTINS = {"phi2b": phi_2b_rep, "phi3b": phi_3b_rep, "burau": burau_rep}


def builtin_linear_rep(name: str, n: int) -> LinearRep:
    if name not in _BUILTINS:
        raise ValueError(f"unknown linear representation {name!r}; choose from {sorted(_BUILTINS)}")
    return _BUILTINS[name](n)


# -- the closed form and the Fox-calculus route ------------------------------------


def gassner_matrix(i: int, j: int, n: int, universe: Universe | None = None) -> Matrix:
    """The closed-form image of the pure-braid generator a_{i,j}: rows k < i
    and k > j are untouched, and

        row i:           (1 - t_i + t_i t_j) e_i + t_i (1 - t_i) e_j,
        rows i < k < j:  (1-t_k)(1-t_j) e_i + e_k + (1-t_k)(t_i - 1) e_j,
        row j:           (1 - t_j) e_i + t_i e_j.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if universe is None:
        universe = Universe.multi(n)
    one, zero = LaurentPoly.one(universe), LaurentPoly.zero(universe)
    ti, tj = t_var(universe, i), t_var(universe, j)
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    rows[i - 1][i - 1] = one - ti + ti * tj
    rows[i - 1][j - 1] = ti * (one - ti)
    for k in range(i + 1, j):
        tk = t_var(universe, k)
        rows[k - 1][i - 1] = (one - tk) * (one - tj)
        rows[k - 1][j - 1] = (one - tk) * (ti - 1)
    rows[j - 1][i - 1] = one - tj
    rows[j - 1][j - 1] = ti
    return tuple(map(tuple, rows))


def fox_gassner_matrix(i: int, j: int, n: int, universe: Universe | None = None) -> Matrix:
    """The same matrix computed independently: apply the Artin action to
    a_{i,j}, then take the abelianized Fox Jacobian of the generator images."""
    if universe is None:
        universe = Universe.multi(n)
    word = pure_generator(i, j, n)
    artin = artin_rep(n)
    word_map = artin.word_map(word)
    return tuple(
        tuple(
            fox_derivative(word_map.images[f"x{r}"], s, universe)
            for s in range(1, n + 1)
        )
        for r in range(1, n + 1)
    )


# -- specializations --------------------------------------------------------------


def specialize_auto(auto: SemilinearAuto, mode: str) -> SemilinearAuto:
    """mode "t": identify all t_i with the single variable t (the permutation
    becomes irrelevant and is dropped); mode "q1": send every q_i to 1,
    keeping everything else."""
    if mode == "t":
        target = Universe.single_t()
        t = single_t(target)
        images = {("t", i): t for i in range(1, auto.n + 1)}
        mat = tuple(
            tuple(entry.specialize(images) for entry in row) for row in auto.mat
        )
        return SemilinearAuto.linear(auto.n, target, mat)
    if mode == "q1":
        one = LaurentPoly.one(auto.universe)
        images = {("q", i): one for i in range(1, auto.n + 1)}
        mat = tuple(
            tuple(entry.specialize(images) for entry in row) for row in auto.mat
        )
        return SemilinearAuto(auto.n, auto.universe, auto.perm, mat)
    raise ValueError(f"unknown specialization mode {mode!r}; choose 't' or 'q1'")


# -- the kernel witness --------------------------------------------------------------


@dataclass(frozen=True)
class KernelWitness:
    """A fixed nontrivial element of the kernel of the virtual extension on
    three strands: an iterated commutator of A = l_{1,2} and B = l_{1,3}
    lying in the third derived subgroup of the free group they generate.
    Freeness certifies the word is nontrivial; upper-triangularity of the
    generator images forces its matrix to be the identity."""

    word: GroupWord
    reduced_length: int
    braid_word: BraidWord
    image: SemilinearAuto

    @property
    def passed(self) -> bool:
        return self.reduced_length > 0 and self.image.is_identity()


def _commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    return u.inverse() * v.inverse() * u * v


def kernel_witness() -> KernelWitness:
    free_ab = FreeProduct((Factor("free", ("A", "B")),))
    a, b = free_ab.gen("A"), free_ab.gen("B")
    c1 = _commutator(_commutator(a, b), _commutator(a.inverse(), b.inverse()))
    c2 = _commutator(_commutator(a, b.inverse()), _commutator(a.inverse(), b))
    word = _commutator(c1, c2)

    lam = {"A": lambda_generator(1, 2), "B": lambda_generator(1, 3)}
    braid = BraidWord.identity(3)
    for name, exp in word.letters():
        braid = braid * (lam[name] if exp == 1 else lam[name].inverse())

    image = phi_3b_rep(3).word_auto(braid)
    return KernelWitness(word, word.length(), braid, image)
