"""Normal forms in free products of free and free-abelian groups.

An element is an alternating sequence of nontrivial syllables, each from a
single factor: free syllables are reduced runs of generator powers,
abelian syllables are nonzero exponent vectors.  Equality of normal forms
is group equality, which is what makes automorphism audits decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .laurent import LaurentPoly, Universe, t_var

FREE = "free"
ABELIAN = "abelian"


@dataclass(frozen=True)
class Factor:
    kind: str
    gens: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (FREE, ABELIAN):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("factor generators must be distinct")


def free_factor(symbol: str, rank: int) -> Factor:
    return Factor(FREE, tuple(f"{symbol}{i}" for i in range(1, rank + 1)))


def abelian_factor(symbol: str, rank: int) -> Factor:
    return Factor(ABELIAN, tuple(f"{symbol}{i}" for i in range(1, rank + 1)))


@dataclass(frozen=True)
class FreeProduct:
    """A free product of named factors; the universe every word lives in."""

    factors: tuple[Factor, ...]

    def __post_init__(self):
        seen: set[str] = set()
        for factor in self.factors:
            for g in factor.gens:
                if g in seen:
                    raise ValueError(f"generator name {g!r} appears in two factors")
                seen.add(g)

    def locate(self, name: str) -> tuple[int, Factor]:
        for idx, factor in enumerate(self.factors):
            if name in factor.gens:
                return idx, factor
        raise ValueError(f"unknown generator {name!r}")

    def generators(self) -> list[str]:
        return [g for factor in self.factors for g in factor.gens]

    def gen(self, name: str, exp: int = 1) -> GroupWord:
        self.locate(name)
        return GroupWord.from_letters(self, [(name, exp)])

    def identity(self) -> GroupWord:
        return GroupWord(self, ())


# A free syllable is (factor_index, (("x1", 2), ("x2", -1), ...)) with
# nonzero exponents and adjacent names distinct; an abelian syllable is
# (factor_index, (("u1", 2), ("v0", -1), ...)) sorted in generator order.
Syllable = tuple[int, tuple[tuple[str, int], ...]]


def _merge_free(a: tuple[tuple[str, int], ...], b: tuple[tuple[str, int], ...]):
    runs = list(a)
    pending = list(b)
    while runs and pending and runs[-1][0] == pending[0][0]:
        name, e1 = runs.pop()
        _, e2 = pending.pop(0)
        if e1 + e2:
            runs.append((name, e1 + e2))
            break
    return tuple(runs + pending)


def _merge_abelian(factor: Factor, a, b) -> tuple[tuple[str, int], ...]:
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple((g, exps[g]) for g in factor.gens if exps.get(g, 0) != 0)


@dataclass(frozen=True)
class GroupWord:
    universe: FreeProduct
    syllables: tuple[Syllable, ...]

    @staticmethod
    def from_letters(universe: FreeProduct, letters: Iterable[tuple[str, int]]) -> GroupWord:
        """Normalize a flat sequence of (generator, exponent) letters."""
        syllables: list[Syllable] = []
        for name, exp in letters:
            if exp == 0:
                continue
            idx, factor = universe.locate(name)
            _push(universe, syllables, (idx, ((name, exp),)))
        return GroupWord(universe, tuple(syllables))

    @staticmethod
    def from_syllables(universe: FreeProduct, raw: Iterable[Syllable]) -> GroupWord:
        syllables: list[Syllable] = []
        for syl in raw:
            _push(universe, syllables, syl)
        return GroupWord(universe, tuple(syllables))

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: GroupWord) -> GroupWord:
        if self.universe != other.universe:
            raise ValueError("cannot multiply words over different universes")
        syllables = list(self.syllables)
        for syl in other.syllables:
            _push(self.universe, syllables, syl)
        return GroupWord(self.universe, tuple(syllables))

    def inverse(self) -> GroupWord:
        inv: list[Syllable] = []
        for idx, body in reversed(self.syllables):
            inv.append((idx, tuple((name, -e) for name, e in reversed(body))))
        # Syllable-local inversion preserves normal form except for abelian
        # generator ordering, which from_syllables restores.
        return GroupWord.from_syllables(self.universe, inv)

    def __pow__(self, n: int) -> GroupWord:
        if n < 0:
            return self.inverse() ** (-n)
        result = self.universe.identity()
        for _ in range(n):
            result = result * self
        return result

    def conj(self, by: GroupWord) -> GroupWord:
        """The conjugate by^{-1} * self * by."""
        return by.inverse() * self * by

    def letters(self) -> list[tuple[str, int]]:
        """Flatten to single-exponent letters (name, ±1)."""
        out: list[tuple[str, int]] = []
        for _, body in self.syllables:
            for name, e in body:
                unit = 1 if e > 0 else -1
                out.extend((name, unit) for _ in range(abs(e)))
        return out

    def length(self) -> int:
        return sum(abs(e) for _, body in self.syllables for _, e in body)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for _, body in self.syllables:
            for name, e in body:
                parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts)

    @staticmethod
    def parse(text: str, universe: FreeProduct) -> GroupWord:
        """Parse words like ``x1 x2^-1 u3 v0``; ``1`` is the identity."""
        stripped = text.strip()
        if stripped in ("", "1"):
            return universe.identity()
        letters = []
        for token in stripped.split():
            body, caret, exp_text = token.partition("^")
            exp = 1
            if caret:
                try:
                    exp = int(exp_text)
                except ValueError:
                    raise ValueError(f"bad exponent in {token!r}") from None
            letters.append((body, exp))
        return GroupWord.from_letters(universe, letters)


def _push(universe: FreeProduct, syllables: list[Syllable], syl: Syllable) -> None:
    idx, body = syl
    if not body:
        return
    if syllables and syllables[-1][0] == idx:
        _, top = syllables.pop()
        factor = universe.factors[idx]
        if factor.kind == FREE:
            merged = _merge_free(top, body)
        else:
            merged = _merge_abelian(factor, top, body)
        if merged:
            syllables.append((idx, merged))
    else:
        factor = universe.factors[idx]
        if factor.kind == ABELIAN:
            body = _merge_abelian(factor, (), body)
            if not body:
                return
        syllables.append((idx, body))


class GeneratorMap:
    """An endomorphism given by images of the universe generators.

    Unlisted generators are fixed.  For abelian factors the images of the
    factor's generators must pairwise commute; this is verified when
    ``validate=True`` (compositions of valid maps skip the check).
    """

    def __init__(self, universe: FreeProduct, images: Mapping[str, GroupWord], validate: bool = True):
        self.universe = universe
        self.images: dict[str, GroupWord] = {}
        for name in universe.generators():
            self.images[name] = images.get(name, universe.gen(name))
        for name in images:
            universe.locate(name)
        if validate:
            self._check_abelian_images()

    def _check_abelian_images(self) -> None:
        for factor in self.universe.factors:
            if factor.kind != ABELIAN:
                continue
            for i, g in enumerate(factor.gens):
                for h in factor.gens[i + 1 :]:
                    a, b = self.images[g], self.images[h]
                    if a * b != b * a:
                        raise ValueError(
                            f"images of commuting generators {g}, {h} do not commute"
                        )

    @staticmethod
    def identity(universe: FreeProduct) -> GeneratorMap:
        return GeneratorMap(universe, {}, validate=False)

    def apply(self, word: GroupWord) -> GroupWord:
        if word.universe != self.universe:
            raise ValueError("word universe does not match the map's universe")
        result = self.universe.identity()
        for name, exp in word.letters():
            image = self.images[name]
            result = result * (image if exp == 1 else image.inverse())
        return result

    def compose(self, other: GeneratorMap) -> GeneratorMap:
        """The map 'apply self first, then other' (right-action order)."""
        if self.universe != other.universe:
            raise ValueError("cannot compose maps over different universes")
        images = {name: other.apply(img) for name, img in self.images.items()}
        return GeneratorMap(self.universe, images, validate=False)

    def is_identity(self) -> bool:
        return all(
            img == self.universe.gen(name) for name, img in self.images.items()
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorMap):
            return NotImplemented
        return self.universe == other.universe and self.images == other.images

    def __repr__(self) -> str:
        moved = {n: str(w) for n, w in self.images.items() if w != self.universe.gen(n)}
        return f"GeneratorMap({moved})"


# -- Fox calculus ------------------------------------------------------------


def _free_letters(word: GroupWord, factor_index: int) -> list[tuple[int, str, int]]:
    letters = []
    for idx, body in word.syllables:
        if idx != factor_index:
            raise ValueError("word must lie in a single free factor")
        for name, e in body:
            unit = 1 if e > 0 else -1
            letters.extend((idx, name, unit) for _ in range(abs(e)))
    return letters


def _free_factor_index(word: GroupWord) -> int:
    """The index of the unique free factor containing the word (default 0)."""
    indices = {idx for idx, _ in word.syllables}
    if not indices:
        for idx, factor in enumerate(word.universe.factors):
            if factor.kind == FREE:
                return idx
        raise ValueError("universe has no free factor")
    if len(indices) > 1:
        raise ValueError("word must lie in a single free factor")
    (idx,) = indices
    if word.universe.factors[idx].kind != FREE:
        raise ValueError("word must lie in a free factor")
    return idx


def abelianized(word: GroupWord, universe: Universe) -> LaurentPoly:
    """Abelianization of a free-factor word, sending the k-th generator to t_k."""
    idx = _free_factor_index(word)
    gens = word.universe.factors[idx].gens
    exps: dict[str, int] = {}
    for _, name, unit in _free_letters(word, idx):
        exps[name] = exps.get(name, 0) + unit
    result = LaurentPoly.one(universe)
    for name, e in exps.items():
        result = result * LaurentPoly.var(universe, ("t", gens.index(name) + 1), e)
    return result


def fox_derivative(word: GroupWord, i: int, universe: Universe | None = None) -> LaurentPoly:
    """Abelianized Fox derivative of a free-factor word by its i-th generator.

    Rules: d(x_i)/dx_i = 1, d(x_j)/dx_i = 0 for j != i,
    d(x_i^{-1})/dx_i = -t_i^{-1}, and d(uv)/dx_i = du/dx_i + u^{ab} dv/dx_i.
    """
    idx = _free_factor_index(word)
    gens = word.universe.factors[idx].gens
    if not 1 <= i <= len(gens):
        raise ValueError(f"generator index {i} out of range")
    if universe is None:
        universe = Universe.multi(len(gens))
    target = gens[i - 1]
    result = LaurentPoly.zero(universe)
    prefix = LaurentPoly.one(universe)
    for _, name, unit in _free_letters(word, idx):
        k = gens.index(name) + 1
        tk = t_var(universe, k)
        if name == target:
            contribution = (
                LaurentPoly.one(universe) if unit == 1 else -tk.unit_inverse()
            )
            result = result + prefix * contribution
        prefix = prefix * (tk if unit == 1 else tk.unit_inverse())
    return result
