"""Quandles: finite tables with axiom checks, and free quandle terms.

Free-quandle computations use the conjugation model: a term is a group
word base^w = w^{-1} base w inside the free product F(x, n) * Z^n (or a
free group alone), with quandle operations a*b = b^{-1}ab and
a*~b = bab^{-1}.  Two terms are equal iff their bases match and their
conjugators differ by an element centralizing the base, which gives a
canonical form: strip from w a leading power of the base (free base) or a
leading syllable of the base's abelian factor (abelian base).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braids import BraidWord, Letter, Relator
from .groupwords import FREE, FreeProduct, GeneratorMap, GroupWord, abelian_factor, free_factor


# -- finite quandles -----------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    check: str
    passed: bool
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {"check": self.check, "pass": self.passed, "counterexample": self.counterexample}


class QuandleTable:
    """A finite quandle given by its operation table op[a][b] = a*b."""

    def __init__(self, op: Sequence[Sequence[int]]):
        self.size = len(op)
        self.op = tuple(tuple(row) for row in op)
        for row in self.op:
            if len(row) != self.size or any(not 0 <= v < self.size for v in row):
                raise ValueError("quandle table is not square over 0..size-1")
        # a *~ b inverts I_b: inv[a][b] is the c with c*b = a.
        inv = [[-1] * self.size for _ in range(self.size)]
        for b in range(self.size):
            seen = set()
            for a in range(self.size):
                c = self.op[a][b]
                seen.add(c)
                inv[c][b] = a
            if len(seen) != self.size:
                raise ValueError(f"right translation by {b} is not a bijection")
        self.inv = tuple(tuple(row) for row in inv)

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def mul_inv(self, a: int, b: int) -> int:
        return self.inv[a][b]

    def check_axioms(self) -> CheckReport:
        """Exhaustively verify idempotence, bijective right translations
        and right self-distributivity."""
        for a in range(self.size):
            if self.op[a][a] != a:
                return CheckReport(
                    "quandle-axioms", False, {"axiom": 1, "witness": {"a": a}}
                )
        for b in range(self.size):
            if len({self.op[a][b] for a in range(self.size)}) != self.size:
                return CheckReport(
                    "quandle-axioms", False, {"axiom": 2, "witness": {"b": b}}
                )
        for a in range(self.size):
            for b in range(self.size):
                for c in range(self.size):
                    lhs = self.op[self.op[a][b]][c]
                    rhs = self.op[self.op[a][c]][self.op[b][c]]
                    if lhs != rhs:
                        return CheckReport(
                            "quandle-axioms",
                            False,
                            {"axiom": 3, "witness": {"a": a, "b": b, "c": c}},
                        )
        return CheckReport("quandle-axioms", True)

    def is_trivial_subquandle(self, subset: Iterable[int]) -> bool:
        elems = list(subset)
        return all(self.op[a][b] == a for a in elems for b in elems)


def dihedral_quandle(m: int) -> QuandleTable:
    """The dihedral quandle on Z_m with a*b = 2b - a mod m."""
    return QuandleTable([[(2 * b - a) % m for b in range(m)] for a in range(m)])


def trivial_quandle(m: int) -> QuandleTable:
    return QuandleTable([[a] * m for a in range(m)])


# -- free quandle terms (conjugation model) ---------------------------------------


def phi2q_universe(n: int) -> FreeProduct:
    """Model universe for the free product of the rank-n free quandle with
    the n-element trivial quandle."""
    return FreeProduct((free_factor("x", n), abelian_factor("y", n)))


def free_quandle_universe(n: int) -> FreeProduct:
    return FreeProduct((free_factor("x", n),))


@dataclass(frozen=True)
class QuandleTerm:
    """A term base^conj in the conjugation model, kept in canonical form."""

    base: str
    conj: GroupWord

    @staticmethod
    def make(base: str, conj: GroupWord) -> QuandleTerm:
        universe = conj.universe
        idx, factor = universe.locate(base)
        syllables = conj.syllables
        if syllables and syllables[0][0] == idx:
            if factor.kind == FREE:
                first_run = syllables[0][1][0]
                if first_run[0] == base:
                    rest = syllables[0][1][1:]
                    trimmed = ((idx, rest),) + syllables[1:] if rest else syllables[1:]
                    syllables = GroupWord.from_syllables(universe, trimmed).syllables
            else:
                syllables = syllables[1:]
        return QuandleTerm(base, GroupWord(universe, syllables))

    @staticmethod
    def generator(universe: FreeProduct, name: str) -> QuandleTerm:
        universe.locate(name)
        return QuandleTerm(name, universe.identity())

    def as_group_word(self) -> GroupWord:
        universe = self.conj.universe
        return universe.gen(self.base).conj(self.conj)

    def mul(self, other: QuandleTerm, inverse: bool = False) -> QuandleTerm:
        """a*b = b^{-1}ab; a*~b = bab^{-1} (in the conjugation model)."""
        g = other.as_group_word()
        if inverse:
            g = g.inverse()
        return QuandleTerm.make(self.base, self.conj * g)

    def __str__(self) -> str:
        # A canonical term unfolds back into quandle syntax: conjugating by a
        # letter g^{+1} is * g, by g^{-1} is *~ g.
        text = self.base
        for name, exp in self.conj.letters():
            op = "*" if exp == 1 else "*~"
            text = f"{text} {op} {name}" if " " not in text else f"({text}) {op} {name}"
        return text


def q_mul(a: QuandleTerm, b: QuandleTerm, inverse: bool = False) -> QuandleTerm:
    return a.mul(b, inverse)


def parse_term(text: str, universe: FreeProduct) -> QuandleTerm:
    """Parse quandle expressions: ``x1 * x2``, ``x1 *~ y1``, left-associative,
    with parentheses."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse_expr():
        nonlocal pos
        value = parse_atom()
        while pos < len(tokens) and tokens[pos] in ("*", "*~"):
            op = tokens[pos]
            pos += 1
            rhs = parse_atom()
            value = value.mul(rhs, inverse=(op == "*~"))
        return value

    def parse_atom():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of term")
        token = tokens[pos]
        if token == "(":
            pos += 1
            value = parse_expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError("missing ')' in term")
            pos += 1
            return value
        pos += 1
        return QuandleTerm.generator(universe, token)

    value = parse_expr()
    if pos != len(tokens):
        raise ValueError(f"unexpected token {tokens[pos]!r} in term")
    return value


class QuandleRep:
    """A representation of VB_n by quandle automorphisms in the conjugation
    model, given per-letter by images of the model generators."""

    def __init__(self, name: str, n: int, universe: FreeProduct,
                 images: dict[Letter, dict[str, QuandleTerm]]):
        self.name = name
        self.n = n
        self.universe = universe
        self._images = images
        self._group_maps: dict[Letter, GeneratorMap] = {}

    def image(self, letter: Letter) -> dict[str, QuandleTerm]:
        kind, index, exp = letter
        if kind == "r":
            letter = (kind, index, 1)
        if letter not in self._images:
            raise ValueError(f"{self.name} has no image for letter {letter}")
        return self._images[letter]

    def _group_map(self, letter: Letter) -> GeneratorMap:
        kind, index, exp = letter
        if kind == "r":
            letter = (kind, index, 1)
        if letter not in self._group_maps:
            images = {name: term.as_group_word() for name, term in self.image(letter).items()}
            self._group_maps[letter] = GeneratorMap(self.universe, images, validate=False)
        return self._group_maps[letter]

    def apply_word(self, word: BraidWord, term: QuandleTerm) -> QuandleTerm:
        for letter in word.letters:
            images = self.image(letter)
            base_image = images.get(term.base, QuandleTerm.generator(self.universe, term.base))
            conj_image = self._group_map(letter).apply(term.conj)
            term = QuandleTerm.make(base_image.base, base_image.conj * conj_image)
        return term

    def word_images(self, word: BraidWord) -> dict[str, QuandleTerm]:
        """Canonical images of every model generator under a braid word."""
        return {
            name: self.apply_word(word, QuandleTerm.generator(self.universe, name))
            for name in self.universe.generators()
        }

    def failed_relators(self, relators: list[Relator]) -> list[Relator]:
        return [
            rel
            for rel in relators
            if self.word_images(rel.lhs) != self.word_images(rel.rhs)
        ]


def rep_phi2q(n: int) -> QuandleRep:
    """The action on the free product of the free quandle on x_1..x_n with
    the trivial quandle on y_1..y_n:

        sigma_i: x_i -> x_{i+1} * x_i,  x_{i+1} -> x_i,  y_i <-> y_{i+1};
        rho_i:   x_i -> x_{i+1} *~ y_i, x_{i+1} -> x_i * y_{i+1},
                 y_i <-> y_{i+1}.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    universe = phi2q_universe(n)
    term = lambda name: QuandleTerm.generator(universe, name)

    images: dict[Letter, dict[str, QuandleTerm]] = {}
    for i in range(1, n):
        xi, xj = term(f"x{i}"), term(f"x{i+1}")
        yi, yj = term(f"y{i}"), term(f"y{i+1}")
        swaps = {f"y{i}": yj, f"y{i+1}": yi}
        images[("s", i, 1)] = dict(swaps) | {f"x{i}": xj.mul(xi), f"x{i+1}": xi}
        images[("s", i, -1)] = dict(swaps) | {
            f"x{i}": xj,
            f"x{i+1}": xi.mul(xj, inverse=True),
        }
        images[("r", i, 1)] = dict(swaps) | {
            f"x{i}": xj.mul(yi, inverse=True),
            f"x{i+1}": xi.mul(yj),
        }
    return QuandleRep("phi_2q", n, universe, images)


def rep_fq_n_plus_1(n: int) -> QuandleRep:
    """The action on the free quandle with generators x_1..x_n and one extra
    generator y = x_{n+1}:

        sigma_i: x_i -> x_{i+1} * x_i, x_{i+1} -> x_i;
        rho_i:   x_i -> x_{i+1} *~ y,  x_{i+1} -> x_i * y;  y is fixed.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    universe = free_quandle_universe(n + 1)
    term = lambda name: QuandleTerm.generator(universe, name)
    y = term(f"x{n+1}")

    images: dict[Letter, dict[str, QuandleTerm]] = {}
    for i in range(1, n):
        xi, xj = term(f"x{i}"), term(f"x{i+1}")
        images[("s", i, 1)] = {f"x{i}": xj.mul(xi), f"x{i+1}": xi}
        images[("s", i, -1)] = {f"x{i}": xj, f"x{i+1}": xi.mul(xj, inverse=True)}
        images[("r", i, 1)] = {
            f"x{i}": xj.mul(y, inverse=True),
            f"x{i+1}": xi.mul(y),
        }
    return QuandleRep("fq_n_plus_1", n, universe, images)


_BUILTINS = {"phi_2q": rep_phi2q, "fq_n_plus_1": rep_fq_n_plus_1}


def builtin_quandle_rep(name: str, n: int) -> QuandleRep:
    if name not in _BUILTINS:
        raise ValueError(f"unknown quandle representation {name!r}; choose from {sorted(_BUILTINS)}")
    return _BUILTINS[name](n)
