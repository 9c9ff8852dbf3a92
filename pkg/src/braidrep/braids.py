"""Words in braid and virtual braid group generators.

A word on n strands is a sequence of letters sigma_i^{±1} (written ``s``)
and rho_i (written ``r``); rho letters are involutions, so they carry no
exponent.  Relator catalogs, the permutation quotient, the pure-braid
generators a_{i,j} and the lambda generators of the pure virtual braid
group on three strands all live here.
"""

from __future__ import annotations

from dataclasses import dataclass

# (kind, index, exp): kind is "s" or "r", exp is ±1 and always +1 for "r".
Letter = tuple[str, int, int]

Permutation = tuple[int, ...]  # images of 1..n, 1-based values


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be >= 2, got {self.n}")
        for kind, index, exp in self.letters:
            if kind not in ("s", "r"):
                raise ValueError(f"unknown generator kind {kind!r}")
            if not 1 <= index <= self.n - 1:
                raise ValueError(f"generator index {index} out of range for n={self.n}")
            if exp not in (1, -1) or (kind == "r" and exp != 1):
                raise ValueError(f"bad exponent {exp} for {kind}{index}")

    @staticmethod
    def identity(n: int) -> BraidWord:
        return BraidWord(n, ())

    @staticmethod
    def from_letters(n: int, letters) -> BraidWord:
        """Build a word, folding rho exponents: r_i^{-1} is stored as r_i."""
        normalized = []
        for kind, index, exp in letters:
            if kind == "r":
                exp = 1
            normalized.append((kind, index, exp))
        return BraidWord(n, tuple(normalized))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ValueError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(
            self.n,
            tuple((kind, index, -exp if kind == "s" else 1) for kind, index, exp in reversed(self.letters)),
        )

    def __len__(self) -> int:
        return len(self.letters)

    def reduce(self) -> BraidWord:
        """Freely reduce: cancel adjacent s_i s_i^{-1} pairs and r_i r_i pairs."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack:
                kind, index, exp = letter
                tkind, tindex, texp = stack[-1]
                if kind == tkind and index == tindex and (
                    kind == "r" or exp == -texp
                ):
                    stack.pop()
                    continue
            stack.append(letter)
        return BraidWord(self.n, tuple(stack))

    def permutation(self) -> Permutation:
        """Image under the quotient sending both s_i and r_i to (i, i+1).

        The composite follows the right-action convention: the first letter
        of the word acts first.
        """
        perm = list(range(1, self.n + 1))
        for _, index, _ in self.letters:
            for pos in range(self.n):
                if perm[pos] == index:
                    perm[pos] = index + 1
                elif perm[pos] == index + 1:
                    perm[pos] = index
        return tuple(perm)

    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for kind, index, exp in self.letters:
            parts.append(f"{kind}{index}" if exp == 1 else f"{kind}{index}^{exp}")
        return " ".join(parts)

    @staticmethod
    def parse(text: str, n: int) -> BraidWord:
        """Parse words like ``s1 s2^-1 r1``; ``1`` denotes the empty word."""
        letters: list[Letter] = []
        stripped = text.strip()
        if stripped in ("", "1"):
            return BraidWord.identity(n)
        for token in stripped.split():
            body, caret, exp_text = token.partition("^")
            if len(body) < 2 or body[0] not in ("s", "r") or not body[1:].isdigit():
                raise ValueError(f"bad braid letter {token!r}")
            kind, index = body[0], int(body[1:])
            exp = 1
            if caret:
                try:
                    exp = int(exp_text)
                except ValueError:
                    raise ValueError(f"bad exponent in {token!r}") from None
            if exp == 0:
                continue
            unit = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                letters.append((kind, index, unit))
        return BraidWord.from_letters(n, letters)


def sigma(n: int, i: int, exp: int = 1) -> BraidWord:
    return BraidWord(n, ((("s", i, exp)),))


def rho(n: int, i: int) -> BraidWord:
    return BraidWord(n, ((("r", i, 1)),))


@dataclass(frozen=True)
class Relator:
    """A defining relation lhs = rhs, tagged by its family."""

    lhs: BraidWord
    rhs: BraidWord
    tag: str

    def __str__(self) -> str:
        return f"[{self.tag}] {self.lhs} = {self.rhs}"


def relator_catalog(n: int, virtual: bool) -> list[Relator]:
    """All defining relators of B_n (virtual=False) or VB_n (virtual=True).

    Families: b1 braid relations, b2 distant sigma commutation, vb3/vb4
    the same for rho, vb5 rho involutivity, vb6 the mixed relation
    r_{i+1} s_i r_{i+1} = r_i s_{i+1} r_i, vb7 distant mixed commutation.
    """
    if n < 2:
        raise ValueError(f"relator catalog needs n >= 2, got {n}")

    def word(spec: list[tuple[str, int, int]]) -> BraidWord:
        return BraidWord(n, tuple(spec))

    relators: list[Relator] = []
    for i in range(1, n - 1):
        relators.append(
            Relator(
                word([("s", i, 1), ("s", i + 1, 1), ("s", i, 1)]),
                word([("s", i + 1, 1), ("s", i, 1), ("s", i + 1, 1)]),
                "b1",
            )
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            relators.append(
                Relator(
                    word([("s", i, 1), ("s", j, 1)]),
                    word([("s", j, 1), ("s", i, 1)]),
                    "b2",
                )
            )
    if not virtual:
        return relators

    for i in range(1, n - 1):
        relators.append(
            Relator(
                word([("r", i, 1), ("r", i + 1, 1), ("r", i, 1)]),
                word([("r", i + 1, 1), ("r", i, 1), ("r", i + 1, 1)]),
                "vb3",
            )
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            relators.append(
                Relator(
                    word([("r", i, 1), ("r", j, 1)]),
                    word([("r", j, 1), ("r", i, 1)]),
                    "vb4",
                )
            )
    for i in range(1, n):
        relators.append(Relator(word([("r", i, 1), ("r", i, 1)]), BraidWord.identity(n), "vb5"))
    for i in range(1, n - 1):
        relators.append(
            Relator(
                word([("r", i + 1, 1), ("s", i, 1), ("r", i + 1, 1)]),
                word([("r", i, 1), ("s", i + 1, 1), ("r", i, 1)]),
                "vb6",
            )
        )
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                relators.append(
                    Relator(
                        word([("s", i, 1), ("r", j, 1)]),
                        word([("r", j, 1), ("s", i, 1)]),
                        "vb7",
                    )
                )
    return relators


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """The pure-braid generator s_{j-1}..s_{i+1} s_i^2 s_{i+1}^{-1}..s_{j-1}^{-1}."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    letters: list[Letter] = [("s", k, 1) for k in range(j - 1, i, -1)]
    letters += [("s", i, 1), ("s", i, 1)]
    letters += [("s", k, -1) for k in range(i + 1, j)]
    return BraidWord(n, tuple(letters))


def lambda_generator(i: int, j: int) -> BraidWord:
    """Generators l_{1,2} = r1 s1^{-1}, l_{1,3} = r2 l_{1,2} r2, l_{2,3} = r2 s2^{-1}
    of the positive part of the pure virtual braid group on three strands."""
    words = {
        (1, 2): [("r", 1, 1), ("s", 1, -1)],
        (1, 3): [("r", 2, 1), ("r", 1, 1), ("s", 1, -1), ("r", 2, 1)],
        (2, 3): [("r", 2, 1), ("s", 2, -1)],
    }
    if (i, j) not in words:
        raise ValueError(f"no lambda generator for pair ({i}, {j})")
    return BraidWord(3, tuple(words[(i, j)]))
