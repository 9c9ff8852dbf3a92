"""Exact Laurent polynomial arithmetic over the integers.

Polynomials live in Z[t1^{±1},..,tn^{±1}, q1^{±1},..,qn^{±1}] (a "multi"
universe of size n) or in Z[t^{±1}] (the "single" universe).  Coefficients
are Python ints, so no overflow is possible; equality is structural
equality of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

# A variable is a (family, index) pair: ("t", 3) is t3, ("q", 1) is q1 and
# ("t", 0) is the single unindexed t of the one-variable universe.
VarId = tuple[str, int]

_FAMILY_RANK = {"t": 0, "q": 1}

# A monomial maps variables to nonzero exponents, stored as a tuple sorted
# by (family, index) so it can key a dict.
Monomial = tuple[tuple[VarId, int], ...]

_ONE_MONO: Monomial = ()


class UniverseMismatch(ValueError):
    """Raised when operands were declared over different variable universes."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Universe:
    """The set of variables a computation session is allowed to use."""

    kind: str  # "multi" or "single"
    n: int

    @staticmethod
    def multi(n: int) -> Universe:
        if n < 1:
            raise ValueError(f"universe size must be >= 1, got {n}")
        return Universe("multi", n)

    @staticmethod
    def single_t() -> Universe:
        return Universe("single", 1)

    def contains(self, var: VarId) -> bool:
        family, index = var
        if self.kind == "single":
            return var == ("t", 0)
        return family in ("t", "q") and 1 <= index <= self.n

    def check_var(self, var: VarId) -> None:
        if not self.contains(var):
            raise ValueError(f"variable {var_name(var)} is not in {self}")

    def __str__(self) -> str:
        if self.kind == "single":
            return "Z[t^±1]"
        return f"Z[t1..t{self.n}, q1..q{self.n}]^±1"


def var_name(var: VarId) -> str:
    family, index = var
    return family if index == 0 else f"{family}{index}"


def parse_var_name(name: str) -> VarId:
    if not name or name[0] not in ("t", "q"):
        raise ValueError(f"unknown variable {name!r}")
    if name in ("t", "q"):
        if name == "q":
            raise ValueError("the single-variable universe has no q")
        return ("t", 0)
    digits = name[1:]
    if not digits.isdigit() or digits[0] == "0":
        raise ValueError(f"unknown variable {name!r}")
    return (name[0], int(digits))


def _mono_sort_key(item: tuple[VarId, int]):
    (family, index), _ = item
    return (_FAMILY_RANK[family], index)


def _make_mono(exps: Mapping[VarId, int]) -> Monomial:
    return tuple(sorted(((v, e) for v, e in exps.items() if e != 0), key=_mono_sort_key))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        new = exps.get(v, 0) + e
        if new:
            exps[v] = new
        else:
            del exps[v]
    return _make_mono(exps)


class LaurentPoly:
    """An element of the Laurent polynomial ring over a fixed universe.

    Supports +, -, * with other polynomials of the same universe and with
    plain ints; ** with integer exponents (negative ones only for units).
    """

    __slots__ = ("universe", "terms")

    def __init__(self, universe: Universe, terms: Mapping[Monomial, int]):
        self.universe = universe
        self.terms: dict[Monomial, int] = {m: c for m, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(universe: Universe) -> LaurentPoly:
        return LaurentPoly(universe, {})

    @staticmethod
    def const(universe: Universe, c: int) -> LaurentPoly:
        return LaurentPoly(universe, {_ONE_MONO: c})

    @staticmethod
    def one(universe: Universe) -> LaurentPoly:
        return LaurentPoly.const(universe, 1)

    @staticmethod
    def var(universe: Universe, var: VarId, exp: int = 1) -> LaurentPoly:
        universe.check_var(var)
        if exp == 0:
            return LaurentPoly.one(universe)
        return LaurentPoly(universe, {((var, exp),): 1})

    @staticmethod
    def monomial(universe: Universe, coeff: int, exps: Mapping[VarId, int]) -> LaurentPoly:
        for v in exps:
            universe.check_var(v)
        return LaurentPoly(universe, {_make_mono(exps): coeff})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.const(self.universe, other)
        if isinstance(other, LaurentPoly):
            if other.universe != self.universe:
                raise UniverseMismatch(
                    f"cannot combine polynomials over {self.universe} and {other.universe}"
                )
            return other
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return LaurentPoly(self.universe, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.universe, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return LaurentPoly(self.universe, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = LaurentPoly.one(self.universe)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.universe, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self.terms.items())))

    # -- predicates and units ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_ONE_MONO: 1}

    def is_unit(self) -> bool:
        """True iff this is a single monomial with coefficient ±1."""
        if len(self.terms) != 1:
            return False
        (coeff,) = self.terms.values()
        return coeff in (1, -1)

    def unit_inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        ((mono, coeff),) = self.terms.items()
        return LaurentPoly(self.universe, {tuple((v, -e) for v, e in mono): coeff})

    # -- substitution -------------------------------------------------------

    def specialize(self, images: Mapping[VarId, LaurentPoly]) -> LaurentPoly:
        """Ring-homomorphic substitution of variables.

        Unmapped variables pass through unchanged (they must exist in the
        target universe).  Substituting a non-unit for a variable that
        occurs with a negative exponent raises ValueError.
        """
        if not images:
            return self
        targets = {img.universe for img in images.values()}
        if len(targets) > 1:
            raise UniverseMismatch("substitution images live in different universes")
        (target,) = targets
        result = LaurentPoly.zero(target)
        for mono, coeff in self.terms.items():
            term = LaurentPoly.const(target, coeff)
            for v, e in mono:
                if v in images:
                    factor = images[v] ** e
                else:
                    target.check_var(v)
                    factor = LaurentPoly.var(target, v, e)
                term = term * factor
            result = result + term
        return result

    def permute_indices(self, perm: Mapping[int, int]) -> LaurentPoly:
        """Relabel t_i, q_i by a permutation of indices (index 0 is fixed)."""
        terms: dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            new = _make_mono({(fam, perm.get(idx, idx)): e for (fam, idx), e in mono})
            terms[new] = terms.get(new, 0) + coeff
        return LaurentPoly(self.universe, terms)

    def variables(self) -> set[VarId]:
        return {v for mono in self.terms for v, _ in mono}

    # -- text and JSON forms -------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in sorted(self.terms.items(), key=lambda mc: _mono_order(mc[0])):
            factors = [
                var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in mono
            ]
            if not factors:
                body = str(abs(coeff))
            else:
                body = "*".join(factors)
                if abs(coeff) != 1:
                    body = f"{abs(coeff)}*{body}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    @staticmethod
    def parse(text: str, universe: Universe) -> LaurentPoly:
        return _Parser(text, universe).parse()

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": c, "exps": {var_name(v): e for v, e in mono}}
                for mono, c in sorted(self.terms.items(), key=lambda mc: _mono_order(mc[0]))
            ]
        }

    @staticmethod
    def from_json(data: Mapping, universe: Universe) -> LaurentPoly:
        result = LaurentPoly.zero(universe)
        for term in data["terms"]:
            exps = {parse_var_name(name): int(e) for name, e in term["exps"].items()}
            result = result + LaurentPoly.monomial(universe, int(term["coeff"]), exps)
        return result


def _mono_order(mono: Monomial):
    return tuple((_FAMILY_RANK[fam], idx, e) for (fam, idx), e in mono)


class _Parser:
    """Recursive-descent parser for the `1 - 2*t1^-1*q2 + (t - 1)^2` grammar."""

    def __init__(self, text: str, universe: Universe):
        self.text = text
        self.universe = universe
        self.pos = 0

    def parse(self) -> LaurentPoly:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise PolyParseError("unexpected trailing input", self.pos)
        return value

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> LaurentPoly:
        negate = False
        if self._peek() == "-":
            self.pos += 1
            negate = True
        value = self._term()
        if negate:
            value = -value
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> LaurentPoly:
        value = self._factor()
        while self._peek() == "*":
            self.pos += 1
            value = value * self._factor()
        return value

    def _factor(self) -> LaurentPoly:
        value = self._primary()
        if self._peek() == "^":
            self.pos += 1
            exp = self._int()
            try:
                value = value**exp
            except ValueError as exc:
                raise PolyParseError(str(exc), self.pos) from None
        return value

    def _primary(self) -> LaurentPoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise PolyParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            return LaurentPoly.const(self.universe, self._int())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start : self.pos]
            try:
                var = parse_var_name(name)
                self.universe.check_var(var)
            except ValueError as exc:
                raise PolyParseError(str(exc), start) from None
            return LaurentPoly.var(self.universe, var)
        raise PolyParseError("expected a number, variable or '('", self.pos)

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise PolyParseError("expected an integer", start)
        return int(self.text[start : self.pos])


# Convenience constructors used throughout the higher layers.

def t_var(universe: Universe, i: int) -> LaurentPoly:
    return LaurentPoly.var(universe, ("t", i))


def q_var(universe: Universe, i: int) -> LaurentPoly:
    return LaurentPoly.var(universe, ("q", i))


def single_t(universe: Universe) -> LaurentPoly:
    return LaurentPoly.var(universe, ("t", 0))
