"""Finite switches, virtual pairs and multi-switches, with exhaustive checks.

A switch is a bijection of X^2 satisfying the set-theoretic Yang-Baxter
equation; a virtual pair (S, V) additionally has V involutive and the
mixed identity (V x id)(id x S)(V x id) = (id x V)(S x id)(id x V).
All checks sweep the full carrier and report the first counterexample.
"""

from __future__ import annotations

import itertools
import os
from typing import Callable, Iterable, Sequence

from .braids import BraidWord, relator_catalog
from .quandles import CheckReport, QuandleTable

DEFAULT_MAX_STATES = 10**6


def _max_states(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("BRAIDREP_MAX_STATES", DEFAULT_MAX_STATES))


class GroupTable:
    """A finite group given by its multiplication table."""

    def __init__(self, mul: Sequence[Sequence[int]]):
        self.size = len(mul)
        self.mul_table = tuple(tuple(row) for row in mul)
        for row in self.mul_table:
            if len(row) != self.size or any(not 0 <= v < self.size for v in row):
                raise ValueError("group table is not square over 0..size-1")
        self.identity = self._find_identity()
        self.inv_table = self._find_inverses()
        self._check_associativity()

    def _find_identity(self) -> int:
        for e in range(self.size):
            if all(
                self.mul_table[e][a] == a and self.mul_table[a][e] == a
                for a in range(self.size)
            ):
                return e
        raise ValueError("table has no identity element")

    def _find_inverses(self) -> tuple[int, ...]:
        inv = []
        for a in range(self.size):
            candidates = [
                b
                for b in range(self.size)
                if self.mul_table[a][b] == self.identity
                and self.mul_table[b][a] == self.identity
            ]
            if not candidates:
                raise ValueError(f"element {a} has no inverse")
            inv.append(candidates[0])
        return tuple(inv)

    def _check_associativity(self) -> None:
        m = self.mul_table
        for a in range(self.size):
            for b in range(self.size):
                for c in range(self.size):
                    if m[m[a][b]][c] != m[a][m[b][c]]:
                        raise ValueError(f"table is not associative at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def is_abelian(self) -> bool:
        return all(
            self.mul_table[a][b] == self.mul_table[b][a]
            for a in range(self.size)
            for b in range(self.size)
        )


def cyclic_group(m: int) -> GroupTable:
    return GroupTable([[(a + b) % m for b in range(m)] for a in range(m)])


def symmetric_group(k: int) -> GroupTable:
    """The symmetric group on k letters; element i is the i-th permutation
    in lexicographic order, and p*q composes p first."""
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(q[p[x]] for x in range(k))] for q in perms] for p in perms
    ]
    return GroupTable(table)


class SkewBraceTable:
    """A skew brace: two group structures (add, mul) on one carrier with
    a mul (b add c) = (a mul b) add (add-inverse of a) add (a mul c)."""

    def __init__(self, add: GroupTable, mul: GroupTable):
        if add.size != mul.size:
            raise ValueError("the two group tables have different sizes")
        self.size = add.size
        self.add = add
        self.mul = mul
        self._check_compatibility()

    def _check_compatibility(self) -> None:
        for a in range(self.size):
            for b in range(self.size):
                for c in range(self.size):
                    lhs = self.mul.mul(a, self.add.mul(b, c))
                    rhs = self.add.mul(
                        self.add.mul(self.mul.mul(a, b), self.add.inv(a)),
                        self.mul.mul(a, c),
                    )
                    if lhs != rhs:
                        raise ValueError(
                            f"skew brace compatibility fails at ({a}, {b}, {c})"
                        )


def trivial_brace(group: GroupTable) -> SkewBraceTable:
    return SkewBraceTable(group, group)


class FiniteSwitch:
    """A bijection of X^2, stored as a full table; YBE is checked on demand."""

    def __init__(self, elements: Sequence, mapping: dict):
        self.elements = tuple(elements)
        self.mapping = dict(mapping)
        size = len(self.elements)
        element_set = set(self.elements)
        if len(element_set) != size:
            raise ValueError("carrier elements must be distinct")
        if set(self.mapping) != {
            (a, b) for a in self.elements for b in self.elements
        }:
            raise ValueError("switch table does not cover the full square")
        images = set()
        for value in self.mapping.values():
            if len(value) != 2 or value[0] not in element_set or value[1] not in element_set:
                raise ValueError(f"switch image {value!r} is not a carrier pair")
            images.add(value)
        if len(images) != size * size:
            raise ValueError("switch table is not a bijection of the square")

    @staticmethod
    def from_function(elements: Sequence, func: Callable) -> FiniteSwitch:
        elements = tuple(elements)
        return FiniteSwitch(
            elements, {(a, b): tuple(func(a, b)) for a in elements for b in elements}
        )

    def apply(self, a, b) -> tuple:
        return self.mapping[(a, b)]

    def inverse(self) -> FiniteSwitch:
        return FiniteSwitch(self.elements, {v: k for k, v in self.mapping.items()})

    def is_involutive(self) -> bool:
        return all(self.apply(*image) == pair for pair, image in self.mapping.items())

    def _apply_at(self, state: tuple, position: int) -> tuple:
        a, b = self.apply(state[position], state[position + 1])
        return state[:position] + (a, b) + state[position + 2 :]

    def check_ybe(self) -> CheckReport:
        """Sweep X^3 comparing (S x id)(id x S)(S x id) with
        (id x S)(S x id)(id x S); both sides apply left factor first."""
        for triple in itertools.product(self.elements, repeat=3):
            lhs = self._apply_at(self._apply_at(self._apply_at(triple, 0), 1), 0)
            rhs = self._apply_at(self._apply_at(self._apply_at(triple, 1), 0), 1)
            if lhs != rhs:
                return CheckReport(
                    "ybe",
                    False,
                    {"input": list(triple), "lhs": list(lhs), "rhs": list(rhs)},
                )
        return CheckReport("ybe", True)


class VirtualPair:
    """A candidate virtual switch (S, V) on a common finite carrier."""

    def __init__(self, s: FiniteSwitch, v: FiniteSwitch):
        if s.elements != v.elements:
            raise ValueError("S and V must share a carrier")
        self.s = s
        self.v = v
        self.elements = s.elements

    def check(self) -> dict[str, CheckReport]:
        reports = {
            "v_involutive": self._check_involutive(),
            "ybe_s": self.s.check_ybe(),
            "ybe_v": self.v.check_ybe(),
            "matched": self._check_matched(),
        }
        return reports

    def passed(self) -> bool:
        return all(report.passed for report in self.check().values())

    def _check_involutive(self) -> CheckReport:
        for pair, image in self.v.mapping.items():
            if self.v.apply(*image) != pair:
                return CheckReport("v-involutive", False, {"input": list(pair)})
        return CheckReport("v-involutive", True)

    def _check_matched(self) -> CheckReport:
        """The mixed identity: V at (2,3), S at (1,2), V at (2,3) equals
        V at (1,2), S at (2,3), V at (1,2) on every triple."""
        s, v = self.s, self.v
        for triple in itertools.product(self.elements, repeat=3):
            lhs = v._apply_at(s._apply_at(v._apply_at(triple, 1), 0), 1)
            rhs = v._apply_at(s._apply_at(v._apply_at(triple, 0), 1), 0)
            if lhs != rhs:
                return CheckReport(
                    "matched",
                    False,
                    {"input": list(triple), "lhs": list(lhs), "rhs": list(rhs)},
                )
        return CheckReport("matched", True)


# -- builtin switches ----------------------------------------------------------


def twist(elements: Sequence) -> FiniteSwitch:
    return FiniteSwitch.from_function(elements, lambda a, b: (b, a))


def artin_switch(group: GroupTable) -> FiniteSwitch:
    """S(a, b) = (a b a^{-1}, a) on a finite group."""
    return FiniteSwitch.from_function(
        range(group.size),
        lambda a, b: (group.mul(group.mul(a, b), group.inv(a)), a),
    )


def burau_switch_mod(modulus: int, unit: int) -> FiniteSwitch:
    """S(a, b) = ((1 - t)a + tb, a) on Z_modulus with t = unit."""
    unit %= modulus
    if _gcd(unit, modulus) != 1:
        raise ValueError(f"t = {unit} is not invertible mod {modulus}")
    return FiniteSwitch.from_function(
        range(modulus),
        lambda a, b: (((1 - unit) * a + unit * b) % modulus, a),
    )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def quandle_switch(q: QuandleTable) -> FiniteSwitch:
    """S(a, b) = (b * a, a) on a finite quandle."""
    return FiniteSwitch.from_function(range(q.size), lambda a, b: (q.mul(b, a), a))


def skew_brace_switch(brace: SkewBraceTable) -> FiniteSwitch:
    """S(a, b) = (c, c^{-1} mul a mul b) with c = (add-inverse of a) add (a mul b)."""
    add, mul = brace.add, brace.mul

    def func(a, b):
        c = add.mul(add.inv(a), mul.mul(a, b))
        return c, mul.mul(mul.mul(mul.inv(c), a), b)

    return FiniteSwitch.from_function(range(brace.size), func)


def builtin_switch(name: str, **params) -> FiniteSwitch:
    if name == "twist":
        return twist(range(params["size"]))
    if name == "artin":
        return artin_switch(params["group"])
    if name == "burau":
        return burau_switch_mod(params["modulus"], params["unit"])
    if name == "quandle":
        return quandle_switch(params["table"])
    if name == "skewbrace":
        return skew_brace_switch(params["brace"])
    raise ValueError(f"unknown builtin switch {name!r}")


# -- multi-switches ---------------------------------------------------------------


class FiniteMultiSwitch:
    """A switch on X x X_1 x ... x X_m assembled from a head map
    S_0: X^2 x X_1^2 x ... x X_m^2 -> X^2 and component switches S_i on X_i."""

    def __init__(self, x_elements: Sequence, sub_elements: Sequence[Sequence],
                 s0: Callable, components: Sequence[FiniteSwitch]):
        if len(sub_elements) != len(components):
            raise ValueError("need one component switch per subcarrier")
        for elems, comp in zip(sub_elements, components):
            if tuple(elems) != comp.elements:
                raise ValueError("component switch carrier mismatch")
        self.x_elements = tuple(x_elements)
        self.sub_elements = [tuple(e) for e in sub_elements]
        self.s0 = s0
        self.components = list(components)
        self.assembled = self._assemble()

    def _assemble(self) -> FiniteSwitch:
        product_elements = [
            (a,) + rest
            for a in self.x_elements
            for rest in itertools.product(*self.sub_elements)
        ]

        def func(left, right):
            a, b = left[0], right[0]
            flat = []
            for x, y in zip(left[1:], right[1:]):
                flat.extend((x, y))
            s0l, s0r = self.s0(a, b, *flat)
            lefts, rights = [], []
            for comp, x, y in zip(self.components, left[1:], right[1:]):
                l, r = comp.apply(x, y)
                lefts.append(l)
                rights.append(r)
            return (s0l, *lefts), (s0r, *rights)

        return FiniteSwitch.from_function(product_elements, func)

    def check_components(self) -> list[CheckReport]:
        return [comp.check_ybe() for comp in self.components]


def manturov_pair(q: QuandleTable, trivial_sub: Iterable[int]) -> VirtualPair:
    """The virtual pair on X x X_1 for a quandle X with trivial subquandle X_1:

        S(a, b; x, y) = (b*a, a; y, x),  V(a, b; x, y) = (b *~ x, a*y; y, x).
    """
    sub = tuple(trivial_sub)
    if not sub:
        raise ValueError("the subquandle must be non-empty")
    if not q.is_trivial_subquandle(sub):
        raise ValueError("the chosen subset is not a trivial subquandle")
    sub_twist = twist(sub)
    s_multi = FiniteMultiSwitch(
        range(q.size), [sub], lambda a, b, x, y: (q.mul(b, a), a), [sub_twist]
    )
    v_multi = FiniteMultiSwitch(
        range(q.size),
        [sub],
        lambda a, b, x, y: (q.mul_inv(b, x), q.mul(a, y)),
        [sub_twist],
    )
    return VirtualPair(s_multi.assembled, v_multi.assembled)


# -- biquandles ---------------------------------------------------------------------


class BiquandleAxiomError(ValueError):
    def __init__(self, axiom: str, witness: dict):
        super().__init__(f"biquandle axiom {axiom!r} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class Biquandle:
    """A finite biquandle given by up/down tables up[a][b] = a^b,
    down[a][b] = a_b; construction verifies every axiom and names the
    first one that fails."""

    def __init__(self, up: Sequence[Sequence[int]], down: Sequence[Sequence[int]]):
        self.size = len(up)
        self.up = tuple(tuple(row) for row in up)
        self.down = tuple(tuple(row) for row in down)
        if len(self.down) != self.size:
            raise ValueError("up and down tables have different sizes")
        self._validate_bijections()
        self.up_inv = self._invert(self.up, "up")
        self.down_inv = self._invert(self.down, "down")
        self._validate_switch()
        self._validate_axiom2()
        self._validate_exchange_identities()

    @staticmethod
    def from_quandle(q: QuandleTable) -> Biquandle:
        up = [[q.mul(a, b) for b in range(q.size)] for a in range(q.size)]
        down = [[a] * q.size for a in range(q.size)]
        return Biquandle(up, down)

    def _validate_bijections(self) -> None:
        for table, name in ((self.up, "up-bijective"), (self.down, "down-bijective")):
            for a in range(self.size):
                column = {table[x][a] for x in range(self.size)}
                if len(column) != self.size:
                    raise BiquandleAxiomError(name, {"a": a})

    def _invert(self, table, which: str):
        # inv[b][a] = the x with table[x][a] = b.
        inv = [[-1] * self.size for _ in range(self.size)]
        for a in range(self.size):
            for x in range(self.size):
                inv[table[x][a]][a] = x
        return tuple(tuple(row) for row in inv)

    def switch(self) -> FiniteSwitch:
        """The switch S(a, b) = (b^a, a_b) defined by the two operations."""
        return FiniteSwitch.from_function(
            range(self.size), lambda a, b: (self.up[b][a], self.down[a][b])
        )

    def _validate_switch(self) -> None:
        try:
            s = self.switch()
        except ValueError:
            raise BiquandleAxiomError("switch-bijective", {}) from None
        report = s.check_ybe()
        if not report.passed:
            raise BiquandleAxiomError("yang-baxter", report.counterexample)

    def _validate_axiom2(self) -> None:
        for a in range(self.size):
            b = self.up_inv[a][a]  # a^{a^{-1}}
            if b != self.down[a][b]:
                raise BiquandleAxiomError("up-down-twist", {"a": a})
            c = self.down_inv[a][a]  # a_{a^{-1}}
            if c != self.up[a][c]:
                raise BiquandleAxiomError("down-up-twist", {"a": a})

    def _validate_exchange_identities(self) -> None:
        # The three componentwise consequences of the Yang-Baxter equation:
        # a^{bc} = a^{c_b b^c}, a_{bc} = a_{c^b b_c} and
        # (b^a)_{c^{a_b}} = (b_c)^{a_{c^b}}.
        up, down = self.up, self.down
        for a in range(self.size):
            for b in range(self.size):
                for c in range(self.size):
                    if up[up[a][b]][c] != up[up[a][down[c][b]]][up[b][c]]:
                        raise BiquandleAxiomError(
                            "up-exchange", {"a": a, "b": b, "c": c}
                        )
                    if down[down[a][b]][c] != down[down[a][up[c][b]]][down[b][c]]:
                        raise BiquandleAxiomError(
                            "down-exchange", {"a": a, "b": b, "c": c}
                        )
                    if down[up[b][a]][up[c][down[a][b]]] != up[down[b][c]][down[a][up[c][b]]]:
                        raise BiquandleAxiomError(
                            "mixed-exchange", {"a": a, "b": b, "c": c}
                        )

    def is_trivial_sub(self, subset: Iterable[int]) -> bool:
        elems = list(subset)
        return all(
            self.up[a][b] == a and self.down[a][b] == a for a in elems for b in elems
        )


def biquandle_pair(bq: Biquandle, trivial_sub: Iterable[int]) -> tuple[VirtualPair, CheckReport]:
    """The candidate virtual pair on X x X_1 defined by a biquandle with a
    trivial sub-biquandle:

        S(a, b; x, y) = (b^a, a_b; y, x),
        V(a, b; x, y) = (b^{x^{-1}}, a^y; y, x),

    together with the report of the compatibility conditions
    b^{x^{-1} a} = b^{a^x x^{-1}} and (a_{b^{y^{-1}}})^y = (a^y)_b that make
    the pair matched."""
    sub = tuple(trivial_sub)
    if not sub:
        raise ValueError("the sub-biquandle must be non-empty")
    if not bq.is_trivial_sub(sub):
        raise ValueError("the chosen subset is not a trivial sub-biquandle")

    needeq = _check_needeq(bq, sub)
    sub_twist = twist(sub)
    s_multi = FiniteMultiSwitch(
        range(bq.size),
        [sub],
        lambda a, b, x, y: (bq.up[b][a], bq.down[a][b]),
        [sub_twist],
    )
    v_multi = FiniteMultiSwitch(
        range(bq.size),
        [sub],
        lambda a, b, x, y: (bq.up_inv[b][x], bq.up[a][y]),
        [sub_twist],
    )
    return VirtualPair(s_multi.assembled, v_multi.assembled), needeq


def _check_needeq(bq: Biquandle, sub: tuple[int, ...]) -> CheckReport:
    up, down, up_inv = bq.up, bq.down, bq.up_inv
    for a in range(bq.size):
        for b in range(bq.size):
            for x in sub:
                if up[up_inv[b][x]][a] != up_inv[up[b][up[a][x]]][x]:
                    return CheckReport(
                        "needeq", False, {"identity": 1, "a": a, "b": b, "x": x}
                    )
                if up[down[a][up_inv[b][x]]][x] != down[up[a][x]][b]:
                    return CheckReport(
                        "needeq", False, {"identity": 2, "a": a, "b": b, "y": x}
                    )
    return CheckReport("needeq", True)


# -- permutation representations -------------------------------------------------------


def permutation_audit(obj: FiniteSwitch | VirtualPair, n: int,
                      max_states: int | None = None) -> CheckReport:
    """Verify that every relator acts identically on all of X^n, where
    sigma_i acts by the switch at strands (i, i+1) and rho_i by V there."""
    if isinstance(obj, VirtualPair):
        s, v = obj.s, obj.v
        virtual = True
    else:
        s, v = obj, None
        virtual = False
    elements = s.elements
    states = len(elements) ** n
    bound = _max_states(max_states)
    if states > bound:
        raise ValueError(
            f"{states} states exceed the bound {bound}; lower n or the carrier "
            "size, or raise BRAIDREP_MAX_STATES"
        )
    s_inv = s.inverse()

    def act(state: tuple, word: BraidWord) -> tuple:
        for kind, index, exp in word.letters:
            if kind == "s":
                table = s if exp == 1 else s_inv
            else:
                table = v
            state = table._apply_at(state, index - 1)
        return state

    for rel in relator_catalog(n, virtual):
        for state in itertools.product(elements, repeat=n):
            lhs = act(state, rel.lhs)
            rhs = act(state, rel.rhs)
            if lhs != rhs:
                return CheckReport(
                    "permutation-rep",
                    False,
                    {
                        "relator": str(rel),
                        "state": list(state),
                        "lhs": list(lhs),
                        "rhs": list(rhs),
                    },
                )
    return CheckReport("permutation-rep", True)


def word_action(obj: FiniteSwitch | VirtualPair, word: BraidWord, state: tuple) -> tuple:
    """Apply a braid word to a state in X^n (first letter acts first)."""
    if isinstance(obj, VirtualPair):
        s, v = obj.s, obj.v
    else:
        s, v = obj, None
    s_inv = s.inverse()
    for kind, index, exp in word.letters:
        if kind == "r":
            if v is None:
                raise ValueError("rho letters need a virtual pair")
            table = v
        else:
            table = s if exp == 1 else s_inv
        state = table._apply_at(state, index - 1)
    return state


# -- finite structure files ---------------------------------------------------------


def parse_structure_file(text: str):
    """Parse the finite-structure format: a header line
    ``quandle <size>`` / ``group <size>`` / ``switch <size>`` /
    ``skewbrace <size>``, then the operation table(s) row by row
    (two stacked tables for switch and skewbrace)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty structure file")
    header = lines[0].split()
    if len(header) != 2 or not header[1].isdigit():
        raise ValueError(f"bad header line {lines[0]!r}")
    kind, size = header[0], int(header[1])
    expected = {"quandle": size, "group": size, "switch": 2 * size, "skewbrace": 2 * size}
    if kind not in expected:
        raise ValueError(f"unknown structure kind {kind!r}")
    if len(lines) - 1 != expected[kind]:
        raise ValueError(
            f"{kind} of size {size} needs {expected[kind]} table rows, got {len(lines) - 1}"
        )
    rows = []
    for ln in lines[1:]:
        values = ln.split()
        if len(values) != size or not all(v.lstrip("-").isdigit() for v in values):
            raise ValueError(f"bad table row {ln!r}")
        rows.append([int(v) for v in values])
    if kind == "quandle":
        return QuandleTable(rows)
    if kind == "group":
        return GroupTable(rows)
    if kind == "skewbrace":
        return SkewBraceTable(GroupTable(rows[:size]), GroupTable(rows[size:]))
    left, right = rows[:size], rows[size:]
    mapping = {
        (a, b): (left[a][b], right[a][b]) for a in range(size) for b in range(size)
    }
    return FiniteSwitch(range(size), mapping)


def switch_from_structure(obj) -> FiniteSwitch:
    if isinstance(obj, FiniteSwitch):
        return obj
    if isinstance(obj, QuandleTable):
        return quandle_switch(obj)
    if isinstance(obj, GroupTable):
        return artin_switch(obj)
    if isinstance(obj, SkewBraceTable):
        return skew_brace_switch(obj)
    raise ValueError(f"cannot build a switch from {type(obj).__name__}")
