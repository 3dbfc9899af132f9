"""Monomials over a fixed variable table, monomial ideals, powers, and lcm lattices.

A monomial is a dense vector of nonnegative exponents over an ordered variable
table; the zero vector is the monomial 1.  Square-free monomials are the ones
with all exponents in {0, 1}.  Everything here is immutable and hashable, so
values can be shared freely between threads and used as dict/set keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence


class VariableMismatch(ValueError):
    """Raised when monomials over different variable tables are combined."""


class ParseError(ValueError):
    """Syntax error in ideal/monomial text; carries the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class VariableTable:
    """Fixed ordered list of distinct variable names; index k is variable k."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if any(not isinstance(s, str) or not s for s in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def variable(self, k: int) -> "Monomial":
        exps = [0] * self.n
        exps[k] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exps: Sequence[int]) -> "Monomial":
        return Monomial(self, tuple(exps))


@dataclass(frozen=True)
class Monomial:
    table: VariableTable
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.table.n:
            raise ValueError(
                f"expected {self.table.n} exponents, got {len(exps)}"
            )
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")

    def _check_same_table(self, other: "Monomial") -> None:
        if self.table != other.table:
            raise VariableMismatch(
                f"monomials over different variables: "
                f"{self.table.names} vs {other.table.names}"
            )

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def support(self) -> tuple[int, ...]:
        """Indices of variables with a positive exponent."""
        return tuple(k for k, e in enumerate(self.exponents) if e)

    def divides(self, other: "Monomial") -> bool:
        self._check_same_table(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_table(other)
        return Monomial(
            self.table,
            tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)),
        )

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_same_table(other)
        return Monomial(
            self.table,
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
        )

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    # exponent tuples give a stable total order for deterministic output
    def sort_key(self) -> tuple[int, ...]:
        return self.exponents


def minimalize(gens: Sequence[Monomial]) -> list[Monomial]:
    """Drop every monomial strictly divisible by another list element.

    Exact duplicates collapse to their first occurrence; the relative order of
    the survivors is preserved, so generator indices stay deterministic.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("cannot minimalize an empty generator list")
    kept = []
    for i, g in enumerate(gens):
        redundant = False
        for j, h in enumerate(gens):
            if i == j:
                continue
            if h == g:
                if j < i:
                    redundant = True
                    break
            elif h.divides(g):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal presented by its minimal generating set.

    The constructor insists on minimality (no duplicates, no generator dividing
    another); use `MonomialIdeal.minimal` to build from an arbitrary list.
    """

    table: VariableTable
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if g.table != self.table:
                raise VariableMismatch("generator over a different variable table")
        if len(minimalize(gens)) != len(gens):
            raise ValueError("generating set is not minimal")

    @classmethod
    def minimal(cls, gens: Sequence[Monomial]) -> "MonomialIdeal":
        gens = list(gens)
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        return cls(gens[0].table, tuple(minimalize(gens)))

    @property
    def q(self) -> int:
        return len(self.gens)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def power(self, r: int) -> "MonomialIdeal":
        """All products of r generators with repetition, minimalized.

        Index multisets are enumerated in lexicographic order so the product of
        generators (i, j) with i <= j has a canonical position.
        """
        if r < 1:
            raise ValueError("power exponent must be >= 1")
        products = []
        for combo in itertools.combinations_with_replacement(range(self.q), r):
            m = self.gens[combo[0]]
            for k in combo[1:]:
                m = m * self.gens[k]
            products.append(m)
        return MonomialIdeal(self.table, tuple(minimalize(products)))

    def __str__(self) -> str:
        return format_ideal(self)


# The set of lcms of all nonempty generator subsets.  Closing the generator set
# under joins with single generators reaches every subset lcm without scanning
# 2^q subsets.
def lcm_lattice(ideal: MonomialIdeal) -> frozenset[Monomial]:
    seen = set(ideal.gens)
    frontier = list(ideal.gens)
    while frontier:
        fresh = []
        for a in frontier:
            for g in ideal.gens:
                c = a.lcm(g)
                if c not in seen:
                    seen.add(c)
                    fresh.append(c)
        frontier = fresh
    return frozenset(seen)


def lcm_lattice_by_subsets(ideal: MonomialIdeal) -> frozenset[Monomial]:
    """Reference computation by explicit subset enumeration (2^q - 1 subsets)."""
    if ideal.q > 20:
        raise ValueError("subset enumeration is limited to 20 generators")
    out = set()
    for size in range(1, ideal.q + 1):
        for combo in itertools.combinations(ideal.gens, size):
            m = combo[0]
            for g in combo[1:]:
                m = m.lcm(g)
            out.add(m)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Text syntax.
#
# Two modes, auto-detected: single-letter (`abe`, `x^2yz`) where every variable
# is one letter, and starred (`x1*x2^2`) where names are words separated by
# `*`.  An ideal is a comma-separated list of monomials.  Variable order is
# first appearance unless an explicit name list is given.
# ---------------------------------------------------------------------------


def _scan_single_letter(text: str, offset: int) -> list[tuple[str, int, int]]:
    factors = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if not c.isalpha():
            raise ParseError(f"unexpected character {c!r}", offset + i)
        name = c
        pos = offset + i
        i += 1
        exp = 1
        if i < len(text) and text[i] == "^":
            i += 1
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            if start == i:
                raise ParseError("expected digits after '^'", offset + i)
            exp = int(text[start:i])
        factors.append((name, exp, pos))
    return factors


def _scan_starred(text: str, offset: int) -> list[tuple[str, int, int]]:
    factors = []
    for piece_start, piece in _split_with_offsets(text, "*"):
        s = piece.strip()
        if not s:
            raise ParseError("empty factor", offset + piece_start)
        lead = piece_start + (len(piece) - len(piece.lstrip()))
        name, sep, exp_text = s.partition("^")
        name = name.strip()
        if not name or not name[0].isalpha() or not all(
            ch.isalnum() or ch == "_" for ch in name
        ):
            raise ParseError(f"bad variable name {name!r}", offset + lead)
        exp = 1
        if sep:
            exp_text = exp_text.strip()
            if not exp_text.isdigit():
                raise ParseError("expected digits after '^'", offset + lead)
            exp = int(exp_text)
        factors.append((name, exp, offset + lead))
    return factors


def _split_with_offsets(text: str, sep: str):
    start = 0
    while True:
        k = text.find(sep, start)
        if k < 0:
            yield start, text[start:]
            return
        yield start, text[start:k]
        start = k + 1


def parse_generators(
    text: str, names: Sequence[str] | None = None
) -> tuple[VariableTable, list[Monomial]]:
    """Parse a comma-separated generator list; returns the raw, unminimalized list."""
    if not text.strip():
        raise ParseError("empty ideal (the zero ideal is not accepted)", 0)
    starred = "*" in text
    scan = _scan_starred if starred else _scan_single_letter
    factor_lists = []
    for start, piece in _split_with_offsets(text, ","):
        if not piece.strip():
            raise ParseError("empty generator", start)
        factor_lists.append(scan(piece, start))

    if names is not None:
        table = VariableTable(tuple(names))
        known = {s: k for k, s in enumerate(table.names)}
    else:
        order: list[str] = []
        known = {}
        for factors in factor_lists:
            for name, _exp, _pos in factors:
                if name not in known:
                    known[name] = len(order)
                    order.append(name)
        table = VariableTable(tuple(order))

    gens = []
    for factors in factor_lists:
        exps = [0] * table.n
        for name, exp, pos in factors:
            if name not in known:
                raise ParseError(f"unknown variable {name!r}", pos)
            exps[known[name]] += exp
        gens.append(Monomial(table, tuple(exps)))
    return table, gens


def parse_ideal(
    text: str, names: Sequence[str] | None = None
) -> tuple[MonomialIdeal, list[Monomial]]:
    """Parse and minimalize; returns (ideal, generators dropped as redundant)."""
    table, gens = parse_generators(text, names)
    for g, (start, _piece) in zip(gens, _split_with_offsets(text, ",")):
        if g.is_one:
            raise ParseError("the unit ideal is not accepted", start)
    minimal = minimalize(gens)
    dropped = [g for g in gens if g not in minimal]
    # also dropped: later copies of a repeated generator
    counts: dict[Monomial, int] = {}
    for g in gens:
        counts[g] = counts.get(g, 0) + 1
    for g, c in counts.items():
        if c > 1 and g in minimal:
            dropped.extend([g] * (c - 1))
    return MonomialIdeal(table, tuple(minimal)), dropped


def parse_monomial(text: str, table: VariableTable) -> Monomial:
    _table, gens = parse_generators(text, names=table.names)
    if len(gens) != 1:
        raise ParseError("expected a single monomial", 0)
    return gens[0]


def format_monomial(m: Monomial) -> str:
    if m.is_one:
        return "1"
    compact = all(len(s) == 1 and s.isalpha() for s in m.table.names)
    parts = []
    for name, e in zip(m.table.names, m.exponents):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts) if compact else "*".join(parts)


def format_ideal(ideal: MonomialIdeal) -> str:
    return ",".join(format_monomial(g) for g in ideal.gens)
