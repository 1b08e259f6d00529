"""Domain types for interleaving expressions (SIREs) and their text form.

A SIRE is a set of factors joined by ``&``.  Each factor is a chain of
distinct symbols, every symbol carrying one of the counting operators
``1`` (printed bare), ``?``, ``+`` or ``*``.  No symbol occurs twice in
the whole expression.

Text syntax::

    sire   := factor ("&" factor)*
    factor := (symbol op?)+
    op     := "?" | "+" | "*"

e.g. ``a* b c? & d+``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Op",
    "Factor",
    "Sire",
    "Cpos",
    "ExampleSet",
    "SireSyntaxError",
    "DuplicateSymbolError",
    "InvalidSymbolError",
    "is_valid_symbol",
    "parse_sire",
    "format_sire",
]

_SYMBOL_RE = re.compile(r"[\w.:\-]+")


class SireSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DuplicateSymbolError(ValueError):
    def __init__(self, symbol: str):
        super().__init__(f"symbol {symbol!r} occurs more than once")
        self.symbol = symbol


class InvalidSymbolError(ValueError):
    pass


def is_valid_symbol(name: str) -> bool:
    return bool(name) and _SYMBOL_RE.fullmatch(name) is not None


class Op(str, enum.Enum):
    ONE = "1"
    OPT = "?"
    PLUS = "+"
    STAR = "*"

    def admits(self, count: int) -> bool:
        """Whether a run of ``count`` consecutive copies is allowed."""
        if self is Op.ONE:
            return count == 1
        if self is Op.OPT:
            return count <= 1
        if self is Op.PLUS:
            return count >= 1
        return True

    @property
    def suffix(self) -> str:
        return "" if self is Op.ONE else self.value

    @classmethod
    def from_counts(cls, lo: int, hi: int) -> "Op":
        if lo >= 1:
            return cls.ONE if hi == 1 else cls.PLUS
        return cls.OPT if hi <= 1 else cls.STAR


@dataclass(frozen=True)
class Factor:
    terms: tuple[tuple[str, Op], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a factor needs at least one term")
        seen = set()
        for sym, op in self.terms:
            if not is_valid_symbol(sym):
                raise InvalidSymbolError(f"invalid symbol {sym!r}")
            if not isinstance(op, Op):
                raise TypeError(f"operator must be an Op, got {op!r}")
            if sym in seen:
                raise DuplicateSymbolError(sym)
            seen.add(sym)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.terms)

    def __str__(self) -> str:
        return " ".join(s + op.suffix for s, op in self.terms)


@dataclass(frozen=True)
class Sire:
    """An ``&``-combination of factors, kept in canonical order.

    Factors are sorted by their smallest member symbol, so two Sires
    that differ only in the order of their factors compare equal.
    """

    factors: tuple[Factor, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a SIRE needs at least one factor")
        seen = set()
        for f in self.factors:
            for sym in f.symbols:
                if sym in seen:
                    raise DuplicateSymbolError(sym)
                seen.add(sym)
        ordered = tuple(sorted(self.factors, key=lambda f: min(f.symbols)))
        object.__setattr__(self, "factors", ordered)

    @classmethod
    def from_chains(cls, chains: Iterable[Iterable[tuple[str, Op]]]) -> "Sire":
        return cls(tuple(Factor(tuple(c)) for c in chains))

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(s for f in self.factors for s in f.symbols)

    def operator(self, symbol: str) -> Op:
        for f in self.factors:
            for s, op in f.terms:
                if s == symbol:
                    return op
        raise KeyError(symbol)

    def __str__(self) -> str:
        return format_sire(self)


@dataclass(frozen=True)
class Cpos:
    """Partition of an alphabet into disjoint chains (operator-free skeleton)."""

    chains: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        seen = set()
        for chain in self.chains:
            if not chain:
                raise ValueError("empty chain")
            for sym in chain:
                if sym in seen:
                    raise DuplicateSymbolError(sym)
                seen.add(sym)
        object.__setattr__(
            self, "chains", tuple(sorted((tuple(c) for c in self.chains), key=min))
        )

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(s for c in self.chains for s in c)

    @property
    def profile(self) -> tuple[int, ...]:
        """Chain lengths, longest first."""
        return tuple(sorted((len(c) for c in self.chains), reverse=True))

    def __len__(self) -> int:
        return len(self.chains)

    def __str__(self) -> str:
        return " & ".join(" ".join(c) for c in self.chains)


class ExampleSet:
    """A positive sample: an ordered, nonempty collection of words.

    Words are tuples of symbol names; repeats and empty words are kept.
    """

    __slots__ = ("words", "alphabet")

    def __init__(self, words: Iterable[Sequence[str]]):
        self.words: tuple[tuple[str, ...], ...] = tuple(tuple(w) for w in words)
        if not self.words:
            raise ValueError("empty sample")
        syms = {s for w in self.words for s in w}
        for s in syms:
            if not is_valid_symbol(s):
                raise InvalidSymbolError(f"invalid symbol {s!r}")
        self.alphabet: tuple[str, ...] = tuple(sorted(syms))

    @classmethod
    def from_strings(cls, words: Iterable[str]) -> "ExampleSet":
        """Character mode: every character of every string is a symbol."""
        return cls(tuple(w) for w in words)

    def symbol_id(self, name: str) -> int:
        return self.alphabet.index(name)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __eq__(self, other):
        return isinstance(other, ExampleSet) and self.words == other.words

    def __hash__(self):
        return hash(self.words)

    def __repr__(self) -> str:
        shown = ", ".join(" ".join(w) or "ε" for w in self.words[:5])
        more = ", ..." if len(self.words) > 5 else ""
        return f"ExampleSet([{shown}{more}])"


def parse_sire(text: str) -> Sire:
    factors: list[list[tuple[str, Op]]] = [[]]
    seen: set[str] = set()
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "&":
            if not factors[-1]:
                raise SireSyntaxError("empty factor before '&'", pos)
            factors.append([])
            pos += 1
            continue
        m = _SYMBOL_RE.match(text, pos)
        if m is None:
            raise SireSyntaxError(f"unexpected character {ch!r}", pos)
        sym = m.group()
        pos = m.end()
        op = Op.ONE
        if pos < n and text[pos] in "?+*":
            op = Op(text[pos])
            pos += 1
        if sym in seen:
            raise DuplicateSymbolError(sym)
        seen.add(sym)
        factors[-1].append((sym, op))
    if not factors[-1]:
        raise SireSyntaxError("expected a symbol", n)
    return Sire.from_chains(factors)


def format_sire(s: Sire) -> str:
    return " & ".join(str(f) for f in s.factors)
