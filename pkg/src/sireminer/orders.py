"""Precedence pairs mined from a sample.

``transitive_closure`` collects every ordered pair (x, y) of distinct
symbols where x occurs somewhere before y in some word.  ``tran_reduction``
splits that set into the consistent pairs (never seen reversed) and the
forbid pairs (seen in both orders).  Despite the name it does not compute
a graph-theoretic transitive reduction.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .core import ExampleSet

Pair = tuple[str, str]
PairSet = frozenset  # frozenset[Pair]


def word_closure(word: Sequence[str]) -> set[Pair]:
    pairs: set[Pair] = set()
    seen: list[str] = []
    seen_set: set[str] = set()
    for sym in word:
        for earlier in seen:
            if earlier != sym:
                pairs.add((earlier, sym))
        if sym not in seen_set:
            seen_set.add(sym)
            seen.append(sym)
    return pairs


def transitive_closure(e: ExampleSet | Iterable[Sequence[str]]) -> frozenset[Pair]:
    pairs: set[Pair] = set()
    for word in set(e):
        pairs |= word_closure(word)
    return frozenset(pairs)


def split_pairs(tr: frozenset[Pair]) -> tuple[frozenset[Pair], frozenset[Pair]]:
    constraint = frozenset(p for p in tr if (p[1], p[0]) in tr)
    return tr - constraint, constraint


def tran_reduction(e: ExampleSet) -> tuple[frozenset[Pair], frozenset[Pair]]:
    """Return ``(L2, constraint)`` for the sample."""
    return split_pairs(transitive_closure(e))


def constraint_symbols(constraint: Iterable[Pair]) -> set[str]:
    return {s for p in constraint for s in p}

