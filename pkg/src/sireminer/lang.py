"""Languages of SIREs: operator inference, membership, and the brute-force
minimality oracle.
"""
from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, Sequence

from .core import Cpos, ExampleSet, Factor, Op, Sire
from .graphs import BoundExceededError
from .orders import transitive_closure

ORACLE_BOUND = 8


class ChainMismatchError(ValueError):
    pass


def symbol_stats(e: ExampleSet) -> dict[str, tuple[int, int]]:
    """Per-symbol (min, max) occurrence count over all words.

    A word lacking the symbol counts as 0.
    """
    lo = {s: None for s in e.alphabet}
    hi = dict.fromkeys(e.alphabet, 0)
    for word in e.words:
        counts = Counter(word)
        for s in e.alphabet:
            c = counts.get(s, 0)
            if lo[s] is None or c < lo[s]:
                lo[s] = c
            if c > hi[s]:
                hi[s] = c
    return {s: (lo[s], hi[s]) for s in e.alphabet}


def infer_operators(e: ExampleSet, chains: Cpos | Iterable[Sequence[str]]) -> Sire:
    if isinstance(chains, Cpos):
        chains = chains.chains
    chains = [tuple(c) for c in chains]
    covered = [s for c in chains for s in c]
    if sorted(covered) != list(e.alphabet):
        raise ChainMismatchError(
            f"chains cover {sorted(covered)}, sample alphabet is {list(e.alphabet)}")
    stats = symbol_stats(e)
    return Sire(tuple(
        Factor(tuple((s, Op.from_counts(*stats[s])) for s in c)) for c in chains))


def sire_membership(word: Sequence[str], s: Sire) -> bool:
    """Decide ``word ∈ L(s)``.

    Factor alphabets are disjoint, so the shuffle splits: the word is a
    member iff its projection onto each factor matches that factor.
    """
    owner: dict[str, int] = {}
    for i, f in enumerate(s.factors):
        for sym in f.symbols:
            owner[sym] = i
    projections: list[list[str]] = [[] for _ in s.factors]
    for sym in word:
        i = owner.get(sym)
        if i is None:
            return False
        projections[i].append(sym)
    return all(_matches_chain(p, f) for p, f in zip(projections, s.factors))


def _matches_chain(proj: list[str], f: Factor) -> bool:
    runs = [(sym, len(list(g))) for sym, g in itertools.groupby(proj)]
    k = 0
    for sym, op in f.terms:
        count = 0
        if k < len(runs) and runs[k][0] == sym:
            count = runs[k][1]
            k += 1
        if not op.admits(count):
            return False
    return k == len(runs)


def accepts_all(e: ExampleSet | Iterable[Sequence[str]], s: Sire) -> bool:
    return all(sire_membership(w, s) for w in e)


# -- enumeration and the minimality oracle ----------------------------------

def set_partitions(items: Sequence[str]) -> Iterator[list[list[str]]]:
    """All partitions of ``items`` into unordered nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BoundExceededError(f"alphabet of {n} symbols exceeds bound {bound}")


def enumerate_chain_partitions(alphabet: Iterable[str], bound: int = ORACLE_BOUND) -> Iterator[Cpos]:
    """Every way to split the alphabet into disjoint chains.

    Order inside a chain matters, order between chains does not.
    """
    symbols = sorted(set(alphabet))
    _check_bound(len(symbols), bound)
    for blocks in set_partitions(symbols):
        for orders in itertools.product(*(itertools.permutations(b) for b in blocks)):
            yield Cpos(tuple(orders))


def chain_is_valid(chain: Sequence[str], tr: frozenset) -> bool:
    """No later symbol of the chain ever precedes an earlier one in the sample."""
    return not any((chain[j], chain[i]) in tr
                   for i in range(len(chain)) for j in range(i + 1, len(chain)))


def minimal_oracle(e: ExampleSet, bound: int = ORACLE_BOUND) -> list[Cpos]:
    """All valid chain partitions with the fewest chains, then the
    lexicographically largest descending length profile.

    Exhaustive over the same space as ``enumerate_chain_partitions``; a
    block is only permuted once it is known to be free of forbid pairs.
    """
    symbols = list(e.alphabet)
    _check_bound(len(symbols), bound)
    if not symbols:
        return []
    tr = transitive_closure(e)
    candidates: list[tuple[list[list[str]], list[list[tuple[str, ...]]]]] = []
    for blocks in set_partitions(symbols):
        options = []
        for b in blocks:
            if any((x, y) in tr and (y, x) in tr for x, y in itertools.combinations(b, 2)):
                break
            valid = [p for p in itertools.permutations(b) if chain_is_valid(p, tr)]
            if not valid:
                break
            options.append(valid)
        else:
            candidates.append((blocks, options))
    fewest = min(len(b) for b, _ in candidates)
    candidates = [c for c in candidates if len(c[0]) == fewest]
    best_profile = max(tuple(sorted(map(len, b), reverse=True)) for b, _ in candidates)
    result = []
    for blocks, options in candidates:
        if tuple(sorted(map(len, blocks), reverse=True)) != best_profile:
            continue
        for combo in itertools.product(*options):
            result.append(Cpos(combo))
    return sorted(result, key=lambda c: c.chains)
