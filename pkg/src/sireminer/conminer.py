"""Constraint-graph decomposition into chains (conMiner).

The forbid pairs of a sample form an undirected graph; peeling maximum
independent sets off it groups symbols that never conflict.  Symbols that
appear in no forbid pair join the first group.  Each group is then
ordered by the consistent pairs and given counting operators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .core import ExampleSet, Sire
from .graphs import (
    EXACT_MIS_BOUND,
    Digraph,
    UGraph,
    approx_max_independent_set,
    decompose_into_independent_sets,
    find_cycle,
    optimal_decomposition,
    topological_sort,
)
from .lang import infer_operators
from .orders import Pair, constraint_symbols, transitive_closure, split_pairs

log = logging.getLogger(__name__)

MODES = ("approx", "exact")


@dataclass
class Inference:
    """Result of one inference run, with the intermediate stages kept."""

    sire: Sire | None
    chains: list[list[str]]
    tr: frozenset[Pair]
    l2: frozenset[Pair]
    constraint: frozenset[Pair]
    groups: list[frozenset[str]] = field(default_factory=list)
    evicted: list[str] = field(default_factory=list)

    @property
    def factor_count(self) -> int:
        return len(self.chains)


def order_groups(groups: Iterable[Iterable[str]], l2: Iterable[Pair]) -> tuple[list[list[str]], list[str]]:
    """Topologically sort each group under the consistent pairs.

    A group whose induced order is cyclic loses the smallest vertex of a
    witness cycle to a trailing group until it sorts.  Returns the chains
    and the evicted symbols in eviction order.
    """
    l2 = list(l2)
    queue = [set(g) for g in groups if g]
    chains: list[list[str]] = []
    evicted: list[str] = []
    i = 0
    while i < len(queue):
        group = queue[i]
        spill: set[str] = set()
        while True:
            h = Digraph(group, ((u, v) for u, v in l2 if u in group and v in group))
            cycle = find_cycle(h)
            if cycle is None:
                chains.append(topological_sort(h))
                break
            victim = min(cycle[:-1])
            group.discard(victim)
            spill.add(victim)
            evicted.append(victim)
        if spill:
            queue.append(spill)
        i += 1
    return chains, evicted


def con_miner_trace(e: ExampleSet, mode: str = "approx", bound: int = EXACT_MIS_BOUND) -> Inference:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    tr = transitive_closure(e)
    l2, constraint = split_pairs(tr)
    involved = constraint_symbols(constraint)
    g = UGraph(involved, constraint)
    if mode == "exact":
        allmis = optimal_decomposition(g, bound) if len(g) else []
    else:
        allmis = decompose_into_independent_sets(g, approx_max_independent_set)
    if not allmis:
        allmis = [frozenset()]
    allmis[0] = allmis[0] | (set(e.alphabet) - involved)
    chains, evicted = order_groups(allmis, l2)
    if evicted:
        log.info("cyclic order inside a group; evicted %s", evicted)
    sire = infer_operators(e, chains) if e.alphabet else None
    return Inference(sire, chains, tr, l2, constraint, allmis, evicted)


def con_miner(e: ExampleSet, mode: str = "approx") -> Sire:
    return con_miner_trace(e, mode).sire
