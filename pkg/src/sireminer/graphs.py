"""Graph machinery for the inference algorithms.

Undirected constraint graphs get two maximum-independent-set solvers:
an approximate one (Ramsey-style clique removal, polynomial) and an
exact one (enumerate every maximal independent set, keep the largest).
Directed graphs get a deterministic topological sort and source-to-sink
path enumeration.  Every choice the algorithms leave open is resolved by
lexicographic order of vertex names so that results are reproducible.
"""
from __future__ import annotations

import heapq
from typing import Callable, Iterable, Iterator

__all__ = [
    "UGraph",
    "Digraph",
    "CycleError",
    "BoundExceededError",
    "EmptyGraphError",
    "EXACT_MIS_BOUND",
    "is_independent",
    "ramsey",
    "approx_max_independent_set",
    "maximal_independent_sets",
    "exact_max_independent_set",
    "maximum_clique_size",
    "decompose_into_independent_sets",
    "optimal_decomposition",
    "topological_sort",
    "find_cycle",
    "all_source_sink_paths",
]

EXACT_MIS_BOUND = 24


class CycleError(ValueError):
    def __init__(self, cycle: list[str]):
        super().__init__("graph has a cycle: " + " -> ".join(cycle))
        self.cycle = cycle


class BoundExceededError(ValueError):
    pass


class EmptyGraphError(ValueError):
    pass


class UGraph:
    """Simple undirected graph over string vertices.  Treated as immutable."""

    __slots__ = ("vertices", "adj")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self.adj = {v: frozenset(n) for v, n in adj.items()}
        self.vertices = frozenset(self.adj)

    @property
    def edges(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((u, v)) for u, ns in self.adj.items() for v in ns)

    def induced(self, keep: Iterable[str]) -> "UGraph":
        keep = set(keep) & self.vertices
        g = UGraph.__new__(UGraph)
        g.adj = {v: self.adj[v] & keep for v in keep}
        g.vertices = frozenset(keep)
        return g

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        es = sorted("".join(sorted(e)) for e in self.edges)
        return f"UGraph(vertices={sorted(self.vertices)}, edges={es})"


class Digraph:
    """Mutable directed graph without self-loops."""

    __slots__ = ("succ", "pred")

    def __init__(self, vertices: Iterable[str] = (), arcs: Iterable[tuple[str, str]] = ()):
        self.succ: dict[str, set[str]] = {}
        self.pred: dict[str, set[str]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in arcs:
            self.add_arc(u, v)

    def add_vertex(self, v: str) -> None:
        if v not in self.succ:
            self.succ[v] = set()
            self.pred[v] = set()

    def add_arc(self, u: str, v: str) -> None:
        if u == v:
            raise ValueError(f"self-loop on {u!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        self.succ[u].add(v)
        self.pred[v].add(u)

    def remove_arc(self, u: str, v: str) -> None:
        self.succ[u].discard(v)
        self.pred[v].discard(u)

    def has_arc(self, u: str, v: str) -> bool:
        return v in self.succ.get(u, ())

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self.succ)

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        return frozenset((u, v) for u, vs in self.succ.items() for v in vs)

    def induced(self, keep: Iterable[str]) -> "Digraph":
        keep = set(keep)
        g = Digraph(keep)
        for u in keep:
            for v in self.succ.get(u, ()):
                if v in keep:
                    g.add_arc(u, v)
        return g

    def descendants(self, v: str) -> set[str]:
        return _reach(v, self.succ)

    def ancestors(self, v: str) -> set[str]:
        return _reach(v, self.pred)

    def has_path(self, u: str, v: str) -> bool:
        """Whether a nonempty path u ~> v exists."""
        if u not in self.succ:
            return False
        stack = [u]
        seen = {u}
        while stack:
            x = stack.pop()
            for y in self.succ[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def copy(self) -> "Digraph":
        g = Digraph()
        g.succ = {v: set(s) for v, s in self.succ.items()}
        g.pred = {v: set(s) for v, s in self.pred.items()}
        return g

    def __len__(self) -> int:
        return len(self.succ)

    def __repr__(self) -> str:
        arcs = sorted(f"{u}->{v}" for u, v in self.arcs)
        return f"Digraph(vertices={sorted(self.succ)}, arcs={arcs})"


def _reach(v: str, step: dict[str, set[str]]) -> set[str]:
    seen: set[str] = set()
    stack = [v]
    while stack:
        x = stack.pop()
        for y in step.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    seen.discard(v)
    return seen


def is_independent(g: UGraph, vs: Iterable[str]) -> bool:
    vs = set(vs)
    return all(not (g.adj[v] & vs) for v in vs)


# -- approximate MIS ---------------------------------------------------------

def ramsey(g: UGraph, vertices: frozenset[str] | None = None) -> tuple[frozenset[str], frozenset[str]]:
    """Return ``(clique, independent set)`` found by Ramsey recursion.

    The pivot is always the smallest remaining vertex.  On size ties the
    set containing the pivot wins.
    """
    if vertices is None:
        vertices = g.vertices
    if not vertices:
        return frozenset(), frozenset()
    # Explicit stack instead of recursion: graphs can be a few thousand deep.
    result: dict[frozenset[str], tuple[frozenset[str], frozenset[str]]] = {}
    stack: list[tuple[frozenset[str], bool]] = [(vertices, False)]
    while stack:
        vs, expanded = stack.pop()
        if not vs:
            result[vs] = (frozenset(), frozenset())
            continue
        v = min(vs)
        nbrs = vs & g.adj[v]
        rest = vs - nbrs - {v}
        if not expanded:
            stack.append((vs, True))
            for sub in (nbrs, rest):
                if sub not in result:
                    stack.append((sub, False))
            continue
        c1, i1 = result[nbrs]
        c2, i2 = result[rest]
        c1 = c1 | {v}
        i2 = i2 | {v}
        result[vs] = (c1 if len(c1) >= len(c2) else c2,
                      i2 if len(i2) >= len(i1) else i1)
    return result[vertices]


def _extend_to_maximal(g: UGraph, vs: Iterable[str], pool: Iterable[str]) -> frozenset[str]:
    chosen = set(vs)
    blocked = set().union(*(g.adj[v] for v in chosen)) if chosen else set()
    for v in sorted(pool):
        if v not in chosen and v not in blocked:
            chosen.add(v)
            blocked |= g.adj[v]
    return frozenset(chosen)


def approx_max_independent_set(g: UGraph) -> frozenset[str]:
    """Clique-removal approximation of a maximum independent set.

    Repeatedly runs the Ramsey recursion, deletes the clique it found and
    keeps the largest independent set seen.  The winner is then greedily
    extended (smallest vertex first) so the result is also maximal.
    """
    if not g.vertices:
        raise EmptyGraphError("graph has no vertices")
    remaining = g.vertices
    best: frozenset[str] = frozenset()
    while remaining:
        clique, indep = ramsey(g, remaining)
        if len(indep) > len(best):
            best = indep
        remaining = remaining - clique
    return _extend_to_maximal(g, best, g.vertices)


# -- exact MIS ---------------------------------------------------------------

def maximal_independent_sets(g: UGraph) -> Iterator[frozenset[str]]:
    """Yield every maximal independent set of ``g``.

    Bron-Kerbosch with pivoting run on the complement graph.
    """
    verts = g.vertices
    if not verts:
        return
    non_adj = {v: verts - g.adj[v] - {v} for v in verts}

    def expand(r: frozenset[str], p: frozenset[str], x: frozenset[str]):
        if not p and not x:
            yield r
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & non_adj[u]))
        for v in sorted(p - non_adj[pivot]):
            yield from expand(r | {v}, p & non_adj[v], x & non_adj[v])
            p = p - {v}
            x = x | {v}

    yield from expand(frozenset(), verts, frozenset())


def _check_bound(g: UGraph, bound: int) -> None:
    if len(g) > bound:
        raise BoundExceededError(
            f"exact search limited to {bound} vertices, graph has {len(g)}")


def _lex_key(s: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    return (-len(s), tuple(sorted(s)))  # type: ignore[arg-type]


def maximum_independent_sets(g: UGraph) -> list[frozenset[str]]:
    """All independent sets of maximum size, lexicographically ordered."""
    sets = list(maximal_independent_sets(g))
    if not sets:
        return []
    top = max(len(s) for s in sets)
    return sorted((s for s in sets if len(s) == top), key=_lex_key)


def exact_max_independent_set(g: UGraph, bound: int = EXACT_MIS_BOUND) -> frozenset[str]:
    if not g.vertices:
        raise EmptyGraphError("graph has no vertices")
    _check_bound(g, bound)
    return min(maximal_independent_sets(g), key=_lex_key)


def maximum_clique_size(g: UGraph) -> int:
    if not g.vertices:
        return 0
    best = 0

    def expand(size: int, p: frozenset[str], x: frozenset[str]):
        nonlocal best
        if not p:
            if not x:
                best = max(best, size)
            return
        if size + len(p) <= best:
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & g.adj[u]))
        for v in sorted(p - g.adj[pivot]):
            expand(size + 1, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    expand(0, g.vertices, frozenset())
    return best


# -- decomposition -----------------------------------------------------------

MisSolver = Callable[[UGraph], frozenset]


def decompose_into_independent_sets(g: UGraph, solver: MisSolver = approx_max_independent_set) -> list[frozenset[str]]:
    """Peel independent sets off ``g`` until no vertex is left."""
    groups: list[frozenset[str]] = []
    remaining = g
    while remaining.vertices:
        s = frozenset(solver(remaining))
        if not s or not is_independent(remaining, s):
            raise RuntimeError(f"solver returned an invalid set {sorted(s)}")
        groups.append(s)
        remaining = remaining.induced(remaining.vertices - s)
    return groups


def optimal_decomposition(g: UGraph, bound: int = EXACT_MIS_BOUND) -> list[frozenset[str]]:
    """Fewest groups reachable by peeling maximum independent sets.

    Starts from the lexicographic greedy peeling and only searches the
    other tied maximum sets when the greedy count is above the clique
    lower bound.  Ties between equally short decompositions keep the
    first one found in lexicographic search order.
    """
    _check_bound(g, bound)
    greedy = decompose_into_independent_sets(g, lambda h: exact_max_independent_set(h, bound))
    lower = maximum_clique_size(g)
    if len(greedy) <= lower:
        return greedy

    best = greedy
    visited: dict[frozenset[str], int] = {}

    def search(verts: frozenset[str], acc: list[frozenset[str]]):
        nonlocal best
        if not verts:
            if len(acc) < len(best):
                best = list(acc)
            return
        if visited.get(verts, len(g) + 1) <= len(acc):
            return
        visited[verts] = len(acc)
        sub = g.induced(verts)
        if len(acc) + maximum_clique_size(sub) >= len(best):
            return
        for s in maximum_independent_sets(sub):
            acc.append(s)
            search(verts - s, acc)
            acc.pop()
            if len(best) == lower:
                return

    search(g.vertices, [])
    return best


# -- directed graphs ---------------------------------------------------------

def find_cycle(g: Digraph, within: Iterable[str] | None = None) -> list[str] | None:
    """Return a witness cycle ``[v0, v1, ..., v0]`` or None if acyclic.

    The witness starts at its smallest vertex.
    """
    keep = set(g.succ if within is None else within)
    indeg = {v: len(g.pred[v] & keep) for v in keep}
    ready = [v for v, d in indeg.items() if d == 0]
    while ready:
        u = ready.pop()
        keep.discard(u)
        for v in g.succ[u]:
            if v in keep:
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
    if not keep:
        return None
    # Every leftover vertex has a leftover predecessor: walk backwards.
    v = min(keep)
    order: list[str] = []
    index: dict[str, int] = {}
    while v not in index:
        index[v] = len(order)
        order.append(v)
        v = min(g.pred[v] & keep)
    cycle = order[index[v]:][::-1]
    k = cycle.index(min(cycle))
    cycle = cycle[k:] + cycle[:k]
    return cycle + [cycle[0]]


def topological_sort(g: Digraph) -> list[str]:
    """Kahn's algorithm, always emitting the smallest available vertex."""
    indeg = {v: len(ps) for v, ps in g.pred.items()}
    heap = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order: list[str] = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in g.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) != len(g):
        raise CycleError(find_cycle(g) or [])
    return order


def iter_source_sink_paths(g: Digraph) -> Iterator[list[str]]:
    cycle = find_cycle(g)
    if cycle:
        raise CycleError(cycle)
    succ = {v: sorted(s) for v, s in g.succ.items()}
    for src in sorted(v for v, ps in g.pred.items() if not ps):
        path = [src]
        stack = [iter(succ[src])]
        if not succ[src]:
            yield [src]
            continue
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                path.pop()
                continue
            path.append(nxt)
            if succ[nxt]:
                stack.append(iter(succ[nxt]))
            else:
                yield list(path)
                path.pop()


def all_source_sink_paths(g: Digraph) -> list[list[str]]:
    """Every maximal path from an in-degree-0 vertex to an out-degree-0 vertex."""
    return list(iter_source_sink_paths(g))
