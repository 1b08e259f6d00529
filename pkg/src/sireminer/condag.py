"""Incremental DAG construction with path breaking (conDAG).

Words are read one adjacent pair at a time.  A pair either adds an arc,
is already implied by the graph, or contradicts an existing path, in
which case every such path is cut in two at the point where the current
word disagrees with it.  The two halves are remembered in ``p``/``q`` so
they are never joined again.  Source-to-sink paths of the final graph are
the candidate chains.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .conminer import Inference, order_groups
from .core import ExampleSet, Sire
from .graphs import Digraph, all_source_sink_paths, find_cycle
from .lang import infer_operators
from .orders import Pair, split_pairs, transitive_closure

log = logging.getLogger(__name__)

_NONE: frozenset[int] = frozenset()


@dataclass
class DagState:
    g: Digraph = field(default_factory=Digraph)
    p: list[tuple[str, ...]] = field(default_factory=list)
    q: list[tuple[str, ...]] = field(default_factory=list)
    s: list[tuple[str, ...]] = field(default_factory=list)
    t: list[tuple[str, ...]] = field(default_factory=list)
    # symbol -> indices i with symbol in p[i] (resp. q[i])
    p_index: dict[str, set[int]] = field(default_factory=dict)
    q_index: dict[str, set[int]] = field(default_factory=dict)
    skipped_breaks: int = 0

    def across(self, x: str, y: str) -> bool:
        """True if x and y sit on opposite sides of some recorded split."""
        px, qx = self.p_index.get(x, _NONE), self.q_index.get(x, _NONE)
        py, qy = self.p_index.get(y, _NONE), self.q_index.get(y, _NONE)
        return not px.isdisjoint(qy) or not qx.isdisjoint(py)

    def record(self, head: Sequence[str], tail: Sequence[str]) -> None:
        i = len(self.p)
        head, tail = tuple(head), tuple(tail)
        self.p.append(head)
        self.q.append(tail)
        self.s.append(head)
        self.t.append(tail)
        for x in head:
            self.p_index.setdefault(x, set()).add(i)
        for x in tail:
            self.q_index.setdefault(x, set()).add(i)

    def joins_split(self, a: str, b: str) -> bool:
        """Would arc a->b create a path between p[i] and q[i] for some i?"""
        if not self.p:
            return False
        up = self.g.ancestors(a) | {a}
        down = self.g.descendants(b) | {b}
        up_p = set().union(*(self.p_index.get(x, ()) for x in up))
        up_q = set().union(*(self.q_index.get(x, ()) for x in up))
        down_p = set().union(*(self.p_index.get(x, ()) for x in down))
        down_q = set().union(*(self.q_index.get(x, ()) for x in down))
        return not up_p.isdisjoint(down_q) or not up_q.isdisjoint(down_p)


def _paths(g: Digraph, src: str, dst: str) -> Iterator[list[str]]:
    """Simple paths src ~> dst in lexicographic order."""
    useful = g.ancestors(dst)
    if src not in useful:
        return
    path = [src]
    stack = [iter(sorted(g.succ[src]))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        if nxt == dst:
            yield path + [dst]
        elif nxt in useful:
            path.append(nxt)
            stack.append(iter(sorted(g.succ[nxt])))


def breakpoint_index(path: Sequence[str], word: Sequence[str]) -> int | None:
    """Index of the first path vertex in the word's projection onto the path.

    Each vertex is placed at its last occurrence in the word.  Returns None
    when the cut is undefined: no path vertex in the word, or the
    projection already starts at the head of the path.
    """
    on_path = set(path)
    last = {x: i for i, x in enumerate(word) if x in on_path}
    if not last:
        return None
    first = min(last, key=last.__getitem__)
    k = path.index(first)
    return k if k > 0 else None


def _break_paths(st: DagState, w: Sequence[str], a: str, b: str) -> None:
    g = st.g
    skipped: set[tuple[str, ...]] = set()
    while True:
        path = next((p for p in _paths(g, b, a) if tuple(p) not in skipped), None)
        if path is None:
            return
        k = breakpoint_index(path, w)
        if k is None:
            skipped.add(tuple(path))
            st.skipped_breaks += 1
            continue
        before, cut = path[k - 1], path[k]
        heads = set(g.pred[b])
        tails = set(g.succ[a])
        g.remove_arc(before, cut)
        for beta in heads:
            if beta != cut:
                g.add_arc(beta, cut)
        for gamma in tails:
            if gamma != before:
                g.add_arc(before, gamma)
        st.record(path[:k], path[k:])


def add_or_break(st: DagState, w: Sequence[str], a: str, b: str) -> DagState:
    if a == b:
        return st
    g = st.g
    g.add_vertex(a)
    g.add_vertex(b)
    if g.has_path(a, b):
        return st
    if g.has_path(b, a):
        if not st.across(a, b):
            _break_paths(st, w, a, b)
        return st
    if not st.joins_split(a, b):
        g.add_arc(a, b)
    return st


def consistent(st: DagState, w: Sequence[str]) -> DagState:
    st.s.clear()
    st.t.clear()
    for x in w:
        st.g.add_vertex(x)
    for i in range(len(w) - 1):
        x, y = w[i], w[i + 1]
        if x != y and not st.across(x, y):
            add_or_break(st, w, x, y)
        for j in range(len(st.s)):
            if x in st.s[j]:
                c = st.t[j][-1]
                if c != y and not st.across(c, y):
                    add_or_break(st, w, c, y)
            if x in st.t[j]:
                c = st.s[j][-1]
                if c != y and not st.across(c, y):
                    add_or_break(st, w, c, y)
    return st


def build_dag(words: Iterable[Sequence[str]], check: bool = False) -> DagState:
    st = DagState()
    for w in words:
        consistent(st, w)
        if check:
            cyc = find_cycle(st.g)
            assert cyc is None, f"graph became cyclic: {cyc}"
    return st


def _conflicts(xs: Iterable[str], ys: Iterable[str], constraint: frozenset[Pair]) -> bool:
    ys = list(ys)
    return any((x, y) in constraint for x in xs for y in ys)


def repair_partitions(c: Sequence[Sequence[str]], constraint: Iterable[Pair]) -> list[frozenset[str]]:
    """Turn overlapping candidate chains into a partition.

    Chains are visited longest first.  For two chains with a forbid pair
    between them, the shorter one (on equal length the lexicographically
    later one) gives up the symbols they share.  Chains that still share
    symbols are then merged.
    """
    constraint = frozenset(constraint)
    seqs = [list(x) for x in c]
    order = sorted(range(len(seqs)), key=lambda i: (-len(seqs[i]), tuple(seqs[i])))
    for ii, i in enumerate(order):
        for j in order[ii + 1:]:
            ci, cj = seqs[i], seqs[j]
            if not ci or not cj or not _conflicts(ci, cj, constraint):
                continue
            if len(ci) != len(cj):
                loser = ci if len(ci) < len(cj) else cj
            else:
                loser = ci if tuple(ci) > tuple(cj) else cj
            other = cj if loser is ci else ci
            common = set(other)
            loser[:] = [x for x in loser if x not in common]

    # merge chains sharing a symbol; blocks keep first-appearance order
    live = [seqs[i] for i in order if seqs[i]]
    parent = list(range(len(live)))

    def root(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    owner: dict[str, int] = {}
    for k, seq in enumerate(live):
        for x in seq:
            if x in owner:
                ra, rb = root(owner[x]), root(k)
                parent[max(ra, rb)] = min(ra, rb)
            else:
                owner[x] = k
    blocks: dict[int, set[str]] = {}
    for k, seq in enumerate(live):
        blocks.setdefault(root(k), set()).update(seq)
    return [frozenset(blocks[r]) for r in sorted(blocks)]


def separate_forbidden(blocks: Iterable[Iterable[str]], constraint: Iterable[Pair]) -> tuple[list[frozenset[str]], int]:
    """Split blocks that still hold a forbid pair.

    Symbols go, smallest first, into the first sub-block they do not
    conflict with.  Returns the new blocks and how many blocks were split.
    """
    constraint = frozenset(constraint)
    out: list[frozenset[str]] = []
    splits = 0
    for blk in blocks:
        parts: list[set[str]] = []
        for x in sorted(blk):
            for part in parts:
                if not _conflicts([x], part, constraint):
                    part.add(x)
                    break
            else:
                parts.append({x})
        splits += len(parts) > 1
        out.extend(frozenset(p) for p in parts)
    return out, splits


@dataclass
class DagInference(Inference):
    state: DagState | None = None
    paths: list[list[str]] = field(default_factory=list)
    repaired: list[frozenset[str]] = field(default_factory=list)
    forced_splits: int = 0


def con_dag_trace(e: ExampleSet, check: bool = False) -> DagInference:
    tr = transitive_closure(e)
    l2, constraint = split_pairs(tr)
    st = build_dag(e.words, check=check)
    paths = all_source_sink_paths(st.g)
    repaired = repair_partitions(paths, constraint)
    covered = set().union(*repaired) if repaired else set()
    repaired += [frozenset([x]) for x in e.alphabet if x not in covered]
    blocks, forced = separate_forbidden(repaired, constraint)
    if forced:
        log.info("%d repaired block(s) still held forbid pairs and were split", forced)
    chains, evicted = order_groups(blocks, l2)
    if evicted:
        log.info("cyclic order inside a group; evicted %s", evicted)
    sire = infer_operators(e, chains) if e.alphabet else None
    return DagInference(sire, chains, tr, l2, constraint, blocks, evicted,
                        state=st, paths=paths, repaired=repaired, forced_splits=forced)


def con_dag(e: ExampleSet) -> Sire:
    return con_dag_trace(e).sire
