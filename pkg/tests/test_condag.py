import random

from oracles import random_words
from sireminer.condag import (
    DagState, add_or_break, breakpoint_index, build_dag, con_dag, con_dag_trace,
    consistent, repair_partitions,
)
from sireminer.core import ExampleSet
from sireminer.graphs import Digraph, find_cycle
from sireminer.lang import accepts_all


def arcs(st):
    return {u + "->" + v for u, v in st.g.arcs}


def test_add_to_empty_graph():
    st = add_or_break(DagState(), "ab", "a", "b")
    assert arcs(st) == {"a->b"}


def test_implied_order_is_noop():
    st = DagState(g=Digraph("ab", ["ab"]))
    add_or_break(st, "ab", "a", "b")
    assert arcs(st) == {"a->b"} and st.p == []


def test_breakpoint_from_projection():
    assert breakpoint_index(list("abcd"), list("cda")) == 2
    assert breakpoint_index(list("ab"), list("ab")) is None
    assert breakpoint_index(list("ac"), list("acab")) == 1
    assert breakpoint_index(list("ab"), list("xyz")) is None


def test_figure_one_break():
    st = DagState()
    consistent(st, ["β", "a", "b", "c", "d", "γ"])
    assert st.p == [] and st.q == []
    add_or_break(st, list("cda"), "d", "a")
    assert arcs(st) == {"β->a", "a->b", "β->c", "c->d", "b->γ", "d->γ"}
    assert st.p == [("a", "b")] and st.q == [("c", "d")]


def test_figure_one_full_words():
    st = build_dag([["β", "a", "b", "c", "d", "γ"], list("cda")], check=True)
    assert arcs(st) == {"β->a", "a->b", "β->c", "c->d", "b->γ", "d->γ"}
    assert st.p == [("a", "b")] and st.q == [("c", "d")]


def test_propagation_acab():
    st = consistent(DagState(), list("acab"))
    assert st.p == [("a",)] and st.q == [("c",)]
    assert arcs(st) == {"a->b", "c->b"}


def test_repeated_symbol_word_is_noop():
    st = consistent(DagState(), list("ddd"))
    assert arcs(st) == set() and st.p == []


def test_paper_sample_trace():
    r = con_dag_trace(ExampleSet.from_strings(["abcd", "aadbc", "bdd"]), check=True)
    assert arcs(r.state) == {"a->b", "b->c", "a->d"}
    assert r.state.p == [("b", "c")] and r.state.q == [("d",)]
    assert r.paths == [list("abc"), list("ad")]
    assert r.repaired == [set("abc"), {"d"}]
    assert str(r.sire) == "a* b c? & d+"


def test_repair_examples():
    cons = {tuple(x) for x in ("bd", "cd", "db", "dc")}
    assert repair_partitions([list("abc"), list("ad")], cons) == [set("abc"), {"d"}]
    assert repair_partitions([list("ab")], set()) == [set("ab")]
    out = repair_partitions([list("abd"), list("acd")], {("b", "c"), ("c", "b")})
    assert out == [set("abd"), {"c"}]


def test_con_dag_examples():
    assert str(con_dag(ExampleSet.from_strings(["ab"]))) == "a b"
    e = ExampleSet.from_strings(["abc", "cab"])
    s = con_dag(e)
    assert str(s) == "a b & c"
    assert accepts_all(e, s)
    assert str(con_dag(ExampleSet.from_strings(["abcd", "dabc"]))) == "a b c & d"


def test_pq_entries_cross_factors_on_worked_examples():
    for words in (["abcd", "aadbc", "bdd"], ["βabcdγ", "cda"], ["acab"]):
        r = con_dag_trace(ExampleSet.from_strings(words))
        where = {s: i for i, c in enumerate(r.chains) for s in c}
        for p, q in zip(r.state.p, r.state.q):
            assert all(where[x] != where[y] for x in p for y in q)


def test_random_properties():
    rng = random.Random(11)
    for _ in range(200):
        e = ExampleSet(random_words(rng))
        st = DagState()
        for w in e.words:
            consistent(st, w)
            assert find_cycle(st.g) is None
            assert len(st.p) == len(st.q) and len(st.s) == len(st.t)
        r = con_dag_trace(e)
        assert accepts_all(e, r.sire)
        assert sorted(s for c in r.chains for s in c) == list(e.alphabet)
        where = {s: i for i, c in enumerate(r.chains) for s in c}
        assert all(where[u] != where[v] for u, v in r.constraint)
        assert str(con_dag(e)) == str(r.sire)
