import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import chain_partitions_bruteforce, closure_pairs, expand
from sireminer.core import Cpos, ExampleSet, Op, Sire, parse_sire
from sireminer.graphs import BoundExceededError
from sireminer.lang import (
    ChainMismatchError, accepts_all, chain_is_valid, enumerate_chain_partitions,
    infer_operators, minimal_oracle, sire_membership, symbol_stats,
)

PAPER = ExampleSet.from_strings(["abcd", "aadbc", "bdd"])


def test_infer_operators_paper():
    assert str(infer_operators(PAPER, [["a", "b", "c"], ["d"]])) == "a* b c? & d+"


def test_infer_operators_trivial():
    assert str(infer_operators(ExampleSet.from_strings(["x"]), [["x"]])) == "x"


def test_infer_operators_with_empty_word():
    e = ExampleSet([["x", "x"], []])
    assert symbol_stats(e) == {"x": (0, 2)}
    assert str(infer_operators(e, Cpos((("x",),)))) == "x*"


def test_infer_operators_mismatch():
    with pytest.raises(ChainMismatchError):
        infer_operators(PAPER, [["a", "b"], ["d"]])


def test_membership_examples():
    assert sire_membership(list("aadbc"), parse_sire("a* b c? & d+"))
    assert not sire_membership(list("ba"), parse_sire("a b"))
    s = parse_sire("a b c & d")
    assert sire_membership(list("adbc"), s)
    assert not sire_membership(list("dacb"), s)
    assert not sire_membership(list("abcde"), s)


def test_membership_abc_and_d_by_expansion():
    lang = expand([[("a", "1"), ("b", "1"), ("c", "1")], [("d", "1")]])
    assert lang == {tuple(w) for w in ("abcd", "abdc", "adbc", "dabc")}
    s = parse_sire("a b c & d")
    for w in itertools.permutations("abcd"):
        assert sire_membership(w, s) == (w in lang)


@st.composite
def small_sires(draw):
    syms = draw(st.lists(st.sampled_from("abcd"), min_size=1, max_size=4, unique=True))
    cuts = sorted(draw(st.sets(st.integers(1, len(syms) - 1)))) if len(syms) > 1 else []
    bounds = [0] + cuts + [len(syms)]
    return [[(s, draw(st.sampled_from("1?+*"))) for s in syms[i:j]] for i, j in zip(bounds, bounds[1:])]


@settings(max_examples=200, deadline=None)
@given(small_sires(), st.lists(st.sampled_from("abcde"), max_size=6))
def test_membership_matches_expansion(factors, word):
    s = Sire.from_chains([[(x, Op(o)) for x, o in f] for f in factors])
    counts = {x: word.count(x) for x in set(word)}
    if any(c > 2 for c in counts.values()):
        return
    assert sire_membership(word, s) == (tuple(word) in expand(factors))


def _lah_total(n):
    from math import comb, factorial
    if n == 0:
        return 1
    return sum(comb(n - 1, k - 1) * factorial(n) // factorial(k) for k in range(1, n + 1))


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 3), (3, 13), (4, 73), (5, 501)])
def test_chain_partition_count(n, count):
    # sets of chains: equal to the ordered Bell numbers only up to n = 3
    syms = "abcde"[:n]
    got = list(enumerate_chain_partitions(syms))
    assert len(got) == len(set(got)) == count == _lah_total(n)
    if n <= 4:
        brute = chain_partitions_bruteforce(syms)
        assert {frozenset(c.chains) for c in got} == brute


def test_three_symbol_partitions_listed():
    got = {str(c) for c in enumerate_chain_partitions("abc")}
    listed = {"a b c", "a c b", "b a c", "b c a", "c a b", "c b a", "a b & c", "b a & c",
              "a c & b", "c a & b", "a & b c", "a & c b", "a & b & c"}
    assert got == listed


def test_enumeration_bound():
    with pytest.raises(BoundExceededError):
        next(enumerate_chain_partitions("abcdefghi"))


def test_oracle_prefers_abc_and_d():
    e = ExampleSet.from_strings(["abcd", "adbc"])
    optima = minimal_oracle(e)
    assert optima == [Cpos((("a", "b", "c"), ("d",)))]
    assert optima[0].profile == (3, 1)
    assert Cpos((("a", "d"), ("b", "c"))) not in optima
    assert Cpos((("a",), ("b", "c"), ("d",))) not in optima
    assert str(infer_operators(e, optima[0])) == "a b c & d"


def test_oracle_single_word():
    assert minimal_oracle(ExampleSet.from_strings(["ab"])) == [Cpos((("a", "b"),))]


def test_oracle_paper_sample_by_enumeration():
    tr = closure_pairs(["abcd", "aadbc", "bdd"])
    valid = [c for c in chain_partitions_bruteforce("abcd")
             if all(chain_is_valid(ch, tr) for ch in c)]
    fewest = min(len(c) for c in valid)
    best = max(tuple(sorted(map(len, c), reverse=True)) for c in valid if len(c) == fewest)
    assert (fewest, best) == (2, (3, 1))
    optima = minimal_oracle(PAPER)
    assert [c.chains for c in optima] == [(("a", "b", "c"), ("d",))]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.text(alphabet="abcd", max_size=7), min_size=1, max_size=5))
def test_oracle_optima_accept_sample(words):
    e = ExampleSet.from_strings(words)
    for c in minimal_oracle(e):
        assert accepts_all(e, infer_operators(e, c))


@given(st.lists(st.text(alphabet="abcd", max_size=7), min_size=2, max_size=5),
       st.permutations("abcd"))
def test_chain_validity_is_monotone(words, chain):
    full = closure_pairs(words)
    fewer = closure_pairs(words[1:])
    if chain_is_valid(chain, full):
        assert chain_is_valid(chain, fewer)
