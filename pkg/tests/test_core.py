import pytest
from hypothesis import given, strategies as st

from sireminer.core import (
    Cpos, DuplicateSymbolError, ExampleSet, Factor, Op, Sire, SireSyntaxError,
    format_sire, parse_sire,
)


def test_parse_paper_expression():
    s = parse_sire("a* b c? & d+")
    assert [f.terms for f in s.factors] == [
        (("a", Op.STAR), ("b", Op.ONE), ("c", Op.OPT)),
        (("d", Op.PLUS),),
    ]


def test_parse_single_symbol():
    s = parse_sire("a")
    assert s.factors == (Factor((("a", Op.ONE),)),)


def test_duplicate_symbol_names_it():
    with pytest.raises(DuplicateSymbolError) as exc:
        parse_sire("a b & a")
    assert exc.value.symbol == "a"


@pytest.mark.parametrize("text, pos", [("a & & b", 4), ("a b &", 5), ("a (b)", 2), ("", 0)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(SireSyntaxError) as exc:
        parse_sire(text)
    assert exc.value.position == pos


def test_format_canonical_order():
    s = Sire.from_chains([[("d", Op.PLUS)], [("a", Op.STAR), ("b", Op.ONE), ("c", Op.OPT)]])
    assert format_sire(s) == "a* b c? & d+"
    assert format_sire(Sire.from_chains([[("x", Op.ONE)]])) == "x"


def test_dotted_symbols():
    s = parse_sire("g1.m1* g1.m2* & g2.m1* g2.m2*")
    assert s.alphabet == {"g1.m1", "g1.m2", "g2.m1", "g2.m2"}
    assert str(s) == "g1.m1* g1.m2* & g2.m1* g2.m2*"


def test_cross_factor_duplicates_rejected_on_construction():
    with pytest.raises(DuplicateSymbolError):
        Sire.from_chains([[("a", Op.ONE)], [("a", Op.STAR)]])
    with pytest.raises(DuplicateSymbolError):
        Factor((("a", Op.ONE), ("a", Op.ONE)))
    with pytest.raises(DuplicateSymbolError):
        Cpos((("a", "b"), ("b",)))


def test_operator_from_counts():
    assert Op.from_counts(1, 1) is Op.ONE
    assert Op.from_counts(0, 1) is Op.OPT
    assert Op.from_counts(2, 5) is Op.PLUS
    assert Op.from_counts(0, 3) is Op.STAR


def test_example_set_alphabet_and_ids():
    e = ExampleSet.from_strings(["abcd", "", "bdd"])
    assert e.alphabet == ("a", "b", "c", "d")
    assert e.symbol_id("c") == 2
    assert e.words[1] == ()
    with pytest.raises(ValueError):
        ExampleSet([])


symbols = st.sampled_from(["a", "b", "c", "d", "e", "x.y", "n_1", "q-2"])
ops = st.sampled_from(list(Op))


@st.composite
def sires(draw):
    syms = draw(st.lists(symbols, min_size=1, max_size=8, unique=True))
    cuts = sorted(draw(st.sets(st.integers(1, len(syms) - 1), max_size=len(syms) - 1))) if len(syms) > 1 else []
    bounds = [0] + cuts + [len(syms)]
    return Sire.from_chains([[(s, draw(ops)) for s in syms[i:j]] for i, j in zip(bounds, bounds[1:])])


@given(sires())
def test_parse_format_round_trip(s):
    text = format_sire(s)
    assert parse_sire(text) == s
    assert format_sire(parse_sire(text)) == text


@given(sires(), st.randoms())
def test_factor_order_is_irrelevant(s, rnd):
    fs = list(s.factors)
    rnd.shuffle(fs)
    assert Sire(tuple(fs)) == s
