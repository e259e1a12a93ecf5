import random

import pytest
from hypothesis import given, strategies as st

from conftest import nnf_formulas
from ltl2nba.automaton import translate
from ltl2nba.formula import FALSE, TRUE, Lit, Next, is_nnf, nnf, Not, subformulas
from ltl2nba.graph import accepting_lasso, reachable
from ltl2nba.oracle import (
    SAMPLER_WEIGHTS, LassoWord, accepts_lasso, alphabet, enumerate_lassos,
    eval_lasso, eval_lasso_direct, is_empty, lasso_count, product, random_formula,
    sample_formulas,
)
from ltl2nba.parser import parse

letters = st.frozensets(st.sampled_from(["a", "b", "c"]))
words = st.builds(
    LassoWord, st.lists(letters, max_size=3).map(tuple), st.lists(letters, min_size=1, max_size=3).map(tuple)
)


def test_lasso_word_basics():
    w = LassoWord([{"a"}], [{"b"}, set()])
    assert len(w) == 3
    assert [w.letter(i) for i in range(5)] == [{"a"}, {"b"}, set(), {"b"}, set()]
    assert w.successor(2) == 1
    assert str(w) == "{a}({b}{})^w"
    with pytest.raises(ValueError):
        LassoWord([{"a"}], [])


def test_shift():
    assert LassoWord([{"a"}], [{"b"}]).shift() == LassoWord((), [{"b"}])
    assert LassoWord((), [{"a"}, {"b"}]).shift() == LassoWord((), [{"b"}, {"a"}])


def test_lasso_counts():
    assert len(list(enumerate_lassos(["a"], 0, 1))) == 2 == lasso_count(1, 0, 1)
    assert len(list(enumerate_lassos(["a"], 1, 1))) == 6 == lasso_count(1, 1, 1)
    assert lasso_count(2, 2, 3) == 1764
    words = list(enumerate_lassos(["a", "b"], 1, 2))
    assert len(set(words)) == len(words) == lasso_count(2, 1, 2)


def test_alphabet_order():
    assert alphabet(["a", "b"]) == [set(), {"a"}, {"b"}, {"a", "b"}]


@pytest.mark.parametrize(
    "text, word, expected",
    [
        ("a U b", LassoWord([{"a"}, {"a"}], [{"b"}]), True),
        ("a U b", LassoWord((), [{"a"}]), False),
        ("G F a", LassoWord([{"a"}], [set(), {"a"}]), True),
        ("F G a", LassoWord([{"a"}], [set(), {"a"}]), False),
        ("X X a", LassoWord([set()], [set(), {"a"}]), True),
        ("a R b", LassoWord((), [{"b"}]), True),
        ("True", LassoWord((), [set()]), True),
        ("False", LassoWord((), [set()]), False),
    ],
)
def test_eval_examples(text, word, expected):
    f = parse(text)
    assert eval_lasso(f, word) == expected
    assert eval_lasso_direct(f, word) == expected


@given(nnf_formulas(), words)
def test_two_evaluators_agree(f, w):
    assert eval_lasso(f, w) == eval_lasso_direct(f, w)


@given(nnf_formulas(), words)
def test_next_shifts_the_word(f, w):
    assert eval_lasso(Next(f), w) == eval_lasso(f, w.shift())


@given(nnf_formulas(), words)
def test_negation_complements(f, w):
    assert eval_lasso(nnf(Not(f)), w) != eval_lasso(f, w)


@given(nnf_formulas(), words, st.integers(1, 3))
def test_unrolling_the_loop_changes_nothing(f, w, k):
    unrolled = LassoWord(w.stem + w.loop, w.loop * k)
    assert eval_lasso(f, unrolled) == eval_lasso(f, w)


def test_accepts_lasso_on_small_automata():
    a = translate(parse("G F a"))
    assert accepts_lasso(a, LassoWord([set()], [{"a"}, set()]))
    assert not accepts_lasso(a, LassoWord([{"a"}], [set()]))


def test_emptiness_with_witness():
    empty, witness = is_empty(translate(parse("a & !a")))
    assert empty and witness is None
    f = parse("F G a & G F b")
    empty, witness = is_empty(translate(f))
    assert not empty
    assert eval_lasso(f, witness)


def test_product_of_contradictory_properties_is_empty():
    a, b = translate(parse("G F a")), translate(parse("F G !a"))
    assert is_empty(product(a, b))[0]
    assert not is_empty(product(a, translate(parse("G F !a"))))[0]


def test_witnesses_are_accepted():
    for f in sample_formulas(9, 40, 8, 2):
        a = translate(f)
        empty, w = is_empty(a)
        if not empty:
            assert accepts_lasso(a, w)
            assert eval_lasso(f, w)


def test_product_language_is_intersection(small_grid):
    for f, g in zip(sample_formulas(12, 20, 6, 2), sample_formulas(13, 20, 6, 2)):
        p = product(translate(f), translate(g))
        for w in small_grid:
            assert accepts_lasso(p, w) == (eval_lasso(f, w) and eval_lasso(g, w))


def test_sampler_is_reproducible_and_bounded():
    first = sample_formulas(7, 100, 8, 2)
    assert first == sample_formulas(7, 100, 8, 2)
    for f in first:
        assert f.size <= 8
        assert is_nnf(f)
        assert TRUE not in subformulas(f) and FALSE not in subformulas(f)
        tags = [g.atom.occurrence for g in subformulas(f) if isinstance(g, Lit)]
        assert len(tags) == len(set(tags))
    assert abs(sum(SAMPLER_WEIGHTS.values()) - 1) < 1e-12


def test_sampler_respects_size_one():
    rng = random.Random(0)
    assert all(isinstance(random_formula(rng, 1, ["a"]), Lit) for _ in range(20))


def test_nested_dfs():
    succ = {0: [("x", 1)], 1: [("y", 2)], 2: [("z", 1)], 3: []}
    stem, cycle = accepting_lasso(0, lambda v: succ[v], lambda v: v == 2)
    path = stem + cycle
    assert path[0][0] == 0
    assert all(x[2] == y[0] for x, y in zip(path, path[1:]))
    assert cycle[-1][2] == cycle[0][0]
    assert any(v == 2 for v, _, _ in cycle)
    assert accepting_lasso(0, lambda v: succ[v], lambda v: v == 0) is None
    assert accepting_lasso(3, lambda v: succ[v], lambda v: v == 3) is None
    assert reachable([0], lambda v: (t for _, t in succ[v])) == {0, 1, 2}
