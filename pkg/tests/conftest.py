import pytest
from hypothesis import settings, strategies as st

from ltl2nba.formula import (
    FALSE, TRUE, And, Atom, Finally, Globally, Iff, Implies, Lit, Next, Not, Or,
    Release, Until,
)
from ltl2nba.oracle import enumerate_lassos

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

NAMES = ("a", "b", "c")


def nnf_formulas(names=NAMES, constants=True):
    """Hypothesis strategy for NNF formulas with untagged atoms."""
    leaves = st.builds(lambda n, p: Lit(Atom(n), p), st.sampled_from(names), st.booleans())
    if constants:
        leaves = leaves | st.sampled_from([TRUE, FALSE])
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(Next, sub),
            *(st.builds(k, sub, sub) for k in (And, Or, Until, Release)),
        ),
        max_leaves=8,
    )


def raw_formulas(names=NAMES):
    """Strategy including negation and the F/G/->/<-> sugar."""
    leaves = st.builds(lambda n: Lit(Atom(n)), st.sampled_from(names)) | st.sampled_from([TRUE, FALSE])
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            *(st.builds(k, sub) for k in (Next, Not, Finally, Globally)),
            *(st.builds(k, sub, sub) for k in (And, Or, Until, Release, Implies, Iff)),
        ),
        max_leaves=8,
    )


@pytest.fixture(scope="session")
def small_grid():
    """Lassos over {a, b} with stem <= 1 and loop <= 2 (100 words)."""
    return list(enumerate_lassos(["a", "b"], 1, 2))
