"""Obligation sets and finite-word satisfaction.

An obligation is a set of literals; a formula's obligation set lists the
alternatives one of which an accepting run has to meet over and over.
"""

from __future__ import annotations

from functools import lru_cache
from typing import AbstractSet, Iterable, Sequence

from .dnf import dnf, satisfies
from .formula import (
    And,
    ConjunctSet,
    FalseF,
    Formula,
    Lit,
    Next,
    Or,
    Release,
    TrueF,
    Until,
)

Obligation = frozenset  # frozenset[Lit], occurrence-tagged
ObligationSet = frozenset  # frozenset[Obligation]

EMPTY_OBLIGATION: Obligation = frozenset()


class SearchLimitExceeded(RuntimeError):
    pass


def _pairwise_unions(left: ObligationSet, right: ObligationSet) -> ObligationSet:
    return frozenset(a | b for a in left for b in right)


@lru_cache(maxsize=None)
def obligation_set(f: Formula) -> ObligationSet:
    match f:
        case TrueF():
            return frozenset({EMPTY_OBLIGATION})
        case FalseF():
            return frozenset()
        case Lit():
            return frozenset({frozenset({f})})
        case Next(g):
            return obligation_set(g)
        case Or(l, r):
            return obligation_set(l) | obligation_set(r)
        case And(l, r):
            return _pairwise_unions(obligation_set(l), obligation_set(r))
        case Until(_, r) | Release(_, r):
            return obligation_set(r)
    raise TypeError(f"not an NNF formula: {f!r}")


@lru_cache(maxsize=None)
def state_obligations(state: ConjunctSet) -> ObligationSet:
    """Obligation set of a conjunct set (the And rule over its members)."""
    result: ObligationSet = frozenset({EMPTY_OBLIGATION})
    for g in state:
        result = _pairwise_unions(result, obligation_set(g))
    return result


def minimize(os: ObligationSet) -> ObligationSet:
    """Drop every obligation that strictly contains another one."""
    return frozenset(o for o in os if not any(p < o for p in os))


def obligation_literals(os: ObligationSet) -> frozenset[Lit]:
    return frozenset().union(*os) if os else frozenset()


def covers(os: ObligationSet, s: AbstractSet[Lit]) -> bool:
    return any(o <= s for o in os)


def sat_once(s: AbstractSet[Lit], f: Formula | ConjunctSet) -> bool:
    """Set-level satisfaction: does the literal set ``s`` discharge ``f``?"""
    if isinstance(f, tuple):
        return all(sat_once(s, g) for g in f)
    match f:
        case TrueF():
            return True
        case FalseF():
            return False
        case Lit():
            return f in s
        case Next(g):
            return sat_once(s, g)
        case Until(_, r) | Release(_, r):
            return sat_once(s, r)
        case And(l, r):
            return sat_once(s, l) and sat_once(s, r)
        case Or(l, r):
            return sat_once(s, l) or sat_once(s, r)
    raise TypeError(f"not an NNF formula: {f!r}")


def _sat_shifted(labels: Sequence[AbstractSet[Lit]], start: int, f: Formula) -> bool:
    # X consumes the first label of the remaining segment instead of passing through.
    s = frozenset().union(*labels[start:]) if start < len(labels) else frozenset()
    match f:
        case TrueF():
            return True
        case FalseF():
            return False
        case Lit():
            return f in s
        case Next(g):
            return _sat_shifted(labels, start + 1, g)
        case Until(_, r) | Release(_, r):
            return _sat_shifted(labels, start, r)
        case And(l, r):
            return _sat_shifted(labels, start, l) and _sat_shifted(labels, start, r)
        case Or(l, r):
            return _sat_shifted(labels, start, l) or _sat_shifted(labels, start, r)
    raise TypeError(f"not an NNF formula: {f!r}")


def expansion_paths(
    word: Sequence[AbstractSet[str]],
    state: ConjunctSet,
    limit: int = 10_000,
) -> Iterable[tuple[tuple[frozenset, ...], ConjunctSet]]:
    """Label sequences of expansion paths from ``state`` consistent with ``word``.

    Yields ``(labels, end_state)`` pairs, deduplicated.  Raises
    :class:`SearchLimitExceeded` once a frontier grows past ``limit``.
    """
    frontier = {((), state)}
    for letter in word:
        nxt = set()
        for labels, s in frontier:
            for clause in dnf(s):
                if satisfies(letter, clause.label):
                    nxt.add((labels + (clause.label,), clause.next))
        if len(nxt) > limit:
            raise SearchLimitExceeded(f"path width {len(nxt)} exceeds {limit}")
        frontier = nxt
    return frontier


def sat_f(
    word: Sequence[AbstractSet[str]],
    state: ConjunctSet,
    target: ConjunctSet | None = None,
    next_rule: str = "set",
    limit: int = 10_000,
) -> bool:
    """Finite-word satisfaction of ``state`` by the nonempty ``word``.

    True when some expansion path along ``word`` collects labels whose union
    discharges ``state``.  With ``target`` the path must also end there.
    ``next_rule="shift"`` evaluates ``X g`` against the word minus its first
    letter rather than against the whole label union.
    """
    if not word:
        raise ValueError("word must be nonempty")
    if next_rule not in ("set", "shift"):
        raise ValueError(f"unknown next_rule {next_rule!r}")
    for labels, end in expansion_paths(word, state, limit):
        if target is not None and end != target:
            continue
        if next_rule == "set":
            if sat_once(frozenset().union(*labels), state):
                return True
        elif all(_sat_shifted(labels, 0, g) for g in state):
            return True
    return False
