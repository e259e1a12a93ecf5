"""Disjunctive normal form of LTL formulas and the expansion relation.

A formula is rewritten as a disjunction of clauses ``alpha & X psi`` where
``alpha`` is a consistent set of literals and ``psi`` a conjunct set whose
elements are literals, constants, or Until/Release/Next formulas.  States
of every automaton built here are such conjunct sets ("state formulas"),
the empty set standing for ``True``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, Iterable

from .formula import (
    And,
    ConjunctSet,
    FalseF,
    Formula,
    Lit,
    Literal,
    Next,
    Or,
    Release,
    TrueF,
    Until,
    canonical,
    cf,
    cl,
    subformula_count,
)

# Clause labels are sets of occurrence-tagged literal nodes, so obligation
# bookkeeping can tell apart two positions of the same atom.  Letters are
# matched on (name, polarity) only.
LiteralSet = frozenset  # frozenset[Lit]

_Raw = frozenset  # frozenset[tuple[LiteralSet, frozenset[Formula]]]


def alphabet_label(label: AbstractSet[Lit]) -> frozenset[Literal]:
    """Forget occurrence tags: the constraint a label puts on a letter."""
    return frozenset(g.literal for g in label)


def is_consistent(label: AbstractSet[Lit]) -> bool:
    pairs = alphabet_label(label)
    return not any((name, not pos) in pairs for name, pos in pairs)


def satisfies(symbol: AbstractSet[str], label: AbstractSet[Lit]) -> bool:
    """Whether the letter ``symbol`` (set of true atoms) satisfies ``label``."""
    return all((g.atom.name in symbol) == g.positive for g in label)


@dataclass(frozen=True)
class Clause:
    label: LiteralSet
    next: ConjunctSet

    @property
    def sort_key(self):
        return (
            sorted(g.sort_key for g in self.label),
            tuple(g.sort_key for g in self.next),
        )


def _product(left: _Raw, right: _Raw) -> _Raw:
    out = set()
    for a1, n1 in left:
        for a2, n2 in right:
            label = a1 | a2
            if is_consistent(label):
                out.add((label, n1 | n2))
    return frozenset(out)


def split_or(f: Formula) -> frozenset[frozenset[Formula]]:
    """Distribute ``f`` into conjunct sets with no Or or And at the roots."""
    match f:
        case TrueF():
            return frozenset({frozenset()})
        case And(l, r):
            return frozenset(a | b for a in split_or(l) for b in split_or(r))
        case Or(l, r):
            return split_or(l) | split_or(r)
    return frozenset({frozenset({f})})


@lru_cache(maxsize=None)
def _dnf_node(f: Formula) -> _Raw:
    match f:
        case TrueF():
            return frozenset({(frozenset(), frozenset())})
        case FalseF():
            return frozenset()
        case Lit():
            return frozenset({(frozenset({f}), frozenset())})
        case Next(g):
            return frozenset((frozenset(), n) for n in split_or(g))
        case Until(l, r):
            again = frozenset({(frozenset(), frozenset({f}))})
            return _dnf_node(r) | _product(_dnf_node(l), again)
        case Release(l, r):
            again = frozenset({(frozenset(), frozenset({f}))})
            return _product(_dnf_node(l), _dnf_node(r)) | _product(_dnf_node(r), again)
        case Or(l, r):
            return _dnf_node(l) | _dnf_node(r)
        case And(l, r):
            return _product(_dnf_node(l), _dnf_node(r))
    raise TypeError(f"not an NNF formula: {f!r}")


def _finish(raw: _Raw) -> tuple[Clause, ...]:
    by_next: dict[frozenset, set[LiteralSet]] = {}
    for label, n in raw:
        by_next.setdefault(n, set()).add(label)
    # a & b & X psi is implied by a & X psi: keep only minimal labels per successor
    clauses = [
        Clause(label, canonical(n))
        for n, labels in by_next.items()
        for label in labels
        if not any(other < label for other in labels)
    ]
    return tuple(sorted(clauses, key=lambda c: c.sort_key))


@lru_cache(maxsize=None)
def dnf(state: ConjunctSet) -> tuple[Clause, ...]:
    """Clauses of the conjunction of ``state``, in canonical order."""
    raw: _Raw = frozenset({(frozenset(), frozenset())})
    for g in state:
        raw = _product(raw, _dnf_node(g))
        if not raw:
            break
    return _finish(raw)


def dnf_formula(f: Formula) -> tuple[Clause, ...]:
    return _finish(_dnf_node(f))


def state_of(f: Formula) -> ConjunctSet:
    """The state formula standing for ``f``."""
    return cf(f)


def successors(state: ConjunctSet, symbol: AbstractSet[str]) -> set[ConjunctSet]:
    return {c.next for c in dnf(state) if satisfies(symbol, c.label)}


def expansion_set(f: Formula, check_bound: bool = True) -> list[ConjunctSet]:
    """All state formulas reachable from ``f`` in one or more steps.

    Returned in breadth-first discovery order.
    """
    order: list[ConjunctSet] = []
    seen: set[ConjunctSet] = set()
    queue = deque(c.next for c in dnf(state_of(f)))
    while queue:
        s = queue.popleft()
        if s in seen:
            continue
        seen.add(s)
        order.append(s)
        queue.extend(c.next for c in dnf(s) if c.next not in seen)
    if check_bound:
        n = subformula_count(f)
        assert len(order) <= 2 ** (n + 1), (len(order), n)
    return order


def expandable(start: ConjunctSet) -> set[ConjunctSet]:
    """States reachable from ``start`` in one or more steps."""
    seen: set[ConjunctSet] = set()
    stack = [c.next for c in dnf(start)]
    while stack:
        s = stack.pop()
        if s not in seen:
            seen.add(s)
            stack.extend(c.next for c in dnf(s))
    return seen


def is_looping(state: ConjunctSet) -> bool:
    return state in expandable(state)


def check_clause(clause: Clause, closure: Iterable[Formula] | None = None) -> bool:
    """Structural clause invariant: literal label, Or/And-free next roots."""
    if not is_consistent(clause.label):
        return False
    if any(isinstance(g, (And, Or, TrueF)) for g in clause.next):
        return False
    if closure is not None and not set(clause.next) <= set(closure):
        return False
    return True


__all__ = [
    "Clause",
    "alphabet_label",
    "check_clause",
    "cl",
    "dnf",
    "dnf_formula",
    "expandable",
    "expansion_set",
    "is_consistent",
    "is_looping",
    "satisfies",
    "split_or",
    "state_of",
    "successors",
]
