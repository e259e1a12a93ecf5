"""Büchi automata built from the DNF transition system.

Two constructions are provided.  For Release-free or Until-free formulas
the transition system over state formulas is already a Büchi automaton
(:func:`build_special`).  In general each state also carries a process set
of literals met since the last reset (:func:`build_general`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from . import graph
from .dnf import LiteralSet, alphabet_label, dnf, expansion_set, state_of
from .formula import ConjunctSet, Formula, atoms, is_release_free, is_until_free
from .obligation import covers, minimize, obligation_literals, state_obligations
from .printer import conjuncts_str, tagged_str

MODES = ("auto", "general", "release-free", "until-free")
MODE_ALIASES = {"rf": "release-free", "uf": "until-free", "special": "special"}


class ModeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class State:
    """A formula state with its process set.

    ``pending`` marks a state whose process set is empty although no
    obligation was discharged on the way in; such states are not accepting.
    Process sets hold occurrence-tagged literal nodes.
    """

    formula: ConjunctSet
    process: LiteralSet = frozenset()
    pending: bool = False

    def __str__(self) -> str:
        text = conjuncts_str(self.formula)
        if self.process:
            text += " | {" + ", ".join(tagged_str(g) for g in sorted(self.process)) + "}"
        elif self.pending:
            text += " | {true}"
        return text


@dataclass
class BuchiAutomaton:
    ap: tuple[str, ...]
    states: list
    initial: int
    accepting: frozenset[int]
    transitions: list[list[tuple[frozenset, int]]]  # labels over (name, polarity)
    mode: str = ""
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        for edges in self.transitions:
            for label, target in edges:
                assert 0 <= target < len(self.states)
                assert not any((n, not p) in label for n, p in label)

    @property
    def n_transitions(self) -> int:
        return sum(len(e) for e in self.transitions)

    def successors(self, q: int):
        return self.transitions[q]

    def state_name(self, q: int) -> str:
        return str(self.states[q])


class Stats(NamedTuple):
    states: int
    transitions: int
    accepting: int
    ap_count: int

    def line(self) -> str:
        return f"states={self.states} transitions={self.transitions} accepting={self.accepting}"


def stats(a: BuchiAutomaton) -> Stats:
    return Stats(len(a.states), a.n_transitions, len(a.accepting), len(a.ap))


def _explore(initial, expand):
    """Breadth-first state numbering; ``expand(key)`` yields (label, key)."""
    index = {initial: 0}
    order = [initial]
    transitions: list[list[tuple[LiteralSet, int]]] = []
    queue = deque([initial])
    while queue:
        key = queue.popleft()
        edges: dict[tuple[LiteralSet, int], None] = {}
        for label, target in expand(key):
            if target not in index:
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            edges[(label, index[target])] = None
        transitions.append(list(edges))
    return order, transitions


def build_special(f: Formula, mode: str) -> BuchiAutomaton:
    """Release-free or Until-free construction over plain formula states."""
    if mode == "release-free" and not is_release_free(f):
        raise ModeMismatch("formula contains a Release operator")
    if mode == "until-free" and not is_until_free(f):
        raise ModeMismatch("formula contains an Until operator")
    if mode not in ("release-free", "until-free"):
        raise ValueError(f"not a special mode: {mode!r}")

    order, transitions = _explore(
        state_of(f), lambda s: ((alphabet_label(c.label), c.next) for c in dnf(s))
    )
    if mode == "release-free":
        accepting = frozenset(i for i, s in enumerate(order) if s == ())
    else:
        accepting = frozenset(range(len(order)))
    return BuchiAutomaton(
        ap=tuple(atoms(f)),
        states=[State(s) for s in order],
        initial=0,
        accepting=accepting,
        transitions=transitions,
        mode=mode,
    )


def build_general(
    f: Formula,
    merge: bool = True,
    restrict: bool = True,
    min_os: bool = False,
) -> BuchiAutomaton:
    """Formula/process-set construction for arbitrary formulas.

    ``merge`` identifies states whose formulas have the same DNF and whose
    process data agree; ``restrict`` keeps only literals that occur in the
    state's obligation set.
    """

    def obligations(formula: ConjunctSet):
        os = state_obligations(formula)
        return minimize(os) if min_os else os

    representative: dict = {}

    def key_of(state: State):
        ident = dnf(state.formula) if merge else state.formula
        return representative.setdefault((ident, state.process, state.pending), state)

    def expand(state: State):
        for clause in dnf(state.formula):
            os = obligations(clause.next)
            gathered = state.process | clause.label
            if covers(os, gathered):
                target = State(clause.next)
            else:
                if restrict:
                    gathered &= obligation_literals(os)
                target = State(clause.next, frozenset(gathered), not gathered)
            yield alphabet_label(clause.label), key_of(target)

    initial = key_of(State(state_of(f)))
    order, transitions = _explore(initial, expand)
    accepting = frozenset(
        i for i, s in enumerate(order) if not s.process and not s.pending
    )
    return BuchiAutomaton(
        ap=tuple(atoms(f)),
        states=order,
        initial=0,
        accepting=accepting,
        transitions=transitions,
        mode="general",
    )


def prune_dead(a: BuchiAutomaton) -> BuchiAutomaton:
    """Drop states from which no accepting cycle is reachable.

    The initial state always survives, possibly without edges.
    """
    succ = lambda q: (t for _, t in a.transitions[q])
    on_cycle = {q for q in a.accepting if q in graph.reachable(succ(q), succ)}
    pred: dict[int, set[int]] = {q: set() for q in range(len(a.states))}
    for q, edges in enumerate(a.transitions):
        for _, t in edges:
            pred[t].add(q)
    live = graph.reachable(on_cycle, lambda q: pred[q])
    keep = sorted(live | {a.initial})
    renum = {q: i for i, q in enumerate(keep)}
    return BuchiAutomaton(
        ap=a.ap,
        states=[a.states[q] for q in keep],
        initial=renum[a.initial],
        accepting=frozenset(renum[q] for q in a.accepting if q in live),
        transitions=[
            [(label, renum[t]) for label, t in a.transitions[q] if t in live]
            for q in keep
        ],
        mode=a.mode,
        info=dict(a.info),
    )


def select_mode(f: Formula, mode: str = "auto") -> str:
    mode = MODE_ALIASES.get(mode, mode)
    if mode == "auto":
        if is_release_free(f):
            return "release-free"
        if is_until_free(f):
            return "until-free"
        return "general"
    if mode == "special":
        if is_release_free(f):
            return "release-free"
        if is_until_free(f):
            return "until-free"
        raise ModeMismatch("formula has both Until and Release operators")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def translate(
    f: Formula,
    mode: str = "auto",
    merge: bool = True,
    restrict: bool = True,
    min_os: bool = False,
    prune: bool = False,
) -> BuchiAutomaton:
    """Translate an NNF formula into a Büchi automaton."""
    chosen = select_mode(f, mode)
    if chosen == "general":
        a = build_general(f, merge=merge, restrict=restrict, min_os=min_os)
    else:
        a = build_special(f, chosen)
    a.info["expansion_set_size"] = len(expansion_set(f))
    return prune_dead(a) if prune else a
