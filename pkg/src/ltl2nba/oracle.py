"""Independent checking machinery: lasso semantics, membership, emptiness.

Nothing here looks at DNF clauses or obligation sets; the translation is
judged only through the automata it produces.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import graph
from .automaton import BuchiAutomaton
from .formula import (
    And,
    FalseF,
    Formula,
    Lit,
    Next,
    Or,
    Release,
    TrueF,
    Until,
    Atom,
    retag,
)

Symbol = frozenset  # frozenset[str] of atoms that hold


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word ``stem . loop^omega``."""

    stem: tuple[Symbol, ...]
    loop: tuple[Symbol, ...]

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple(frozenset(s) for s in self.stem))
        object.__setattr__(self, "loop", tuple(frozenset(s) for s in self.loop))
        if not self.loop:
            raise ValueError("loop must be nonempty")

    def __len__(self) -> int:
        return len(self.stem) + len(self.loop)

    def letter(self, i: int) -> Symbol:
        return self.stem[i] if i < len(self.stem) else self.loop[(i - len(self.stem)) % len(self.loop)]

    def successor(self, i: int) -> int:
        return i + 1 if i + 1 < len(self) else len(self.stem)

    def letters(self) -> tuple[Symbol, ...]:
        return self.stem + self.loop

    def shift(self) -> "LassoWord":
        """The suffix starting at position 1."""
        if self.stem:
            return LassoWord(self.stem[1:], self.loop)
        return LassoWord((), self.loop[1:] + self.loop[:1])

    def __str__(self) -> str:
        show = lambda s: "{" + ",".join(sorted(s)) + "}"
        stem = "".join(show(s) for s in self.stem)
        return f"{stem}({''.join(show(s) for s in self.loop)})^w"


def eval_lasso(f: Formula, w: LassoWord) -> bool:
    """Truth of ``f`` at position 0 of ``w``."""
    return _positions(f, w)[0]


def _positions(f: Formula, w: LassoWord) -> list[bool]:
    """Truth value of ``f`` at each of the ``len(w)`` distinct positions."""
    k = len(w)
    succ = [w.successor(i) for i in range(k)]
    match f:
        case TrueF():
            return [True] * k
        case FalseF():
            return [False] * k
        case Lit(atom, positive):
            return [(atom.name in w.letter(i)) == positive for i in range(k)]
        case Next(g):
            inner = _positions(g, w)
            return [inner[succ[i]] for i in range(k)]
        case And(l, r):
            return [x and y for x, y in zip(_positions(l, w), _positions(r, w))]
        case Or(l, r):
            return [x or y for x, y in zip(_positions(l, w), _positions(r, w))]
        case Until(l, r) | Release(l, r):
            lv, rv = _positions(l, w), _positions(r, w)
            until = isinstance(f, Until)
            val = [not until] * k
            changed = True
            while changed:
                changed = False
                for i in reversed(range(k)):
                    if until:
                        new = rv[i] or (lv[i] and val[succ[i]])
                    else:
                        new = rv[i] and (lv[i] or val[succ[i]])
                    if new != val[i]:
                        val[i] = new
                        changed = True
            return val
    raise TypeError(f"not an NNF formula: {f!r}")


def eval_lasso_direct(f: Formula, w: LassoWord) -> bool:
    """Evaluate by the textbook quantifier definitions over one unrolling.

    Every suffix of ``w`` equals one starting at a position below
    ``len(w)``, so quantifying over ``len(w)`` further positions decides U
    and R.  Kept deliberately separate from :func:`eval_lasso`.
    """
    k = len(w)
    norm = lambda i: i if i < k else len(w.stem) + (i - len(w.stem)) % len(w.loop)

    @lru_cache(maxsize=None)
    def holds(g: Formula, i: int) -> bool:
        match g:
            case TrueF():
                return True
            case FalseF():
                return False
            case Lit(atom, positive):
                return (atom.name in w.letter(i)) == positive
            case Next(h):
                return holds(h, norm(i + 1))
            case And(l, r):
                return holds(l, i) and holds(r, i)
            case Or(l, r):
                return holds(l, i) or holds(r, i)
            case Until(l, r):
                for j in range(i, i + k + 1):
                    if holds(r, norm(j)):
                        return True
                    if not holds(l, norm(j)):
                        return False
                return False
            case Release(l, r):
                for j in range(i, i + k + 1):
                    if not holds(r, norm(j)):
                        return False
                    if holds(l, norm(j)):
                        return True
                return True
        raise TypeError(f"not an NNF formula: {g!r}")

    return holds(f, 0)


def accepts_lasso(a: BuchiAutomaton, w: LassoWord) -> bool:
    """Whether some run of ``a`` on ``w`` visits an accepting state infinitely often."""

    def succ(node):
        q, i = node
        letter = w.letter(i)
        j = w.successor(i)
        for label, t in a.transitions[q]:
            if all((name in letter) == pos for name, pos in label):
                yield None, (t, j)

    return graph.accepting_lasso((a.initial, 0), succ, lambda n: n[0] in a.accepting) is not None


def product(a: BuchiAutomaton, b: BuchiAutomaton) -> BuchiAutomaton:
    """Büchi intersection with the usual two-phase flag."""
    ap = tuple(dict.fromkeys(a.ap + b.ap))
    init = (a.initial, b.initial, 0)
    index = {init: 0}
    order = [init]
    transitions = []
    i = 0
    while i < len(order):
        qa, qb, flag = order[i]
        i += 1
        if flag == 0 and qa in a.accepting:
            nflag = 1
        elif flag == 1 and qb in b.accepting:
            nflag = 0
        else:
            nflag = flag
        edges = {}
        for la, ta in a.transitions[qa]:
            for lb, tb in b.transitions[qb]:
                label = la | lb
                if any((n, not p) in label for n, p in label):
                    continue
                t = (ta, tb, nflag)
                if t not in index:
                    index[t] = len(order)
                    order.append(t)
                edges[(label, index[t])] = None
        transitions.append(list(edges))
    accepting = frozenset(k for k, (qa, _, flag) in enumerate(order) if flag == 0 and qa in a.accepting)
    return BuchiAutomaton(ap, order, 0, accepting, transitions, mode="product")


def is_empty(a: BuchiAutomaton) -> tuple[bool, LassoWord | None]:
    """Emptiness by nested DFS; a witness word accompanies a nonempty verdict."""
    found = graph.accepting_lasso(a.initial, a.successors, lambda q: q in a.accepting)
    if found is None:
        return True, None
    stem, cycle = found
    letter = lambda label: frozenset(n for n, p in label if p)
    return False, LassoWord(
        tuple(letter(l) for _, l, _ in stem), tuple(letter(l) for _, l, _ in cycle)
    )


def alphabet(ap: Sequence[str]) -> list[Symbol]:
    """All subsets of ``ap``, ordered by their bitmask."""
    return [
        frozenset(name for bit, name in enumerate(ap) if mask >> bit & 1)
        for mask in range(1 << len(ap))
    ]


def enumerate_lassos(ap: Sequence[str], max_stem: int, max_loop: int) -> Iterator[LassoWord]:
    sigma = alphabet(ap)
    for s in range(max_stem + 1):
        for l in range(1, max_loop + 1):
            for stem in itertools.product(sigma, repeat=s):
                for loop in itertools.product(sigma, repeat=l):
                    yield LassoWord(stem, loop)


def lasso_count(ap_count: int, max_stem: int, max_loop: int) -> int:
    m = 2**ap_count
    return sum(m ** (s + l) for s in range(max_stem + 1) for l in range(1, max_loop + 1))


def atom_names(count: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return [letters[i] if count <= 26 else f"p{i}" for i in range(count)]


# Kind weights: literal, And, Or, Until, Release, Next.
SAMPLER_WEIGHTS = {"lit": 0.40, "and": 0.125, "or": 0.125, "until": 0.125, "release": 0.125, "next": 0.10}
_BINARY = {"and": And, "or": Or, "until": Until, "release": Release}


def random_formula(rng: random.Random, max_size: int, names: Sequence[str]) -> Formula:
    """One NNF formula with at most ``max_size`` nodes, occurrences left to right."""

    def gen(budget: int) -> Formula:
        kinds = ["lit"]
        if budget >= 2:
            kinds.append("next")
        if budget >= 3:
            kinds.extend(_BINARY)
        kind = rng.choices(kinds, [SAMPLER_WEIGHTS[k] for k in kinds])[0]
        if kind == "lit":
            return Lit(Atom(rng.choice(names)), rng.random() < 0.5)
        if kind == "next":
            return Next(gen(budget - 1))
        left = rng.randint(1, budget - 2)
        right = rng.randint(1, budget - 1 - left)
        return _BINARY[kind](gen(left), gen(right))

    return retag(gen(max_size))


def sample_formulas(seed: int, count: int, max_size: int, ap_count: int) -> list[Formula]:
    rng = random.Random(seed)
    names = atom_names(ap_count)
    return [random_formula(rng, max_size, names) for _ in range(count)]
