"""LTL syntax trees.

Nodes are hash-consed: constructing the same node twice returns the same
object, so structural equality is object identity and hashing is cheap.
Only the NNF node kinds (``TrueF``, ``FalseF``, ``Lit``, ``And``, ``Or``,
``Until``, ``Release``, ``Next``) reach the translation; ``Not`` and the
sugar kinds exist so that :func:`nnf` has something to rewrite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Atom:
    name: str
    occurrence: int = 0


Literal = tuple[str, bool]  # alphabet-level literal: (atom name, polarity)


class Formula:
    __slots__ = ("key", "sort_key", "size", "__weakref__")
    __match_args__: tuple[str, ...] = ()

    _table: dict[tuple, "Formula"] = {}
    rank = 0

    def __new__(cls, *args):
        key = (cls, *args)
        node = Formula._table.get(key)
        if node is None:
            node = object.__new__(cls)
            node.key = key
            node.size = 1 + sum(a.size for a in args if isinstance(a, Formula))
            node.sort_key = (cls.rank, *(
                a.sort_key if isinstance(a, Formula) else a for a in args
            ))
            Formula._table[key] = node
        return node

    def __reduce__(self):
        return (type(self), self.key[1:])

    def __repr__(self) -> str:
        from .printer import to_string

        return f"<{to_string(self)}>"

    def __str__(self) -> str:
        from .printer import to_string

        return to_string(self)

    def __lt__(self, other: "Formula") -> bool:
        return self.sort_key < other.sort_key

    @property
    def children(self) -> tuple["Formula", ...]:
        return tuple(a for a in self.key[1:] if isinstance(a, Formula))


class TrueF(Formula):
    __slots__ = ()
    rank = 0


class FalseF(Formula):
    __slots__ = ()
    rank = 1


class Lit(Formula):
    __slots__ = ()
    __match_args__ = ("atom", "positive")
    rank = 2

    def __new__(cls, atom: Atom, positive: bool = True):
        return super().__new__(cls, atom, positive)

    @property
    def atom(self) -> Atom:
        return self.key[1]

    @property
    def positive(self) -> bool:
        return self.key[2]

    @property
    def literal(self) -> Literal:
        return (self.atom.name, self.positive)


class _Unary(Formula):
    __slots__ = ()
    __match_args__ = ("arg",)

    def __new__(cls, arg: Formula):
        return super().__new__(cls, arg)

    @property
    def arg(self) -> Formula:
        return self.key[1]


class _Binary(Formula):
    __slots__ = ()
    __match_args__ = ("left", "right")

    def __new__(cls, left: Formula, right: Formula):
        return super().__new__(cls, left, right)

    @property
    def left(self) -> Formula:
        return self.key[1]

    @property
    def right(self) -> Formula:
        return self.key[2]


class Next(_Unary):
    __slots__ = ()
    rank = 3


class Until(_Binary):
    __slots__ = ()
    rank = 4


class Release(_Binary):
    __slots__ = ()
    rank = 5


class And(_Binary):
    __slots__ = ()
    rank = 6


class Or(_Binary):
    __slots__ = ()
    rank = 7


# Non-NNF kinds, only produced by the parser and removed by nnf().
class Not(_Unary):
    __slots__ = ()
    rank = 8


class Finally(_Unary):
    __slots__ = ()
    rank = 9


class Globally(_Unary):
    __slots__ = ()
    rank = 10


class Implies(_Binary):
    __slots__ = ()
    rank = 11


class Iff(_Binary):
    __slots__ = ()
    rank = 12


TRUE = TrueF()
FALSE = FalseF()

NNF_KINDS = (TrueF, FalseF, Lit, And, Or, Until, Release, Next)

ConjunctSet = tuple  # canonically ordered, duplicate-free tuple of Formula


def lit(name: str, positive: bool = True, occurrence: int = 0) -> Lit:
    return Lit(Atom(name, occurrence), positive)


def conj(elements: Iterable[Formula]) -> Formula:
    """Right-nested conjunction of ``elements``; ``True`` when empty."""
    elements = list(elements)
    if not elements:
        return TRUE
    result = elements[-1]
    for e in reversed(elements[:-1]):
        result = And(e, result)
    return result


def nnf(f: Formula) -> Formula:
    """Push negations down to literals and remove F, G, -> and <->."""
    return _nnf(f, True)


def _nnf(f: Formula, pos: bool) -> Formula:
    match f:
        case TrueF():
            return TRUE if pos else FALSE
        case FalseF():
            return FALSE if pos else TRUE
        case Lit(atom, positive):
            return Lit(atom, positive == pos)
        case Not(g):
            return _nnf(g, not pos)
        case Next(g):
            return Next(_nnf(g, pos))
        case And(l, r):
            return (And if pos else Or)(_nnf(l, pos), _nnf(r, pos))
        case Or(l, r):
            return (Or if pos else And)(_nnf(l, pos), _nnf(r, pos))
        case Until(l, r):
            return (Until if pos else Release)(_nnf(l, pos), _nnf(r, pos))
        case Release(l, r):
            return (Release if pos else Until)(_nnf(l, pos), _nnf(r, pos))
        case Finally(g):
            return _nnf(Until(TRUE, g), pos)
        case Globally(g):
            return _nnf(Release(FALSE, g), pos)
        case Implies(l, r):
            return _nnf(Or(Not(l), r), pos)
        case Iff(l, r):
            return _nnf(Or(And(l, r), And(Not(l), Not(r))), pos)
    raise TypeError(f"not a formula: {f!r}")


def negate(f: Formula) -> Formula:
    """NNF of the negation of ``f``."""
    return _nnf(f, False)


def is_nnf(f: Formula) -> bool:
    return all(isinstance(g, NNF_KINDS) for g in subformulas(f))


def subformulas(f: Formula) -> set[Formula]:
    seen: set[Formula] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g not in seen:
            seen.add(g)
            stack.extend(g.children)
    return seen


def iter_preorder(f: Formula) -> Iterator[Formula]:
    """Nodes in left-to-right preorder, repeated subtrees visited again."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(reversed(g.children))


def cf(f: Formula) -> ConjunctSet:
    """Top-level conjuncts of ``f`` as a canonical conjunct set.

    ``True`` contributes nothing, so ``cf(TRUE)`` is empty.
    """
    out: set[Formula] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, And):
            stack.append(g.left)
            stack.append(g.right)
        elif g is not TRUE:
            out.add(g)
    return canonical(out)


def canonical(elements: Iterable[Formula]) -> ConjunctSet:
    return tuple(sorted(set(elements), key=lambda g: g.sort_key))


def cl(f: Formula) -> set[Formula]:
    """Subformula closure of ``f`` together with ``True``."""
    return subformulas(f) | {TRUE}


def subformula_count(f: Formula) -> int:
    """The ``n`` of the size bounds: ``|cl(f)| - 1``."""
    return len(cl(f)) - 1


def atoms(f: Formula) -> list[str]:
    """Atom names in order of first (left-to-right) appearance."""
    names: dict[str, None] = {}
    for g in iter_preorder(f):
        if isinstance(g, Lit):
            names.setdefault(g.atom.name, None)
    return list(names)


def literals(f: Formula) -> frozenset[Literal]:
    return frozenset(g.literal for g in subformulas(f) if isinstance(g, Lit))


def retag(f: Formula, occurrence_tags: bool = True) -> Formula:
    """Renumber atom occurrences left to right (or collapse them all to 0)."""
    counter = iter(range(1 << 30))

    def go(g: Formula) -> Formula:
        match g:
            case Lit(atom, positive):
                occ = next(counter) if occurrence_tags else 0
                return Lit(Atom(atom.name, occ), positive)
            case TrueF() | FalseF():
                return g
            case _Unary(arg=a):
                return type(g)(go(a))
            case _Binary(left=l, right=r):
                left = go(l)
                return type(g)(left, go(r))
        raise TypeError(f"not a formula: {g!r}")

    return go(f)


def is_until_free(f: Formula) -> bool:
    return not any(isinstance(g, Until) for g in subformulas(f))


def is_release_free(f: Formula) -> bool:
    return not any(isinstance(g, Release) for g in subformulas(f))
