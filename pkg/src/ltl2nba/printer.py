"""Formula pretty-printing in the same ASCII syntax the parser reads."""

from __future__ import annotations

from .formula import (
    And,
    FalseF,
    Finally,
    Formula,
    Globally,
    Iff,
    Implies,
    Lit,
    Literal,
    Next,
    Not,
    Or,
    Release,
    TrueF,
    Until,
)

_UNARY = {Next: "X", Not: "!", Finally: "F", Globally: "G"}
# symbol, precedence, right-associative
_BINARY = {
    Until: ("U", 4, True),
    Release: ("R", 4, True),
    And: ("&", 3, False),
    Or: ("|", 2, False),
    Implies: ("->", 1, True),
    Iff: ("<->", 0, False),
}
_ATOMIC = 6
_PREFIX = 5


def _prec(f: Formula) -> int:
    if type(f) in _BINARY:
        return _BINARY[type(f)][1]
    if type(f) in _UNARY:
        return _PREFIX
    if isinstance(f, Lit) and not f.positive:
        return _PREFIX
    return _ATOMIC


def to_string(f: Formula) -> str:
    match f:
        case TrueF():
            return "True"
        case FalseF():
            return "False"
        case Lit(atom, positive):
            return atom.name if positive else "!" + atom.name
    kind = type(f)
    if kind in _UNARY:
        inner = to_string(f.arg)
        if _prec(f.arg) < _PREFIX:
            inner = f"({inner})"
        return f"{_UNARY[kind]} {inner}" if kind is not Not else f"!{inner}"
    sym, prec, right_assoc = _BINARY[kind]
    left, right = to_string(f.left), to_string(f.right)
    lp, rp = _prec(f.left), _prec(f.right)
    if lp < prec or (lp == prec and right_assoc):
        left = f"({left})"
    if rp < prec or (rp == prec and not right_assoc):
        right = f"({right})"
    return f"{left} {sym} {right}"


def literal_str(literal: Literal) -> str:
    name, positive = literal
    return name if positive else "!" + name


def tagged_str(g: Lit) -> str:
    return f"{to_string(g)}@{g.atom.occurrence}"


def label_str(label) -> str:
    """Infix rendering of a literal set; the empty set is ``true``.

    Accepts tagged literal nodes or (name, polarity) pairs.
    """
    if not label:
        return "true"
    pairs = {l.literal if isinstance(l, Lit) else l for l in label}
    return " & ".join(literal_str(l) for l in sorted(pairs))


def conjuncts_str(conjuncts) -> str:
    if not conjuncts:
        return "True"
    parts = []
    for g in conjuncts:
        s = to_string(g)
        parts.append(f"({s})" if _prec(g) <= 3 else s)
    return " & ".join(parts)
