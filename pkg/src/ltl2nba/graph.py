"""Graph searches shared by the emptiness check and lasso membership."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, TypeVar

N = TypeVar("N", bound=Hashable)
Edge = tuple  # (source, label, target)
Successors = Callable[[N], Iterable[tuple[object, N]]]


def accepting_lasso(
    init: N, succ: Successors, accepting: Callable[[N], bool]
) -> tuple[list[Edge], list[Edge]] | None:
    """Nested depth-first search for a reachable accepting cycle.

    Returns ``(stem, cycle)`` as edge lists, the stem leading from ``init``
    to an accepting node and the cycle leading from it back to itself, or
    ``None`` when no such cycle exists.
    """
    blue = {init}
    red: set = set()
    path = [(init, iter(succ(init)))]
    edges: list[Edge] = []  # edges[i] enters path[i + 1]
    while path:
        v, it = path[-1]
        for label, w in it:
            if w not in blue:
                blue.add(w)
                path.append((w, iter(succ(w))))
                edges.append((v, label, w))
                break
        else:
            path.pop()
            if accepting(v):
                cycle = _cycle_through(v, succ, red)
                if cycle is not None:
                    return edges[: len(path)], cycle
            if edges:
                edges.pop()
    return None


def _cycle_through(seed, succ: Successors, red: set) -> list[Edge] | None:
    red.add(seed)
    stack = [(seed, iter(succ(seed)))]
    edges: list[Edge] = []
    while stack:
        v, it = stack[-1]
        for label, w in it:
            if w == seed:
                return edges + [(v, label, w)]
            if w not in red:
                red.add(w)
                stack.append((w, iter(succ(w))))
                edges.append((v, label, w))
                break
        else:
            stack.pop()
            if edges:
                edges.pop()
    return None


def reachable(starts: Iterable[N], succ: Callable[[N], Iterable[N]]) -> set[N]:
    seen = set(starts)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for w in succ(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
