"""HOA, DOT and JSON renderings of Büchi automata, plus a small HOA reader."""

from __future__ import annotations

import json
import re

from .automaton import BuchiAutomaton, State, stats
from .printer import label_str, tagged_str

JSON_SCHEMA = "ltl2nba.automaton/1"


class HOAError(ValueError):
    pass


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _hoa_label(label, ap_index: dict[str, int]) -> str:
    if not label:
        return "t"
    parts = sorted((ap_index[n], p) for n, p in label)
    return "&".join(str(i) if p else f"!{i}" for i, p in parts)


def export_hoa(a: BuchiAutomaton, name: str | None = None) -> str:
    ap_index = {n: i for i, n in enumerate(a.ap)}
    lines = ["HOA: v1"]
    if name is not None:
        lines.append(f"name: {_quote(name)}")
    lines += [
        f"States: {len(a.states)}",
        f"Start: {a.initial}",
        f"AP: {len(a.ap)}" + "".join(" " + _quote(p) for p in a.ap),
        "acc-name: Buchi",
        "Acceptance: 1 Inf(0)",
        "properties: explicit-labels state-acc",
        "--BODY--",
    ]
    for q in range(len(a.states)):
        acc = " {0}" if q in a.accepting else ""
        lines.append(f"State: {q} {_quote(a.state_name(q))}{acc}")
        for label, t in a.transitions[q]:
            lines.append(f"  [{_hoa_label(label, ap_index)}] {t}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"


_STATE = re.compile(r'State:\s+(\d+)(?:\s+"(?:[^"\\]|\\.)*")?(?:\s+\{([\d\s]*)\})?\s*$')
_EDGE = re.compile(r"\[([^\]]*)\]\s+(\d+)\s*$")
_QUOTED = re.compile(r'"(?:[^"\\]|\\.)*"')


def parse_hoa(text: str) -> BuchiAutomaton:
    """Read the HOA subset written by :func:`export_hoa`.

    Checks that the declared state count matches the body and that every
    AP index and edge target is in range.
    """
    header, sep, body = text.partition("--BODY--")
    if not sep or "--END--" not in body:
        raise HOAError("missing --BODY-- or --END--")
    fields: dict[str, str] = {}
    for line in header.strip().splitlines():
        key, _, value = line.partition(":")
        fields[key.strip()] = value.strip()
    if fields.get("HOA") != "v1":
        raise HOAError("not an HOA v1 document")
    if fields.get("Acceptance") != "1 Inf(0)":
        raise HOAError(f"unsupported acceptance {fields.get('Acceptance')!r}")
    try:
        n_states = int(fields["States"])
        start = int(fields["Start"])
        ap_decl = fields["AP"]
    except (KeyError, ValueError) as exc:
        raise HOAError(f"bad header: {exc}") from None
    n_ap, _, rest = ap_decl.partition(" ")
    ap = tuple(json.loads("[" + ",".join(_QUOTED.findall(rest)) + "]"))
    if len(ap) != int(n_ap):
        raise HOAError("AP count does not match the names given")

    names: list[str] = []
    accepting: set[int] = set()
    transitions: list[list] = []
    for raw in body.partition("--END--")[0].strip().splitlines():
        line = raw.strip()
        if m := _STATE.match(line):
            q = int(m.group(1))
            if q != len(transitions):
                raise HOAError(f"state {q} out of order")
            name = _QUOTED.search(line)
            names.append(json.loads(name.group()) if name else str(q))
            if m.group(2) is not None and "0" in m.group(2).split():
                accepting.add(q)
            transitions.append([])
        elif m := _EDGE.match(line):
            if not transitions:
                raise HOAError("edge before first state")
            label = frozenset()
            if m.group(1).strip() != "t":
                lits = []
                for part in m.group(1).split("&"):
                    part = part.strip()
                    neg = part.startswith("!")
                    idx = int(part.lstrip("!"))
                    if not 0 <= idx < len(ap):
                        raise HOAError(f"AP index {idx} out of range")
                    lits.append((ap[idx], not neg))
                label = frozenset(lits)
            target = int(m.group(2))
            if not 0 <= target < n_states:
                raise HOAError(f"edge target {target} out of range")
            transitions[-1].append((label, target))
        elif line:
            raise HOAError(f"cannot read line {line!r}")
    if len(transitions) != n_states:
        raise HOAError(f"header declares {n_states} states, body has {len(transitions)}")
    if not 0 <= start < n_states:
        raise HOAError("start state out of range")
    return BuchiAutomaton(ap, names, start, frozenset(accepting), transitions, mode="hoa")


def export_dot(a: BuchiAutomaton) -> str:
    lines = [
        "digraph buchi {",
        "  rankdir=LR;",
        '  init [shape=point, label=""];',
    ]
    for q in range(len(a.states)):
        shape = "doublecircle" if q in a.accepting else "circle"
        lines.append(f"  s{q} [shape={shape}, label={_quote(a.state_name(q))}];")
    lines.append(f"  init -> s{a.initial};")
    for q, edges in enumerate(a.transitions):
        for label, t in edges:
            lines.append(f"  s{q} -> s{t} [label={_quote(label_str(label))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _state_json(s) -> dict:
    if isinstance(s, State):
        return {
            "formula": [str(g) for g in s.formula],
            "process": [tagged_str(g) for g in sorted(s.process)],
            "pending": s.pending,
        }
    return {"name": str(s)}


def to_json(a: BuchiAutomaton, formula: str | None = None) -> dict:
    st = stats(a)
    return {
        "schema": JSON_SCHEMA,
        "formula": formula,
        "mode": a.mode,
        "ap": list(a.ap),
        "initial": a.initial,
        "stats": st._asdict(),
        "states": [
            {"id": q, "accepting": q in a.accepting, **_state_json(s)}
            for q, s in enumerate(a.states)
        ],
        "transitions": [
            {"source": q, "target": t, "label": label_str(label)}
            for q, edges in enumerate(a.transitions)
            for label, t in edges
        ],
    }


def export_json(a: BuchiAutomaton, formula: str | None = None) -> str:
    return json.dumps(to_json(a, formula), indent=2) + "\n"
