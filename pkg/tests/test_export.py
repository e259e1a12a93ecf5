import json

import pytest

from ltl2nba.automaton import translate
from ltl2nba.export import JSON_SCHEMA, HOAError, export_dot, export_hoa, export_json, parse_hoa
from ltl2nba.oracle import accepts_lasso, enumerate_lassos, sample_formulas
from ltl2nba.parser import parse

TWO_UNTILS = parse("G (b U c & d U e)")


def test_hoa_header():
    text = export_hoa(translate(parse("a U b")))
    lines = text.splitlines()
    assert lines[0] == "HOA: v1"
    for line in ["States: 2", "Start: 0", 'AP: 2 "a" "b"', "acc-name: Buchi", "Acceptance: 1 Inf(0)"]:
        assert line in lines
    assert lines[-1] == "--END--"
    assert "  [t] 1" in lines


def test_hoa_labels_are_conjunctions():
    text = export_hoa(translate(parse("a U (!b & c)")))
    assert "[!1&2]" in text or "[2&!1]" in text


def test_hoa_dead_automaton():
    a = translate(parse("a & !a"))
    text = export_hoa(a)
    assert "States: 1" in text
    back = parse_hoa(text)
    assert back.n_transitions == 0


def test_hoa_round_trip():
    for f in [TWO_UNTILS, *sample_formulas(2, 15, 8, 2)]:
        a = translate(f)
        back = parse_hoa(export_hoa(a, name=str(f)))
        assert back.ap == a.ap
        assert back.accepting == a.accepting
        assert back.initial == a.initial
        assert [sorted(e) for e in back.transitions] == [sorted(e) for e in a.transitions]


def test_hoa_round_trip_preserves_language():
    a = translate(parse("(a U b) R X !a"))
    back = parse_hoa(export_hoa(a))
    for w in enumerate_lassos(["a", "b"], 1, 2):
        assert accepts_lasso(back, w) == accepts_lasso(a, w)


@pytest.mark.parametrize(
    "mutation",
    [
        lambda t: t.replace("States: 2", "States: 3"),
        lambda t: t.replace("[1] 1", "[5] 1"),
        lambda t: t.replace("[1] 1", "[1] 7"),
        lambda t: t.replace("HOA: v1\n", ""),
        lambda t: t.replace("--END--", ""),
    ],
)
def test_hoa_validator_rejects_broken_documents(mutation):
    text = export_hoa(translate(parse("a U b")))
    with pytest.raises(HOAError):
        parse_hoa(mutation(text))


def test_dot_marks_the_single_accepting_state():
    dot = export_dot(translate(TWO_UNTILS))
    assert dot.startswith("digraph")
    assert dot.count("doublecircle") == 1
    assert dot.count("->") == 16 + 1


def test_json_document():
    doc = json.loads(export_json(translate(parse("a U a"), "general"), formula="a U a"))
    assert doc["schema"] == JSON_SCHEMA
    assert doc["stats"]["states"] == len(doc["states"])
    assert {s["id"] for s in doc["states"] if s["accepting"]} == {0, 2}
    assert any(s["pending"] for s in doc["states"])


def test_json_process_sets_show_tags():
    doc = json.loads(export_json(translate(TWO_UNTILS)))
    assert sorted(p for s in doc["states"] for p in s["process"]) == ["c@1", "e@3"]


def test_exports_are_deterministic():
    for f in sample_formulas(3, 10, 8, 2):
        assert export_hoa(translate(f)) == export_hoa(translate(f))
        assert export_dot(translate(f)) == export_dot(translate(f))
        assert export_json(translate(f)) == export_json(translate(f))
