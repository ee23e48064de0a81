import pytest

from omega_trees.automaton import Automaton
from omega_trees.errors import InvalidAutomaton


def test_build_and_run():
    a = Automaton.build("p", [("p", 0, "q"), ("q", 1, "p")])
    assert a.states == ("p", "q")
    assert a.run((0, 1, 0)) == "q"
    assert a.run((1,)) is None
    assert a.alphabet == (0, 1)
    assert a.out("p") == [(0, "q")]


def test_json_roundtrip():
    a = Automaton.build("p", [("p", 1, "q"), ("p", 0, "p"), ("q", 0, "p")])
    assert Automaton.from_json(a.to_json()) == a


@pytest.mark.parametrize(
    "obj",
    [
        {"states": ["p"], "initial": "x", "edges": []},
        {"states": ["p"], "initial": "p", "edges": [{"from": "p", "label": 0, "to": "z"}]},
        {"states": ["p"], "initial": "p", "edges": [{"from": "p", "label": -1, "to": "p"}]},
        {"states": ["p"], "initial": "p",
         "edges": [{"from": "p", "label": 0, "to": "p"}, {"from": "p", "label": 0, "to": "p"}]},
        {"states": ["p", "p"], "initial": "p", "edges": []},
        {"initial": "p", "edges": []},
    ],
)
def test_invalid_automata(obj):
    with pytest.raises(InvalidAutomaton):
        Automaton.from_json(obj)


def test_restrict():
    a = Automaton.build("p", [("p", 0, "q"), ("q", 1, "p"), ("p", 1, "r")])
    r = a.restrict({"p", "q"})
    assert r.states == ("p", "q") and r.step("p", 1) is None
    assert a.restrict({"q"}).is_empty()
