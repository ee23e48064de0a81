import pytest

from omega_trees import presets
from omega_trees.errors import UsageError
from omega_trees.linorders import LinOrder
from omega_trees.serialize import (
    map_from_json,
    map_to_json,
    order_from_json,
    order_to_json,
    point_from_json,
    tree_from_json,
)
from omega_trees.space import Branch, Node
from omega_trees.trees import AttTree, FiniteTree, ProductTree, RegularTree, ShiftClosure, SubTree, SumTree

FIN = {"finite": [[], [0], [1], [1, 1]]}


@pytest.mark.parametrize(
    "obj, cls",
    [
        (FIN, FiniteTree),
        (presets.AUTOMATA["no11"], RegularTree),
        ({"op": "sum", "args": [FIN, FIN]}, SumTree),
        ({"op": "product", "args": [FIN, {"builtin": "full_binary"}]}, ProductTree),
        ({"op": "att", "args": [FIN], "node_depth": 2}, AttTree),
        ({"op": "subtree", "args": [FIN], "node": [1]}, SubTree),
        ({"op": "shift_closure", "args": [FIN]}, ShiftClosure),
    ],
)
def test_tree_json_roundtrip(obj, cls):
    t = tree_from_json(obj)
    assert isinstance(t, cls)
    again = tree_from_json(t.to_json())
    assert set(again.nodes(3)) == set(t.nodes(3))


def test_builtin_tree_json():
    t = tree_from_json({"builtin": "chain_finite", "params": {"size": 3}})
    assert t.to_json() == {"builtin": "chain_finite", "params": {"size": 3}}
    assert max(len(u) for u in t.nodes(6)) == 3


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"op": "sum", "args": [FIN]},
        {"op": "frobnicate", "args": []},
        {"finite": [[-1]]},
        {"builtin": "nope"},
        {"shape": 1},
    ],
)
def test_bad_tree_json(obj):
    with pytest.raises(UsageError):
        tree_from_json(obj)


def test_points():
    assert point_from_json({"node": [1, 2]}) == Node((1, 2))
    b = point_from_json({"branch": {"builtin": "periodic", "params": {"pattern": [1, 0]}}})
    assert isinstance(b, Branch) and b.prefix(3) == (1, 0, 1)
    assert b.to_json()["branch"]["builtin"] == "periodic"
    with pytest.raises(UsageError):
        point_from_json({"branch": 3})
    with pytest.raises(UsageError):
        point_from_json({"pt": []})


def test_orders_and_maps():
    o = LinOrder((4, 0, 9))
    assert order_from_json(order_to_json(o)) == o
    assert order_from_json([2, 1]) == LinOrder((2, 1))
    with pytest.raises(UsageError):
        order_from_json({"field": [1]})
    assert map_from_json(map_to_json({1: 2, 0: 5})) == {0: 5, 1: 2}
    with pytest.raises(UsageError):
        map_from_json([[1, 2], [1, 3]])
    with pytest.raises(UsageError):
        map_from_json([[1]])
