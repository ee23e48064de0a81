"""JSON forms of trees, automata, points, orders and partial maps.

Trees::

    {"finite": [[], [0], [0, 1]]}
    {"states": [...], "initial": q, "edges": [{"from": q, "label": 0, "to": r}]}
    {"builtin": "sg_toy_even", "params": {"cap": 4}}
    {"op": "sum" | "product" | "att" | "subtree" | "shift_closure", "args": [...]}

Points are ``{"node": [...]}`` or ``{"branch": {"builtin": name, "params": {...}}}``;
orders are ``{"field": [...], "pairs": [[a, b], ...]}`` listing ``a <= b``; partial
maps are lists of ``[n, m]`` pairs.
"""
from __future__ import annotations

from . import presets
from .automaton import Automaton
from .errors import UsageError
from .linorders import LinOrder
from .space import Branch, Node
from .trees import AttTree, FiniteTree, ProductTree, RegularTree, ShiftClosure, SubTree, SumTree, Tree

_OPS = {"sum": 2, "product": 2, "att": 1, "subtree": 1, "shift_closure": 1}


def _seq(obj, what="sequence"):
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in obj):
        raise UsageError(f"{what} must be a list of naturals, got {obj!r}")
    return tuple(obj)


def tree_from_json(obj) -> Tree:
    if not isinstance(obj, dict):
        raise UsageError(f"tree JSON must be an object, got {type(obj).__name__}")
    if "finite" in obj:
        return FiniteTree(_seq(u, "finite tree node") for u in obj["finite"])
    if "states" in obj:
        return RegularTree(Automaton.from_json(obj))
    if "builtin" in obj:
        return presets.tree(obj["builtin"], obj.get("params"))
    if "op" in obj:
        op = obj["op"]
        if op not in _OPS:
            raise UsageError(f"unknown tree op {op!r}")
        args = obj.get("args", [])
        if len(args) != _OPS[op]:
            raise UsageError(f"op {op!r} takes {_OPS[op]} argument(s), got {len(args)}")
        trees = [tree_from_json(a) for a in args]
        if op == "sum":
            return SumTree(*trees)
        if op == "product":
            return ProductTree(*trees)
        if op == "att":
            return AttTree(trees[0], int(obj.get("node_depth", 6)))
        if op == "subtree":
            return SubTree(trees[0], _seq(obj.get("node", []), "subtree node"))
        return ShiftClosure(trees[0])
    raise UsageError("unrecognized tree JSON (expected finite, states, builtin or op)")


def automaton_from_json(obj) -> Automaton:
    if isinstance(obj, dict) and "builtin" in obj:
        if obj["builtin"] not in presets.AUTOMATA:
            raise UsageError(f"unknown automaton preset {obj['builtin']!r}")
        obj = presets.AUTOMATA[obj["builtin"]]
    if not isinstance(obj, dict) or "states" not in obj:
        raise UsageError("automaton JSON must have states, initial and edges")
    return Automaton.from_json(obj)


def point_from_json(obj):
    if isinstance(obj, dict) and "node" in obj:
        return Node(_seq(obj["node"], "node"))
    if isinstance(obj, dict) and "branch" in obj:
        spec = obj["branch"]
        if not isinstance(spec, dict) or "builtin" not in spec:
            raise UsageError("branch points must name a builtin oracle")
        return Branch(presets.branch(spec["builtin"], spec.get("params")), spec)
    raise UsageError(f"unrecognized point JSON {obj!r}")


def order_from_json(obj) -> LinOrder:
    if isinstance(obj, list):
        return LinOrder(tuple(obj))
    try:
        return LinOrder.from_pairs(obj["field"], [tuple(p) for p in obj["pairs"]])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"order JSON needs field and pairs: {exc}") from exc


def order_to_json(order: LinOrder):
    return {"field": sorted(order.elements), "pairs": [list(p) for p in order.pairs()]}


def map_from_json(obj) -> dict:
    if not isinstance(obj, list):
        raise UsageError("a partial map is a list of [n, m] pairs")
    out = {}
    for item in obj:
        if not (isinstance(item, list) and len(item) == 2):
            raise UsageError(f"malformed map pair {item!r}")
        n, m = item
        if n in out and out[n] != m:
            raise UsageError(f"map is not functional at {n}")
        out[n] = m
    return out


def map_to_json(f: dict):
    return [[n, m] for n, m in sorted(f.items())]
