"""Named lazy trees, predicates and branch oracles usable from JSON and the CLI.

A builtin tree is written ``{"builtin": name, "params": {...}}``; the same
shape names builtin branches inside point objects.
"""
from __future__ import annotations

from .errors import UsageError
from .seqcode import decode
from .trees import LazyTree, bar_tree, chain_tree, elementwise_tree, interleave_unfold, sg_tree


def sg_toy_relation(n: int, s: int) -> bool:
    """Even sections: all-zero tails.  Odd sections: tails of length <= 2."""
    u = decode(s)
    if n % 2 == 0:
        return all(x == 0 for x in u)
    return len(u) <= 2


def _spec(name, params):
    return {"builtin": name, "params": dict(params)}


def _full(params):
    b = int(params.get("bound", 1))
    return LazyTree(lambda u: all(x <= b for x in u), b, _spec("full", {"bound": b}))


def _full_binary(params):
    return LazyTree(lambda u: all(x <= 1 for x in u), 1, _spec("full_binary", {}))


def _elementwise_evens(params):
    cap = int(params.get("cap", 6))
    return elementwise_tree(lambda x: x % 2 == 0, cap, _spec("elementwise_evens", {"cap": cap}))


def _elementwise_set(params):
    values = frozenset(int(x) for x in params.get("values", []))
    cap = int(params.get("cap", max(values, default=0)))
    return elementwise_tree(
        lambda x: x in values, cap, _spec("elementwise_set", {"values": sorted(values), "cap": cap})
    )


def _chain_lt(params):
    cap = int(params.get("cap", 6))
    return chain_tree(lambda a, b: a < b, cap, _spec("chain_lt", {"cap": cap}))


def _chain_finite(params):
    size = int(params.get("size", 3))
    return chain_tree(lambda a, b: a < b, size - 1, _spec("chain_finite", {"size": size}),
                      in_field=lambda x: x < size)


def _sg_toy_even(params):
    cap = int(params.get("cap", 4))
    return sg_tree(sg_toy_relation, cap, _spec("sg_toy_even", {"cap": cap}))


def _bar_length(params):
    length = int(params.get("length", 2))
    cap = int(params.get("cap", 3))
    return bar_tree(lambda s: len(decode(s)) >= length, cap, _spec("bar_length", {"length": length, "cap": cap}))


def _bar_even_code(params):
    cap = int(params.get("cap", 3))
    return bar_tree(lambda s: s % 2 == 0, cap, _spec("bar_even_code", {"cap": cap}))


def _unfold_true(params):
    cap = int(params.get("cap", 3))
    return interleave_unfold(lambda n, a, b: True, cap, _spec("unfold_true", {"cap": cap}))


def _unfold_zeros(params):
    cap = int(params.get("cap", 3))
    return interleave_unfold(
        lambda n, a, b: all(x == 0 for x in decode(a)), cap, _spec("unfold_zeros", {"cap": cap})
    )


TREES = {
    "full": _full,
    "full_binary": _full_binary,
    "elementwise_evens": _elementwise_evens,
    "elementwise_set": _elementwise_set,
    "chain_lt": _chain_lt,
    "chain_finite": _chain_finite,
    "sg_toy_even": _sg_toy_even,
    "bar_length": _bar_length,
    "bar_even_code": _bar_even_code,
    "unfold_true": _unfold_true,
    "unfold_zeros": _unfold_zeros,
}


def tree(name: str, params: dict | None = None) -> LazyTree:
    try:
        factory = TREES[name]
    except KeyError:
        raise UsageError(f"unknown builtin tree {name!r}; known: {sorted(TREES)}") from None
    return factory(params or {})


def _branch_constant(p):
    v = int(p.get("value", 0))
    return lambda n: v


def _branch_identity(p):
    return lambda n: n


def _branch_mod(p):
    m = int(p.get("modulus", 2))
    return lambda n: n % m


def _branch_periodic(p):
    pattern = [int(x) for x in p.get("pattern", [0])]
    if not pattern:
        raise UsageError("periodic branch needs a nonempty pattern")
    return lambda n: pattern[n % len(pattern)]


def _branch_prefix_then(p):
    head = [int(x) for x in p.get("prefix", [])]
    tail = int(p.get("then", 0))
    return lambda n: head[n] if n < len(head) else tail


BRANCHES = {
    "constant": _branch_constant,
    "identity": _branch_identity,
    "mod": _branch_mod,
    "periodic": _branch_periodic,
    "prefix_then": _branch_prefix_then,
}


def branch(name: str, params: dict | None = None):
    try:
        factory = BRANCHES[name]
    except KeyError:
        raise UsageError(f"unknown builtin branch {name!r}; known: {sorted(BRANCHES)}") from None
    return factory(params or {})


# -- sample automata used in docs, CLI examples and tests ---------------------

AUTOMATA = {
    "full_binary": {"states": ["q"], "initial": "q",
                    "edges": [{"from": "q", "label": 0, "to": "q"}, {"from": "q", "label": 1, "to": "q"}]},
    "forced_first_bit": {"states": ["q", "r"], "initial": "q",
                         "edges": [{"from": "q", "label": 0, "to": "r"},
                                   {"from": "r", "label": 0, "to": "r"}, {"from": "r", "label": 1, "to": "r"}]},
    "no11": {"states": ["a", "b"], "initial": "a",
             "edges": [{"from": "a", "label": 0, "to": "a"}, {"from": "a", "label": 1, "to": "b"},
                       {"from": "b", "label": 0, "to": "a"}]},
    "countable_chain": {"states": ["q0", "q1"], "initial": "q0",
                        "edges": [{"from": "q0", "label": 0, "to": "q0"}, {"from": "q0", "label": 1, "to": "q1"},
                                  {"from": "q1", "label": 0, "to": "q1"}]},
}
