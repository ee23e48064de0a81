"""Independent brute-force references, written from the definitions and
sharing no code with the library beyond plain data."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction


def cantor(a, b):
    return (a + b) * (a + b + 1) // 2 + b


def cantor_table(limit):
    """Inverse of the Cantor pairing on [0, limit) by enumeration of diagonals."""
    inv = {}
    d = 0
    while len(inv) < limit:
        for b in range(d + 1):
            z = cantor(d - b, b)
            if z < limit:
                inv[z] = (d - b, b)
        d += 1
    return inv


def code(u):
    if not u:
        return 1
    c = u[0]
    for x in u[1:]:
        c = cantor(c, x)
    return 2 + cantor(len(u) - 1, c)


def all_seqs(max_len, max_entry):
    for n in range(max_len + 1):
        yield from itertools.product(range(max_entry + 1), repeat=n)


def kb_leq(u, v):
    """KB order straight from the definition."""
    if len(v) <= len(u) and u[: len(v)] == v:
        return True
    if len(u) <= len(v) and v[: len(u)] == u:
        return False
    i = next(i for i in range(min(len(u), len(v))) if u[i] != v[i])
    return u[i] < v[i]


def padded(u, n):
    return list(u) + [-1] * (n - len(u))


def node_dist(u, v):
    """d^T on nodes: first disagreement of the -1 padded sequences."""
    if u == v:
        return Fraction(0)
    n = max(len(u), len(v)) + 1
    pu, pv = padded(u, n), padded(v, n)
    i = next(i for i in range(n) if pu[i] != pv[i])
    return Fraction(1, i + 1)


def baire(a, b, n):
    for i in range(n):
        if a[i] != b[i]:
            return Fraction(1, i + 1)
    return Fraction(0)


def product_nodes(tn, sn, max_len):
    """Brute-force product: all position-wise padded pairings of T and S nodes."""
    out = {()}
    for u in tn:
        for v in sn:
            n = max(len(u), len(v))
            if 0 < n <= max_len:
                pu, pv = padded(u, n), padded(v, n)
                out.add(tuple(cantor(a + 1, b + 1) - 1 for a, b in zip(pu, pv)))
    return out


def random_tree(rng: random.Random, max_nodes: int, max_label: int = 3, max_depth: int = 6):
    nodes = {()}
    target = rng.randint(1, max_nodes)
    attempts = 0
    while len(nodes) < target and attempts < 20 * max_nodes:
        attempts += 1
        u = rng.choice(sorted(nodes))
        if len(u) < max_depth:
            nodes.add(u + (rng.randint(0, max_label),))
    return nodes


def random_automaton_json(rng: random.Random, max_states: int, alphabet=(0, 1), density=0.7):
    n = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(n)]
    edges = []
    for q in states:
        for a in alphabet:
            if rng.random() < density:
                edges.append({"from": q, "label": a, "to": rng.choice(states)})
    return {"states": states, "initial": states[0], "edges": edges}


def strings(aut, start, depth):
    """All label strings of length exactly ``depth`` readable from ``start``."""
    delta = {(e["from"], e["label"]): e["to"] for e in aut["edges"]}
    labels = sorted({e["label"] for e in aut["edges"]})
    layer = [((), start)]
    for _ in range(depth):
        layer = [(w + (a,), delta[(q, a)]) for w, q in layer for a in labels if (q, a) in delta]
    return layer


def state_reach_counts(aut, depth):
    """Node count per length 0..depth from the initial state."""
    return [len(strings(aut, aut["initial"], d)) for d in range(depth + 1)]


def count_strings(aut, start, depth):
    """Like ``len(strings(...))`` but by counting paths per state."""
    delta = {(e["from"], e["label"]): e["to"] for e in aut["edges"]}
    ways = {start: 1}
    for _ in range(depth):
        nxt = {}
        for (q, _a), r in delta.items():
            if q in ways:
                nxt[r] = nxt.get(r, 0) + ways[q]
        ways = nxt
    return sum(ways.values())


def is_prefix(u, v):
    return len(u) <= len(v) and tuple(v[: len(u)]) == tuple(u)


def embedding_ok(phi):
    """Injective, proper extension preserved, incompatibility preserved."""
    items = list(phi.items())
    if len({v for _, v in items}) != len(items):
        return False
    for s, x in items:
        for t, y in items:
            if s != t and is_prefix(s, t) and not (x != y and is_prefix(x, y)):
                return False
            if not is_prefix(s, t) and not is_prefix(t, s) and (is_prefix(x, y) or is_prefix(y, x)):
                return False
    return True


def cone_measure_bound(aut, start, depth):
    """v_depth of the cone at ``start``: surviving strings over 2**depth."""
    return Fraction(count_strings(aut, start, depth), 2**depth)


def run(aut, u):
    delta = {(e["from"], e["label"]): e["to"] for e in aut["edges"]}
    q = aut["initial"]
    for a in u:
        q = delta.get((q, a))
        if q is None:
            return None
    return q
