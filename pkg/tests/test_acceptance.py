"""Acceptance criteria 1-10.

Each test prints one ``[ACCEPT n] PASS|FAIL`` line; the lines are repeated in
the pytest terminal summary.  Run directly with ``python3 tests/test_acceptance.py``
for the bare report.
"""
from __future__ import annotations

import contextlib
import itertools
import random
import sys
from fractions import Fraction

from omega_trees import presets
from omega_trees.automaton import Automaton
from omega_trees.cbmeasure import (
    binary_embedding,
    measure_body,
    perfect_kernel,
    positive_measure,
    uncountable_states,
)
from omega_trees.kborder import branch_from_kb_descending, is_kb_descending, kb_leq, kb_order_of
from omega_trees.linorders import all_orders, brute_force_strongly_admissible, solve_strongly_admissible
from omega_trees.seqcode import decode, encode, pair_ext, unpair_ext
from omega_trees.space import Branch, Node, dist, prod_iso, prod_iso_inv, rho
from omega_trees.trees import (
    AttTree,
    FiniteTree,
    LazyTree,
    ProductTree,
    att_embedding,
    binary_seq,
    check_binary_embedding,
    section_report,
)

import oracles

RESULTS: list[str] = []


@contextlib.contextmanager
def criterion(n, title):
    try:
        yield
    except BaseException as exc:
        line = f"[ACCEPT {n:>2}] FAIL  {title}: {type(exc).__name__}: {exc}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"[ACCEPT {n:>2}] PASS  {title}"
    RESULTS.append(line)
    print(line)


# -- 1 -------------------------------------------------------------------------


def test_01_coding():
    with criterion(1, "coding round-trip (len<=4, entries<=6); pair_ext bijective on [-1,20]^2"):
        count = 0
        for u in oracles.all_seqs(4, 6):
            c = encode(u)
            assert c == oracles.code(u), u
            assert decode(c) == u, u
            count += 1
        assert count == sum(7**k for k in range(5))

        rng = range(-1, 21)
        images = {}
        for a, b in itertools.product(rng, repeat=2):
            z = pair_ext(a, b)
            assert z == oracles.cantor(a + 1, b + 1) - 1
            assert z not in images, (a, b, images.get(z))
            images[z] = (a, b)
            assert unpair_ext(z) == (a, b)
        assert pair_ext(-1, -1) == -1
        assert [k for k, v in images.items() if k == -1] == [-1] and images[-1] == (-1, -1)


# -- 2 -------------------------------------------------------------------------


def _planted(seed):
    """A lazy tree containing the branch alpha plus one-step detours off it."""
    rng = random.Random(seed)
    table = [rng.randint(0, 3) for _ in range(64)]

    def alpha(n):
        return table[n % 64]

    def oracle(u):
        for i, x in enumerate(u):
            if x != alpha(i):
                return i == len(u) - 1 and x <= alpha(i) + 1
        return True

    return LazyTree(oracle, 4), alpha


def test_02_kb_order():
    with criterion(2, "KB order total on 100 random trees; planted branches descend and are recovered"):
        rng = random.Random(2024)
        for _ in range(100):
            nodes = sorted(oracles.random_tree(rng, 40, max_label=3, max_depth=6))
            order = kb_order_of(FiniteTree(nodes))
            codes = order.elements
            assert sorted(codes) == sorted(encode(u) for u in nodes)
            lt = {(a, b) for a, b in itertools.combinations(codes, 2)}  # a strictly below b
            for a, b in itertools.product(codes, repeat=2):
                strict = (a, b) in lt
                assert not (strict and (b, a) in lt)
                assert a == b or strict or (b, a) in lt
                assert strict == (a != b and oracles.kb_leq(decode(a), decode(b)))
            for a, b, c in itertools.product(codes, repeat=3):
                if (a, b) in lt and (b, c) in lt:
                    assert (a, c) in lt
            for u, v in itertools.permutations(nodes, 2):
                if len(u) < len(v) and v[: len(u)] == u:
                    assert kb_leq(v, u) and not kb_leq(u, v)

        for seed in range(20):
            tree, alpha = _planted(seed)
            prefixes = [tuple(alpha(i) for i in range(n)) for n in range(13)]
            assert all(tree.member(p) for p in prefixes)
            assert is_kb_descending(prefixes)
            stream = []
            for n in range(40):
                p = tuple(alpha(i) for i in range(n))
                stream.append(p + (alpha(n) + 1,))
                stream.append(p + (alpha(n),))
            assert all(tree.member(u) for u in stream)
            assert is_kb_descending(stream)
            assert branch_from_kb_descending(iter(stream), 10) == prefixes[10]


# -- 3 -------------------------------------------------------------------------

PROD_T = FiniteTree([(), (0,), (1,), (1, 2)])
PROD_S = FiniteTree([(), (3,), (4,)])
PRODUCT_FAMILY = [
    (PROD_T, PROD_S),
    (PROD_S, PROD_T),
    (PROD_T, FiniteTree([(), (3,), (4,), (4, 5)])),
    (FiniteTree([(), (0,), (1,), (1, 2), (1, 2, 0)]), PROD_S),
    (PROD_T, PROD_T),
]


def _product_roundtrip(left, right, depth):
    ln, rn = set(left.nodes(depth)), set(right.nodes(depth))
    prod = ProductTree(left, right)
    got = set(prod.nodes(depth))
    assert got == oracles.product_nodes(ln, rn, depth)
    for w in got:
        x, y = prod_iso_inv(left, right, Node(w))
        assert prod_iso(left, right, x, y) == Node(w)
    for u, v in itertools.product(ln, rn):
        z = prod_iso(left, right, Node(u), Node(v))
        assert prod.member(z.seq)
        assert prod_iso_inv(left, right, z) == (Node(u), Node(v))
    # non-members are rejected: every short sequence over small labels
    top = max((max(w) for w in got if w), default=0) + 3
    for w in itertools.chain.from_iterable(itertools.product(range(top), repeat=k) for k in range(3)):
        assert prod.member(w) == (w in got), w


def _branch_roundtrip(left, right, x, y, budget=16):
    z = prod_iso(left, right, x, y)
    bx, by = prod_iso_inv(left, right, z, budget)
    for orig, back in ((x, bx), (y, by)):
        if isinstance(orig, Node):
            assert back == orig
        else:
            assert isinstance(back, Branch) and back.prefix(budget) == orig.prefix(budget)


def test_03_products():
    with criterion(3, "product isomorphism round-trips and membership matches brute force"):
        assert prod_iso(PROD_T, PROD_S, Node((1, 2)), Node((3,))) == Node((24, 5))
        for left, right in PRODUCT_FAMILY:
            _product_roundtrip(left, right, 5)
        binary = presets.tree("full_binary")
        alt = Branch(lambda n: n % 2)
        _branch_roundtrip(binary, binary, alt, Branch(lambda n: 1))  # both components infinite
        _branch_roundtrip(PROD_T, binary, Node((1, 2)), alt)  # left component a node
        _branch_roundtrip(binary, PROD_S, alt, Node((4,)))  # right component a node
        _branch_roundtrip(binary, PROD_S, alt, Node(()))
        rng = random.Random(33)
        for _ in range(20):
            left = FiniteTree(oracles.random_tree(rng, 12, max_label=3, max_depth=5))
            right = FiniteTree(oracles.random_tree(rng, 12, max_label=3, max_depth=5))
            _product_roundtrip(left, right, 5)


# -- 4, 5 ----------------------------------------------------------------------


def _metric_trees():
    rng = random.Random(45)
    return [FiniteTree(oracles.random_tree(rng, 16, max_label=3, max_depth=6)) for _ in range(20)]


def test_04_isometry():
    with criterion(4, "d^T equals the Baire distance of rho images (exact)"):
        for tree in _metric_trees():
            for u, v in itertools.product(tree.node_set, repeat=2):
                d = dist(tree, Node(u), Node(v))
                assert d.is_exact
                n = max(len(u), len(v)) + 2
                ru, rv = rho(tree, Node(u)).prefix(n), rho(tree, Node(v)).prefix(n)
                assert d.value == oracles.baire(ru, rv, n) == oracles.node_dist(u, v)


def test_05_ultrametric():
    with criterion(5, "strong triangle inequality on all node triples (exact)"):
        for tree in _metric_trees():
            nodes = sorted(tree.node_set)
            d = {(u, v): dist(tree, Node(u), Node(v)).value for u, v in itertools.product(nodes, repeat=2)}
            for x, y, z in itertools.product(nodes, repeat=3):
                assert d[x, z] <= max(d[x, y], d[y, z])


# -- 6 -------------------------------------------------------------------------


def _separating_depth(n, sigma):
    d = n
    while 2 ** (d // n) <= sigma**n * d**n:
        d += n
    return d


def test_06_cantor_bendixson():
    with criterion(6, "uncountable states match node-count growth; kernel nodes split within 3|Q|"):
        rng = random.Random(606)
        seen = {True: 0, False: 0}
        for _ in range(30):
            aut_json = oracles.random_automaton_json(rng, 6, alphabet=(0, 1, 2), density=0.45)
            aut = Automaton.from_json(aut_json)
            n, sigma = len(aut.states), 3
            unc = uncountable_states(aut)
            big = _separating_depth(n, sigma)
            for q in aut.states:
                c12 = oracles.count_strings(aut_json, q, 12)
                cbig = oracles.count_strings(aut_json, q, big)
                if q in unc:
                    assert c12 >= 2 ** (12 // n) and cbig >= 2 ** (big // n), (aut_json, q)
                else:
                    assert c12 <= sigma**n * 12**n and cbig <= sigma**n * big**n, (aut_json, q)
                seen[q in unc] += 1

            kern = perfect_kernel(aut)
            if kern.is_empty():
                continue
            kj = kern.to_json()
            reach = 3 * n
            for u in _nodes(kj, 5):
                ext = [v for v, _ in oracles.strings(kj, oracles.run(kj, u), reach)]
                assert any(
                    a[:i] == b[:i] and a[i] != b[i]
                    for a, b in itertools.combinations(ext, 2)
                    for i in range(reach)
                ), (kj, u)
                assert all(oracles.count_strings(kj, oracles.run(kj, u + v), reach) > 0 for v in ext)
        assert seen[True] and seen[False]


def _nodes(aut_json, depth):
    out = []
    for d in range(depth + 1):
        out += [w for w, _ in oracles.strings(aut_json, aut_json["initial"], d)]
    return out


# -- 7 -------------------------------------------------------------------------


def _aut(initial, edges):
    return Automaton.build(initial, edges)


BINARY_LOOP = [("c", 0, "c"), ("c", 1, "c")]
POSITIVE = [
    _aut("q", [("q", 0, "q"), ("q", 1, "q")]),
    _aut("q", [("q", 0, "r"), ("r", 0, "r"), ("r", 1, "r")]),
    _aut("s", [("s", 0, "b"), ("s", 1, "c"), ("b", 0, "b"), ("b", 1, "b"), ("c", 0, "c")]),
    _aut("q", [("q", 0, "q"), ("q", 1, "c")] + BINARY_LOOP),
    _aut("a", [("a", 0, "b"), ("a", 1, "b"), ("b", 0, "a"), ("b", 1, "a")]),
    _aut("s", [("s", 0, "s"), ("s", 1, "t"), ("t", 0, "s"), ("t", 1, "c")] + BINARY_LOOP),
    _aut("p0", [("p0", 0, "p1"), ("p1", 0, "p2"), ("p2", 1, "c")] + BINARY_LOOP),
    _aut("x", [("x", 0, "y"), ("x", 1, "z"), ("y", 0, "z"), ("y", 1, "x"), ("z", 0, "x"), ("z", 1, "y")]),
    Automaton.build("q", [("q", 0, "q"), ("q", 1, "q"), ("d", 0, "d")], states=["q", "d"]),
    _aut("i", [("i", 1, "a"), ("a", 0, "a"), ("a", 1, "b"), ("b", 0, "b"), ("b", 1, "a")]),
]
NEGATIVE = [
    _aut("a", [("a", 0, "a"), ("a", 1, "b"), ("b", 0, "a")]),
    _aut("q0", [("q0", 0, "q0"), ("q0", 1, "q1"), ("q1", 0, "q1")]),
    _aut("q", [("q", 0, "q")]),
    Automaton.build("q", [], states=["q"]),
    _aut("a", [("a", 0, "b"), ("a", 1, "b"), ("b", 0, "a")]),
    _aut("s", [("s", 1, "c"), ("c", 0, "c")]),
    _aut("a", [("a", 0, "a"), ("a", 1, "b"), ("b", 0, "a"), ("b", 1, "c")]),
    _aut("x", [("x", 0, "y"), ("x", 1, "z"), ("y", 0, "z"), ("y", 1, "x"), ("z", 0, "x")]),
    _aut("p", [("p", 0, "q"), ("q", 1, "r")]),
    _aut("s", [("s", 0, "a"), ("s", 1, "a"), ("a", 0, "a"), ("a", 1, "b"), ("b", 0, "a")]),
]


def _positive_by_counting(aut_json, q, n):
    """Zero-measure cones shrink below 2^-(n-1) by depth D; positive ones never do."""
    k = 1
    while (1 - Fraction(1, 2**n)) ** k >= Fraction(1, 2 ** (n - 1)):
        k += 1
    return oracles.cone_measure_bound(aut_json, q, k * n) >= Fraction(1, 2 ** (n - 1))


def test_07_measure():
    with criterion(7, "exact measure bounds, positivity criterion, recursive splitting witnesses"):
        a = {k: Automaton.from_json(v) for k, v in presets.AUTOMATA.items()}
        assert measure_body(a["full_binary"], 30).upper_bounds == [1] * 31
        forced = measure_body(a["forced_first_bit"], 30).upper_bounds
        assert forced[0] == 1 and forced[1:] == [Fraction(1, 2)] * 30
        rep = measure_body(a["no11"], 20)
        assert rep.upper == Fraction(17711, 1048576) and rep.positive is False
        fib = [1, 2]
        while len(fib) < 21:
            fib.append(fib[-1] + fib[-2])
        assert rep.upper_bounds == [Fraction(f, 2**d) for d, f in enumerate(fib)]

        for aut, expected in [(x, True) for x in POSITIVE] + [(x, False) for x in NEGATIVE]:
            aj = aut.to_json()
            n = len(aut.states)
            assert positive_measure(aut) is expected, aj
            assert _positive_by_counting(aj, aut.initial, n) is expected, aj
            bounds = measure_body(aut, 12).upper_bounds
            assert bounds == [oracles.cone_measure_bound(aj, aut.initial, d) for d in range(13)]
            if not expected:
                continue
            phi = binary_embedding(aut, 4)
            assert oracles.embedding_ok(phi)
            for s in itertools.chain.from_iterable(itertools.product((0, 1), repeat=k) for k in range(4)):
                parent, left, right = phi[s], phi[s + (0,)], phi[s + (1,)]
                for child in (left, right):
                    assert len(child) > len(parent) and child[: len(parent)] == parent
                    q = oracles.run(aj, child)
                    assert q is not None and _positive_by_counting(aj, q, n)
                assert not oracles.is_prefix(left, right) and not oracles.is_prefix(right, left)


# -- 8 -------------------------------------------------------------------------


def test_08_admissibility():
    with criterion(8, "exactly one strongly admissible map, equal to the solver (all orders <= 3)"):
        pairs = 0
        for k, j in itertools.product(range(1, 4), repeat=2):
            for lin in all_orders(range(k)):
                for wo in all_orders(range(10, 10 + j)):
                    found = brute_force_strongly_admissible(lin, wo)
                    assert found == [solve_strongly_admissible(lin, wo)], (lin, wo, found)
                    pairs += 1
        assert pairs == 9 * 9


# -- 9 -------------------------------------------------------------------------


def test_09_section_tree_toy():
    with criterion(9, "toy sg sections: even n one node per depth, odd n empty beyond 4"):
        tree = presets.tree("sg_toy_even", {"cap": 4})
        report = section_report(tree, 8)
        assert sorted(report) == [0, 1, 2, 3, 4]
        for n, counts in report.items():
            if n % 2 == 0:
                assert counts == [1] * 8, (n, counts)
                assert tree.level(8, (n,)) == [(n,) + (0,) * 7]
            else:
                assert all(c == 0 for c in counts[4:]), (n, counts)


# -- 10 ------------------------------------------------------------------------


def _linear_trees():
    zeros = LazyTree(lambda u: all(x == 0 for x in u), 2)
    finite = FiniteTree([(0,) * k for k in range(6)])
    rng = random.Random(10)
    table = [rng.randint(0, 2) for _ in range(32)]
    planted = LazyTree(lambda u: all(x == table[i] for i, x in enumerate(u)), 2)
    return [zeros, finite, planted]


def test_10_att():
    with criterion(10, "att of linear trees stops at length 2; att(2^<w) reaches depth 15 with embeddings"):
        bound = 40
        for tree in _linear_trees():
            att = AttTree(tree, node_depth=8)
            assert max(len(w) for w in att.nodes(4)) == 2
            for w in itertools.product(range(bound + 1), repeat=3):
                assert not att.member(w), w

        binary = presets.tree("full_binary")
        for d in range(16):
            assert AttTree(binary).member(tuple(encode(binary_seq(i)) for i in range(d)))
        att = AttTree(binary, node_depth=3)
        depths = set()
        deepest = []
        for w in att.nodes(15):
            depths.add(len(w))
            if len(w) == 15:
                deepest.append(w)
        assert depths == set(range(16))
        assert len(deepest) == 128
        for w in deepest:
            phi = att_embedding(w)
            assert set(phi) == {binary_seq(i) for i in range(15)}
            assert oracles.embedding_ok(phi) and check_binary_embedding(phi, binary)
            assert all(binary.member(v) for v in phi.values())


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except BaseException:  # noqa: BLE001 - reported by criterion()
                failed += 1
    sys.exit(1 if failed else 0)
