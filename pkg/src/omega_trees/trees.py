"""Trees on the naturals.

Every tree answers ``member(u)`` and ``label_bound(u)``; the bound caps the
labels ``k`` with ``u + (k,)`` in the tree (``-1`` when ``u`` has no children)
so that children can be enumerated.  Concrete trees are finite node sets,
automaton-presented regular trees, or lazy membership oracles; the
combinators (subtree, shift closure, sum, product, att) and the predicate
constructors build new trees from these without materializing them.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Callable, Iterable, Iterator, Sequence

from . import _kernels
from .automaton import Automaton
from .errors import EmptyTree, NonFiniteTree, OracleError, PrefixClosureViolation
from .seqcode import decode, encode, pair, pair_ext, unpair, unzip_pad

log = logging.getLogger(__name__)

is_prefix = _kernels.is_prefix
incompatible = _kernels.incompatible


class Tree:
    """Base class; subclasses implement ``member`` and ``label_bound``."""

    finite = False

    def member(self, u: Sequence[int]) -> bool:
        raise NotImplementedError

    def label_bound(self, u: Sequence[int]) -> int:
        raise NotImplementedError

    def __contains__(self, u):
        return self.member(tuple(u))

    def children(self, u: Sequence[int]) -> list[tuple]:
        u = tuple(u)
        return [u + (k,) for k in range(self.label_bound(u) + 1) if self.member(u + (k,))]

    def nodes(self, max_depth: int, start: Sequence[int] = ()) -> Iterator[tuple]:
        """Breadth-first enumeration of the nodes extending ``start`` of length <= max_depth."""
        start = tuple(start)
        if not self.member(start):
            return
        queue = deque([start])
        while queue:
            u = queue.popleft()
            yield u
            if len(u) < max_depth:
                queue.extend(self.children(u))

    def level(self, depth: int, start: Sequence[int] = ()) -> list[tuple]:
        return [u for u in self.nodes(depth, start) if len(u) == depth]

    def to_json(self):
        raise TypeError(f"{type(self).__name__} has no JSON form")


class FiniteTree(Tree):
    finite = True

    def __init__(self, nodes: Iterable[Sequence[int]]):
        self.node_set = frozenset(tuple(u) for u in nodes)
        if () not in self.node_set:
            raise EmptyTree("a tree must contain the empty sequence")
        kids: dict[tuple, list[int]] = {}
        for u in self.node_set:
            if any(x < 0 for x in u):
                raise ValueError(f"node {u} has a negative entry")
            if u and u[:-1] not in self.node_set:
                raise PrefixClosureViolation(f"{u} is in the tree but {u[:-1]} is not")
            if u:
                kids.setdefault(u[:-1], []).append(u[-1])
        self._bound = {u: max(ks) for u, ks in kids.items()}

    def member(self, u):
        return tuple(u) in self.node_set

    def label_bound(self, u):
        return self._bound.get(tuple(u), -1)

    def __len__(self):
        return len(self.node_set)

    def sorted_nodes(self) -> list[tuple]:
        return sorted(self.node_set, key=lambda u: (len(u), u))

    def to_json(self):
        return {"finite": [list(u) for u in self.sorted_nodes()]}

    def __repr__(self):
        return f"FiniteTree({self.sorted_nodes()!r})"


class RegularTree(Tree):
    def __init__(self, automaton: Automaton):
        if automaton.is_empty():
            raise EmptyTree("the empty automaton presents no tree")
        self.automaton = automaton

    def member(self, u):
        return self.automaton.run(u) is not None

    def label_bound(self, u):
        q = self.automaton.run(u)
        if q is None:
            return -1
        out = self.automaton.out(q)
        return out[-1][0] if out else -1

    def children(self, u):
        u = tuple(u)
        q = self.automaton.run(u)
        if q is None:
            return []
        return [u + (a,) for a, _ in self.automaton.out(q)]

    def to_json(self):
        return self.automaton.to_json()


class LazyTree(Tree):
    """A tree given by a membership oracle and a per-node label bound.

    Prefix closure is checked on the query path: asking about ``u`` evaluates
    the oracle on every prefix of ``u`` and raises if ``u`` is admitted while
    some prefix is not.
    """

    def __init__(self, oracle: Callable[[tuple], bool], bound, spec=None):
        self.oracle = oracle
        self._bound = bound if callable(bound) else (lambda u, b=bound: b)
        self.spec = spec
        if not self._ask(()):
            raise EmptyTree("the membership oracle rejects the empty sequence")

    def _ask(self, u):
        try:
            return bool(self.oracle(u))
        except Exception as exc:  # noqa: BLE001
            raise OracleError(f"membership oracle failed on {u}: {exc}") from exc

    def member(self, u):
        u = tuple(u)
        answers = [self._ask(u[:k]) for k in range(len(u) + 1)]
        if all(answers):
            return True
        first_no = answers.index(False)
        if any(answers[first_no:]):
            bad = answers.index(True, first_no)
            raise PrefixClosureViolation(
                f"oracle admits {u[:bad]} but rejects its prefix {u[:first_no]}"
            )
        return False

    def label_bound(self, u):
        return self._bound(tuple(u))

    def to_json(self):
        if self.spec is None:
            raise TypeError("this lazy tree was built from an ad-hoc oracle and has no JSON form")
        return self.spec


# -- combinators --------------------------------------------------------------


class SubTree(Tree):
    """``T_u``: the nodes of ``T`` compatible with ``u``."""

    def __init__(self, tree: Tree, u: Sequence[int]):
        self.tree = tree
        self.u = tuple(u)
        self.finite = tree.finite

    def member(self, v):
        v = tuple(v)
        return not incompatible(self.u, v) and self.tree.member(v)

    def label_bound(self, v):
        v = tuple(v)
        if len(v) < len(self.u):
            return self.u[len(v)]
        return self.tree.label_bound(v)

    def to_json(self):
        return {"op": "subtree", "args": [self.tree.to_json()], "node": list(self.u)}


class ShiftClosure(Tree):
    """The tree of all ``u + 1`` (entries shifted up by one) for ``u`` in ``T``,
    each optionally followed by a block of zeros."""

    def __init__(self, tree: Tree):
        self.tree = tree

    @staticmethod
    def _unshift(w):
        end = len(w)
        while end and w[end - 1] == 0:
            end -= 1
        core = w[:end]
        if any(x == 0 for x in core):
            return None
        return tuple(x - 1 for x in core)

    def member(self, w):
        u = self._unshift(tuple(w))
        return u is not None and self.tree.member(u)

    def label_bound(self, w):
        w = tuple(w)
        if 0 in w:
            return 0
        return self.tree.label_bound(tuple(x - 1 for x in w)) + 1

    def to_json(self):
        return {"op": "shift_closure", "args": [self.tree.to_json()]}


class SumTree(Tree):
    """``T (+) S``: ``(p(0,k)) + u`` for ``(k) + u`` in ``T`` and
    ``(p(1,k)) + u`` for ``(k) + u`` in ``S``."""

    def __init__(self, left: Tree, right: Tree):
        self.sides = (left, right)
        self.finite = left.finite and right.finite

    def member(self, w):
        w = tuple(w)
        if not w:
            return True
        side, k = unpair(w[0])
        if side > 1:
            return False
        return self.sides[side].member((k,) + w[1:])

    def label_bound(self, w):
        w = tuple(w)
        if w:
            side, k = unpair(w[0])
            if side > 1:
                return -1
            return self.sides[side].label_bound((k,) + w[1:])
        best = -1
        for side, t in enumerate(self.sides):
            b = t.label_bound(())
            if b >= 0:
                best = max(best, pair(side, b))
        return best

    def to_json(self):
        return {"op": "sum", "args": [t.to_json() for t in self.sides]}


class ProductTree(Tree):
    """``(x)(T, S)``: the empty sequence and every ``zip_pad(u, v)`` with
    ``u`` in ``T`` and ``v`` in ``S``."""

    def __init__(self, left: Tree, right: Tree):
        self.left = left
        self.right = right
        self.finite = left.finite and right.finite

    def explain(self, w) -> str | None:
        """Why ``w`` is not in the product, or None if it is."""
        w = tuple(w)
        if not w:
            return None
        parts = unzip_pad(w)
        if parts is None:
            return "MalformedPadding: a -1 precedes a natural on one side"
        u, v = parts
        if not self.left.member(u):
            return f"left component {u} is not in the left tree"
        if not self.right.member(v):
            return f"right component {v} is not in the right tree"
        return None

    def member(self, w):
        reason = self.explain(w)
        if reason is not None and reason.startswith("Malformed"):
            log.debug("%s not in product: %s", tuple(w), reason)
        return reason is None

    def label_bound(self, w):
        w = tuple(w)
        parts = unzip_pad(w)
        if parts is None:
            return -1
        u, v = parts
        n = len(w)
        a = self.left.label_bound(u) if len(u) == n else -1
        b = self.right.label_bound(v) if len(v) == n else -1
        return pair_ext(a, b)

    def to_json(self):
        return {"op": "product", "args": [self.left.to_json(), self.right.to_json()]}


def binary_seq(i: int) -> tuple:
    """The ``i``-th binary sequence in length-then-lexicographic order."""
    length = (i + 1).bit_length() - 1
    offset = i - ((1 << length) - 1)
    return tuple((offset >> (length - 1 - j)) & 1 for j in range(length))


def binary_index(s: Sequence[int]) -> int:
    offset = 0
    for bit in s:
        offset = 2 * offset + bit
    return (1 << len(s)) - 1 + offset


class AttTree(Tree):
    """The tree of attempted embeddings of the complete binary tree into ``T``.

    ``w`` is a node when every ``w(n)`` codes a node of ``T`` and, for the
    ``n``-th binary sequence ``s_n``, incompatibility and proper extension
    among the ``s_n`` are carried over to the decoded nodes.

    Children are enumerated from candidate ``T``-nodes of length at most
    ``node_depth``; the tree itself has no such restriction.
    """

    def __init__(self, tree: Tree, node_depth: int = 6):
        self.tree = tree
        self.node_depth = node_depth

    def _decoded(self, w):
        out = []
        for c in w:
            if c < 1:
                return None
            out.append(decode(c))
        return out

    def _consistent(self, us, n) -> bool:
        """Check position ``n`` against positions ``< n``."""
        sn = binary_seq(n)
        un = us[n]
        for m in range(n):
            sm = binary_seq(m)
            um = us[m]
            if incompatible(sm, sn):
                if not incompatible(um, un):
                    return False
            elif len(sm) < len(sn):  # compatible and shorter: a proper prefix
                if not (len(um) < len(un) and is_prefix(um, un)):
                    return False
        return True

    def member(self, w):
        us = self._decoded(tuple(w))
        if us is None:
            return False
        if not all(self.tree.member(u) for u in us):
            return False
        return all(self._consistent(us, n) for n in range(len(us)))

    def children(self, w):
        w = tuple(w)
        us = self._decoded(w)
        if us is None or not self.member(w):
            return []
        n = len(w)
        s = binary_seq(n)
        base = us[binary_index(s[:-1])] if s else ()
        # the root image may be anything; later images properly extend their parent's
        cands = self.tree.nodes(self.node_depth, base)
        out = []
        for x in cands:
            if s and len(x) == len(base):
                continue
            if self._consistent(us + [x], n):
                out.append(w + (encode(x),))
        out.sort()
        return out

    def label_bound(self, w):
        kids = self.children(w)
        return kids[-1][-1] if kids else -1

    def to_json(self):
        return {"op": "att", "args": [self.tree.to_json()], "node_depth": self.node_depth}


def att_embedding(w: Sequence[int]) -> dict:
    """The partial map ``s_i -> decode(w(i))`` carried by an att node."""
    return {binary_seq(i): decode(c) for i, c in enumerate(w)}


def check_binary_embedding(phi: dict, tree: Tree | None = None) -> bool:
    """``phi`` is injective, preserves proper extension and incompatibility,
    and (if ``tree`` is given) takes values in the tree."""
    items = list(phi.items())
    if len({v for _, v in items}) != len(items):
        return False
    if tree is not None and not all(tree.member(v) for _, v in items):
        return False
    for s, x in items:
        for t, y in items:
            if len(s) < len(t) and is_prefix(s, t):
                if not (len(x) < len(y) and is_prefix(x, y)):
                    return False
            if incompatible(s, t) and not incompatible(x, y):
                return False
    return True


def subtree_at(tree: Tree, u: Sequence[int]) -> SubTree:
    return SubTree(tree, u)


def shift_closure(tree: Tree) -> ShiftClosure:
    return ShiftClosure(tree)


def tree_sum(left: Tree, right: Tree) -> SumTree:
    return SumTree(left, right)


def tree_product(left: Tree, right: Tree) -> ProductTree:
    return ProductTree(left, right)


def att(tree: Tree, node_depth: int = 6) -> AttTree:
    return AttTree(tree, node_depth)


# -- constructors from predicates ---------------------------------------------


def elementwise_tree(pred: Callable[[int], bool], cap: int, spec=None) -> LazyTree:
    """All sequences whose entries satisfy ``pred``; labels explored up to ``cap``."""
    return LazyTree(lambda u: all(pred(x) for x in u), cap, spec)


def chain_tree(less: Callable[[int, int], bool], cap: int, spec=None, in_field=None) -> LazyTree:
    """Strictly descending sequences: ``u(n-1) < ... < u(0)`` in the given order,
    with entries restricted to ``in_field`` when the order is not total on the naturals."""

    def oracle(u):
        if in_field is not None and not all(in_field(x) for x in u):
            return False
        return all(less(u[i + 1], u[i]) for i in range(len(u) - 1))

    return LazyTree(oracle, cap, spec)


def sg_tree(rel: Callable[[int, int], bool], cap: int, spec=None) -> LazyTree:
    """``u`` is a node iff ``u`` is empty or ``rel(u(0), <u(1..t)>)`` for all ``t < len(u)``."""

    def oracle(u):
        return not u or all(rel(u[0], encode(u[1 : t + 1])) for t in range(len(u)))

    return LazyTree(oracle, cap, spec)


def bar_tree(rel: Callable[[int], bool], cap: int, spec=None) -> LazyTree:
    """``u`` is a node iff no proper prefix of ``u`` has a code satisfying ``rel``."""
    return LazyTree(lambda u: not any(rel(encode(u[:t])) for t in range(len(u))), cap, spec)


def interleave_unfold(rel: Callable[[int, int, int], bool], cap: int, spec=None) -> LazyTree:
    """Nodes ``(n, u0, v0, ..., u_{m-1}, v_{m-1})`` with
    ``rel(n, <u0..u_{t-1}>, <v0..v_{t-1}>)`` for every ``t < m``; a trailing
    ``u_m`` without its ``v_m`` is admitted whenever the even part is."""

    def oracle(w):
        if len(w) <= 1:
            return True
        n, rest = w[0], w[1:]
        m = len(rest) // 2
        us, vs = rest[0 : 2 * m : 2], rest[1 : 2 * m : 2]
        return all(rel(n, encode(us[:t]), encode(vs[:t])) for t in range(m))

    return LazyTree(oracle, cap, spec)


def section_report(tree: Tree, depth: int) -> dict[int, list[int]]:
    """For each first coordinate ``n``, the node counts at lengths 1..depth in ``T_(n)``."""
    report = {}
    for (n,) in tree.children(()):
        counts = [0] * (depth + 1)
        for u in tree.nodes(depth, (n,)):
            counts[len(u)] += 1
        report[n] = counts[1:]
    return report


def require_finite(tree: Tree, max_depth: int = 64) -> list[tuple]:
    """All nodes of a finite tree, or NonFiniteTree."""
    if isinstance(tree, FiniteTree):
        return tree.sorted_nodes()
    if not tree.finite:
        raise NonFiniteTree(f"{type(tree).__name__} is not a finite tree")
    found = list(tree.nodes(max_depth))
    if any(len(u) == max_depth for u in found):
        raise NonFiniteTree("tree has nodes at the exploration horizon")
    return sorted(found, key=lambda u: (len(u), u))
