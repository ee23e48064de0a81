"""Points of N_T = T u [T] and the ultrametric on them.

A point is either a ``Node`` (a finite sequence in ``T``) or a ``Branch`` (an
index -> value oracle for an infinite path).  Nodes behave like sequences
padded with -1, so ``d(x, y) = 1 / (n + 1)`` at the least ``n`` where the
padded values differ.  Distances are exact ``Fraction``s; equality of two
branches is only semi-decidable, so such queries return an upper bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import BudgetExceeded, ContractError, InvalidPoint
from .seqcode import call_oracle, decode, pair, pair_ext, unpair, unpair_ext, unzip_pad, zip_pad
from .trees import Tree


@dataclass(frozen=True)
class Node:
    seq: tuple

    def __init__(self, seq=()):
        object.__setattr__(self, "seq", tuple(seq))

    def value(self, n: int) -> int:
        return self.seq[n] if n < len(self.seq) else -1

    def to_json(self):
        return {"node": list(self.seq)}


@dataclass(frozen=True, eq=False)
class Branch:
    fn: Callable[[int], int]
    spec: dict | None = None

    def value(self, n: int) -> int:
        return call_oracle(self.fn, n)

    def prefix(self, n: int) -> tuple:
        return tuple(self.value(i) for i in range(n))

    def to_json(self):
        if self.spec is None:
            raise TypeError("ad-hoc branch oracle has no JSON form")
        return {"branch": self.spec}


Point = Node | Branch


@dataclass(frozen=True)
class DistResult:
    kind: str  # "exact" or "atMost"
    value: Fraction

    @classmethod
    def exact(cls, value) -> "DistResult":
        return cls("exact", Fraction(value))

    @classmethod
    def at_most(cls, value) -> "DistResult":
        return cls("atMost", Fraction(value))

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def to_json(self):
        return {self.kind: [self.value.numerator, self.value.denominator]}


class NoShiftTarget(ContractError):
    code = "NoShiftTarget"


def check_point(tree: Tree, x: Point, upto: int = 0) -> None:
    """Raise InvalidPoint unless ``x`` lies in N_T (branches checked to ``upto``)."""
    if isinstance(x, Node):
        if not tree.member(x.seq):
            raise InvalidPoint(f"{x.seq} is not a node of the tree")
    elif not tree.member(x.prefix(upto)):
        raise InvalidPoint(f"branch prefix {x.prefix(upto)} leaves the tree")


def _first_difference(x: Point, y: Point, stop: int):
    for n in range(stop):
        if x.value(n) != y.value(n):
            return n
    return None


def dist(tree: Tree, x: Point, y: Point, budget: int = 64) -> DistResult:
    """Exact distance, or an upper bound when two branches agree through ``budget``."""
    if isinstance(x, Node) and isinstance(y, Node):
        check_point(tree, x)
        check_point(tree, y)
        if x.seq == y.seq:
            return DistResult.exact(0)
        n = _first_difference(x, y, max(len(x.seq), len(y.seq)) + 1)
        return DistResult.exact(Fraction(1, n + 1))
    if isinstance(x, Node) or isinstance(y, Node):
        node, br = (x, y) if isinstance(x, Node) else (y, x)
        check_point(tree, node)
        stop = len(node.seq) + 1
        check_point(tree, br, stop)
        n = _first_difference(node, br, stop)
        if n is None:
            raise InvalidPoint(f"branch takes a negative value within {stop} positions")
        return DistResult.exact(Fraction(1, n + 1))
    check_point(tree, x, budget)
    check_point(tree, y, budget)
    n = _first_difference(x, y, budget)
    if n is None:
        return DistResult.at_most(Fraction(1, budget + 1))
    return DistResult.exact(Fraction(1, n + 1))


def baire_dist(a: Callable[[int], int], b: Callable[[int], int], budget: int) -> DistResult:
    """The usual Baire-space distance of two sequences, scanned to ``budget``."""
    for n in range(budget):
        if call_oracle(a, n) != call_oracle(b, n):
            return DistResult.exact(Fraction(1, n + 1))
    return DistResult.at_most(Fraction(1, budget + 1))


def presentation(tree: Tree, s: int) -> Node:
    """The ``s``-th point of the dense sequence of nodes."""
    if s >= 1:
        u = decode(s)
        if tree.member(u):
            return Node(u)
    return Node(())


def rho(tree: Tree, x: Point) -> Branch:
    """Isometric image in Baire space: entries shifted up by one, nodes padded with 0."""
    check_point(tree, x)
    if isinstance(x, Node):
        u = x.seq
        return Branch(lambda n: u[n] + 1 if n < len(u) else 0)
    return Branch(lambda n: x.value(n) + 1)


def rho_inv(tree: Tree, y: Point, budget: int = 64) -> Point:
    """Inverse of :func:`rho` on branches of the shift-closure tree."""
    vals = [y.value(n) for n in range(budget)]
    if any(v < 0 for v in vals):
        raise InvalidPoint("negative entry in a Baire-space point")
    if 0 in vals:
        k = vals.index(0)
        if any(vals[k:]):
            raise InvalidPoint(f"positive entry after a 0 at position {k}")
        x: Point = Node(v - 1 for v in vals[:k])
        check_point(tree, x)
        return x
    x = Branch(lambda n: y.value(n) - 1)
    check_point(tree, x, budget)
    return x


def prod_iso(left: Tree, right: Tree, x: Point, y: Point) -> Point:
    """The isomorphism N_T x N_S -> N_(T (x) S): position-wise shifted pairing."""
    if isinstance(x, Node):
        check_point(left, x)
    if isinstance(y, Node):
        check_point(right, y)
    if isinstance(x, Node) and isinstance(y, Node):
        return Node(zip_pad(x.seq, y.seq))
    return Branch(lambda n: pair_ext(x.value(n), y.value(n)))


def prod_iso_inv(left: Tree, right: Tree, z: Point, budget: int = 64) -> tuple[Point, Point]:
    """Inverse of :func:`prod_iso`.

    A branch ``z`` is classified within ``budget``: if one side turns -1 it
    is a node and the other a branch; if neither does, both are returned as
    branches whose oracles raise BudgetExceeded should a -1 show up later.
    """
    if isinstance(z, Node):
        parts = unzip_pad(z.seq)
        if parts is None:
            raise InvalidPoint(f"{z.seq} is not in the image of the padded zip")
        x, y = Node(parts[0]), Node(parts[1])
        check_point(left, x)
        check_point(right, y)
        return x, y
    pairs = []
    for n in range(budget):
        v = z.value(n)
        if v < 0:
            raise InvalidPoint(f"negative entry {v} at position {n}")
        pairs.append(unpair_ext(v))
    xs = [a for a, _ in pairs]
    ys = [b for _, b in pairs]

    def split(vals):
        if -1 not in vals:
            return None
        k = vals.index(-1)
        if any(v != -1 for v in vals[k:]):
            raise InvalidPoint(f"a component resumes after -1 at position {k}")
        return k

    kx, ky = split(xs), split(ys)

    def component(i, strict):
        def fn(n):
            v = unpair_ext(z.value(n))[i]
            if v < 0:
                if strict:
                    raise InvalidPoint(f"component {i} ends at {n} but z is a branch")
                raise BudgetExceeded(f"component {i} turned out finite beyond budget {budget}")
            return v
        return Branch(fn)

    if kx is not None:
        x: Point = Node(xs[:kx])
        y: Point = component(1, True)
        check_point(left, x)
        check_point(right, y, budget)
    elif ky is not None:
        x, y = component(0, True), Node(ys[:ky])
        check_point(left, x, budget)
        check_point(right, y)
    else:
        x, y = component(0, False), component(1, False)
        check_point(left, x, budget)
        check_point(right, y, budget)
    return x, y


def _leftmost(tree: Tree, length: int):
    """The node of length ``length`` on the leftmost path, or None if the path is shorter."""
    u: tuple = ()
    for _ in range(length):
        kids = tree.children(u)
        if not kids:
            return None
        u = kids[0]
    return u


def _sum_image(side: int, v: tuple) -> tuple:
    return (pair(side, v[0]),) + v[1:]


def sum_iso(left: Tree, right: Tree, side: int, x: Point) -> Point:
    """Embed a point of summand ``side`` into N_(T (+) S).

    Non-root nodes and branches are re-tagged on their first entry.  The left
    root goes to the root of the sum; the right root is absorbed by shifting
    the leftmost path of the right tree one step down (its ``j``-th node goes
    to the image of its ``j+1``-th), which raises NoShiftTarget when that path
    is finite and ``x`` is its last node.
    """
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    tree = (left, right)[side]
    check_point(tree, x)
    if isinstance(x, Branch):
        return Branch(lambda n: pair(side, x.value(0)) if n == 0 else x.value(n))
    u = x.seq
    if side == 0:
        return Node(_sum_image(0, u) if u else ())
    if u == _leftmost(right, len(u)):
        nxt = _leftmost(right, len(u) + 1)
        if nxt is None:
            raise NoShiftTarget(f"{u} ends the finite leftmost path of the right summand")
        return Node(_sum_image(1, nxt))
    return Node(_sum_image(1, u))


def sum_iso_inv(left: Tree, right: Tree, z: Point) -> tuple[int, Point]:
    """Inverse of :func:`sum_iso`: returns ``(side, point)``."""
    if isinstance(z, Branch):
        side, k = unpair(z.value(0))
        if side > 1:
            raise InvalidPoint("first entry is not tagged 0 or 1")
        return side, Branch(lambda n: k if n == 0 else z.value(n))
    w = z.seq
    if not w:
        return 0, Node(())
    side, k = unpair(w[0])
    if side > 1:
        raise InvalidPoint("first entry is not tagged 0 or 1")
    v = (k,) + w[1:]
    tree = (left, right)[side]
    if not tree.member(v):
        raise InvalidPoint(f"{w} is not a node of the sum")
    if side == 1 and v == _leftmost(right, len(v)):
        return 1, Node(_leftmost(right, len(v) - 1))
    return side, Node(v)
