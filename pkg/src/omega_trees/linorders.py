"""Finite linear orders and admissible functions between them.

A partial map ``f`` from the field of ``lin`` to the field of ``wo`` is
admissible when

0. its graph lies in ``field(lin) x field(wo)``;
1. its domain is downward closed in ``lin``;
2. ``n' <= n  <->  f(n') <= f(n)`` on the domain;
3. ``f(n)`` is the ``wo``-supremum of the successors of the images of the
   points strictly below ``n`` (the supremum of nothing is the least element).

It is strongly admissible if no single new pair keeps it admissible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import FieldTooLarge, InvalidOrder, NotInField

PartialMap = dict  # int -> int, functional by construction


@dataclass(frozen=True)
class LinOrder:
    """A linear order on a finite set of naturals, stored least-first."""

    elements: tuple
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = {x: i for i, x in enumerate(self.elements)}
        if len(pos) != len(self.elements):
            raise InvalidOrder("repeated element in order")
        object.__setattr__(self, "_pos", pos)

    @classmethod
    def from_relation(cls, fld: Iterable[int], leq: Callable[[int, int], bool]) -> "LinOrder":
        """Build from a relation oracle, checking every order axiom on ``fld``."""
        items = sorted(set(fld))
        n = len(items)
        mat = [[bool(leq(a, b)) for b in items] for a in items]
        for i in range(n):
            if not mat[i][i]:
                raise InvalidOrder(f"not reflexive at {items[i]}")
            for j in range(i + 1, n):
                if mat[i][j] == mat[j][i]:
                    kind = "antisymmetric" if mat[i][j] else "total"
                    raise InvalidOrder(f"not {kind} at ({items[i]}, {items[j]})")
        for i, j, k in itertools.product(range(n), repeat=3):
            if mat[i][j] and mat[j][k] and not mat[i][k]:
                raise InvalidOrder(f"not transitive at ({items[i]}, {items[j]}, {items[k]})")
        below = [sum(row[i] for row in mat) - 1 for i in range(n)]
        ordered = [None] * n
        for i, r in enumerate(below):
            ordered[r] = items[i]
        return cls(tuple(ordered))

    @classmethod
    def from_pairs(cls, fld: Iterable[int], pairs: Iterable[tuple[int, int]]) -> "LinOrder":
        """Build from the explicit list of ``a <= b`` pairs (reflexive pairs optional)."""
        rel = {(a, b) for a, b in pairs}
        items = set(fld)
        for a, b in rel:
            if a not in items or b not in items:
                raise InvalidOrder(f"pair ({a}, {b}) outside the field")
        return cls.from_relation(items, lambda a, b: a == b or (a, b) in rel)

    @property
    def field(self) -> frozenset:
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._pos

    def position(self, x: int) -> int:
        try:
            return self._pos[x]
        except KeyError:
            raise NotInField(f"{x} is not in the field") from None

    def leq(self, a: int, b: int) -> bool:
        return self.position(a) <= self.position(b)

    def less(self, a: int, b: int) -> bool:
        return self.position(a) < self.position(b)

    def least(self):
        return self.elements[0] if self.elements else None

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for i, a in enumerate(self.elements) for b in self.elements[i:]]


def suc(order: LinOrder, n: int):
    """Immediate successor of ``n``, or None at the maximum."""
    i = order.position(n)
    return order.elements[i + 1] if i + 1 < len(order) else None


def initial_segment_rank(order: LinOrder, n: int) -> int:
    return order.position(n)


def _sup(wo: LinOrder, values):
    if not values:
        return wo.least()
    return max(values, key=wo.position)


def admissible_violation(f: Mapping[int, int], lin: LinOrder, wo: LinOrder):
    """Index (0-3) of the first violated admissibility condition, or None."""
    if any(n not in lin or m not in wo for n, m in f.items()):
        return 0
    for n in f:
        if any(k not in f for k in lin.elements[: lin.position(n)]):
            return 1
    for n, n2 in itertools.product(f, repeat=2):
        if lin.leq(n2, n) != wo.leq(f[n2], f[n]):
            return 2
    for n in f:
        succs = []
        for k in lin.elements[: lin.position(n)]:
            s = suc(wo, f[k])
            if s is None:
                return 3
            succs.append(s)
        if f[n] != _sup(wo, succs):
            return 3
    return None


def admissible_check(f: Mapping[int, int], lin: LinOrder, wo: LinOrder) -> bool:
    return admissible_violation(f, lin, wo) is None


def strongly_admissible_check(f: Mapping[int, int], lin: LinOrder, wo: LinOrder) -> bool:
    if not admissible_check(f, lin, wo):
        return False
    for n in lin.elements:
        if n in f:
            continue
        for m in wo.elements:
            if admissible_check({**f, n: m}, lin, wo):
                return False
    return True


def solve_strongly_admissible(lin: LinOrder, wo: LinOrder) -> dict:
    """The unique strongly admissible map: the first ``min(|lin|, |wo|)``
    elements of ``lin`` onto the initial segment of ``wo`` of that length."""
    k = min(len(lin), len(wo))
    return dict(zip(lin.elements[:k], wo.elements[:k]))


def brute_force_strongly_admissible(lin: LinOrder, wo: LinOrder, max_field: int = 5) -> list[dict]:
    if len(lin) > max_field or len(wo) > max_field:
        raise FieldTooLarge(f"fields larger than {max_field} are not enumerated")
    found = []
    choices = [None, *wo.elements]
    for images in itertools.product(choices, repeat=len(lin)):
        f = {n: m for n, m in zip(lin.elements, images) if m is not None}
        if strongly_admissible_check(f, lin, wo):
            found.append(f)
    return found


def initial_similarity_check(f: Mapping[int, int], o1: LinOrder, o2: LinOrder) -> bool:
    """``f`` is an isomorphism of ``o1`` onto an initial segment of ``o2``."""
    if set(f) != set(o1.elements):
        return False
    if any(m not in o2 for m in f.values()):
        return False
    for a, b in itertools.product(o1.elements, repeat=2):
        if o1.leq(a, b) != o2.leq(f[a], f[b]):
            return False
    image = set(f.values())
    return image == set(o2.elements[: len(image)])


def all_orders(fld: Iterable[int]) -> Iterable[LinOrder]:
    for perm in itertools.permutations(sorted(set(fld))):
        yield LinOrder(perm)
