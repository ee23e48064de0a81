"""The Kleene-Brouwer ordering and limits of KB-descending sequences.

``u <=KB v`` iff ``v`` is an initial segment of ``u``, or ``u`` and ``v`` are
incompatible and ``u`` is lexicographically below ``v``.  A tree is
well-founded exactly when it is well-ordered by ``<=KB``.
"""
from __future__ import annotations

import enum
import functools
import itertools
from typing import Callable, Iterable, Sequence

from . import _kernels
from .errors import NotDescending, NotOrderPreserving, StreamExhausted
from .linorders import LinOrder
from .seqcode import Oracle, call_oracle, decode, encode
from .trees import Tree, require_finite

kb_leq = _kernels.kb_leq


class KbComparison(enum.Enum):
    LessEq = "LessEq"
    GreaterEq = "GreaterEq"
    Equal = "Equal"


def kb_cmp(u: Sequence[int], v: Sequence[int]) -> KbComparison:
    u, v = tuple(u), tuple(v)
    if u == v:
        return KbComparison.Equal
    return KbComparison.LessEq if kb_leq(u, v) else KbComparison.GreaterEq


def kb_less(u, v) -> bool:
    u, v = tuple(u), tuple(v)
    return u != v and kb_leq(u, v)


def _kb_sort_cmp(u, v):
    if u == v:
        return 0
    return -1 if kb_leq(u, v) else 1


kb_key = functools.cmp_to_key(_kb_sort_cmp)


def kb_sort(nodes: Iterable[Sequence[int]]) -> list[tuple]:
    """Nodes in increasing KB order (deepest-leftmost first, root last)."""
    return sorted((tuple(u) for u in nodes), key=kb_key)


def kb_order_of(tree: Tree) -> LinOrder:
    """``<=KB`` on the codes of a finite tree's nodes, validated as a linear order."""
    nodes = require_finite(tree)
    codes = {encode(u): u for u in nodes}
    return LinOrder.from_relation(codes, lambda a, b: kb_leq(codes[a], codes[b]))


def is_kb_descending(nodes: Sequence[Sequence[int]]) -> bool:
    seq = [tuple(u) for u in nodes]
    return all(kb_less(b, a) for a, b in zip(seq, seq[1:]))


def branch_from_kb_descending(
    nodes: Iterable[Sequence[int]],
    depth: int,
    window: int = 8,
    limit: int | None = 100_000,
    settle_at_end: bool = False,
) -> tuple:
    """First ``depth`` values of the branch a KB-descending stream converges to.

    A position counts as settled once its value has survived ``window``
    consecutive stream elements.  With ``settle_at_end`` a finite stream is
    read off its last element instead of raising StreamExhausted.
    """
    values = [None] * depth
    runs = [0] * depth
    prev = None
    last = None
    for count, u in enumerate(nodes):
        u = tuple(u)
        if prev is not None and not kb_less(u, prev):
            raise NotDescending(f"{u} is not strictly KB-below {prev}")
        prev = last = u
        for i in range(depth):
            if i < len(u) and u[i] == values[i]:
                runs[i] += 1
            elif i < len(u):
                values[i], runs[i] = u[i], 1
            else:
                values[i], runs[i] = None, 0
        if all(r >= window for r in runs):
            return tuple(values)
        if limit is not None and count + 1 >= limit:
            break
    if settle_at_end and last is not None and len(last) >= depth:
        return last[:depth]
    raise StreamExhausted(f"positions 0..{depth - 1} did not settle within the stream")


def find_order_violation(f: Callable[[int], int], nodes: Iterable[Sequence[int]]):
    """A pair of nodes whose KB order ``f`` (acting on codes) fails to preserve, or None."""
    seq = [tuple(u) for u in nodes]
    images = {u: decode(f(encode(u))) for u in seq}
    for u, v in itertools.combinations(seq, 2):
        if kb_leq(u, v) != kb_leq(images[u], images[v]) or kb_leq(v, u) != kb_leq(images[v], images[u]):
            return u, v
    return None


def kb_induced_map(
    f: Callable[[int], int],
    source: Tree,
    target: Tree,
    alpha: Sequence[int] | Oracle,
    depth: int,
    window: int = 8,
    check_nodes: Iterable[Sequence[int]] = (),
    max_prefixes: int = 10_000,
) -> tuple:
    """Prefix of the branch map induced by a KB-preserving code map ``f``.

    ``alpha`` is either a finite prefix (the stream of images is then finite
    and its last element is used) or a branch oracle.  Order preservation is
    checked on every visited node plus ``check_nodes``.
    """
    extra = [tuple(u) for u in check_nodes]
    bad = find_order_violation(f, extra)
    if bad is not None:
        raise NotOrderPreserving(f"f does not preserve KB order on {bad}", witness=bad)

    if callable(alpha):
        prefixes: Iterable[tuple] = (
            tuple(call_oracle(alpha, i) for i in range(n)) for n in range(max_prefixes)
        )
        finite = False
    else:
        a = tuple(alpha)
        prefixes = (a[:n] for n in range(len(a) + 1))
        finite = True

    visited: list[tuple] = []

    def images():
        for u in prefixes:
            if not source.member(u):
                raise NotOrderPreserving(f"{u} is not a node of the source tree", witness=(u,))
            img = decode(f(encode(u)))
            if not target.member(img):
                raise NotOrderPreserving(f"f sends {u} to {img}, outside the target tree", witness=(u,))
            for v in visited:
                w = decode(f(encode(v)))
                if kb_leq(u, v) != kb_leq(img, w) or kb_leq(v, u) != kb_leq(w, img):
                    raise NotOrderPreserving(f"f does not preserve KB order on ({v}, {u})", witness=(v, u))
            visited.append(u)
            yield img

    return branch_from_kb_descending(images(), depth, window=window, settle_at_end=finite)


def descending_chain_search(less: Callable[[int, int], bool], budget: int) -> list[int] | None:
    """Look for evidence of ill-foundedness of a strict order on the naturals.

    Searches ``[0, budget**2]`` for a chain ``x0 > x1 > ...`` (in the order)
    whose entries increase as naturals; every infinite descending sequence
    has such a subsequence.  Returns the longest chain found (capped at
    ``budget``) if it has length >= 2, else None.  Never certifies
    well-foundedness.
    """
    if budget < 2:
        return None
    top = budget * budget
    best: list[int] = []
    steps = 0
    max_steps = max(budget**4, 10_000)

    def extend(chain):
        nonlocal best, steps
        if len(chain) > len(best):
            best = list(chain)
        if len(best) >= budget or steps >= max_steps:
            return
        for y in range(chain[-1] + 1, top + 1):
            steps += 1
            if steps >= max_steps:
                return
            if less(y, chain[-1]):
                chain.append(y)
                extend(chain)
                chain.pop()
                if len(best) >= budget:
                    return

    for x in range(top + 1):
        extend([x])
        if len(best) >= budget or steps >= max_steps:
            break
    return best if len(best) >= 2 else None
