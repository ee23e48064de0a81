"""Cantor-Bendixson analysis and coin-toss measure for regular trees.

For an automaton-presented tree the questions that are undecidable for
general recursive trees become graph questions:

* a state is *live* if an infinite path starts there (it reaches a cycle);
* a state is *uncountable* if it reaches a strongly connected component
  with more internal edges than states (two distinct cycles);
* the body below a state has positive measure iff the state reaches the
  largest set of states that is closed under both binary transitions.

The perfect kernel of the body is the body of the automaton restricted to
its uncountable states; every node is an isolated point of N_T.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .automaton import Automaton
from .errors import NoPositiveMeasure, NonBinaryAlphabet, NotAMember


class ScatClass(enum.Enum):
    NodeScattered = "NodeScattered"
    BranchKernelCone = "BranchKernelCone"
    BranchScatteredCone = "BranchScatteredCone"


@dataclass(frozen=True)
class ScatReport:
    """Classification of a node ``u``: the node itself is always an isolated
    point; ``cone`` describes the branches through ``u`` (None if there are none)."""

    node: ScatClass
    cone: ScatClass | None

    def to_json(self):
        return {"node": self.node.value, "cone": self.cone.value if self.cone else None}


@dataclass(frozen=True)
class StateClass:
    live: bool
    uncountable: bool
    positive: bool | None = None  # only defined for binary automata


@dataclass
class MeasureReport:
    upper_bounds: list = field(default_factory=list)
    positive: bool = False
    iterations: int = 0

    @property
    def upper(self) -> Fraction:
        return self.upper_bounds[-1]

    def to_json(self, full: bool = False):
        out = {"upper": [self.upper.numerator, self.upper.denominator], "positive": self.positive}
        if full:
            out["upper_bounds"] = [[v.numerator, v.denominator] for v in self.upper_bounds]
            out["iterations"] = self.iterations
        return out


def _graph(a: Automaton) -> nx.MultiDiGraph:
    g = nx.MultiDiGraph()
    g.add_nodes_from(a.states)
    for (q, lab), r in a.edges.items():
        g.add_edge(q, r, label=lab)
    return g


def _reaching(g: nx.MultiDiGraph, targets) -> set:
    """States from which some state in ``targets`` is reachable (targets included)."""
    found = set(targets)
    for t in targets:
        found |= nx.ancestors(g, t)
    return found


def _scc_edge_counts(g):
    for comp in nx.strongly_connected_components(g):
        edges = sum(1 for q, r in g.edges(comp) if r in comp)
        yield comp, edges


def live_states(a: Automaton) -> set:
    g = _graph(a)
    cyclic = set()
    for comp, edges in _scc_edge_counts(g):
        if edges >= 1:
            cyclic |= comp
    return _reaching(g, cyclic)


def uncountable_states(a: Automaton) -> set:
    g = _graph(a)
    branching = set()
    for comp, edges in _scc_edge_counts(g):
        if edges > len(comp):
            branching |= comp
    return _reaching(g, branching)


def perfect_kernel(a: Automaton) -> Automaton:
    """The automaton whose tree's body is the perfect kernel of the body of ``a``."""
    return a.restrict(uncountable_states(a))


def _state_of(a: Automaton, u) -> object:
    q = a.run(tuple(u))
    if q is None:
        raise NotAMember(f"{tuple(u)} is not a node of the automaton's tree")
    return q


def scat_member(a: Automaton, u: Sequence[int]) -> ScatReport:
    q = _state_of(a, u)
    if q in uncountable_states(a):
        cone = ScatClass.BranchKernelCone
    elif q in live_states(a):
        cone = ScatClass.BranchScatteredCone
    else:
        cone = None
    return ScatReport(ScatClass.NodeScattered, cone)


def _require_binary(a: Automaton):
    if any(lab not in (0, 1) for lab in a.alphabet):
        raise NonBinaryAlphabet(f"alphabet {a.alphabet} is not a subset of {{0, 1}}")


def complete_core(a: Automaton) -> set:
    """Largest set of states having both binary transitions, all staying inside the set."""
    core = set(a.states)
    changed = True
    while changed:
        changed = False
        for q in list(core):
            t0, t1 = a.step(q, 0), a.step(q, 1)
            if t0 not in core or t1 not in core:
                core.discard(q)
                changed = True
    return core


def positive_states(a: Automaton) -> set:
    _require_binary(a)
    core = complete_core(a)
    return _reaching(_graph(a), core) if core else set()


def classify_states(a: Automaton) -> dict:
    live, unc = live_states(a), uncountable_states(a)
    try:
        pos = positive_states(a)
    except NonBinaryAlphabet:
        pos = None
    return {
        q: StateClass(q in live, q in unc, None if pos is None else q in pos)
        for q in a.states
    }


def positive_measure(a: Automaton, u: Sequence[int] = ()) -> bool:
    """Whether the branches through ``u`` have positive coin-toss measure."""
    _require_binary(a)
    return _state_of(a, u) in positive_states(a)


def measure_body(a: Automaton, max_depth: int) -> MeasureReport:
    """Exact upper bounds ``v_d = #(nodes of length d) / 2**d`` for ``d <= max_depth``."""
    _require_binary(a)
    half = Fraction(1, 2)
    m = {q: Fraction(1) for q in a.states}
    bounds = [m[a.initial]]
    for _ in range(max_depth):
        m = {
            q: sum((half * m[r] for _, r in a.out(q)), Fraction(0))
            for q in a.states
        }
        bounds.append(m[a.initial])
    return MeasureReport(bounds, positive_measure(a, ()), max_depth)


def splitting_witness(a: Automaton, u: Sequence[int] = ()) -> tuple[tuple, tuple]:
    """Lexicographically least pair of equal-length, distinct (hence
    incompatible) proper extensions of ``u`` whose cones have positive measure."""
    u = tuple(u)
    if not positive_measure(a, u):
        raise NoPositiveMeasure(f"the cone at {u} has measure zero")
    pos = positive_states(a)
    frontier = [(u, _state_of(a, u))]
    for _ in range(len(a.states) + 2):
        nxt = []
        for v, q in frontier:
            for lab, r in a.out(q):
                if r in pos:
                    nxt.append((v + (lab,), r))
        if len(nxt) >= 2:
            return nxt[0][0], nxt[1][0]
        frontier = nxt[:2]
    raise AssertionError("positive cone failed to split; complete core is malformed")


def binary_embedding(a: Automaton, depth: int) -> dict:
    """Embed the complete binary tree of height ``depth`` into positive-measure
    nodes: the root goes to the empty node and each node's two children go to
    the splitting witness of its image."""
    phi = {(): ()}
    layer = [()]
    for _ in range(depth):
        nxt = []
        for s in layer:
            left, right = splitting_witness(a, phi[s])
            phi[s + (0,)] = left
            phi[s + (1,)] = right
            nxt += [s + (0,), s + (1,)]
        layer = nxt
    return phi


def count_nodes(a: Automaton, q, depth: int) -> int:
    """Number of label strings of length exactly ``depth`` readable from ``q``."""
    counts = {s: 1 for s in a.states}
    for _ in range(depth):
        counts = {s: sum(counts[r] for _, r in a.out(s)) for s in a.states}
    return counts[q]


_COLORS = {"kernel": "forestgreen", "live": "orange", "dead": "gray"}


def to_dot(a: Automaton, name: str = "automaton") -> str:
    """Graphviz rendering with states colored by class."""
    live, unc = live_states(a), uncountable_states(a)
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for q in a.states:
        kind = "kernel" if q in unc else "live" if q in live else "dead"
        shape = "doublecircle" if q == a.initial else "circle"
        lines.append(f'  "{q}" [shape={shape}, style=filled, fillcolor={_COLORS[kind]}];')
    for (q, lab), r in sorted(a.edges.items(), key=lambda e: (str(e[0][0]), e[0][1])):
        lines.append(f'  "{q}" -> "{r}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
