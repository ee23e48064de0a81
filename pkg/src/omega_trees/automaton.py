"""Deterministic labeled automata presenting regular trees.

The tree of an automaton is the set of label strings readable from the
initial state; every state is accepting.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidAutomaton


@dataclass(frozen=True)
class Automaton:
    states: tuple
    initial: object
    edges: dict  # (state, label) -> state
    alphabet: tuple = ()
    _out: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        states = set(self.states)
        if len(states) != len(self.states):
            raise InvalidAutomaton("duplicate state")
        if self.states and self.initial not in states:
            raise InvalidAutomaton(f"initial state {self.initial!r} is not a state")
        out = {q: [] for q in self.states}
        for (q, a), r in self.edges.items():
            if q not in states or r not in states:
                raise InvalidAutomaton(f"edge ({q!r}, {a}) -> {r!r} mentions an unknown state")
            if not isinstance(a, int) or a < 0:
                raise InvalidAutomaton(f"label {a!r} is not a natural")
            out[q].append((a, r))
        for q in out:
            out[q].sort(key=lambda e: e[0])
        alphabet = tuple(sorted({a for (_, a) in self.edges} | set(self.alphabet)))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "_out", out)

    @classmethod
    def build(cls, initial, edges, states=None, alphabet=()):
        """Convenience constructor from ``[(from, label, to), ...]``."""
        table = {}
        seen = [initial] if initial is not None else []
        for q, a, r in edges:
            if (q, a) in table and table[(q, a)] != r:
                raise InvalidAutomaton(f"nondeterministic edge ({q!r}, {a})")
            table[(q, a)] = r
            for s in (q, r):
                if s not in seen:
                    seen.append(s)
        if states is not None:
            seen = list(states)
        return cls(tuple(seen), initial, table, tuple(alphabet))

    @classmethod
    def empty(cls):
        return cls((), None, {})

    def is_empty(self) -> bool:
        return not self.states

    def out(self, q):
        """Sorted ``(label, target)`` pairs leaving ``q``."""
        return self._out[q]

    def step(self, q, a):
        return self.edges.get((q, a))

    def run(self, u, start=None):
        """State reached by reading ``u`` from ``start`` (default: initial), or None."""
        q = self.initial if start is None else start
        if q is None:
            return None
        for a in u:
            q = self.edges.get((q, a))
            if q is None:
                return None
        return q

    def restrict(self, keep) -> "Automaton":
        keep = set(keep)
        if self.initial not in keep:
            return Automaton.empty()
        states = tuple(q for q in self.states if q in keep)
        edges = {(q, a): r for (q, a), r in self.edges.items() if q in keep and r in keep}
        return Automaton(states, self.initial, edges)

    def to_json(self):
        return {
            "states": list(self.states),
            "initial": self.initial,
            "edges": [
                {"from": q, "label": a, "to": r}
                for (q, a), r in sorted(self.edges.items(), key=lambda e: (self.states.index(e[0][0]), e[0][1]))
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "Automaton":
        try:
            states = obj["states"]
            initial = obj["initial"]
            raw = obj["edges"]
        except (KeyError, TypeError) as exc:
            raise InvalidAutomaton(f"automaton JSON is missing {exc}") from exc
        table = {}
        for e in raw:
            try:
                key = (e["from"], e["label"])
                target = e["to"]
            except (KeyError, TypeError) as exc:
                raise InvalidAutomaton(f"malformed edge {e!r}") from exc
            if key in table:
                raise InvalidAutomaton(f"nondeterministic edge {key!r}")
            table[key] = target
        return cls(tuple(states), initial, table, tuple(obj.get("alphabet", ())))
