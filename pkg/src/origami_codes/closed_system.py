"""Ring diagrams and the closed system of a surface.

A ring diagram ``B(v, u)`` has center ``v`` and vertex cycle ``u, v u, v^2 u,
...`` (left-to-right products), one vertex per power of ``v`` up to its order.
``B(v, u)`` and ``B(v, v^k u)`` are the same diagram, so a diagram is stored
with its vertex cycle rotated to start at the least vertex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import DegreeMismatch
from .perm import Perm
from .surface import Surface

__all__ = [
    "RingDiagram",
    "ClosedSystem",
    "ring_diagram",
    "closed_system",
    "conjugate_system",
    "systems_equal",
]


@dataclass(frozen=True)
class RingDiagram:
    center: Perm
    vertices: Tuple[Perm, ...]

    def adjacent_pairs(self) -> Iterator[Tuple[Perm, Perm]]:
        """``(v^(m+1) u, v^m u)`` for every position ``m`` around the ring."""
        vs = self.vertices
        for m in range(len(vs)):
            yield vs[(m + 1) % len(vs)], vs[m]

    def relabel(self, w: Perm) -> "RingDiagram":
        return ring_diagram(self.center.relabel(w), self.vertices[0].relabel(w))

    def to_json(self) -> dict:
        return {"center": str(self.center), "vertices": [str(v) for v in self.vertices]}

    def __str__(self) -> str:
        return f"B({self.center}; " + ", ".join(map(str, self.vertices)) + ")"


def ring_diagram(v: Perm, u: Perm) -> RingDiagram:
    if v.degree != u.degree:
        raise DegreeMismatch(f"degrees differ: {v.degree} vs {u.degree}")
    verts = [u]
    w = v * u
    while w != u:
        verts.append(w)
        w = v * w
    k = min(range(len(verts)), key=lambda i: verts[i]._a)
    return RingDiagram(v, tuple(verts[k:] + verts[:k]))


@dataclass(frozen=True)
class ClosedSystem:
    diagrams: FrozenSet[RingDiagram]
    # BFS level of each diagram (1 for the seed); optional trace output
    levels: Optional[Dict[RingDiagram, int]] = None

    def __len__(self) -> int:
        return len(self.diagrams)

    def __contains__(self, item: RingDiagram) -> bool:
        return item in self.diagrams

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> List[RingDiagram]:
        return sorted(self.diagrams, key=lambda d: (d.center._a, d.vertices[0]._a))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClosedSystem) and self.diagrams == other.diagrams

    def __hash__(self) -> int:
        return hash(self.diagrams)

    def to_json(self) -> dict:
        return {"diagrams": [d.to_json() for d in self.sorted()]}


def _fixpoint(seeds: Iterable[RingDiagram]) -> ClosedSystem:
    levels: Dict[RingDiagram, int] = {}
    todo: deque = deque()
    for d in seeds:
        if d not in levels:
            levels[d] = 1
            todo.append(d)
    while todo:
        d = todo.popleft()
        for a, b in d.adjacent_pairs():
            e = ring_diagram(a, b)
            if e not in levels:
                levels[e] = levels[d] + 1
                todo.append(e)
    return ClosedSystem(frozenset(levels), levels)


def closed_system(X: Surface) -> ClosedSystem:
    """Least set containing ``B(sigma, sigma^-1 tau sigma)`` and closed under
    ``B(a, b) -> B(a^(m+1) b, a^m b)``."""
    s, t = X.sigma, X.tau
    return _fixpoint([ring_diagram(s, s.inverse() * t * s)])


def conjugate_system(S: ClosedSystem, w: Perm) -> ClosedSystem:
    return ClosedSystem(frozenset(d.relabel(w) for d in S.diagrams))


def systems_equal(S1: ClosedSystem, S2: ClosedSystem) -> bool:
    return S1.diagrams == S2.diagrams
