"""SL2(Z)-orbits of square-tiled surfaces.

Two independent enumerations of the orbit of ``X``:

* :func:`s_plus` walks the left-code pairs of matrices in SL2+(Z) from
  ``Code^L(I) = (sigma, sigma^-1 tau sigma)`` using ``A -> A L`` and
  ``A -> A R``; the surface built from the pair of ``A`` is ``A^-1 X``.
* :func:`orbit_bfs_oracle` acts on ``(sigma, tau)`` directly with the shear
  ``L`` and the quarter turn, never touching codes.

Surfaces are compared up to simultaneous conjugacy via :func:`canonical_pair`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Tuple

from .errors import InvariantBreach
from .farey import I, L, R, Mat2, sl2z_word
from .perm import Perm, canonical_pair
from .surface import Surface

__all__ = [
    "OrbitState",
    "act_letter",
    "act_matrix",
    "s_plus",
    "orbit_bfs_oracle",
    "veech_index",
    "stabilizes",
]

Pair = Tuple[Perm, Perm]


def _L(s: Perm, t: Perm) -> Pair:
    return s, t * s.inverse()


def _Linv(s: Perm, t: Perm) -> Pair:
    return s, t * s


def _R(s: Perm, t: Perm) -> Pair:
    return s * t.inverse(), t


def _Rinv(s: Perm, t: Perm) -> Pair:
    return s * t, t


def _rot(s: Perm, t: Perm) -> Pair:
    # clockwise quarter turn, the action of ROT = L R^-1 L
    return t, s.inverse()


_ACTIONS: Dict[str, Callable[[Perm, Perm], Pair]] = {"L": _L, "l": _Linv, "R": _R, "r": _Rinv}


def act_letter(letter: str, pair: Pair) -> Pair:
    """Surface ``g X`` for a generator ``g`` in ``L, R, L^-1, R^-1`` (up to relabeling).

    ``L^-1 X`` is cut from the parallelograms ``L([0,1]^2)`` of ``X``: going up
    from square ``i`` one first crosses into ``sigma(i)``, then its top, so the
    new top gluing is ``sigma tau`` (equivalently ``tau sigma``).
    """
    return _ACTIONS[letter](*pair)


def act_matrix(B: Mat2, X: Surface) -> Surface:
    """A representative of ``B X``."""
    pair: Pair = (X.sigma, X.tau)
    for letter in reversed(sl2z_word(B)):
        pair = act_letter(letter, pair)
    return Surface(*pair)


def stabilizes(X: Surface, B: Mat2) -> bool:
    """Orbit-side membership test: ``B X`` equivalent to ``X``."""
    Y = act_matrix(B, X)
    return canonical_pair(Y.sigma, Y.tau) == canonical_pair(X.sigma, X.tau)


@dataclass(frozen=True)
class OrbitState:
    surface_class: Pair
    # a shortest positive word's product reaching this state
    representative_matrix: Mat2

    def surface(self) -> Surface:
        return Surface(*self.surface_class)


def s_plus(X: Surface) -> List[OrbitState]:
    """Classes of ``X(Code^L(A))`` over ``A`` in SL2+(Z), in BFS order."""
    X.require_connected()
    s, t = X.sigma, X.tau
    start = (s, s.inverse() * t * s)
    states: Dict[Pair, OrbitState] = {}
    key = canonical_pair(*start)
    states[key] = OrbitState(key, I)
    todo = deque([(start, I)])
    while todo:
        (w1, w2), A = todo.popleft()
        for nxt, B in (((w1, w1 * w2), A * L), ((w1 * w2, w2), A * R)):
            k = canonical_pair(*nxt)
            if k not in states:
                states[k] = OrbitState(k, B)
                todo.append((nxt, B))
    return list(states.values())


def orbit_bfs_oracle(X: Surface) -> FrozenSet[Pair]:
    """Canonical classes of the SL2(Z)-orbit, generated by ``L^{+-1}`` and the quarter turn."""
    X.require_connected()
    start = canonical_pair(X.sigma, X.tau)
    seen = {start}
    todo = deque([start])
    while todo:
        s, t = todo.popleft()
        for g in (_Linv, _L, _rot):
            k = canonical_pair(*g(s, t))
            if k not in seen:
                seen.add(k)
                todo.append(k)
    return frozenset(seen)


def veech_index(X: Surface, check: bool = True) -> int:
    """Index of the Veech group in SL2(Z), the size of S+(X).

    With ``check`` the count is compared with the generator-side orbit.
    """
    states = s_plus(X)
    if check:
        other = orbit_bfs_oracle(X)
        if {st.surface_class for st in states} != other:
            raise InvariantBreach(
                f"S+(X) has {len(states)} classes but the SL2(Z)-orbit has {len(other)}"
            )
    return len(states)
