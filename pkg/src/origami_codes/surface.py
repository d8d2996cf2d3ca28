"""Square-tiled surfaces ``X(sigma, tau)``.

The right side of square ``i`` is glued to the left side of ``sigma(i)`` and
its top side to the bottom of ``tau(i)``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from .errors import DegreeMismatch, DisconnectedSurface, ParseError
from .farey import Mat2
from .perm import (
    Perm,
    canonical_pair,
    is_transitive,
    pair_components,
    parse_cycles,
    simultaneous_conjugator,
)

__all__ = [
    "Surface",
    "ConeData",
    "make_surface",
    "cone_data",
    "rotate90",
    "is_equivalent",
    "dehn_twist_matrices",
    "eierlegende_wollmilchsau",
    "enumerate_surfaces",
]


@dataclass(frozen=True)
class Surface:
    sigma: Perm
    tau: Perm

    def __post_init__(self):
        if self.sigma.degree != self.tau.degree:
            raise DegreeMismatch(
                f"sigma has degree {self.sigma.degree}, tau has degree {self.tau.degree}"
            )

    # -- construction / serialization ---------------------------------

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Surface":
        """``"sigma;tau"`` in cycle notation, e.g. ``"(1,2);(1,3)"``.

        The degree is the largest label used unless ``n`` is given.
        """
        if text.count(";") != 1:
            raise ParseError("expected 'sigma;tau'", text, 0)
        left, right = text.split(";")
        cs = parse_cycles(left, n)
        try:
            ct = parse_cycles(right, n)
        except ParseError as exc:
            raise ParseError(exc.message, text, len(left) + 1 + (exc.position or 0)) from None
        if n is None:
            n = max([x for c in cs + ct for x in c], default=1)
        return cls(Perm.from_cycles(cs, n), Perm.from_cycles(ct, n))

    @classmethod
    def from_json(cls, data) -> "Surface":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        return cls(Perm.from_cycles(data["sigma"], n), Perm.from_cycles(data["tau"], n))

    def to_json(self) -> dict:
        return {
            "n": self.degree,
            "sigma": [list(c) for c in self.sigma.cycles()],
            "tau": [list(c) for c in self.tau.cycles()],
        }

    def __str__(self) -> str:
        return f"{self.sigma};{self.tau}"

    @property
    def degree(self) -> int:
        return self.sigma.degree

    # -- structure --------------------------------------------------------

    def is_connected(self) -> bool:
        return is_transitive(self.sigma, self.tau)

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedSurface(f"X({self}) is not connected")

    def components(self) -> List[List[int]]:
        """Square labels (1-based) of each connected component."""
        return [[x + 1 for x in comp] for comp in pair_components(self.sigma, self.tau)]

    def commutator(self) -> Perm:
        """``Theta = sigma^-1 tau^-1 sigma tau`` (left to right)."""
        s, t = self.sigma, self.tau
        return s.inverse() * t.inverse() * s * t

    def cone_data(self) -> "ConeData":
        return cone_data(self)

    def stratum(self) -> Tuple[int, ...]:
        return self.cone_data().stratum

    def genus(self) -> int:
        """Genus of a connected surface; disconnected ones have no single genus."""
        self.require_connected()
        return self.cone_data().genera[0]

    def rotate90(self) -> "Surface":
        return rotate90(self)

    def rotate(self, k: int) -> "Surface":
        X = self
        for _ in range(k % 4):
            X = rotate90(X)
        return X

    def canonical(self) -> Tuple[Perm, Perm]:
        return canonical_pair(self.sigma, self.tau)

    def relabel(self, w: Perm) -> "Surface":
        return Surface(self.sigma.relabel(w), self.tau.relabel(w))


@dataclass(frozen=True)
class ConeData:
    theta: Perm
    cone_points: List[Tuple[Tuple[int, ...], int]]
    stratum: Tuple[int, ...]
    # genus of each connected component, in component order
    genera: List[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theta": str(self.theta),
            "cone_points": [{"cycle": list(c), "angle": a} for c, a in self.cone_points],
            "stratum": list(self.stratum),
            "genus": self.genera,
        }


def make_surface(sigma: Perm, tau: Perm) -> Surface:
    return Surface(sigma, tau)


def cone_data(X: Surface) -> ConeData:
    theta = X.commutator()
    cone_points = [(c, len(c)) for c in theta.cycles()]
    stratum = tuple(sorted((a - 1 for _, a in cone_points), reverse=True))
    genera = []
    all_cycles = theta.cycles(include_fixed=True)
    for comp in X.components():
        members = set(comp)
        vertices = sum(1 for c in all_cycles if c[0] in members)
        # V - E + F with E = 2 * squares, F = squares
        chi = vertices - len(comp)
        genera.append(1 - chi // 2)
    return ConeData(theta, cone_points, stratum, genera)


def rotate90(X: Surface) -> Surface:
    """Quarter turn clockwise: ``X(tau, sigma^-1)``."""
    return Surface(X.tau, X.sigma.inverse())


def is_equivalent(X: Surface, Y: Surface) -> bool:
    if X.degree != Y.degree:
        return False
    return simultaneous_conjugator(X.sigma, X.tau, Y.sigma, Y.tau) is not None


def dehn_twist_matrices(X: Surface) -> Tuple[Mat2, Mat2]:
    """Derivatives of the horizontal and vertical multi-twists."""
    return Mat2(1, X.sigma.order(), 0, 1), Mat2(1, 0, X.tau.order(), 1)


def eierlegende_wollmilchsau() -> Surface:
    return Surface.parse("(1,2,3,4)(5,6,7,8);(1,8,3,6)(2,7,4,5)")


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[List[int]]:
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def enumerate_surfaces(n: int, connected: bool = True) -> List[Surface]:
    """One representative per equivalence class of degree-``n`` surfaces.

    Every pair is conjugate to one whose ``sigma`` is the standard
    representative of its cycle type, so only ``tau`` ranges over ``S_n``.
    Representatives are returned in canonical form, sorted.
    """
    seen = set()
    for part in _partitions(n):
        cycles = []
        start = 1
        for k in part:
            cycles.append(tuple(range(start, start + k)))
            start += k
        sigma = Perm.from_cycles(cycles, n)
        for images in itertools.permutations(range(1, n + 1)):
            tau = Perm(images)
            if connected and not is_transitive(sigma, tau):
                continue
            seen.add(canonical_pair(sigma, tau))
    return [Surface(a, b) for a, b in sorted(seen)]
