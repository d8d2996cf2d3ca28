"""Permutations of ``{1, ..., n}`` composed left to right.

``p * q`` applies ``p`` first and then ``q``, so ``(p * q)(i) == q(p(i))``.
Labels are 1-based in every public surface; internally images are stored as
a 0-based tuple.

Conjugation is exposed as :meth:`Perm.relabel`: ``p.relabel(w)`` is the
permutation ``r`` with ``r(w(i)) == w(p(i))``, i.e. ``p`` with every label
pushed through ``w``.  In the left-to-right product notation this is
``w**-1 * p * w``.
"""
from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple

from . import kernels
from .errors import DegreeMismatch, ParseError

__all__ = [
    "Perm",
    "compose",
    "order",
    "relabel",
    "simultaneous_conjugator",
    "canonical_pair",
    "canonical_labeling",
    "pair_components",
    "is_transitive",
]


class Perm:
    """An immutable permutation of ``{1, ..., n}``."""

    __slots__ = ("_a", "_hash")

    def __init__(self, images: Iterable[int]):
        a = tuple(int(x) - 1 for x in images)
        n = len(a)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(a) != list(range(n)):
            raise ValueError(f"images {tuple(x + 1 for x in a)} are not a bijection of 1..{n}")
        self._a = a
        self._hash = None

    @classmethod
    def _raw(cls, a: Tuple[int, ...]) -> "Perm":
        # trusted 0-based tuple, no validation
        p = object.__new__(cls)
        p._a = a
        p._hash = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        if n < 1:
            raise ValueError("a permutation needs degree >= 1")
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: Optional[int] = None) -> "Perm":
        """Build from disjoint cycles of 1-based labels.

        >>> Perm.from_cycles([(1, 2, 4)], 4)
        Perm('(1,2,4)', n=4)
        """
        cycles = [tuple(int(x) for x in c) for c in cycles]
        labels = [x for c in cycles for x in c]
        if len(set(labels)) != len(labels):
            raise ValueError("cycles are not disjoint")
        if any(x < 1 for x in labels):
            raise ValueError("labels start at 1")
        top = max(labels, default=0)
        if n is None:
            n = max(top, 1)
        elif top > n:
            raise ValueError(f"label {top} exceeds degree {n}")
        a = list(range(n))
        for c in cycles:
            for x, y in zip(c, c[1:] + c[:1]):
                a[x - 1] = y - 1
        return cls._raw(tuple(a))

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Perm":
        """Parse cycle notation such as ``"(1,2,3)(4,5)"`` or ``"id"``."""
        return cls.from_cycles(parse_cycles(text, n), n)

    # -- basic protocol -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._a)

    @property
    def images(self) -> Tuple[int, ...]:
        """1-based image sequence ``(p(1), ..., p(n))``."""
        return tuple(x + 1 for x in self._a)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._a):
            raise ValueError(f"label {i} out of range 1..{len(self._a)}")
        return self._a[i - 1] + 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self._a == other._a

    def __lt__(self, other: "Perm") -> bool:
        return (len(self._a), self._a) < (len(other._a), other._a)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._a)
        return self._hash

    def __repr__(self) -> str:
        return f"Perm('{self}', n={self.degree})"

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    # -- algebra ----------------------------------------------------------

    def _check(self, other: "Perm") -> None:
        if len(self._a) != len(other._a):
            raise DegreeMismatch(f"degrees differ: {self.degree} vs {other.degree}")

    def __mul__(self, other: "Perm") -> "Perm":
        self._check(other)
        return Perm._raw(tuple(map(other._a.__getitem__, self._a)))

    def inverse(self) -> "Perm":
        return Perm._raw(kernels.inverse(self._a))

    def __invert__(self) -> "Perm":
        return self.inverse()

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Perm.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._a))

    def cycles(self, include_fixed: bool = False) -> list:
        """Disjoint cycles as tuples of 1-based labels, each starting at its minimum."""
        seen = [False] * len(self._a)
        out = []
        for i in range(len(self._a)):
            if seen[i]:
                continue
            c = []
            j = i
            while not seen[j]:
                seen[j] = True
                c.append(j + 1)
                j = self._a[j]
            if len(c) > 1 or include_fixed:
                out.append(tuple(c))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles(include_fixed=True)), 1)

    def fixed_points(self) -> list:
        return [i + 1 for i, x in enumerate(self._a) if i == x]

    def relabel(self, w: "Perm") -> "Perm":
        self._check(w)
        wa = w._a
        out = [0] * len(wa)
        for i, x in enumerate(self._a):
            out[wa[i]] = wa[x]
        return Perm._raw(tuple(out))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: Optional[int] = None) -> list:
    """Split cycle notation into label tuples, reporting the offending column."""
    s = text.strip()
    if s in ("id", "()", "e", ""):
        return []
    pos = 0
    cycles = []
    seen: dict = {}
    offset = len(text) - len(text.lstrip())
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if not m:
            raise ParseError("expected '(' in cycle notation", text, offset + pos)
        body = m.group(1)
        labels = []
        col = m.start(1)
        for tok in body.split(","):
            t = tok.strip()
            if not t.isdigit():
                raise ParseError(f"bad label {t!r}", text, offset + col)
            x = int(t)
            if x < 1:
                raise ParseError("labels start at 1", text, offset + col)
            if n is not None and x > n:
                raise ParseError(f"label {x} exceeds degree {n}", text, offset + col)
            if x in seen:
                raise ParseError(f"label {x} repeated", text, offset + col)
            seen[x] = True
            labels.append(x)
            col += len(tok) + 1
        cycles.append(tuple(labels))
        pos = m.end()
    return cycles


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` then ``q``."""
    return p * q


def order(p: Perm) -> int:
    return p.order()


def relabel(p: Perm, w: Perm) -> Perm:
    return p.relabel(w)


def pair_components(a: Perm, b: Perm) -> list:
    """Orbits of ``<a, b>`` as sorted lists of 0-based points, ordered by minimum."""
    a._check(b)
    n = a.degree
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = kernels.orbit(a._a, b._a, s)
        for x in comp:
            seen[x] = True
        comps.append(sorted(comp))
    return comps


def is_transitive(a: Perm, b: Perm) -> bool:
    a._check(b)
    return len(kernels.orbit(a._a, b._a, 0)) == a.degree


def canonical_labeling(a: Perm, b: Perm) -> Tuple[Perm, Perm, Perm]:
    """Return ``(ca, cb, w)`` with ``ca == a.relabel(w)``, ``cb == b.relabel(w)``.

    On each orbit of ``<a, b>`` the candidate relabelings are the breadth-first
    numberings started at every point of the orbit (``a``-edge before
    ``b``-edge); the lexicographically least image pair wins.  Orbits are then
    laid out by increasing ``(size, images)``.  The result depends only on
    the simultaneous conjugacy class of ``(a, b)``.
    """
    a._check(b)
    n = a.degree
    comps = pair_components(a, b)
    if len(comps) == 1:
        ca, cb, order_ = kernels.best_labeling(a._a, b._a, range(n))
        parts = [(ca, cb, order_)]
    else:
        parts = sorted(
            (kernels.best_labeling(a._a, b._a, comp) for comp in comps),
            key=lambda t: (len(t[0]), t[0], t[1]),
        )
    ca_all: list = []
    cb_all: list = []
    lab = [0] * n
    off = 0
    for ca, cb, order_ in parts:
        ca_all.extend(x + off for x in ca)
        cb_all.extend(x + off for x in cb)
        for k, old in enumerate(order_):
            lab[old] = k + off
        off += len(ca)
    return Perm._raw(tuple(ca_all)), Perm._raw(tuple(cb_all)), Perm._raw(tuple(lab))


def canonical_pair(a: Perm, b: Perm) -> Tuple[Perm, Perm]:
    """Canonical representative of the simultaneous conjugacy class of ``(a, b)``."""
    ca, cb, _ = canonical_labeling(a, b)
    return ca, cb


def simultaneous_conjugator(a1: Perm, a2: Perm, b1: Perm, b2: Perm) -> Optional[Perm]:
    """Some ``w`` with ``a1.relabel(w) == b1`` and ``a2.relabel(w) == b2``, or ``None``.

    When ``<a1, a2>`` is transitive, ``w`` is pinned down by the image of a
    single point, so each of the ``n`` anchor choices is propagated along the
    generators.  Otherwise both pairs are brought to canonical form and the
    labelings are chained.
    """
    for p in (a2, b1, b2):
        a1._check(p)
    if a1.cycle_type() != b1.cycle_type() or a2.cycle_type() != b2.cycle_type():
        return None
    if is_transitive(a1, a2):
        w = kernels.anchored_conjugator(a1._a, a2._a, b1._a, b2._a)
        return None if w is None else Perm._raw(tuple(w))
    ca, cb, wa = canonical_labeling(a1, a2)
    da, db, wb = canonical_labeling(b1, b2)
    if ca != da or cb != db:
        return None
    return wa * wb.inverse()
