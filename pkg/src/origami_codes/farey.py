"""Reduced slopes, Farey neighbors and mediants, continued fractions, and
words in ``L = [[1,1],[0,1]]`` and ``R = [[1,0],[1,1]]``.

A slope ``p/q`` is the direction ``(q, p)``.  ``0/1`` and ``1/0`` (infinity)
are allowed; all comparisons are exact cross-multiplications.

Word letters: ``"L"``, ``"R"`` and lowercase ``"l"``, ``"r"`` for the inverses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, List, Sequence, Tuple

from .errors import NotNeighbors, ParseError

__all__ = [
    "Slope",
    "Mat2",
    "CFrac",
    "ZERO",
    "INF",
    "ONE",
    "I",
    "L",
    "R",
    "ROT",
    "is_neighbor",
    "farey_add",
    "cfrac",
    "cf_value",
    "cf_neighbors",
    "matrix_from_pair",
    "pair_from_matrix",
    "positive_word",
    "sl2z_word",
    "eval_word",
    "farey_pairs",
    "slopes_up_to",
]


@total_ordering
@dataclass(frozen=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"slope {self.p}/{self.q} has a negative part")
        if (self.p, self.q) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not reduced")

    @classmethod
    def parse(cls, text: str) -> "Slope":
        s = text.strip()
        if s.lower() in ("inf", "infinity", "oo"):
            return INF
        if "/" in s:
            num, _, den = s.partition("/")
        else:
            num, den = s, "1"
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise ParseError("expected p/q", text, 0) from None
        try:
            return cls(p, q)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __lt__(self, other: "Slope") -> bool:
        return self.p * other.q < other.p * self.q

    @property
    def is_degenerate(self) -> bool:
        return self.p == 0 or self.q == 0

    def reflect(self) -> "Slope":
        """Mirror in the diagonal: ``p/q -> q/p``."""
        return Slope(self.q, self.p)


ZERO = Slope(0, 1)
INF = Slope(1, 0)
ONE = Slope(1, 1)


def is_neighbor(r1: Slope, r2: Slope) -> bool:
    """``r1 <_n r2``: ``r1 < r2`` and ``p2*q1 - p1*q2 == 1``."""
    return r1 < r2 and r2.p * r1.q - r1.p * r2.q == 1


def farey_add(r1: Slope, r2: Slope) -> Slope:
    if not is_neighbor(r1, r2):
        raise NotNeighbors(f"{r1} and {r2} are not Farey neighbors")
    return Slope(r1.p + r2.p, r1.q + r2.q)


def farey_pairs(bound: int) -> Iterator[Tuple[Slope, Slope]]:
    """All Farey pairs ``r1 <_n r2`` in ``[0, inf]`` with ``q1 + q2 <= bound``
    and ``p1 + p2 <= bound``.

    The second condition is needed because ``(n/1, 1/0)`` has denominator sum
    1 for every ``n``.  Walks the Stern-Brocot tree from ``(0/1, 1/0)``; both
    sums never decrease from a pair to its children ``(r1, m)``, ``(m, r2)``.
    """
    stack = [(ZERO, INF)]
    while stack:
        r1, r2 = stack.pop()
        if r1.q + r2.q > bound or r1.p + r2.p > bound:
            continue
        yield r1, r2
        m = Slope(r1.p + r2.p, r1.q + r2.q)
        stack.append((m, r2))
        stack.append((r1, m))


def slopes_up_to(max_height: int) -> List[Slope]:
    """All slopes with ``p + q <= max_height``, including ``0/1`` and ``1/0``."""
    out = [
        Slope(p, h - p)
        for h in range(1, max_height + 1)
        for p in range(h + 1)
        if math.gcd(p, h - p) == 1
    ]
    return sorted(out)


# -- continued fractions ---------------------------------------------------


@dataclass(frozen=True)
class CFrac:
    """``[a1, ..., ak]`` denoting ``1/(a1 + 1/(a2 + ... + 1/ak))``.

    Normalized expansions have positive terms with ``ak > 1`` unless the
    expansion is ``[1]``.  Intermediate expansions built by appending a term
    (``[a1, ..., ak, t]``) may end in 1; ``normalized`` tells them apart.
    """

    terms: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if not self.terms:
            raise ValueError("a continued fraction needs at least one term")
        if any(t < 1 for t in self.terms):
            raise ValueError(f"terms must be positive: {list(self.terms)}")

    @classmethod
    def parse(cls, text: str) -> "CFrac":
        """``"[2,3]"`` (brackets optional)."""
        s = text.strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise ParseError("unclosed '['", text, len(text))
            s = s[1:-1]
        try:
            terms = tuple(int(t) for t in s.split(","))
        except ValueError:
            raise ParseError("expected comma-separated integers", text, 0) from None
        try:
            return cls(terms)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None

    @property
    def normalized(self) -> bool:
        return self.terms[-1] > 1 or self.terms == (1,)

    def value(self) -> Slope:
        return cf_value(self.terms)

    def extend(self, t: int) -> "CFrac":
        return CFrac(self.terms + (t,))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.terms)) + "]"


def cf_value(terms: Sequence[int]) -> Slope:
    """Evaluate a term list; ``[]`` is ``0/1`` and a trailing 0 collapses."""
    num, den = 1, 0  # innermost tail is infinity
    for a in reversed(terms):
        num, den = a * num + den, num
    return Slope(den, num)


def cfrac(r: Slope) -> CFrac:
    if not (0 < r.p <= r.q):
        raise ValueError(f"{r} has no continued fraction in (0, 1]")
    terms = []
    p, q = r.p, r.q
    while p:
        a, rem = divmod(q, p)
        terms.append(a)
        q, p = p, rem
    return CFrac(tuple(terms))


def cf_neighbors(c: CFrac) -> Tuple[Slope, Slope]:
    """``(r', r'') = ([a1..ak - 1], [a1..a(k-1)])``.

    For even ``k``: ``r' <_n r <_n r''`` and ``r = r' + r''``;
    for odd ``k``: ``r = r'' + r'`` (Farey sums).
    """
    t = c.terms
    return cf_value(t[:-1] + (t[-1] - 1,)), cf_value(t[:-1])


# -- 2x2 integer matrices ------------------------------------------------------


@dataclass(frozen=True)
class Mat2:
    """Integer matrix ``[[a11, a12], [a21, a22]]``; the columns are directions."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def parse(cls, text: str) -> "Mat2":
        """Row-major ``"a11,a12;a21,a22"``."""
        rows = text.strip().split(";")
        if len(rows) != 2:
            raise ParseError("expected two rows separated by ';'", text, 0)
        entries = []
        col = 0
        for row in rows:
            parts = row.split(",")
            if len(parts) != 2:
                raise ParseError("expected two entries per row", text, col)
            for part in parts:
                try:
                    entries.append(int(part.strip()))
                except ValueError:
                    raise ParseError(f"bad entry {part.strip()!r}", text, col) from None
                col += len(part) + 1
        return cls(*entries)

    def __str__(self) -> str:
        return f"{self.a11},{self.a12};{self.a21},{self.a22}"

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> "Mat2":
        if self.det() != 1:
            raise ValueError(f"{self} is not in SL2(Z)")
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def __pow__(self, k: int) -> "Mat2":
        base = self if k >= 0 else self.inverse()
        out = I
        for _ in range(abs(k)):
            out = out * base
        return out

    @property
    def columns(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a11, self.a21), (self.a12, self.a22)

    def is_sl2(self) -> bool:
        return self.det() == 1

    def is_positive(self) -> bool:
        """Member of SL2+(Z): determinant one and no negative entries."""
        return self.is_sl2() and min(self.a11, self.a12, self.a21, self.a22) >= 0

    def column_slopes(self) -> Tuple[Slope, Slope]:
        (a, b), (c, d) = self.columns
        return Slope(b, a), Slope(d, c)

    def as_rows(self) -> List[List[int]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]


I = Mat2(1, 0, 0, 1)
L = Mat2(1, 1, 0, 1)
R = Mat2(1, 0, 1, 1)
# clockwise quarter turn (x, y) -> (y, -x); equals L * R**-1 * L
ROT = Mat2(0, 1, -1, 0)

_LETTERS = {"L": L, "R": R, "l": L.inverse(), "r": R.inverse()}


def eval_word(word: Sequence[str]) -> Mat2:
    out = I
    for letter in word:
        try:
            out = out * _LETTERS[letter]
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None
    return out


def matrix_from_pair(r1: Slope, r2: Slope) -> Mat2:
    if not is_neighbor(r1, r2):
        raise NotNeighbors(f"{r1} and {r2} are not Farey neighbors")
    return Mat2(r1.q, r2.q, r1.p, r2.p)


def pair_from_matrix(A: Mat2) -> Tuple[Slope, Slope]:
    if not A.is_positive():
        raise ValueError(f"{A} is not in SL2+(Z)")
    return A.column_slopes()


def positive_word(A: Mat2) -> List[str]:
    """The word in ``L``, ``R`` (no inverses) whose product is ``A``."""
    if not A.is_positive():
        raise ValueError(f"{A} is not in SL2+(Z)")
    word: List[str] = []
    a, c, b, d = A.a11, A.a12, A.a21, A.a22
    # columns (a, b), (c, d); A*L adds column 1 to column 2, A*R the reverse
    while (a, b, c, d) != (1, 0, 0, 1):
        if c >= a and d >= b:
            word.append("L")
            c, d = c - a, d - b
        else:
            word.append("R")
            a, b = a - c, b - d
    word.reverse()
    return word


def sl2z_word(B: Mat2) -> List[str]:
    """A word in ``L, R`` and their inverses evaluating exactly to ``B``.

    Right multiplication by ``L**k`` / ``R**k`` performs column operations; a
    Euclidean pass on the first row brings ``B`` to ``[[s, 0], [b, s]]`` with
    ``s = +-1``.  The sign is absorbed by ``ROT**2 = -I`` with
    ``ROT = L r L``.
    """
    if B.det() != 1:
        raise ValueError(f"det({B}) = {B.det()} != 1")
    ops: List[Tuple[str, int]] = []
    M = B
    while M.a12 != 0:
        if M.a11 == 0:
            M = M * R
            ops.append(("R", 1))
        k = M.a12 // M.a11
        M = M * L**-k
        ops.append(("L", -k))
        if M.a12 == 0:
            break
        k = M.a11 // M.a12
        M = M * R**-k
        ops.append(("R", -k))
    word: List[str] = []
    if M.a11 == -1:
        word.extend(["L", "r", "L", "L", "r", "L"])
        M = -M
    b = M.a21
    word.extend(["R" if b > 0 else "r"] * abs(b))
    # B * g1 * ... * gm = M, so B = M * gm^-1 * ... * g1^-1
    for name, k in reversed(ops):
        letter = name if k < 0 else name.lower()
        word.extend([letter] * abs(k))
    word = _free_reduce(word)
    if eval_word(word) != B:
        raise AssertionError(f"sl2z_word failed on {B}")
    return word


def _free_reduce(word: Sequence[str]) -> List[str]:
    out: List[str] = []
    for x in word:
        if out and out[-1] != x and out[-1].lower() == x.lower():
            out.pop()
        else:
            out.append(x)
    return out
