"""Cutting sequences and the permutation codes of a slope on ``X(sigma, tau)``.

Words are strings over ``x``, ``y`` with ``X``, ``Y`` standing for the inverse
letters.  ``cut(0/1) == "Y"`` and ``cut(1/0) == "X"``, so that ``Code(0) =
tau^-1``, ``Code(inf) = sigma^-1`` and hence ``Code^L(0) = sigma``,
``Code^L(inf) = sigma^-1 tau sigma``.  This is the only assignment under which
the concatenation rule for Farey sums holds at the degenerate ends and the
left codes agree with a direct geometric trace (see ``oracle``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import HypothesisError, InvariantBreach, NotNeighbors
from .farey import INF, ZERO, CFrac, Mat2, Slope, cf_value, farey_add, is_neighbor
from .perm import Perm
from .surface import Surface

__all__ = [
    "cut",
    "free_reduce",
    "cut_concat_check",
    "code",
    "code_left",
    "code_right",
    "literal_degenerate_code",
    "CylinderDecomposition",
    "cylinders",
    "CodePair",
    "code_left_matrix",
    "left_codes_of_cfrac",
    "is_scc_at",
    "scc_extension",
    "scc_progression",
    "torus_from_scc_pair",
    "is_union_of_tori",
]

_INVERSE = {"x": "X", "X": "x", "y": "Y", "Y": "y"}

CFracLike = Union[CFrac, Sequence[int]]


def cut(r: Slope) -> str:
    """Letters of the lattice crossings of the segment ``(0,0) -> (q,p)``.

    ``x`` marks a vertical grid line, ``y`` a horizontal one.

    >>> cut(Slope(2, 5))
    'xxyxx'
    """
    p, q = r.p, r.q
    if r == ZERO:
        return "Y"
    if r == INF:
        return "X"
    # crossing with x = i happens at time i/q, with y = j/p at time j/p
    out = []
    i = j = 1
    while i < q or j < p:
        if j >= p or (i < q and i * p < j * q):
            out.append("x")
            i += 1
        else:
            out.append("y")
            j += 1
    return "".join(out)


def free_reduce(word: str) -> str:
    out: List[str] = []
    for ch in word:
        if out and out[-1] == _INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def cut_concat_check(r1: Slope, r2: Slope) -> bool:
    """Check ``Cut(r1+r2) = Cut(r1) yx Cut(r2) = Cut(r2) xy Cut(r1)`` after free reduction."""
    if not is_neighbor(r1, r2):
        raise NotNeighbors(f"{r1} and {r2} are not Farey neighbors")
    target = cut(farey_add(r1, r2))
    return (
        free_reduce(cut(r1) + "yx" + cut(r2)) == target
        and free_reduce(cut(r2) + "xy" + cut(r1)) == target
    )


def _word_perm(X: Surface, word: str) -> Perm:
    s, t = X.sigma, X.tau
    table = {"x": s, "y": t, "X": s.inverse(), "Y": t.inverse()}
    out = Perm.identity(X.degree)
    for ch in word:
        out = out * table[ch]
    return out


def code(X: Surface, r: Slope) -> Perm:
    """Square ``i`` goes to the square whose NE corner ends the segment from i's SW corner."""
    return _word_perm(X, cut(r))


def code_left(X: Surface, r: Slope) -> Perm:
    return code(X, r) * X.tau * X.sigma


def code_right(X: Surface, r: Slope) -> Perm:
    return code(X, r) * X.sigma * X.tau


def literal_degenerate_code(X: Surface, r: Slope) -> Perm:
    """Code with the literal degenerate values ``Code(0) = sigma^-1``,
    ``Code(inf) = tau^-1``; kept for auditing only."""
    if r == ZERO:
        return X.sigma.inverse()
    if r == INF:
        return X.tau.inverse()
    return code(X, r)


@dataclass(frozen=True)
class CylinderDecomposition:
    slope: Slope
    # (left-boundary cycle of square labels, area)
    cylinders: Tuple[Tuple[Tuple[int, ...], int], ...]

    def areas(self) -> List[int]:
        return sorted(a for _, a in self.cylinders)

    def to_json(self) -> dict:
        return {
            "slope": str(self.slope),
            "cylinders": [{"cycle": list(c), "area": a} for c, a in self.cylinders],
        }


def cylinders(X: Surface, r: Slope) -> CylinderDecomposition:
    cyc = code_left(X, r).cycles(include_fixed=True)
    return CylinderDecomposition(r, tuple((c, len(c)) for c in cyc))


@dataclass(frozen=True)
class CodePair:
    first: Perm
    second: Perm

    def relabel(self, w: Perm) -> "CodePair":
        return CodePair(self.first.relabel(w), self.second.relabel(w))

    def step_L(self) -> "CodePair":
        """Left code of ``A * L`` from that of ``A``."""
        return CodePair(self.first, self.first * self.second)

    def step_R(self) -> "CodePair":
        return CodePair(self.first * self.second, self.second)

    def surface(self) -> Surface:
        return Surface(self.first, self.second)

    def __iter__(self):
        yield self.first
        yield self.second

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


def code_left_matrix(X: Surface, A: Mat2) -> CodePair:
    """Left codes of the two column slopes of ``A`` in SL2+(Z)."""
    if not A.is_positive():
        raise ValueError(f"{A} is not in SL2+(Z)")
    r1, r2 = A.column_slopes()
    return CodePair(code_left(X, r1), code_left(X, r2))


# -- simple closed curves --------------------------------------------------


def _terms(c: CFracLike) -> Tuple[int, ...]:
    return c.terms if isinstance(c, CFrac) else tuple(int(t) for t in c)


def left_codes_of_cfrac(X: Surface, terms: CFracLike) -> Perm:
    return code_left(X, cf_value(_terms(terms)))


def is_scc_at(X: Surface, r: Union[Slope, CFracLike], k: int) -> bool:
    if not 1 <= k <= X.degree:
        raise ValueError(f"label {k} out of range 1..{X.degree}")
    if not isinstance(r, Slope):
        r = cf_value(_terms(r))
    return code_left(X, r)(k) == k


def _extension_factors(X: Surface, terms: Tuple[int, ...]) -> Tuple[Perm, Perm, bool]:
    """``(C, D, odd)`` with ``Code^L(terms + [t])`` equal to ``D * C**t`` when the
    prefix length is odd and ``C**t * D`` when it is even."""
    C = left_codes_of_cfrac(X, terms)
    D = left_codes_of_cfrac(X, terms[:-1])
    return C, D, len(terms) % 2 == 1


def _extended_code(C: Perm, D: Perm, odd: bool, t: int) -> Perm:
    return D * C**t if odd else C**t * D


def scc_extension(X: Surface, prefix: CFracLike, k: int) -> int:
    """Least ``t > 0`` such that ``prefix + [t]`` is a simple closed curve at ``k``.

    Requires the left code of ``prefix`` to be an ``n``-cycle.
    """
    terms = _terms(prefix)
    n = X.degree
    C, D, odd = _extension_factors(X, terms)
    if len(C.cycles(include_fixed=True)) != 1:
        raise HypothesisError(f"left code {C} of {list(terms)} is not an {n}-cycle")
    for t in range(1, n + 1):
        if _extended_code(C, D, odd, t)(k) == k:
            if not is_scc_at(X, terms + (t,), k):
                raise InvariantBreach(f"extension identity failed at {list(terms) + [t]}")
            return t
    raise InvariantBreach(f"no extension of {list(terms)} is an scc at {k}")


def scc_progression(X: Surface, prefix: CFracLike, s: int) -> Optional[Tuple[int, int]]:
    """``(u, v)`` with ``{i >= 1 : prefix + [i] is an scc at s} = {u + v*t : t >= 0}``.

    ``v`` is the length of the cycle through ``s`` of the prefix's left code
    (a divisor of its order); ``u`` is the least member.  ``None`` when the
    set is empty.
    """
    terms = _terms(prefix)
    C, D, odd = _extension_factors(X, terms)
    v = next(len(c) for c in C.cycles(include_fixed=True) if s in c)
    members = [i for i in range(1, v + 1) if _extended_code(C, D, odd, i)(s) == s]
    if not members:
        return None
    if len(members) > 1:
        raise InvariantBreach(f"several residues {members} mod {v}")
    u = members[0]
    for i in range(1, u + 3 * v + 1):
        if is_scc_at(X, terms + (i,), s) != ((i - u) % v == 0 and i >= u):
            raise InvariantBreach(f"progression ({u}, {v}) fails at i={i}")
    return u, v


def torus_from_scc_pair(X: Surface, terms: CFracLike, m: int) -> Optional[int]:
    """If ``terms[:-1]`` and ``terms`` are both sccs at ``m``, return ``m``.

    Square ``m`` is then fixed by both gluings, i.e. it is a one-square torus
    component.  Returns ``None`` when the hypothesis fails.
    """
    terms = _terms(terms)
    if len(terms) < 2:
        raise ValueError("need [a1, ..., ak, a(k+1)] with k >= 1")
    if not (is_scc_at(X, terms[:-1], m) and is_scc_at(X, terms, m)):
        return None
    if X.sigma(m) != m or X.tau(m) != m:
        raise InvariantBreach(f"sccs at {m} but square {m} is not a torus")
    return m


def is_union_of_tori(X: Surface) -> bool:
    return X.commutator().is_identity()


def left_code_table(X: Surface, slopes: Sequence[Slope]) -> Dict[Slope, Perm]:
    return {r: code_left(X, r) for r in slopes}
