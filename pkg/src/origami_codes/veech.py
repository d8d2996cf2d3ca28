"""Veech-group membership and the group of code witnesses.

``A`` in SL2+(Z) lies in the Veech group of ``X`` exactly when the left-code
pair of ``A`` is a relabeling of the left-code pair of the identity; the
relabeling permutation (the *witness*) is returned so that it can be
composed.  General matrices are handled on the orbit side by acting on the
surface class.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Set, Tuple

from .errors import BoundExceeded, HypothesisError, InvariantBreach
from .farey import I, L, R, ROT, Mat2
from .orbit import stabilizes
from .perm import Perm, simultaneous_conjugator
from .codes import CodePair, code_left_matrix
from .surface import Surface

__all__ = [
    "DEFAULT_MAX_N",
    "CodeGroupElement",
    "veech_contains_positive",
    "veech_contains",
    "rotated_code_test",
    "sign_pattern_matrix",
    "realized_pairs",
    "group_S_X",
    "group_G_X",
    "code_group_elements",
    "code_group_identity",
    "code_group_op",
    "code_group_inverse",
    "all_conjugators",
]

DEFAULT_MAX_N = 8

Pair = Tuple[Perm, Perm]


def _base_pair(X: Surface) -> CodePair:
    return code_left_matrix(X, I)


def veech_contains_positive(X: Surface, A: Mat2) -> Optional[Perm]:
    """Witness ``w`` with ``Code^L(I)`` relabeled by ``w`` equal to ``Code^L(A)``,
    or ``None`` when ``A`` is not in the Veech group."""
    X.require_connected()
    P = _base_pair(X)
    Q = code_left_matrix(X, A)
    return simultaneous_conjugator(P.first, P.second, Q.first, Q.second)


def veech_contains(X: Surface, B: Mat2) -> bool:
    """Membership for any ``B`` in SL2(Z): does ``B`` fix the class of ``X``?"""
    X.require_connected()
    if not B.is_sl2():
        raise ValueError(f"{B} is not in SL2(Z)")
    return stabilizes(X, B)


def sign_pattern_matrix(A: Mat2, k: int) -> Mat2:
    """``A`` followed by ``k`` quarter turns: ``A * ROT**k``."""
    return A * ROT ** (k % 4)


def rotated_code_test(X: Surface, A: Mat2, k: int) -> bool:
    """Is ``Code^L_X(A)`` a relabeling of ``Code^L`` of the identity on ``X`` turned ``k`` times?

    When it is, ``A * ROT**k`` is in the Veech group; this is checked and a
    disagreement raises :class:`InvariantBreach`.
    """
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    X.require_connected()
    P = code_left_matrix(X.rotate(k), I)
    Q = code_left_matrix(X, A)
    verdict = simultaneous_conjugator(P.first, P.second, Q.first, Q.second) is not None
    if verdict != veech_contains(X, sign_pattern_matrix(A, k)):
        raise InvariantBreach(f"rotated code test and orbit action disagree on {A}, k={k}")
    return verdict


# -- the group of witnesses ---------------------------------------------------


def realized_pairs(X: Surface) -> Dict[Pair, Mat2]:
    """Every left-code pair ``Code^L(A)``, ``A`` in SL2+(Z), with a shortest ``A``.

    These are actual pairs, not classes; the set is finite because it lies
    in ``S_n x S_n``.
    """
    X.require_connected()
    return dict(_realized(X))


@lru_cache(maxsize=64)
def _realized(X: Surface) -> Tuple[Tuple[Pair, Mat2], ...]:
    start = _base_pair(X)
    out: Dict[Pair, Mat2] = {(start.first, start.second): I}
    todo = deque([start])
    while todo:
        cp = todo.popleft()
        A = out[(cp.first, cp.second)]
        for nxt, B in ((cp.step_L(), A * L), (cp.step_R(), A * R)):
            key = (nxt.first, nxt.second)
            if key not in out:
                out[key] = B
                todo.append(nxt)
    return tuple(out.items())


def all_conjugators(a1: Perm, a2: Perm, b1: Perm, b2: Perm) -> List[Perm]:
    """All ``w`` relabeling ``(a1, a2)`` to ``(b1, b2)``; ``<a1, a2>`` must be transitive.

    A conjugator is fixed by the image of label 1, so there are at most ``n``.
    """
    n = a1.degree
    A1, A2, B1, B2 = a1._a, a2._a, b1._a, b2._a
    found = []
    for j in range(n):
        w = [-1] * n
        w[0] = j
        todo = [0]
        ok = True
        for x in todo:
            for g, h in ((A1, B1), (A2, B2)):
                y, wy = g[x], h[w[x]]
                if w[y] < 0:
                    w[y] = wy
                    todo.append(y)
                elif w[y] != wy:
                    ok = False
                    break
            if not ok:
                break
        if ok and len(todo) == n and len(set(w)) == n:
            found.append(Perm._raw(tuple(w)))
    return sorted(found)


def _check_method(X: Surface, method: str, max_n: int) -> None:
    if method not in ("exhaustive", "anchored"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exhaustive" and X.degree > max_n:
        raise BoundExceeded(
            f"degree {X.degree} exceeds the exhaustive bound {max_n}; use method='anchored'"
        )


def _scan(n: int) -> Iterator[Perm]:
    for images in itertools.permutations(range(n)):
        yield Perm._raw(images)


def group_S_X(X: Surface, method: str = "exhaustive", max_n: int = DEFAULT_MAX_N) -> List[Perm]:
    """Relabelings fixing ``Code^L(I)``, sorted."""
    X.require_connected()
    _check_method(X, method, max_n)
    a, b = _base_pair(X)
    if method == "anchored":
        return all_conjugators(a, b, a, b)
    return [w for w in _scan(X.degree) if a.relabel(w) == a and b.relabel(w) == b]


def group_G_X(
    X: Surface,
    method: str = "exhaustive",
    max_n: int = DEFAULT_MAX_N,
    reading: str = "positive",
) -> List[Perm]:
    """Relabelings taking ``Code^L(I)`` to some realized ``Code^L(A)``, sorted.

    ``reading="positive"`` lets ``A`` range over SL2+(Z); ``reading="veech"``
    keeps only pairs whose matrix fixes the class of ``X`` on the orbit side.
    """
    X.require_connected()
    _check_method(X, method, max_n)
    pairs = realized_pairs(X)
    if reading == "veech":
        targets = {p for p, A in pairs.items() if stabilizes(X, A)}
    elif reading == "positive":
        targets = set(pairs)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    a, b = _base_pair(X)
    if method == "anchored":
        out: Set[Perm] = set()
        for c, d in targets:
            out.update(all_conjugators(a, b, c, d))
        return sorted(out)
    return [w for w in _scan(X.degree) if (a.relabel(w), b.relabel(w)) in targets]


# -- the code group -------------------------------------------------------------


@dataclass(frozen=True)
class CodeGroupElement:
    pair: CodePair
    witness: Perm

    def to_json(self) -> dict:
        return {
            "pair": [str(self.pair.first), str(self.pair.second)],
            "witness": str(self.witness),
        }


def _element(X: Surface, w: Perm) -> CodeGroupElement:
    return CodeGroupElement(_base_pair(X).relabel(w), w)


def code_group_identity(X: Surface) -> CodeGroupElement:
    return _element(X, Perm.identity(X.degree))


def code_group_elements(X: Surface) -> List[CodeGroupElement]:
    """One element per realized pair conjugate to ``Code^L(I)``, witness least."""
    X.require_connected()
    a, b = _base_pair(X)
    out = []
    for c, d in sorted(realized_pairs(X)):
        ws = all_conjugators(a, b, c, d)
        if ws:
            out.append(CodeGroupElement(CodePair(c, d), ws[0]))
    return out


def _require_realized(X: Surface, e: CodeGroupElement, pairs) -> None:
    base = _base_pair(X)
    if base.relabel(e.witness) != e.pair:
        raise HypothesisError(f"witness {e.witness} does not produce {e.pair}")
    if (e.pair.first, e.pair.second) not in pairs:
        raise HypothesisError(f"{e.pair} is not a left-code pair of X")


def code_group_op(X: Surface, e1: CodeGroupElement, e2: CodeGroupElement) -> CodeGroupElement:
    """Product of two realized elements.

    With ``Code^L(A) = Code^L(I)`` relabeled by ``w1`` and ``Code^L(B)`` by
    ``w2``, relabeling propagates along positive words, so ``Code^L(AB)`` is
    ``Code^L(I)`` relabeled by ``w2`` then by ``w1``: the witness is
    ``w2 * w1`` left to right.
    """
    pairs = realized_pairs(X)
    for e in (e1, e2):
        _require_realized(X, e, pairs)
    out = _element(X, e2.witness * e1.witness)
    if (out.pair.first, out.pair.second) not in pairs:
        raise InvariantBreach(f"product {out.pair} is not realized")
    return out


def code_group_inverse(X: Surface, e: CodeGroupElement) -> CodeGroupElement:
    _require_realized(X, e, realized_pairs(X))
    return _element(X, e.witness.inverse())
