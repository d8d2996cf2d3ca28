"""Geometric trace of saddle connections, independent of the word algebra.

For every square the segment of direction ``(q, p)`` leaving its south-west
corner is followed across the gluings using exact integer comparisons of the
crossing times.  The square whose north-east corner ends the segment gives
the code; turning around that corner through the neighbouring quadrants
gives the start of the next boundary saddle connection on the left (the
cylinder lies to the left) or on the right.
"""
from __future__ import annotations

from typing import Tuple

from .farey import Slope
from .perm import Perm
from .surface import Surface

__all__ = ["trace_endpoint", "trace_oracle"]


def _preimage(images: Tuple[int, ...], i: int) -> int:
    for j, x in enumerate(images):
        if x == i:
            return j
    raise ValueError(i)


def trace_endpoint(X: Surface, r: Slope, start: int) -> int:
    """0-based square whose NE corner the segment from ``start``'s SW corner reaches."""
    right = X.sigma._a
    top = X.tau._a
    p, q = r.p, r.q
    if p == 0:
        # runs along the bottom edge; the square below has this NE corner
        return _preimage(top, start)
    if q == 0:
        # runs up the left edge; the square to the left has this NE corner
        return _preimage(right, start)
    cur = start
    # at time t the segment is at (q t, p t); the next vertical line x = i is
    # hit at t = i/q, the next horizontal line y = j at t = j/p
    i = j = 1
    while i < q or j < p:
        if j < p and (i >= q or j * q < i * p):
            cur = top[cur]
            j += 1
        else:
            cur = right[cur]
            i += 1
    return cur


def trace_oracle(X: Surface, r: Slope) -> Tuple[Perm, Perm, Perm]:
    """``(code, left code, right code)`` from the geometric trace."""
    right = X.sigma._a
    top = X.tau._a
    n = X.degree
    ends = [trace_endpoint(X, r, i) for i in range(n)]
    # Around the NE corner of square e: clockwise from the incoming ray we
    # cross e's top edge and then the right edge of the square above it;
    # counterclockwise we cross e's right edge and then the top edge of its
    # right neighbour.  Either way we land in the quadrant where the next
    # saddle connection leaves a south-west corner.
    left = [right[top[e]] for e in ends]
    rgt = [top[right[e]] for e in ends]
    return (
        Perm._raw(tuple(ends)),
        Perm._raw(tuple(left)),
        Perm._raw(tuple(rgt)),
    )
