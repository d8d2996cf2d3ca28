"""Pure-Python kernels. Same contract as the compiled ``_ckernels`` module.

All arguments are tuples of 0-based images; ``a[i]`` is the image of ``i``.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

BACKEND = "python"


def compose(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    # left-to-right: first a, then b
    return tuple(map(b.__getitem__, a))


def inverse(a: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def orbit(a: Sequence[int], b: Sequence[int], start: int) -> list:
    seen = {start}
    todo = [start]
    for x in todo:
        for y in (a[x], b[x]):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return todo


def best_labeling(a: Sequence[int], b: Sequence[int], anchors: Iterable[int]):
    """Lexicographically least BFS relabeling of the component of the anchors.

    Returns ``(ca, cb, order)`` where ``order[k]`` is the old label that gets
    new label ``k`` and ``ca``/``cb`` are the relabeled images restricted to
    the component.
    """
    n = len(a)
    best_ca = best_cb = best_order = None
    pos = [-1] * n
    for s in anchors:
        order = [s]
        pos[s] = 0
        ca = []
        # 0: equal to best so far, 1: already better, -1: worse
        state = 0 if best_ca is not None else 1
        k = 0
        while k < len(order):
            x = order[k]
            y = a[x]
            if pos[y] < 0:
                pos[y] = len(order)
                order.append(y)
            ca.append(pos[y])
            if state == 0:
                c = best_ca[k]
                if pos[y] > c:
                    state = -1
                    break
                if pos[y] < c:
                    state = 1
            y = b[x]
            if pos[y] < 0:
                pos[y] = len(order)
                order.append(y)
            k += 1
        if state >= 0:
            cat = tuple(ca)
            cbt = tuple([pos[b[x]] for x in order])
            if best_ca is None or (cat, cbt) < (best_ca, best_cb):
                best_ca, best_cb, best_order = cat, cbt, tuple(order)
        for x in order:
            pos[x] = -1
    return best_ca, best_cb, best_order


def anchored_conjugator(
    a1: Sequence[int], a2: Sequence[int], b1: Sequence[int], b2: Sequence[int]
) -> Optional[Tuple[int, ...]]:
    """Find ``w`` with ``w[a_k[i]] == b_k[w[i]]`` assuming <a1, a2> is transitive."""
    n = len(a1)
    for j in range(n):
        w = [-1] * n
        used = [False] * n
        w[0] = j
        used[j] = True
        todo = [0]
        ok = True
        for x in todo:
            wx = w[x]
            for g, h in ((a1, b1), (a2, b2)):
                y = g[x]
                wy = h[wx]
                if w[y] < 0:
                    if used[wy]:
                        ok = False
                        break
                    w[y] = wy
                    used[wy] = True
                    todo.append(y)
                elif w[y] != wy:
                    ok = False
                    break
            if not ok:
                break
        if ok and len(todo) == n:
            return tuple(w)
    return None
