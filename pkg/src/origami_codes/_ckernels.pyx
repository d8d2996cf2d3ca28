# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Contract identical to ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef int* _load(seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*> malloc(n * sizeof(int) if n > 0 else sizeof(int))
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


def compose(a, b):
    cdef Py_ssize_t n = len(a), i
    cdef int* pa = _load(a, n)
    cdef int* pb = _load(b, n)
    try:
        return tuple([pb[pa[i]] for i in range(n)])
    finally:
        free(pa)
        free(pb)


def inverse(a):
    cdef Py_ssize_t n = len(a), i
    cdef int* pa = _load(a, n)
    cdef int* out = _load(a, n)
    try:
        for i in range(n):
            out[pa[i]] = i
        return tuple([out[i] for i in range(n)])
    finally:
        free(pa)
        free(out)


def orbit(a, b, int start):
    cdef Py_ssize_t n = len(a)
    cdef int* pa = _load(a, n)
    cdef int* pb = _load(b, n)
    cdef int* seen = <int*> malloc(n * sizeof(int))
    cdef int* todo = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t head = 0, tail = 1, i
    cdef int x, y
    try:
        for i in range(n):
            seen[i] = 0
        seen[start] = 1
        todo[0] = start
        while head < tail:
            x = todo[head]
            head += 1
            y = pa[x]
            if not seen[y]:
                seen[y] = 1
                todo[tail] = y
                tail += 1
            y = pb[x]
            if not seen[y]:
                seen[y] = 1
                todo[tail] = y
                tail += 1
        return [todo[i] for i in range(tail)]
    finally:
        free(pa)
        free(pb)
        free(seen)
        free(todo)


def best_labeling(a, b, anchors):
    cdef Py_ssize_t n = len(a)
    cdef int* pa = _load(a, n)
    cdef int* pb = _load(b, n)
    cdef int* pos = <int*> malloc(n * sizeof(int))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef int* ca = <int*> malloc(n * sizeof(int))
    cdef int* cb = <int*> malloc(n * sizeof(int))
    cdef int* best_ca = <int*> malloc(n * sizeof(int))
    cdef int* best_cb = <int*> malloc(n * sizeof(int))
    cdef int* best_order = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t i, k, size = 0, best_size = -1
    cdef int x, y, s, state
    try:
        for i in range(n):
            pos[i] = -1
        for s in anchors:
            order[0] = s
            pos[s] = 0
            size = 1
            state = 0 if best_size >= 0 else 1
            k = 0
            while k < size:
                x = order[k]
                y = pa[x]
                if pos[y] < 0:
                    pos[y] = size
                    order[size] = y
                    size += 1
                ca[k] = pos[y]
                if state == 0:
                    if ca[k] > best_ca[k]:
                        state = -1
                        break
                    if ca[k] < best_ca[k]:
                        state = 1
                y = pb[x]
                if pos[y] < 0:
                    pos[y] = size
                    order[size] = y
                    size += 1
                k += 1
            if state >= 0:
                for k in range(size):
                    cb[k] = pos[pb[order[k]]]
                if state == 0:
                    # tie on ca: compare cb
                    state = -1
                    for k in range(size):
                        if cb[k] != best_cb[k]:
                            state = 1 if cb[k] < best_cb[k] else -1
                            break
                if state == 1:
                    best_size = size
                    for k in range(size):
                        best_ca[k] = ca[k]
                        best_cb[k] = cb[k]
                        best_order[k] = order[k]
            for k in range(size):
                pos[order[k]] = -1
        if best_size < 0:
            return None, None, None
        return (
            tuple([best_ca[k] for k in range(best_size)]),
            tuple([best_cb[k] for k in range(best_size)]),
            tuple([best_order[k] for k in range(best_size)]),
        )
    finally:
        free(pa)
        free(pb)
        free(pos)
        free(order)
        free(ca)
        free(cb)
        free(best_ca)
        free(best_cb)
        free(best_order)


def anchored_conjugator(a1, a2, b1, b2):
    cdef Py_ssize_t n = len(a1)
    cdef int* pa1 = _load(a1, n)
    cdef int* pa2 = _load(a2, n)
    cdef int* pb1 = _load(b1, n)
    cdef int* pb2 = _load(b2, n)
    cdef int* w = <int*> malloc(n * sizeof(int))
    cdef int* used = <int*> malloc(n * sizeof(int))
    cdef int* todo = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t head, tail, i
    cdef int j, x, y, wy, ok
    try:
        for j in range(n):
            for i in range(n):
                w[i] = -1
                used[i] = 0
            w[0] = j
            used[j] = 1
            todo[0] = 0
            head = 0
            tail = 1
            ok = 1
            while head < tail and ok:
                x = todo[head]
                head += 1
                # generator pair 1
                y = pa1[x]
                wy = pb1[w[x]]
                if w[y] < 0:
                    if used[wy]:
                        ok = 0
                        break
                    w[y] = wy
                    used[wy] = 1
                    todo[tail] = y
                    tail += 1
                elif w[y] != wy:
                    ok = 0
                    break
                # generator pair 2
                y = pa2[x]
                wy = pb2[w[x]]
                if w[y] < 0:
                    if used[wy]:
                        ok = 0
                        break
                    w[y] = wy
                    used[wy] = 1
                    todo[tail] = y
                    tail += 1
                elif w[y] != wy:
                    ok = 0
                    break
            if ok and tail == n:
                return tuple([w[i] for i in range(n)])
        return None
    finally:
        free(pa1)
        free(pa2)
        free(pb1)
        free(pb2)
        free(w)
        free(used)
        free(todo)
