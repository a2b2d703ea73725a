# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: suffix/prefix overlap and the subset DP.

Mirrors ``_pykernels`` exactly, including the lexicographic tie rule of
``max_overlap_path``.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef int64_t NEG = -(<int64_t>1 << 62)


cdef Py_ssize_t _overlap(str s, str t, Py_ssize_t *pi) except -1:
    cdef Py_ssize_t m = len(t), ns = len(s), i, k = 0
    cdef Py_UCS4 c
    for i in range(1, m):
        c = t[i]
        while k and t[k] != c:
            k = pi[k - 1]
        if t[k] == c:
            k += 1
        pi[i] = k
    k = 0
    i = ns - m if ns > m else 0
    while i < ns:
        c = s[i]
        if k == m:
            k = pi[k - 1]
        while k and t[k] != c:
            k = pi[k - 1]
        if t[k] == c:
            k += 1
        i += 1
    return k


def overlap_len(str s, str t):
    cdef Py_ssize_t m = len(t)
    if not len(s) or not m:
        return 0
    cdef Py_ssize_t *pi = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    if pi == NULL:
        raise MemoryError()
    pi[0] = 0
    try:
        return _overlap(s, t, pi)
    finally:
        free(pi)


def overlap_matrix(strings):
    cdef Py_ssize_t n = len(strings), i, j, longest = 1
    for i in range(n):
        if len(strings[i]) > longest:
            longest = len(strings[i])
    cdef Py_ssize_t *pi = <Py_ssize_t *> malloc(longest * sizeof(Py_ssize_t))
    if pi == NULL:
        raise MemoryError()
    pi[0] = 0
    out = []
    try:
        for i in range(n):
            row = [0] * n
            for j in range(n):
                if i != j and len(strings[i]) and len(strings[j]):
                    row[j] = _overlap(strings[i], strings[j], pi)
            out.append(row)
    finally:
        free(pi)
    return out


def max_overlap_path(weights):
    cdef Py_ssize_t n = len(weights)
    if n == 0:
        return 0, []
    if n > 24:
        raise ValueError("too many strings for the subset DP")
    cdef Py_ssize_t full = (1 << n) - 1, mask, rest, i, j
    cdef int64_t top, v
    cdef int64_t *w = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *best = <int64_t *> malloc((full + 1) * n * sizeof(int64_t))
    if w == NULL or best == NULL:
        free(w)
        free(best)
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                w[i * n + j] = weights[i][j]
        for mask in range(1, full + 1):
            for i in range(n):
                if not (mask >> i) & 1:
                    best[mask * n + i] = NEG
                    continue
                rest = mask ^ (1 << i)
                if rest == 0:
                    best[mask * n + i] = 0
                    continue
                top = NEG
                for j in range(n):
                    if (rest >> j) & 1:
                        v = best[rest * n + j]
                        if v != NEG:
                            v = v + w[i * n + j]
                            if v > top:
                                top = v
                best[mask * n + i] = top

        top = NEG
        cur = 0
        for i in range(n):
            if best[full * n + i] > top:
                top = best[full * n + i]
                cur = i
        total = top
        order = [cur]
        mask = full
        need = top
        while True:
            rest = mask ^ (1 << cur)
            if rest == 0:
                break
            for j in range(n):
                if (rest >> j) & 1 and best[rest * n + j] != NEG \
                        and w[cur * n + j] + best[rest * n + j] == need:
                    need -= w[cur * n + j]
                    mask = rest
                    cur = j
                    break
            order.append(cur)
        return total, order
    finally:
        free(w)
        free(best)
