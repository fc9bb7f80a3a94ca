# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled twins of the functions in ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef inline long pmod(long a, long n):
    cdef long r = a % n
    if r < 0:
        r += n
    return r


def circle_sizes(long h0, long h1, long h2):
    return (h2 + h0, h0 + h1, h1 + h2)


def build_matchings(long h0, long h1, long h2, long q0, long q1, long q2):
    cdef long h[3]
    cdef long q[3]
    cdef long size[3]
    cdef long off[3]
    cdef long i, j, n, v, k, jj, src
    h[0] = h0; h[1] = h1; h[2] = h2
    q[0] = q0; q[1] = q1; q[2] = q2
    size[0] = h2 + h0; size[1] = h0 + h1; size[2] = h1 + h2
    off[0] = 0; off[1] = size[0]; off[2] = size[0] + size[1]
    cdef long total = off[2] + size[2]
    m0 = [0] * total
    m1 = [0] * total
    m2 = [0] * total
    m3 = [0] * total
    for i in range(3):
        n = size[i]
        for j in range(n):
            v = off[i] + j
            if j % 2 == 0:
                m0[v] = off[i] + pmod(j + 1, n)
                m1[v] = off[i] + pmod(j - 1, n)
            else:
                m0[v] = off[i] + pmod(j - 1, n)
                m1[v] = off[i] + pmod(j + 1, n)
            if j < h[i]:
                k = (i + 1) % 3
                jj = pmod(-j - 1, size[k])
            else:
                k = (i + 2) % 3
                jj = pmod(size[i] - j - 1, size[k])
            m2[v] = off[k] + jj
            src = pmod(j - q[i], n)
            if src < h[i]:
                k = (i + 1) % 3
                jj = pmod(-src - 1, size[k])
            else:
                k = (i + 2) % 3
                jj = pmod(size[i] - src - 1, size[k])
            m3[v] = off[k] + pmod(jj + q[k], size[k])
    return m0, m1, m2, m3


def is_perfect_involution(m):
    cdef long n = len(m)
    cdef long v, u
    for v in range(n):
        u = m[v]
        if u == v or u < 0 or u >= n or m[u] != v:
            return False
    return True


cdef long find(long *parent, long x):
    cdef long root = x
    cdef long nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def count_components(long n, matchings):
    cdef long *parent = <long *> malloc(max(n, 1) * sizeof(long))
    if parent == NULL:
        raise MemoryError()
    cdef long v, a, b
    cdef long count = n
    try:
        for v in range(n):
            parent[v] = v
        for m in matchings:
            for v in range(n):
                a = find(parent, v)
                b = find(parent, <long> m[v])
                if a != b:
                    parent[a] = b
                    count -= 1
    finally:
        free(parent)
    return count


def count_alternating_cycles(ma, mb):
    cdef long n = len(ma)
    cdef char *seen = <char *> malloc(max(n, 1))
    if seen == NULL:
        raise MemoryError()
    cdef long start, v
    cdef long cycles = 0
    cdef bint use_a
    try:
        for v in range(n):
            seen[v] = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            v = start
            use_a = True
            while not seen[v]:
                seen[v] = 1
                v = ma[v] if use_a else mb[v]
                use_a = not use_a
    finally:
        free(seen)
    return cycles
