"""Pure-Python graph kernels.

Vertices of the colored graph are flattened to integers: circle ``i`` owns
the index range ``offset[i] .. offset[i] + size[i]``.  Every function here has
a twin of the same name and signature in the compiled ``_kernels`` module.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple


def circle_sizes(h0: int, h1: int, h2: int) -> Tuple[int, int, int]:
    # circle i has h_{i-1} + h_i vertices
    return (h2 + h0, h0 + h1, h1 + h2)


def build_matchings(
    h0: int, h1: int, h2: int, q0: int, q1: int, q2: int
) -> Tuple[List[int], List[int], List[int], List[int]]:
    """Return the four color matchings as flat partner arrays."""
    h = (h0, h1, h2)
    q = (q0, q1, q2)
    size = circle_sizes(h0, h1, h2)
    off = (0, size[0], size[0] + size[1])
    total = off[2] + size[2]
    m0 = [0] * total
    m1 = [0] * total
    m2 = [0] * total
    m3 = [0] * total

    def swap(i: int, j: int) -> Tuple[int, int]:
        if j < h[i]:
            k = (i + 1) % 3
            return k, (-j - 1) % size[k]
        k = (i - 1) % 3
        return k, (size[i] - j - 1) % size[k]

    for i in range(3):
        n = size[i]
        for j in range(n):
            v = off[i] + j
            if j % 2 == 0:
                m0[v] = off[i] + (j + 1) % n
                m1[v] = off[i] + (j - 1) % n
            else:
                m0[v] = off[i] + (j - 1) % n
                m1[v] = off[i] + (j + 1) % n
            k, jj = swap(i, j)
            m2[v] = off[k] + jj
            # conjugate by the per-circle rotation j -> j + q_i
            k, jj = swap(i, (j - q[i]) % n)
            m3[v] = off[k] + (jj + q[k]) % size[k]
    return m0, m1, m2, m3


def is_perfect_involution(m: Sequence[int]) -> bool:
    for v, u in enumerate(m):
        if u == v or u < 0 or u >= len(m) or m[u] != v:
            return False
    return True


def count_components(n: int, matchings: Sequence[Sequence[int]]) -> int:
    """Union-find component count over the union of the given matchings."""
    parent = list(range(n))
    count = n

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for m in matchings:
        for v in range(n):
            a = find(v)
            b = find(m[v])
            if a != b:
                parent[a] = b
                count -= 1
    return count


def count_alternating_cycles(ma: Sequence[int], mb: Sequence[int]) -> int:
    """Count the cycles of the union of two perfect matchings by walking them."""
    n = len(ma)
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        v = start
        use_a = True
        while not seen[v]:
            seen[v] = True
            v = ma[v] if use_a else mb[v]
            use_a = not use_a
    return cycles
