"""Pure-Python orbit kernel (fallback when the compiled extension is absent).

Identical contract to the compiled version: BFS over tuple space in
ascending index order, so each orbit's root is its lexicographically least
tuple index.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def conjugation_orbit_roots(mul, inv, gens, n: int, d: int) -> list[int]:
    """Orbit roots for G acting on G^d by simultaneous conjugation.

    ``mul`` is the flattened n*n multiplication table, ``gens`` a generating
    set of G.  Returns root[t] = least tuple index in the orbit of t.
    """
    size = n**d
    # per-generator conjugation map on single elements
    conj = []
    for g in gens:
        ginv = inv[g]
        base = g * n
        conj.append([mul[mul[base + x] * n + ginv] for x in range(n)])
    root = [-1] * size
    radices = [n**i for i in range(d)]
    stack: list[int] = []
    for start in range(size):
        if root[start] >= 0:
            continue
        root[start] = start
        stack.append(start)
        while stack:
            t = stack.pop()
            digits = []
            r = t
            for _ in range(d):
                digits.append(r % n)
                r //= n
            for cg in conj:
                u = 0
                for i in range(d):
                    u += cg[digits[i]] * radices[i]
                if root[u] < 0:
                    root[u] = start
                    stack.append(u)
    return root
