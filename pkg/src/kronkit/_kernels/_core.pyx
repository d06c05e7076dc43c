# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit kernel: simultaneous-conjugation orbits on G^d.

Same contract as the pure fallback: BFS in ascending tuple-index order so
each orbit root is the lexicographically least tuple index in the orbit.
"""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "compiled"


def conjugation_orbit_roots(mul, inv, gens, int n, int d):
    cdef long long size = 1
    cdef int i, j, gi, g, ginv
    cdef long long t, u, start, r, sp
    cdef int *cmul
    cdef int *cconj
    cdef long long *root
    cdef long long *stack
    cdef long long *radix
    cdef int *digits
    cdef int ngens = len(gens)

    for i in range(d):
        size *= n

    cmul = <int *> malloc(<size_t> n * n * sizeof(int))
    cconj = <int *> malloc(<size_t> ngens * n * sizeof(int))
    root = <long long *> malloc(<size_t> size * sizeof(long long))
    stack = <long long *> malloc(<size_t> size * sizeof(long long))
    radix = <long long *> malloc(<size_t> d * sizeof(long long))
    digits = <int *> malloc(<size_t> d * sizeof(int))
    if cmul == NULL or cconj == NULL or root == NULL or stack == NULL \
            or radix == NULL or digits == NULL:
        if cmul != NULL: free(<void *> cmul)
        if cconj != NULL: free(<void *> cconj)
        if root != NULL: free(<void *> root)
        if stack != NULL: free(<void *> stack)
        if radix != NULL: free(<void *> radix)
        if digits != NULL: free(<void *> digits)
        raise MemoryError()

    try:
        for i in range(n * n):
            cmul[i] = mul[i]
        for gi in range(ngens):
            g = gens[gi]
            ginv = inv[g]
            for j in range(n):
                cconj[gi * n + j] = cmul[cmul[g * n + j] * n + ginv]
        radix[0] = 1
        for i in range(1, d):
            radix[i] = radix[i - 1] * n

        for t in range(size):
            root[t] = -1
        for start in range(size):
            if root[start] >= 0:
                continue
            root[start] = start
            sp = 0
            stack[sp] = start
            sp += 1
            while sp > 0:
                sp -= 1
                t = stack[sp]
                r = t
                for i in range(d):
                    digits[i] = <int> (r % n)
                    r //= n
                for gi in range(ngens):
                    u = 0
                    for i in range(d):
                        u += cconj[gi * n + digits[i]] * radix[i]
                    if root[u] < 0:
                        root[u] = start
                        stack[sp] = u
                        sp += 1
        return [root[t] for t in range(size)]
    finally:
        free(<void *> cmul)
        free(<void *> cconj)
        free(<void *> root)
        free(<void *> stack)
        free(<void *> radix)
        free(<void *> digits)
