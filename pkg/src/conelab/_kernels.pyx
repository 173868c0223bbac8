# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 twins of the pure scan kernels in _kernels_py.

Callers certify beforehand that every intermediate fits in int64 (the
dispatcher in conelab.kernels does this and falls back to the pure code
otherwise), so arithmetic here is unchecked.  Semantics match _kernels_py
exactly, including output order.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc

DEF MAXRANK = 64

cdef long long _gcd(long long a, long long b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef long long _isqrt(long long x) noexcept:
    cdef long long r
    if x < 0:
        return -1
    r = <long long> sqrt(<double> x)
    while r > 0 and r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


cdef int _quad_roots(long long A, long long B, long long C,
                     long long* roots) noexcept:
    """Roots of A t^2 + B t + C = 0 into roots[0..k), ascending.

    Returns k, or -1 meaning 'every integer t is a root'.
    """
    cdef long long disc, r, den, n1, n2, t
    cdef int k = 0
    if A == 0:
        if B == 0:
            return -1 if C == 0 else 0
        if C % B != 0:
            return 0
        roots[0] = -(C // B)
        return 1
    disc = B * B - 4 * A * C
    if disc < 0:
        return 0
    r = _isqrt(disc)
    if r * r != disc:
        return 0
    den = 2 * A
    n1 = -B - r
    n2 = -B + r
    if n1 % den == 0:
        roots[k] = n1 // den
        k += 1
    if r != 0 and n2 % den == 0:
        roots[k] = n2 // den
        k += 1
    if k == 2 and roots[0] > roots[1]:
        roots[0], roots[1] = roots[1], roots[0]
    return k


cdef void _emit(long long* coords, int n, long long lo, long long hi,
                long long* ts, int nt, bint need_rim, long long r,
                list out):
    # append tuple(coords) for each admissible last coordinate
    cdef long long t, g
    cdef int i, j
    cdef int count = nt
    if ts == NULL:
        count = <int> (hi - lo + 1)
    for j in range(count):
        t = lo + j if ts == NULL else ts[j]
        if t < lo or t > hi:
            continue
        if need_rim and t != r and t != -r:
            continue
        coords[n - 1] = t
        g = 0
        for i in range(n):
            g = _gcd(g, coords[i])
        if g == 1:
            out.append(tuple([coords[i] for i in range(n)]))


cdef void _box_rec(const long long* g, int n, int depth, long long bound,
                   long long d, long long* coords, const long long* s,
                   long long C, list out):
    cdef long long child[MAXRANK]
    cdef long long roots[2]
    cdef long long val, Cc
    cdef int k, last = n - 1
    if depth == last:
        k = _quad_roots(g[last * n + last], 2 * s[last], C - d, roots)
        if k < 0:
            _emit(coords, n, -bound, bound, NULL, 0, False, 0, out)
        elif k > 0:
            _emit(coords, n, -bound, bound, roots, k, False, 0, out)
        return
    for val in range(-bound, bound + 1):
        coords[depth] = val
        for k in range(n):
            child[k] = s[k] + g[k * n + depth] * val
        Cc = C + 2 * val * s[depth] + g[depth * n + depth] * val * val
        _box_rec(g, n, depth + 1, bound, d, coords, child, Cc, out)
    coords[depth] = 0


cdef void _shell_rec(const long long* g, int n, int depth, long long r,
                     long long* coords, const long long* s, long long C,
                     long long mx, list out):
    cdef long long child[MAXRANK]
    cdef long long roots[2]
    cdef long long val, Cc, m2
    cdef int k, last = n - 1
    if depth == last:
        k = _quad_roots(g[last * n + last], 2 * s[last], C, roots)
        if k < 0:
            _emit(coords, n, -r, r, NULL, 0, mx < r, r, out)
        elif k > 0:
            _emit(coords, n, -r, r, roots, k, mx < r, r, out)
        return
    for val in range(-r, r + 1):
        coords[depth] = val
        for k in range(n):
            child[k] = s[k] + g[k * n + depth] * val
        Cc = C + 2 * val * s[depth] + g[depth * n + depth] * val * val
        m2 = mx if mx >= (val if val >= 0 else -val) else (val if val >= 0 else -val)
        _shell_rec(g, n, depth + 1, r, coords, child, Cc, m2, out)
    coords[depth] = 0


cdef long long* _flatten(gram, int* rank) except NULL:
    cdef int n = len(gram)
    cdef int i, j
    if n < 1 or n > MAXRANK:
        raise ValueError("rank out of range for the compiled kernel")
    cdef long long* g = <long long*> malloc(n * n * sizeof(long long))
    if g == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = gram[i]
            for j in range(n):
                g[i * n + j] = row[j]
    except BaseException:
        free(g)
        raise
    rank[0] = n
    return g


def vectors_with_square_box(gram, long long d, long long bound):
    """All primitive v != 0 with quad(v) == d and sup-norm <= bound."""
    cdef int n = 0
    cdef long long* g = _flatten(gram, &n)
    cdef long long coords[MAXRANK]
    cdef long long s[MAXRANK]
    cdef int i
    out = []
    try:
        for i in range(n):
            coords[i] = 0
            s[i] = 0
        _box_rec(g, n, 0, bound, d, coords, s, 0, out)
    finally:
        free(g)
    return out


def isotropic_in_shell(gram, long long r):
    """Primitive isotropic vectors of sup-norm exactly r, in lex order."""
    cdef int n = 0
    cdef long long* g = _flatten(gram, &n)
    cdef long long coords[MAXRANK]
    cdef long long s[MAXRANK]
    cdef int i
    out = []
    try:
        for i in range(n):
            coords[i] = 0
            s[i] = 0
        _shell_rec(g, n, 0, r, coords, s, 0, 0, out)
    finally:
        free(g)
    return out
