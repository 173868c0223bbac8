"""Pure-Python twins of the compiled scan kernels.

Same semantics as the compiled conelab._kernels, with unbounded integers.
Used when the extension is missing or when int64 safety cannot be certified
for a requested box.  This is slower than the compiled version but exact at
any size.

Both kernels fix all coordinates but the last and solve the remaining
quadratic A t^2 + B t + C = target exactly, so a scan over a box of side
2*bound+1 costs (2*bound+1)^(rank-1) leaf solves instead of a full power.
"""

from __future__ import annotations

import math


def _gcd_all(v):
    g = 0
    for c in v:
        g = math.gcd(g, c)
    return g


def _quad_roots(A, B, C):
    """Integer roots of A t^2 + B t + C = 0; None encodes 'all integers'."""
    if A == 0:
        if B == 0:
            return None if C == 0 else ()
        if C % B:
            return ()
        return (-(C // B),)
    disc = B * B - 4 * A * C
    if disc < 0:
        return ()
    r = math.isqrt(disc)
    if r * r != disc:
        return ()
    den = 2 * A
    roots = set()
    for num in (-B - r, -B + r):
        if num % den == 0:
            roots.add(num // den)
    return tuple(sorted(roots))


def vectors_with_square_box(gram, d, bound):
    """All primitive v != 0 with quad(v) == d and sup-norm <= bound.

    Both v and -v appear.  Output order is a fixed scan order; callers that
    need the canonical (sup-norm, lex) order sort the result.
    """
    n = len(gram)
    last = n - 1
    A = gram[last][last]
    out = []
    coords = [0] * n

    def emit(ts):
        if ts is None:
            ts = range(-bound, bound + 1)
        for t in ts:
            if -bound <= t <= bound:
                coords[last] = t
                if any(coords) and _gcd_all(coords) == 1:
                    out.append(tuple(coords))

    def rec(depth, s, C):
        # s[k] = sum_{i<depth} gram[k][i]*coords[i]; C = quad of the prefix
        if depth == last:
            emit(_quad_roots(A, 2 * s[last], C - d))
            return
        gd = gram[depth]
        for val in range(-bound, bound + 1):
            coords[depth] = val
            child = [s[k] + gram[k][depth] * val for k in range(n)]
            rec(depth + 1, child, C + 2 * val * s[depth] + gd[depth] * val * val)
        coords[depth] = 0

    rec(0, [0] * n, 0)
    return out


def isotropic_in_shell(gram, r):
    """Primitive isotropic vectors of sup-norm exactly r, in lex order."""
    n = len(gram)
    last = n - 1
    A = gram[last][last]
    out = []
    coords = [0] * n

    def emit(ts, need_rim):
        if ts is None:
            ts = range(-r, r + 1)
        for t in ts:
            if need_rim and abs(t) != r:
                continue
            if -r <= t <= r:
                coords[last] = t
                if _gcd_all(coords) == 1:
                    out.append(tuple(coords))

    def rec(depth, s, C, mx):
        if depth == last:
            # prefix strictly inside the shell forces |t| = r
            emit(_quad_roots(A, 2 * s[last], C), need_rim=mx < r)
            return
        gd = gram[depth]
        for val in range(-r, r + 1):
            coords[depth] = val
            child = [s[k] + gram[k][depth] * val for k in range(n)]
            rec(
                depth + 1,
                child,
                C + 2 * val * s[depth] + gd[depth] * val * val,
                max(mx, abs(val)),
            )
        coords[depth] = 0

    rec(0, [0] * n, 0, 0)
    return out
