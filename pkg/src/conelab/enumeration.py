"""Wall enumeration: box scans, separating walls, nef certificates.

separating_walls is the computational heart of the package.  For x in the
closed positive cone and h positive, a wall vector v with pair(v,x) = s and
pair(v,h) = t projects onto the plane P spanned by x and h with square

    q_P(v) = -(qh*s^2 - 2*p*s*t + qx*t^2) / |D|,

where p = pair(x,h), qx = quad(x), qh = quad(h) and D = qx*qh - p^2 < 0 is
the Gram determinant of the plane.  Since the complement of P is negative
definite, q(v) = d forces q_P(v) >= d, which bounds (s, t) to finitely many
cells; inside one cell the solutions form a coset of the rank-2 deficient
sublattice {pair(.,x) = pair(.,h) = 0}, enumerated exactly as a shifted
definite quadric.  No floats anywhere, so the answer is complete.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import (
    InfiniteWallSet,
    InvalidArgument,
    NotPositive,
    NotPositiveBase,
    XOutsideClosedCone,
)
from .intlin import DefiniteFactor, LinearSystem, shifted_definite_solutions
from .lattice import Lattice, Vec, gcd_all, primitivize, scan_key


def vectors_of_square(L: Lattice, d: int, bound: int) -> list[Vec]:
    """All primitive v with quad(v) = d < 0 and sup-norm <= bound.

    Both v and -v are listed; canonical (sup-norm, lex) order.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d >= 0:
        raise InvalidArgument("square must be a negative integer, got %r" % (d,))
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise InvalidArgument("bound must be a positive integer, got %r" % (bound,))
    return sorted(kernels.vectors_with_square_box(L.gram, d, bound), key=scan_key)


def _proportional(x, y) -> bool:
    return all(
        x[i] * y[j] == x[j] * y[i] for i in range(len(x)) for j in range(i + 1, len(x))
    )


def _pairing_row(L: Lattice, y) -> list[int]:
    # the functional v -> pair(v, y) as a coordinate row
    return [sum(L.gram[j][i] * y[j] for j in range(L.rank)) for i in range(L.rank)]


class _CosetSolver:
    """Solutions of pair(v, y_i) = c_i with quad(v) = d, per right-hand side."""

    def __init__(self, L: Lattice, ys):
        self.L = L
        self.sys = LinearSystem([_pairing_row(L, y) for y in ys])
        self.kernel = self.sys.kernel_basis()
        m = len(self.kernel)
        self.P = [
            [-L.pair(self.kernel[i], self.kernel[j]) for j in range(m)]
            for i in range(m)
        ]
        self.factor = DefiniteFactor(self.P)

    def solve(self, rhs, d) -> list[Vec]:
        v0 = self.sys.particular(rhs)
        if v0 is None:
            return []
        b = [self.L.pair(v0, Bk) for Bk in self.kernel]
        c0 = self.L.quad(v0) - d
        out = []
        for w in shifted_definite_solutions(self.P, b, c0, self.factor):
            v = list(v0)
            for wk, Bk in zip(w, self.kernel):
                if wk:
                    for i in range(self.L.rank):
                        v[i] += wk * Bk[i]
            vt = tuple(v)
            if gcd_all(vt) == 1:
                out.append(vt)
        return out


def _separating(L: Lattice, x, h, include_boundary: bool):
    """(strict, boundary) wall lists for the pair (x, h), unsorted.

    strict: pair(v,x) < 0 < pair(v,h).  boundary: pair(v,x) = 0 < pair(v,h).
    The boundary sweep runs only when include_boundary and quad(x) > 0.
    """
    if _proportional(x, h):
        return [], []
    qx = L.quad(x)
    qh = L.quad(h)
    p = L.pair(x, h)
    D = qx * qh - p * p
    # independent vectors of the closed cone: strict reversed Cauchy-Schwarz
    assert D < 0 and p > 0
    cells = _CosetSolver(L, (x, h))

    def N(s, t):
        return qh * s * s - 2 * p * s * t + qx * t * t

    strict, boundary = [], []
    for d in sorted(L.wall_squares):
        cap = -D * -d
        if include_boundary and qx > 0:
            t = 1
            while N(0, t) <= cap:
                boundary.extend(cells.solve((0, t), d))
                t += 1
        s = -1
        while N(s, 1) <= cap:
            t = 1
            while N(s, t) <= cap:
                strict.extend(cells.solve((s, t), d))
                t += 1
            s -= 1
    return strict, boundary


def _check_x_closed_cone(L: Lattice, x) -> int:
    qx = L.quad(x)
    if not any(x) or qx < 0 or L.pair(x, L.orientation) <= 0:
        raise XOutsideClosedCone(
            "x must be nonzero with quad(x) >= 0 on the positive side, got %r" % (x,)
        )
    return qx


def separating_walls(L: Lattice, x, h, strict_on_x: bool = True) -> list[Vec]:
    """Complete finite list of walls between x and the positive base h.

    Each wall is oriented toward h (pair(v,h) > 0) and strictly separates
    (pair(v,x) < 0).  With strict_on_x=False the walls through x itself
    (pair(v,x) = 0) are included; for isotropic x on rank >= 3 that family
    is infinite, which raises InfiniteWallSet instead of truncating.
    Canonical (sup-norm, lex) order.
    """
    if not L.is_positive(h):
        raise NotPositiveBase("h must be positive, got %r" % (h,))
    qx = _check_x_closed_cone(L, x)
    if not strict_on_x and qx == 0 and L.rank >= 3:
        raise InfiniteWallSet(
            "walls through the isotropic ray %r form an infinite family" % (x,)
        )
    strict, boundary = _separating(L, x, h, include_boundary=not strict_on_x)
    walls = strict if strict_on_x else strict + boundary
    return sorted(walls, key=scan_key)


@dataclass(frozen=True)
class NefCertificate:
    """Outcome of the nef test: nef is True iff no wall separates x from h."""

    nef: bool
    witness: Vec | None

    def __bool__(self) -> bool:
        return self.nef


def nef_certificate(L: Lattice, x, h) -> NefCertificate:
    """Decide whether x lies in the closure of the chamber of h.

    The witness is the first separating wall in canonical order, or None.
    """
    walls = separating_walls(L, x, h, strict_on_x=True)
    return NefCertificate(nef=not walls, witness=walls[0] if walls else None)


def walls_through(L: Lattice, y) -> list[Vec]:
    """Wall lines orthogonal to a vector y of positive square.

    One sign-normalized representative per line; empty means y is interior
    to its chamber.  Complete: the orthogonal complement of y is negative
    definite, so each admissible square gives a finite definite enumeration.
    """
    if L.quad(y) <= 0:
        raise InvalidArgument("walls_through needs quad(y) > 0, got %r" % (y,))
    cells = _CosetSolver(L, (y,))
    lines = set()
    for d in sorted(L.wall_squares):
        for v in cells.solve((0,), d):
            lines.add(primitivize(v))
    return sorted(lines, key=scan_key)


def walls_near(L: Lattice, x, rho: float) -> list[Vec]:
    """Walls whose hyperplane lies within hyperbolic distance rho of x.

    For a wall v, sinh(dist)^2 = pair(v,x)^2 / (quad(x)*|quad(v)|), so the
    pairing c = pair(v,x) is bounded and each value gives one exact coset
    enumeration.  Walls are oriented toward x (c > 0); walls through x
    (c = 0) are not reported.  The cutoff itself is evaluated in floating
    point; everything else is exact.
    """
    if not L.is_positive(x):
        raise NotPositive("x must be positive, got %r" % (x,))
    qx = L.quad(x)
    sh2 = math.sinh(rho) ** 2
    cells = _CosetSolver(L, (x,))
    out = []
    for d in sorted(L.wall_squares):
        cmax = math.isqrt(int(sh2 * qx * -d))
        for c in range(1, cmax + 1):
            out.extend(cells.solve((c,), d))
    return sorted(out, key=scan_key)
