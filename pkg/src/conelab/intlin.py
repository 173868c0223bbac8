"""Exact integer and rational linear algebra for constraint sublattices.

Two tools, both exact:

* LinearSystem: integer solutions of pairing constraints A v = rhs via a
  column echelon form with a unimodular transform.  Gives one particular
  solution per right-hand side (or proves there is none) and an integral
  basis of the homogeneous solution sublattice.

* shifted_definite_solutions: all integer points on the quadric
  w^T P w - 2 b.w = c0 with P positive definite, by branch and bound over
  an exact rational LDL factorisation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _col_addmul(ech, cols, dst, src, q):
    # column dst += q * column src, applied to both matrices
    for row in ech:
        row[dst] += q * row[src]
    cdst, csrc = cols[dst], cols[src]
    for i in range(len(cdst)):
        cdst[i] += q * csrc[i]


def _col_swap(ech, cols, a, b):
    for row in ech:
        row[a], row[b] = row[b], row[a]
    cols[a], cols[b] = cols[b], cols[a]


def _col_negate(ech, cols, j):
    for row in ech:
        row[j] = -row[j]
    cj = cols[j]
    for i in range(len(cj)):
        cj[i] = -cj[i]


def _column_echelon(rows):
    """Return (ech, cols, pivots) with rows . U = ech, U unimodular.

    cols holds the columns of U.  ech is lower trapezoidal: each processed
    row has a single positive pivot and zeros to its right; pivots lists the
    (row, col) pivot positions in order.
    """
    k = len(rows)
    n = len(rows[0])
    ech = [list(r) for r in rows]
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    pivots = []
    pc = 0
    for row in range(k):
        if pc >= n:
            break
        if all(ech[row][j] == 0 for j in range(pc, n)):
            continue
        while True:
            j0 = min(
                (j for j in range(pc, n) if ech[row][j] != 0),
                key=lambda j: abs(ech[row][j]),
            )
            if j0 != pc:
                _col_swap(ech, cols, pc, j0)
            if ech[row][pc] < 0:
                _col_negate(ech, cols, pc)
            a = ech[row][pc]
            done = True
            for j in range(pc + 1, n):
                if ech[row][j]:
                    q = ech[row][j] // a
                    if q:
                        _col_addmul(ech, cols, j, pc, -q)
                    if ech[row][j]:
                        done = False
            if done:
                break
        pivots.append((row, pc))
        pc += 1
    return ech, cols, pivots


class LinearSystem:
    """Integer solution structure of A v = rhs for a fixed integer matrix A."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("need a nonempty constraint matrix")
        self.k = len(rows)
        self.n = len(rows[0])
        self._ech, self._cols, self._pivots = _column_echelon(rows)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def kernel_basis(self) -> tuple[tuple[int, ...], ...]:
        """Integral basis of {v : A v = 0}."""
        return tuple(tuple(self._cols[j]) for j in range(self.rank, self.n))

    def particular(self, rhs: Sequence[int]):
        """One integer solution of A v = rhs, or None if none exists."""
        res = list(rhs)
        if len(res) != self.k:
            raise ValueError("rhs length mismatch")
        coeffs = []
        for (row, pc) in self._pivots:
            a = self._ech[row][pc]
            val = res[row]
            if val % a:
                return None
            y = val // a
            coeffs.append((pc, y))
            if y:
                for r in range(self.k):
                    res[r] -= y * self._ech[r][pc]
        if any(res):
            return None
        v = [0] * self.n
        for pc, y in coeffs:
            if y:
                col = self._cols[pc]
                for i in range(self.n):
                    v[i] += y * col[i]
        return tuple(v)


def _ldl(P):
    """Exact LDL of a positive definite symmetric matrix.

    Returns (D, L) with D[i] > 0 and L[i] the row of coefficients L[i][j]
    for j > i, such that the form equals sum_i D[i]*(u_i + sum_j L[i][j-i-1]*u_j)^2.
    """
    m = len(P)
    a = [[Fraction(P[i][j]) for j in range(m)] for i in range(m)]
    D = []
    L = []
    for i in range(m):
        d = a[i][i]
        if d <= 0:
            raise ValueError("matrix is not positive definite")
        D.append(d)
        L.append([a[i][j] / d for j in range(i + 1, m)])
        for r in range(i + 1, m):
            f = a[i][r] / d
            if f:
                for c in range(r, m):
                    a[r][c] -= f * a[i][c]
                    a[c][r] = a[r][c]
    return D, L


def solve_posdef(P, rhs):
    """Exact rational solution of P x = rhs for positive definite P."""
    m = len(P)
    a = [[Fraction(P[i][j]) for j in range(m)] + [Fraction(rhs[i])] for i in range(m)]
    for i in range(m):
        piv = next(r for r in range(i, m) if a[r][i] != 0)
        a[i], a[piv] = a[piv], a[i]
        d = a[i][i]
        for r in range(m):
            if r != i and a[r][i]:
                f = a[r][i] / d
                for c in range(i, m + 1):
                    a[r][c] -= f * a[i][c]
    return [a[i][m] / a[i][i] for i in range(m)]


class DefiniteFactor:
    """Cached LDL factor of a positive definite matrix, reusable per solve."""

    def __init__(self, P):
        self.m = len(P)
        self.D, self.L = _ldl(P) if self.m else ([], [])

    def solve(self, rhs):
        """Exact rational solution of P x = rhs via the cached factor."""
        m, D, L = self.m, self.D, self.L
        y = [Fraction(0)] * m
        for i in range(m):
            y[i] = Fraction(rhs[i]) - sum(
                L[j][i - j - 1] * y[j] for j in range(i) if L[j][i - j - 1]
            )
        x = [y[i] / D[i] for i in range(m)]
        for i in range(m - 1, -1, -1):
            x[i] -= sum(
                L[i][t] * x[j] for t, j in enumerate(range(i + 1, m)) if L[i][t]
            )
        return x


def shifted_definite_solutions(P, b, c0, factor=None) -> list[tuple[int, ...]]:
    """All integer w with w^T P w - 2 b.w = c0, P positive definite.

    Completing the square turns the equation into (w - mu)^T P (w - mu) = R
    with mu = P^{-1} b; the point set is finite and enumerated exactly by
    expanding each coordinate outward from the centre in an LDL recursion.
    A DefiniteFactor of P may be passed to amortize the factorization over
    many right-hand sides.
    """
    m = len(P)
    if m == 0:
        return [()] if c0 == 0 else []
    if factor is None:
        factor = DefiniteFactor(P)
    mu = factor.solve(b)
    R = Fraction(c0) + sum(Fraction(bi) * mi for bi, mi in zip(b, mu))
    if R < 0:
        return []
    D, L = factor.D, factor.L
    out = []
    w = [0] * m

    def rec(i, rem):
        Li = L[i]
        c = mu[i] - sum(
            Li[t] * (w[j] - mu[j]) for t, j in enumerate(range(i + 1, m))
        )
        if i == 0:
            # innermost level: D0*(z-c)^2 == rem, solved in closed form
            s = rem / D[0]
            rn, rd = math.isqrt(s.numerator), math.isqrt(s.denominator)
            if rn * rn != s.numerator or rd * rd != s.denominator:
                return
            r = Fraction(rn, rd)
            for z in {c + r, c - r}:
                if z.denominator == 1:
                    w[0] = int(z)
                    out.append(tuple(w))
            return
        lim = rem / D[i]
        z0 = math.floor(c)
        z = z0
        while (z - c) * (z - c) <= lim:
            w[i] = z
            rec(i - 1, rem - D[i] * (z - c) * (z - c))
            z -= 1
        z = z0 + 1
        while (z - c) * (z - c) <= lim:
            w[i] = z
            rec(i - 1, rem - D[i] * (z - c) * (z - c))
            z += 1

    rec(m - 1, R)
    return sorted(out)
