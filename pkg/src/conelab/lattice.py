"""Integral quadratic lattices of signature (1, n), exact arithmetic only.

Vectors are plain integer tuples in the fixed lattice basis.  Form values
stay in unbounded Python integers and the inertia computation runs over
exact rationals, so every sign decision made here is exact.

The canonical vector order used throughout the package is: ascending
sup-norm shell first, then lexicographic order on the coordinate tuple.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionMismatch,
    EmptyWallSquares,
    InvalidArgument,
    NoOrientationFound,
    NonIntegralReflection,
    NonNegativeMirror,
    NonSymmetricGram,
    WrongSignature,
    ZeroVector,
)

Vec = tuple[int, ...]
Gram = tuple[tuple[int, ...], ...]

# Orientation search scans sup-norm shells 1..this before giving up.
ORIENTATION_SEARCH_RADIUS = 10


def sup_norm(v: Sequence[int]) -> int:
    return max((abs(c) for c in v), default=0)


def scan_key(v: Sequence[int]):
    """Sort key realising the canonical order: (sup-norm, lex tuple)."""
    vt = tuple(v)
    return (sup_norm(vt), vt)


def gcd_all(v: Sequence[int]) -> int:
    g = 0
    for c in v:
        g = math.gcd(g, c)
    return g


def primitivize(v: Sequence[int]) -> Vec:
    """Divide out the content and make the first nonzero coordinate positive."""
    vt = tuple(v)
    g = gcd_all(vt)
    if g == 0:
        raise ZeroVector("cannot primitivize the zero vector")
    w = tuple(c // g for c in vt)
    for c in w:
        if c > 0:
            return w
        if c < 0:
            return tuple(-x for x in w)
    raise AssertionError("unreachable")


def iter_shell(rank: int, r: int):
    """Vectors of sup-norm exactly r in lexicographic order."""
    for v in itertools.product(range(-r, r + 1), repeat=rank):
        if sup_norm(v) == r:
            yield v


def _pair_raw(gram: Sequence[Sequence[int]], x: Sequence[int], y: Sequence[int]) -> int:
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = gram[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
    return total


def inertia(gram: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Exact Sylvester inertia (pos, neg, zero) of a symmetric matrix.

    Rational symmetric congruence reduction: row and column operations are
    always applied as a pair, so the signature is preserved at every step.
    """
    n = len(gram)
    a = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    # remaining row is zero: one null direction
                    zero += 1
                    continue
                # a[k][k] = a[j][j] = 0, a[k][j] != 0: adding row+col j
                # to row+col k creates the pivot 2*a[k][j]
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        fs = [(i, a[i][k] / d) for i in range(k + 1, n) if a[i][k]]
        for i, f in fs:
            for c in range(k, n):
                a[i][c] -= f * a[k][c]
        for i, f in fs:
            for r in range(k, n):
                a[r][i] -= f * a[r][k]
    return (pos, neg, zero)


@dataclass(frozen=True)
class Lattice:
    """An integral lattice of signature (1, n) with a chosen positive cone.

    orientation is a fixed vector of positive square; the positive cone is
    the component pairing positively with it.  wall_squares lists the
    negative squares whose vectors count as walls.
    """

    name: str
    gram: Gram
    orientation: Vec
    wall_squares: frozenset[int]

    def __post_init__(self):
        gram = tuple(tuple(int(e) for e in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "orientation", tuple(int(c) for c in self.orientation))
        object.__setattr__(self, "wall_squares", frozenset(int(s) for s in self.wall_squares))
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise InvalidArgument("gram must be a nonempty square matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise NonSymmetricGram(
                        "gram[%d][%d] != gram[%d][%d]" % (i, j, j, i)
                    )
        inert = inertia(gram)
        if inert != (1, n - 1, 0):
            raise WrongSignature(inert)
        if not self.wall_squares:
            raise EmptyWallSquares("wall_squares must be nonempty")
        if any(s >= 0 for s in self.wall_squares):
            raise InvalidArgument("wall squares must be negative")
        if len(self.orientation) != n:
            raise DimensionMismatch(
                "orientation has length %d, rank is %d" % (len(self.orientation), n)
            )
        if _pair_raw(gram, self.orientation, self.orientation) <= 0:
            raise InvalidArgument("orientation must have positive square")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def _check_vec(self, v: Sequence[int]) -> None:
        if len(v) != self.rank:
            raise DimensionMismatch(
                "vector has length %d, rank is %d" % (len(v), self.rank)
            )

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        self._check_vec(x)
        self._check_vec(y)
        return _pair_raw(self.gram, x, y)

    def quad(self, x: Sequence[int]) -> int:
        self._check_vec(x)
        return _pair_raw(self.gram, x, x)

    def signature(self) -> tuple[int, int, int]:
        return inertia(self.gram)

    def is_positive(self, x: Sequence[int]) -> bool:
        """True iff x has positive square and lies in the chosen cone."""
        return self.quad(x) > 0 and self.pair(x, self.orientation) > 0

    def reflect(self, v: Sequence[int], x: Sequence[int]) -> Vec:
        """Reflection of x in the hyperplane orthogonal to v.

        Exact integer formula x - (2*pair(x,v)/quad(v))*v; raises unless the
        quotient is an integer.
        """
        qv = self.quad(v)
        self._check_vec(x)
        if qv >= 0:
            raise NonNegativeMirror("quad(v) = %d, need a negative square" % qv)
        num = 2 * self.pair(x, v)
        if num % qv:
            raise NonIntegralReflection(
                "2*pair(x,v) = %d not divisible by quad(v) = %d" % (num, qv)
            )
        f = num // qv
        return tuple(xi - f * vi for xi, vi in zip(x, v))

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "gram": [list(row) for row in self.gram],
            "wall_squares": sorted(self.wall_squares),
            "orientation": list(self.orientation),
        }


def _find_orientation(gram: Gram) -> Vec:
    n = len(gram)
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if _pair_raw(gram, e, e) > 0:
            return e
    for r in range(1, ORIENTATION_SEARCH_RADIUS + 1):
        for v in iter_shell(n, r):
            if _pair_raw(gram, v, v) > 0:
                return primitivize(v)
    raise NoOrientationFound(
        "no vector of positive square with sup-norm <= %d" % ORIENTATION_SEARCH_RADIUS
    )


def _as_int_matrix(rows, what: str) -> Gram:
    if not isinstance(rows, (list, tuple)) or not rows:
        raise InvalidArgument("%s must be a nonempty matrix" % what)
    out = []
    for row in rows:
        if not isinstance(row, (list, tuple)):
            raise InvalidArgument("%s rows must be lists" % what)
        for e in row:
            if isinstance(e, bool) or not isinstance(e, int):
                raise InvalidArgument("%s entries must be integers, got %r" % (what, e))
        out.append(tuple(row))
    if any(len(row) != len(out) for row in out):
        raise InvalidArgument("%s must be square" % what)
    return tuple(out)


def load_lattice(record: Mapping) -> Lattice:
    """Build a Lattice from a mapping {name, gram, wall_squares, orientation}.

    wall_squares defaults to {-2}; orientation, when absent, is the first
    standard basis vector of positive square, then the first positive vector
    in canonical scan order over sup-norm shells 1..10 (primitivized, first
    nonzero coordinate positive).
    """
    if not isinstance(record, Mapping):
        raise InvalidArgument("lattice record must be a mapping")
    name = record.get("name")
    if not isinstance(name, str) or not name:
        raise InvalidArgument("lattice record needs a nonempty string name")
    gram = _as_int_matrix(record.get("gram"), "gram")
    n = len(gram)
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] != gram[j][i]:
                raise NonSymmetricGram("gram[%d][%d] != gram[%d][%d]" % (i, j, j, i))
    inert = inertia(gram)
    if inert != (1, n - 1, 0):
        raise WrongSignature(inert)
    squares = record.get("wall_squares", [-2])
    if not isinstance(squares, (list, tuple, set, frozenset)):
        raise InvalidArgument("wall_squares must be a list of integers")
    squares = list(squares)
    if not squares:
        raise EmptyWallSquares("wall_squares must be nonempty")
    for s in squares:
        if isinstance(s, bool) or not isinstance(s, int):
            raise InvalidArgument("wall squares must be integers, got %r" % (s,))
        if s >= 0:
            raise InvalidArgument("wall squares must be negative, got %d" % s)
    orientation = record.get("orientation")
    if orientation is None:
        orientation = _find_orientation(gram)
    else:
        if not isinstance(orientation, (list, tuple)):
            raise InvalidArgument("orientation must be a list of integers")
        for c in orientation:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InvalidArgument("orientation entries must be integers")
    return Lattice(
        name=name,
        gram=gram,
        orientation=tuple(orientation),
        wall_squares=frozenset(squares),
    )


def read_lattice_file(path) -> Lattice:
    """Load a lattice description from a JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            record = json.load(fh)
    except OSError as exc:
        raise InvalidArgument("cannot read lattice file %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise InvalidArgument("invalid JSON in %s: %s" % (path, exc)) from exc
    if not isinstance(record, dict):
        raise InvalidArgument("lattice file must contain a JSON object")
    return load_lattice(record)
