"""Rational isotropic vectors: existence search and line enumeration.

The scan runs shell by shell in the canonical order, so the first hit is
well defined.  An empty result only certifies absence within the bound;
indefinite forms in rank >= 5 always represent zero, so there a miss at a
generous bound signals a bug rather than a genuinely anisotropic lattice.
"""

from __future__ import annotations

from . import kernels
from .errors import InvalidArgument
from .lattice import Lattice, Vec, primitivize, scan_key


def _check_bound(bound) -> None:
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise InvalidArgument("bound must be a positive integer, got %r" % (bound,))


def find_isotropic(L: Lattice, bound: int) -> Vec | None:
    """First primitive isotropic vector on the positive side, or None.

    First in canonical order: ascending sup-norm shell, then lexicographic.
    """
    _check_bound(bound)
    for r in range(1, bound + 1):
        for v in kernels.isotropic_in_shell(L.gram, r):
            if L.pair(v, L.orientation) > 0:
                return v
    return None


def enumerate_isotropic_lines(L: Lattice, bound: int) -> list[Vec]:
    """All isotropic lines with a representative of sup-norm <= bound.

    One sign-normalized primitive representative per line, in canonical
    order.  Monotone in the bound: a larger box only appends lines.
    """
    _check_bound(bound)
    lines = []
    seen = set()
    for r in range(1, bound + 1):
        for v in kernels.isotropic_in_shell(L.gram, r):
            w = primitivize(v)
            if w not in seen:
                seen.add(w)
                lines.append(w)
    return sorted(lines, key=scan_key)
