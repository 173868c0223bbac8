"""Hyperbolic geometry of the positive cone: distances, walks, chambers.

The projectivized positive cone is the hyperboloid model; distances come
from cosh(d) = pair(x,y)/sqrt(quad(x)*quad(y)).  This module is the only
place (besides rendering) where floats appear, and they are confined to
distance values and radius cutoffs; every incidence decision is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import _separating, separating_walls, walls_near, walls_through
from .errors import (
    InvalidArgument,
    NonIntegralReflection,
    NotAmpleBase,
    NotIsotropic,
    NotPositive,
    OnWall,
)
from .lattice import Lattice, Vec, primitivize, scan_key


def hyperbolic_distance(L: Lattice, x, y) -> float:
    """Distance between the rays of two positive vectors.

    The argument pair(x,y)^2/(quad(x)*quad(y)) is computed exactly; only
    the final acosh is floating point.
    """
    if not L.is_positive(x):
        raise NotPositive("x must be positive, got %r" % (x,))
    if not L.is_positive(y):
        raise NotPositive("y must be positive, got %r" % (y,))
    p = L.pair(x, y)
    f = Fraction(p * p, L.quad(x) * L.quad(y))
    if f <= 1:
        # reversed Cauchy-Schwarz forces f >= 1, equality iff proportional
        return 0.0
    return math.acosh(math.sqrt(float(f)))


@dataclass(frozen=True)
class WalkStep:
    wall: Vec
    image: Vec
    pairing: int


@dataclass(frozen=True)
class WalkTrace:
    """Record of a reflection walk from an isotropic class toward a base."""

    start: Vec
    steps: tuple[WalkStep, ...]
    final: Vec
    base: Vec
    start_pairing: int

    def pairings(self) -> tuple[int, ...]:
        return (self.start_pairing,) + tuple(s.pairing for s in self.steps)

    def to_json_dict(self) -> dict:
        return {
            "start": list(self.start),
            "steps": [
                {"wall": list(s.wall), "image": list(s.image), "pairing": s.pairing}
                for s in self.steps
            ],
            "final": list(self.final),
        }

    def verify(self, L: Lattice) -> None:
        """Replay every step and check the descent invariants."""
        cur = self.start
        prev = self.start_pairing
        assert prev == L.pair(self.start, self.base)
        assert prev > 0
        for s in self.steps:
            assert L.reflect(s.wall, cur) == s.image
            assert s.pairing == L.pair(s.image, self.base)
            assert 0 < s.pairing < prev
            prev = s.pairing
            cur = s.image
        assert cur == self.final
        assert L.quad(self.final) == L.quad(self.start)


def _check_isotropic_ray(L: Lattice, x) -> None:
    qx = L.quad(x)
    if not any(x) or qx != 0 or L.pair(x, L.orientation) <= 0:
        raise NotIsotropic(
            "need a nonzero isotropic vector on the positive side, got %r" % (x,)
        )


def nef_walk(L: Lattice, x, h, greedy: bool = True) -> WalkTrace:
    """Reflect the isotropic class x into the closure of the chamber of h.

    Each step reflects in a separating wall, which strictly decreases the
    positive integer pair(x', h), so the walk terminates.  With greedy=True
    the wall minimizing the resulting pairing is chosen (ties broken in
    canonical wall order); otherwise the first wall in canonical order.
    A base h on a wall is tolerated: walls through h never separate, so the
    descent is unaffected.  Walls whose reflection is not integral on the
    current vector are skipped; if none remains, the walk aborts with the
    partial trace attached.
    """
    _check_isotropic_ray(L, x)
    if not L.is_positive(h):
        raise NotAmpleBase("base h must be positive, got %r" % (h,))
    x = tuple(x)
    h = tuple(h)
    start_pairing = L.pair(x, h)
    assert start_pairing > 0
    cur = x
    prev = start_pairing
    steps: list[WalkStep] = []
    while True:
        seps = separating_walls(L, cur, h, strict_on_x=True)
        if not seps:
            break
        best = None
        for w in seps:
            if (2 * L.pair(cur, w)) % L.quad(w):
                continue
            img = L.reflect(w, cur)
            pr = L.pair(img, h)
            if greedy:
                key = (pr, scan_key(w))
                if best is None or key < best[0]:
                    best = (key, w, img, pr)
            else:
                best = (None, w, img, pr)
                break
        if best is None:
            raise NonIntegralReflection(
                "no separating wall off %r reflects integrally" % (cur,),
                partial_trace=WalkTrace(x, tuple(steps), cur, h, start_pairing),
            )
        _, w, img, pr = best
        assert 0 < pr < prev
        steps.append(WalkStep(wall=w, image=img, pairing=pr))
        cur = img
        prev = pr
    return WalkTrace(
        start=x, steps=tuple(steps), final=cur, base=h, start_pairing=start_pairing
    )


@dataclass(frozen=True)
class Chamber:
    """A chamber named by its separation signature relative to the base.

    signature is the set of walls (oriented toward the base) strictly
    separating the chamber from the base chamber; the base chamber has the
    empty signature.
    """

    signature: frozenset[Vec]
    representative: Vec

    def sorted_signature(self) -> list[Vec]:
        return sorted(self.signature, key=scan_key)


def _require_ample(L: Lattice, h0) -> None:
    if not L.is_positive(h0):
        raise NotAmpleBase("base must be positive, got %r" % (h0,))
    on = walls_through(L, h0)
    if on:
        raise NotAmpleBase("base %r lies on wall %r" % (h0, on[0]))


def chamber_of(L: Lattice, x, h0) -> Chamber:
    """Chamber of a positive interior point x, relative to the base h0."""
    _require_ample(L, h0)
    if not L.is_positive(x):
        raise NotPositive("x must be positive, got %r" % (x,))
    strict, boundary = _separating(L, x, h0, include_boundary=True)
    if boundary:
        # report the wall as a sign-normalized line, not oriented toward h0
        raise OnWall(min((primitivize(w) for w in boundary), key=scan_key))
    return Chamber(signature=frozenset(strict), representative=tuple(x))


@dataclass(frozen=True)
class ChamberGraph:
    """Chambers within a hyperbolic radius of the base, with adjacencies.

    Two chambers are adjacent iff their signatures differ in exactly one
    wall.  orbit_of[i] labels the orbit of node i under the group generated
    by reflections in all walls incident to the visited chambers; the count
    is an upper bound on the true number of orbits, refined as the radius
    grows.
    """

    nodes: tuple[Chamber, ...]
    edges: tuple[tuple[int, int, Vec], ...]
    orbit_of: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(set(self.orbit_of))

    def to_json_dict(self) -> dict:
        return {
            "nodes": [
                {
                    "signature": [list(w) for w in ch.sorted_signature()],
                    "representative": list(ch.representative),
                    "orbit": self.orbit_of[i],
                }
                for i, ch in enumerate(self.nodes)
            ],
            "edges": [[i, j, list(w)] for (i, j, w) in self.edges],
        }


def _reflect_ray(L: Lattice, v, y) -> Vec:
    # primitive representative of the ray of the reflection of y in v;
    # scaling by |quad(v)| keeps everything integral for any wall square
    d = L.quad(v)
    c = L.pair(y, v)
    return primitivize(tuple(-d * yi + 2 * c * vi for yi, vi in zip(y, v)))


def _sig_sort_key(sig: frozenset):
    return (len(sig), tuple(sorted(sig)))


def chamber_graph(L: Lattice, h0, radius: float) -> ChamberGraph:
    """Explore chambers whose representative lies within the given radius.

    Any two chambers meeting the ball around h0 are separated only by walls
    that pass within the ball (hyperbolic balls are geodesically convex),
    so the wall set walls_near(h0, radius) is computed once and exploration
    reflects every discovered representative across each of those walls.
    Image signatures are obtained by exact set algebra: for a reflection s_v,
    sig(s_v x) = phi_v(sig(x)) xor sep(s_v h0, h0), where phi_v reflects each
    wall and restores the pair(. , h0) > 0 orientation.  Every node signature
    is re-derived from its representative by direct enumeration at the end
    and any mismatch raises, so the algebra never weakens exactness.
    A chamber is admitted once the search constructs a representative of it
    inside the ball, and every reported representative lies inside the
    ball; a chamber meeting the ball only in a thin sliver may therefore
    show up only at a slightly larger radius.  Signatures are exact; only
    the radius cutoffs use floats.
    """
    if not (isinstance(radius, (int, float)) and radius > 0):
        raise InvalidArgument("radius must be positive, got %r" % (radius,))
    _require_ample(L, h0)
    h0 = tuple(h0)
    base_rep = primitivize(h0)
    base_sig: frozenset = frozenset()
    best: dict[frozenset, Vec] = {base_sig: base_rep}
    expanded: set[Vec] = set()
    ball_walls = walls_near(L, h0, radius + 1e-9)

    def canon(w: Vec) -> Vec:
        p = L.pair(w, h0)
        assert p != 0, "wall through the interior base"
        return w if p > 0 else tuple(-wi for wi in w)

    _phi: dict[Vec, dict[Vec, Vec]] = {}
    _sv: dict[Vec, frozenset] = {}

    def image_sig(sig: frozenset, v: Vec) -> frozenset:
        line = primitivize(v)
        sv = _sv.get(line)
        if sv is None:
            strict, _ = _separating(
                L, _reflect_ray(L, line, h0), h0, include_boundary=False
            )
            sv = frozenset(strict)
            _sv[line] = sv
            _phi[line] = {}
        phi = _phi[line]
        mapped = set()
        for w in sig:
            u = phi.get(w)
            if u is None:
                u = canon(_reflect_ray(L, line, w))
                phi[w] = u
            mapped.add(u)
        return frozenset(mapped) ^ sv

    def consider(sig: frozenset, rep: Vec) -> None:
        if hyperbolic_distance(L, h0, rep) > radius + 1e-9:
            return  # representative outside the ball: chamber not admitted via it
        old = best.get(sig)
        if old is None or scan_key(rep) < scan_key(old):
            best[sig] = rep

    for _ in range(64):
        stale = [sig for sig in best if best[sig] not in expanded]
        if not stale:
            break
        for sig in sorted(stale, key=_sig_sort_key):
            rep = best[sig]
            expanded.add(rep)
            for v in ball_walls:
                consider(image_sig(sig, v), _reflect_ray(L, v, rep))
    else:
        raise RuntimeError("chamber exploration did not stabilise")

    # exact re-derivation of every signature from its representative
    for sig, rep in best.items():
        strict, boundary = _separating(L, rep, h0, include_boundary=True)
        if boundary or frozenset(strict) != sig:
            raise RuntimeError(
                "chamber signature mismatch at representative %r" % (rep,)
            )

    sigs = sorted(best, key=_sig_sort_key)
    index = {sig: i for i, sig in enumerate(sigs)}
    nodes = tuple(Chamber(signature=sig, representative=best[sig]) for sig in sigs)

    edges = []
    for i in range(len(sigs)):
        for j in range(i + 1, len(sigs)):
            diff = sigs[i] ^ sigs[j]
            if len(diff) == 1:
                (w,) = diff
                edges.append((i, j, primitivize(w)))
    edges.sort(key=lambda e: (e[0], e[1]))

    # orbit fusion under reflections in every incident wall
    gens = sorted({primitivize(w) for sig in sigs for w in sig}, key=scan_key)
    parent = list(range(len(sigs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, sig in enumerate(sigs):
        for g in gens:
            j = index.get(image_sig(sig, g))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    roots = [find(i) for i in range(len(sigs))]
    relabel: dict[int, int] = {}
    orbit_of = []
    for r in roots:
        if r not in relabel:
            relabel[r] = len(relabel)
        orbit_of.append(relabel[r])

    return ChamberGraph(nodes=nodes, edges=tuple(edges), orbit_of=tuple(orbit_of))
