"""Cusps: orbits of rational isotropic rays under the wall reflections.

Rational isotropic rays are the boundary points of the hyperbolic model
that the lattice can see.  Two rays are identified when a word in the
(globally integral) wall reflections maps one to the other; within fixed
search bounds the partition found here can only be coarser than the truth,
so every report is flagged upper_bound_only.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .enumeration import vectors_of_square
from .errors import InvalidArgument, NotIsotropic
from .geometry import WalkTrace, nef_walk
from .isotropic import enumerate_isotropic_lines
from .lattice import Lattice, Vec, primitivize, scan_key


@dataclass(frozen=True)
class CuspOrbit:
    """One orbit: members found, with reflection words from the representative.

    words[i] is the sequence of walls whose reflections, applied left to
    right to the representative (normalizing after each step), reach
    members[i]; the representative itself carries the empty word.
    """

    representative: Vec
    members: tuple[Vec, ...]
    words: tuple[tuple[Vec, ...], ...]


def _integral_generators(L: Lattice, wall_bound: int) -> list[Vec]:
    """Wall lines whose reflection is integral on the whole lattice."""
    gens = []
    seen = set()
    for d in sorted(L.wall_squares):
        qd = d
        for w in vectors_of_square(L, d, wall_bound):
            wl = primitivize(w)
            if wl in seen:
                continue
            seen.add(wl)
            # integral on every basis vector: quad(w) | 2*pair(e_i, w)
            row = [
                2 * sum(L.gram[i][j] * wl[j] for j in range(L.rank))
                for i in range(L.rank)
            ]
            if all(e % qd == 0 for e in row):
                gens.append(wl)
    return sorted(set(gens), key=scan_key)


def cusp_orbits(
    L: Lattice, iso_bound: int, wall_bound: int, bfs_depth: int
) -> list[CuspOrbit]:
    """Partition the isotropic lines of sup-norm <= iso_bound into orbits.

    Generators are the integral wall reflections of sup-norm <= wall_bound;
    the closure runs breadth first, truncated at bfs_depth applications.
    Images falling outside the search box still count as members.  The
    partition is an upper bound: larger bounds can only merge classes.
    """
    for nm, val, lo in (
        ("iso_bound", iso_bound, 1),
        ("wall_bound", wall_bound, 1),
        ("bfs_depth", bfs_depth, 0),
    ):
        if isinstance(val, bool) or not isinstance(val, int) or val < lo:
            raise InvalidArgument("%s must be an integer >= %d, got %r" % (nm, lo, val))
    seeds = enumerate_isotropic_lines(L, iso_bound)
    gens = _integral_generators(L, wall_bound)
    known = set(seeds)
    frontier = list(seeds)
    edges = []
    for _ in range(bfs_depth):
        nxt = []
        for u in frontier:
            for g in gens:
                img = primitivize(L.reflect(g, u))
                edges.append((u, g, img))
                if img not in known:
                    known.add(img)
                    nxt.append(img)
        frontier = nxt
        if not frontier:
            break

    adj = defaultdict(list)
    for u, g, w in edges:
        adj[u].append((g, w))
        adj[w].append((g, u))

    unvisited = set(known)
    components = []
    for seed in sorted(known, key=scan_key):
        if seed not in unvisited:
            continue
        comp = {seed}
        unvisited.discard(seed)
        stack = [seed]
        while stack:
            u = stack.pop()
            for _, w in adj[u]:
                if w in unvisited:
                    unvisited.discard(w)
                    comp.add(w)
                    stack.append(w)
        components.append(comp)

    orbits = []
    for comp in components:
        members = sorted(comp, key=scan_key)
        rep = members[0]
        # breadth-first words from the representative over the found edges;
        # reflections are involutions on lines, so edges work both ways
        word = {rep: ()}
        queue = [rep]
        while queue:
            u = queue.pop(0)
            for g, w in sorted(adj[u], key=lambda e: (scan_key(e[1]), scan_key(e[0]))):
                if w not in word:
                    word[w] = word[u] + (g,)
                    queue.append(w)
        orbits.append(
            CuspOrbit(
                representative=rep,
                members=tuple(members),
                words=tuple(word[m] for m in members),
            )
        )
    orbits.sort(key=lambda o: scan_key(o.representative))
    return orbits


def orbits_json_dict(
    L: Lattice, orbits, iso_bound: int, wall_bound: int, bfs_depth: int
) -> dict:
    return {
        "lattice": L.name,
        "bounds": {
            "iso_bound": iso_bound,
            "wall_bound": wall_bound,
            "bfs_depth": bfs_depth,
        },
        "orbits": [
            {
                "representative": list(o.representative),
                "members": [list(m) for m in o.members],
                "words": [[list(w) for w in word] for word in o.words],
            }
            for o in orbits
        ],
        "upper_bound_only": True,
    }


def canonical_cusp(L: Lattice, v, h) -> tuple[Vec, WalkTrace]:
    """Walk the isotropic class v to its nef representative for the base h.

    Returns (final class, trace); the final class admits no wall strictly
    separating it from h.
    """
    if not any(v) or L.quad(v) != 0 or L.pair(v, L.orientation) <= 0:
        raise NotIsotropic(
            "need a nonzero isotropic vector on the positive side, got %r" % (v,)
        )
    w = primitivize(v)
    trace = nef_walk(L, w, h)
    return trace.final, trace
