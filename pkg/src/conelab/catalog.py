"""Built-in lattices.

Every entry goes through load_lattice, so the signature (1, n) constraint
and orientation rules hold for catalog lattices exactly as for user files.
"""

from __future__ import annotations

from .errors import UnknownLattice
from .lattice import Lattice, load_lattice

_U = ((0, 1), (1, 0))

# negative definite E8: diagonal -2, +1 on the diagram edges
# (chain 1-3-4-5-6-7-8 with 2 attached to 4; zero-based below)
_E8_EDGES = ((0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7))


def _e8_minus():
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for a, b in _E8_EDGES:
        g[a][b] = g[b][a] = 1
    return tuple(tuple(row) for row in g)


def _diag(*entries):
    n = len(entries)
    return tuple(
        tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)
    )


def _block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    g = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        m = len(b)
        for i in range(m):
            for j in range(m):
                g[off + i][off + j] = b[i][j]
        off += m
    return tuple(tuple(row) for row in g)


def _records():
    k3 = _block_diag(_U, _e8_minus(), _e8_minus(), _diag(-2, -2, -2, -2))
    return {
        "U": {"name": "U", "gram": _U},
        "U+<-2>": {"name": "U+<-2>", "gram": _block_diag(_U, ((-2,),))},
        "<2>+<-2>": {"name": "<2>+<-2>", "gram": _diag(2, -2)},
        "diag(1,-1,-1,-1,-1)": {
            "name": "diag(1,-1,-1,-1,-1)",
            "gram": _diag(1, -1, -1, -1, -1),
        },
        "diag(1,-3)": {"name": "diag(1,-3)", "gram": _diag(1, -3)},
        # rank 22, signature (1, 21), even; a hyperbolic plane keeps an
        # isotropic class and the orientation is fixed explicitly because
        # no basis vector has positive square
        "K3": {
            "name": "K3",
            "gram": k3,
            "orientation": (1, 1) + (0,) * 20,
        },
    }


_RECORDS = _records()
_CACHE: dict[str, Lattice] = {}


def catalog_names() -> list[str]:
    return list(_RECORDS)


def get_lattice(name: str) -> Lattice:
    if name not in _RECORDS:
        raise UnknownLattice(name, catalog_names())
    if name not in _CACHE:
        rec = dict(_RECORDS[name])
        rec["gram"] = [list(r) for r in rec["gram"]]
        if "orientation" in rec:
            rec["orientation"] = list(rec["orientation"])
        _CACHE[name] = load_lattice(rec)
    return _CACHE[name]
