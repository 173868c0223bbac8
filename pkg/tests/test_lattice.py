import random

import pytest

from conelab.errors import (
    DimensionMismatch,
    EmptyWallSquares,
    InvalidArgument,
    NonIntegralReflection,
    NonNegativeMirror,
    NonSymmetricGram,
    WrongSignature,
    ZeroVector,
)
from conelab.lattice import (
    Lattice,
    inertia,
    load_lattice,
    primitivize,
    read_lattice_file,
    scan_key,
    sup_norm,
)

U = load_lattice({"name": "U", "gram": [[0, 1], [1, 0]]})
U2 = load_lattice(
    {"name": "U+<-2>", "gram": [[0, 1, 0], [1, 0, 0], [0, 0, -2]]}
)


def test_primitivize_normalization():
    assert primitivize((2, 4, -6)) == (1, 2, -3)
    assert primitivize((0, -3, 6)) == (0, 1, -2)  # leading sign flipped
    assert primitivize((-5,)) == (1,)
    with pytest.raises(ZeroVector):
        primitivize((0, 0))


def test_scan_key_orders_by_shell_then_lex():
    vecs = [(1, 0), (0, -1), (-2, 1), (1, 1)]
    assert sorted(vecs, key=scan_key) == [(0, -1), (1, 0), (1, 1), (-2, 1)]
    assert sup_norm((-2, 1)) == 2


def test_inertia_diagonal_and_hyperbolic():
    assert inertia([[1, 0], [0, -1]]) == (1, 1, 0)
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)  # zero diagonal pivots
    assert inertia([[2, 0, 0], [0, 0, 0], [0, 0, -3]]) == (1, 1, 1)
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)


def test_gram_validation():
    with pytest.raises(NonSymmetricGram):
        load_lattice({"name": "x", "gram": [[0, 1], [0, 0]]})
    with pytest.raises(WrongSignature) as e:
        load_lattice({"name": "x", "gram": [[1, 0], [0, 1]]})
    assert e.value.inertia == (2, 0, 0)
    with pytest.raises(WrongSignature):
        load_lattice({"name": "x", "gram": [[2, 0], [0, 0]]})  # degenerate
    with pytest.raises(InvalidArgument):
        load_lattice({"name": "x", "gram": [[1, 0], [0, -1], [0, 0]]})


def test_wall_squares_validation():
    with pytest.raises(EmptyWallSquares):
        load_lattice({"name": "x", "gram": [[0, 1], [1, 0]], "wall_squares": []})
    with pytest.raises(InvalidArgument):
        load_lattice({"name": "x", "gram": [[0, 1], [1, 0]], "wall_squares": [2]})
    L = load_lattice(
        {"name": "x", "gram": [[0, 1], [1, 0]], "wall_squares": [-4, -2, -2]}
    )
    assert sorted(L.wall_squares) == [-4, -2]


def test_orientation_search():
    assert U.orientation == (1, 1)
    assert U2.orientation == (1, 1, 0)
    D = load_lattice({"name": "d", "gram": [[3, 0], [0, -5]]})
    assert D.orientation == (1, 0)  # first basis vector already positive
    explicit = load_lattice(
        {"name": "e", "gram": [[0, 1], [1, 0]], "orientation": [2, 3]}
    )
    assert explicit.orientation == (2, 3)
    with pytest.raises(InvalidArgument):
        load_lattice(
            {"name": "e", "gram": [[0, 1], [1, 0]], "orientation": [1, -1]}
        )


def test_pair_quad_and_dimension_checks():
    assert U2.pair((1, 1, -1), (3, 2, 1)) == 7
    assert U2.quad((1, 1, -1)) == 0
    assert U2.quad((3, 2, 1)) == 10
    with pytest.raises(DimensionMismatch):
        U2.pair((1, 0), (0, 1, 0))
    with pytest.raises(DimensionMismatch):
        U2.quad((1, 0))


def test_is_positive_needs_cone_side():
    assert U.is_positive((1, 1))
    assert not U.is_positive((-1, -1))  # positive square, wrong component
    assert not U.is_positive((1, -1))
    assert not U.is_positive((1, 0))  # isotropic is not positive


def test_reflection_algebra_examples():
    # sigma_v(x) = x - (2 pair(x,v)/quad(v)) v
    assert U2.reflect((0, 0, 1), (1, 1, -1)) == (1, 1, 1)
    assert U2.reflect((0, 0, 1), (1, 1, 1)) == (1, 1, -1)
    with pytest.raises(NonNegativeMirror):
        U2.reflect((1, 1, 0), (0, 0, 1))
    # mirror (1,2) in diag(1,-3) has square -11; 2*pair((1,0),(1,2)) = 2
    with pytest.raises(NonIntegralReflection):
        load_lattice({"name": "d", "gram": [[1, 0], [0, -3]]}).reflect(
            (1, 2), (1, 0)
        )


def test_reflection_randomized_involution():
    rng = random.Random(1)
    for _ in range(300):
        x = tuple(rng.randint(-9, 9) for _ in range(3))
        v = rng.choice([(0, 0, 1), (1, -1, 0), (0, 1, 1)])
        assert U2.quad(v) == -2  # (-2)-mirrors always reflect integrally
        y = U2.reflect(v, x)
        assert U2.quad(y) == U2.quad(x)
        assert U2.reflect(v, y) == tuple(x)
        assert U2.pair(y, v) == -U2.pair(x, v)


def test_json_roundtrip(tmp_path):
    rec = U2.to_json_dict()
    again = load_lattice(rec)
    assert again == U2
    p = tmp_path / "lat.json"
    p.write_text(__import__("json").dumps(rec))
    assert read_lattice_file(str(p)) == U2
