import random

import pytest

from conelab import (
    get_lattice,
    nef_certificate,
    separating_walls,
    vectors_of_square,
    walls_near,
    walls_through,
)
from conelab.errors import (
    InfiniteWallSet,
    InvalidArgument,
    NotPositive,
    NotPositiveBase,
    XOutsideClosedCone,
)

from oracles import (
    box_separating,
    box_vectors_of_square,
    random_lattice,
    random_positive,
)

U = get_lattice("U")
U2 = get_lattice("U+<-2>")
H2 = get_lattice("<2>+<-2>")


def test_vectors_of_square_pinned():
    assert vectors_of_square(U, -2, 1) == [(-1, 1), (1, -1)]
    out = vectors_of_square(U2, -2, 1)
    assert (0, 0, 1) in out and (0, 0, -1) in out
    assert len(out) == 12
    assert out == sorted(out, key=lambda v: (max(map(abs, v)), v))


def test_vectors_of_square_argument_checks():
    with pytest.raises(InvalidArgument):
        vectors_of_square(U, 2, 3)
    with pytest.raises(InvalidArgument):
        vectors_of_square(U, -2, 0)


def test_vectors_of_square_matches_box_oracle():
    rng = random.Random(11)
    for _ in range(12):
        L = random_lattice(rng, rng.choice([2, 3]))
        d = rng.choice([-2, -4])
        bound = rng.randint(1, 3)
        assert set(vectors_of_square(L, d, bound)) == set(
            box_vectors_of_square(L, d, bound)
        )


def test_separating_walls_pinned_instance():
    walls = separating_walls(U2, (1, 1, -1), (3, 2, 1))
    assert walls == [(0, 0, -1), (0, 1, -1), (1, 0, -1)]
    for v in walls:
        assert U2.pair(v, (1, 1, -1)) < 0 < U2.pair(v, (3, 2, 1))


def test_separating_walls_scale_invariant_and_proportional_empty():
    assert separating_walls(U2, (2, 2, -2), (9, 6, 3)) == [
        (0, 0, -1), (0, 1, -1), (1, 0, -1),
    ]
    assert separating_walls(U, (2, 2), (1, 1)) == []


def test_separating_walls_errors():
    with pytest.raises(NotPositiveBase):
        separating_walls(U, (1, 1), (1, 0))  # isotropic base
    with pytest.raises(XOutsideClosedCone):
        separating_walls(U, (1, -1), (2, 1))  # negative square
    with pytest.raises(XOutsideClosedCone):
        separating_walls(U, (0, 0), (2, 1))  # zero vector
    with pytest.raises(XOutsideClosedCone):
        separating_walls(U, (-1, -1), (2, 1))  # wrong cone component
    with pytest.raises(InfiniteWallSet):
        separating_walls(U2, (1, 0, 0), (3, 2, 1), strict_on_x=False)


def test_separating_walls_rank2_isotropic_boundary_is_finite():
    # rank 2 keeps the through-x family finite, so the sweep is allowed
    assert separating_walls(U, (1, 0), (2, 1), strict_on_x=False) == []


def test_separating_walls_matches_box_oracle_randomized():
    rng = random.Random(23)
    for _ in range(15):
        L = random_lattice(rng, rng.choice([2, 3]))
        h = random_positive(rng, L)
        x = random_positive(rng, L)
        walls = separating_walls(L, x, h)
        bound = max((max(map(abs, v)) for v in walls), default=1) + 1
        assert set(walls) == set(box_separating(L, x, h, bound))


def test_nef_certificate_witness_and_truthiness():
    cert = nef_certificate(U2, (1, 1, -1), (3, 2, 1))
    assert not cert
    assert cert.witness == (0, 0, -1)  # first separating wall in scan order
    ok = nef_certificate(U2, (1, 0, 0), (3, 2, 1))
    assert ok and ok.nef and ok.witness is None


def test_walls_through_pinned():
    assert walls_through(U2, (3, 2, 1)) == [(1, 0, 1)]
    assert walls_through(U2, (4, 3, 1)) == []  # interior chamber point
    with pytest.raises(InvalidArgument):
        walls_through(U, (1, 0))  # isotropic


def test_walls_near_growing_radius():
    assert walls_near(H2, (2, 1), 0.3) == []
    assert walls_near(H2, (2, 1), 0.6) == [(0, -1)]
    with pytest.raises(NotPositive):
        walls_near(H2, (0, 1), 0.5)


def test_walls_near_is_monotone_in_radius():
    small = set(walls_near(U2, (4, 3, 1), 0.8))
    large = set(walls_near(U2, (4, 3, 1), 1.3))
    assert small <= large
    for v in large:
        assert U2.quad(v) == -2
        assert U2.pair(v, (4, 3, 1)) > 0  # oriented toward the base
