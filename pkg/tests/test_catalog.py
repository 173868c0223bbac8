import pytest

from conelab import catalog_names, get_lattice, inertia
from conelab.errors import UnknownLattice


def test_names_contain_the_documented_set():
    names = catalog_names()
    for needed in ("U", "U+<-2>", "<2>+<-2>", "diag(1,-1,-1,-1,-1)",
                   "diag(1,-3)", "K3"):
        assert needed in names


def test_unknown_name_lists_alternatives():
    with pytest.raises(UnknownLattice) as e:
        get_lattice("E8")
    assert e.value.name == "E8"
    assert "U" in e.value.available


def test_every_entry_validates_and_is_cached():
    for name in catalog_names():
        L = get_lattice(name)
        p, n, z = inertia(L.gram)
        assert (p, z) == (1, 0)
        assert n == L.rank - 1
        assert get_lattice(name) is L  # cached instance


def test_k3_shape():
    K3 = get_lattice("K3")
    assert K3.rank == 22
    assert inertia(K3.gram) == (1, 21, 0)
    assert K3.orientation == (1, 1) + (0,) * 20
    assert K3.quad((1, 1) + (0,) * 20) == 2
    # even lattice: every diagonal entry is even
    assert all(K3.gram[i][i] % 2 == 0 for i in range(22))


def test_signature_convenience():
    assert get_lattice("U").signature() == (1, 1, 0)
    assert get_lattice("diag(1,-3)").signature() == (1, 1, 0)
