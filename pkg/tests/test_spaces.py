import pytest

from cupsq.f2linear import betti_numbers, rank
from cupsq.simplicial import SimplicialComplex
from cupsq.spaces import (
    SPACES,
    FixtureError,
    NamedSpace,
    cp2,
    get_space,
    is_closed_pseudomanifold,
    iterated_suspension,
    rp2,
    s2_wedge_s4,
    sphere,
    sphere_space,
    standard_simplex,
    wedge_space,
)
from cupsq.steenrod import sq_matrix


def test_standard_simplex():
    assert len(standard_simplex(2)) == 7
    assert betti_numbers(standard_simplex(3)) == [1, 0, 0, 0]


@pytest.mark.parametrize("n, betti", [(0, [2]), (1, [1, 1]), (2, [1, 0, 1]), (3, [1, 0, 0, 1])])
def test_sphere(n, betti):
    assert betti_numbers(sphere(n)) == betti
    assert len(sphere(n)) == 2 ** (n + 2) - 2


def test_rp2():
    X = rp2().complex
    assert X.f_vector() == (6, 15, 10)
    assert X.euler_characteristic() == 1
    assert is_closed_pseudomanifold(X)
    assert rank(sq_matrix(X, 1, 1)) == 1


def test_cp2():
    X = cp2().complex
    assert X.f_vector() == (9, 36, 84, 90, 36)
    assert X.euler_characteristic() == 3
    assert is_closed_pseudomanifold(X)
    assert betti_numbers(X) == [1, 0, 1, 0, 1]


def test_pseudomanifold_check_rejects_open_surfaces():
    assert not is_closed_pseudomanifold(standard_simplex(2))
    assert not is_closed_pseudomanifold(
        SimplicialComplex.from_maximal_simplices([[0, 1, 2], [3, 4]]))


def test_fixture_validation():
    with pytest.raises(FixtureError):
        NamedSpace("bad", sphere(2), (1, 1, 1))


def test_suspension_fixtures():
    assert iterated_suspension(rp2(), 1).expected_betti == (1, 0, 1, 1)
    assert iterated_suspension(rp2(), 0) is rp2()
    assert iterated_suspension(sphere_space(0), 1).expected_betti == (1, 1)
    assert iterated_suspension(sphere_space(0), 2).complex.f_vector() == (6, 12, 8)


def test_wedges():
    assert s2_wedge_s4().expected_betti == (1, 0, 1, 0, 1)
    W = wedge_space(rp2(), sphere_space(1))
    assert W.expected_betti == (1, 2, 1)


@pytest.mark.parametrize("name", sorted(SPACES))
def test_registry(name):
    space = get_space(name)
    assert tuple(betti_numbers(space.complex)) == space.expected_betti


def test_registry_suspension_names():
    assert get_space("susp2_rp2").expected_betti == (1, 0, 0, 1, 1)
    with pytest.raises(KeyError):
        get_space("nope")


def test_discrimination_triple():
    pairs = [
        (rp2(), get_space("s1_v_s2"), 1, 1),
        (cp2(), s2_wedge_s4(), 2, 2),
        (get_space("susp_cp2"), get_space("susp_s2_v_s4"), 3, 2),
    ]
    for A, B, n, k in pairs:
        assert A.expected_betti == B.expected_betti
        assert rank(sq_matrix(A.complex, n, k)) == 1
        assert rank(sq_matrix(B.complex, n, k)) == 0
