from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from loopstrata.alcove import (
    AlcoveError,
    AlcovePoint,
    FaceLabel,
    barycentric,
    eta_I,
    face_of,
    from_barycentric,
    is_exotic,
    orders,
    vertices,
)
from loopstrata.rootsys import Coweight, build_root_system, fundamental_coweights, pairing

from .conftest import ALL_TYPES, SMALL_TYPES


@pytest.mark.parametrize("name", ALL_TYPES)
def test_vertex_pairing_matrix(name):
    rs = build_root_system(name)
    vs = vertices(rs)
    assert vs[0] == Coweight.zero(rs.rank)
    for i, a in enumerate(rs.simple_roots, start=1):
        for j in range(1, rs.rank + 1):
            assert pairing(a, vs[j], rs) == (Fraction(1, rs.marks0[i]) if i == j else 0)
    assert pairing(rs.highest_root, vs[0], rs) == 0
    assert all(pairing(rs.highest_root, v, rs) == 1 for v in vs[1:])


def test_a1_vertex():
    rs = build_root_system("A1")
    assert vertices(rs)[1].coeffs == (Fraction(1, 2),)


def _brute_order(v):
    k = 1
    while not (v * k).is_integral:
        k += 1
    return k


@pytest.mark.parametrize("name", ALL_TYPES)
def test_orders_against_brute_force(name):
    rs = build_root_system(name)
    o = orders(rs)
    assert o.k_each[0] == 1
    assert o.k_each == tuple(_brute_order(v) for v in vertices(rs))
    assert all((v * o.k_G).is_integral for v in vertices(rs))
    assert all(o.k_G % n == 0 for n in rs.marks0)


def test_orders_small_cases():
    assert orders(build_root_system("A1")).k_each == (1, 2)
    assert orders(build_root_system("A1")).k_G == 2
    # G2 by hand: C^T = [[2, -1], [-3, 2]] has inverse [[2, 1], [3, 2]], so
    # omega_1 = (2, 3), omega_2 = (1, 2); eta_1 = (2/3, 1), eta_2 = (1/2, 1)
    rs = build_root_system("G2")
    om = fundamental_coweights(rs)
    assert om[0].coeffs == (2, 3) and om[1].coeffs == (1, 2)
    assert orders(rs).k_each == (1, 3, 2)
    assert orders(rs).k_G == 6


def test_barycentric_examples():
    rs = build_root_system("A2")
    assert barycentric((rs, Coweight.zero(2))) == (1, 0, 0)
    v = vertices(rs)
    assert barycentric((rs, v[2])) == (0, 0, 1)
    mid = (v[1] + v[2]) / 2
    assert barycentric((rs, mid)) == (0, Fraction(1, 2), Fraction(1, 2))
    assert face_of((rs, mid)) == FaceLabel({1, 2})


@pytest.mark.parametrize("name", ALL_TYPES)
def test_vertices_are_their_own_faces(name):
    rs = build_root_system(name)
    for j, v in enumerate(vertices(rs)):
        assert barycentric((rs, v)) == tuple(int(i == j) for i in range(rs.rank + 1))
        assert face_of((rs, v)) == FaceLabel({j})
        assert is_exotic(FaceLabel({j})) == (j != 0)


def test_exotic_flag():
    assert not is_exotic(FaceLabel({0}))
    assert is_exotic(FaceLabel({2}))
    assert not is_exotic(FaceLabel({0, 2}))


def test_outside_alcove_names_inequality():
    rs = build_root_system("A2")
    with pytest.raises(AlcoveError, match="alpha_1"):
        AlcovePoint(Coweight((-1, 0)), rs)
    with pytest.raises(AlcoveError, match="theta"):
        barycentric((rs, Coweight((2, 2))))


def test_face_label_nonempty():
    with pytest.raises(AlcoveError):
        FaceLabel([])


def test_eta_I_examples():
    rs1 = build_root_system("A1")
    assert eta_I(rs1, FaceLabel({0})) == Coweight.zero(1)
    assert eta_I(rs1, [1]).coeffs == (Fraction(1, 2),)
    assert eta_I(rs1, []) == Coweight.zero(1)
    rs2 = build_root_system("A2")
    om = fundamental_coweights(rs2)
    assert eta_I(rs2, {1, 2}) == om[0] + om[1]


@pytest.mark.parametrize("name", SMALL_TYPES + ["F4", "D4"])
def test_eta_I_barycenter_has_support_I(name):
    from itertools import combinations

    rs = build_root_system(name)
    for size in range(1, rs.rank + 2):
        for I in combinations(range(rs.rank + 1), size):
            p = AlcovePoint(eta_I(rs, I) / len(I), rs)
            assert face_of(p).support == frozenset(I)


@st.composite
def weights(draw, rank):
    w = draw(st.lists(st.integers(0, 9), min_size=rank + 1, max_size=rank + 1))
    if sum(w) == 0:
        w[0] = 1
    return [Fraction(x, sum(w)) for x in w]


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4", "E6"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_barycentric_roundtrip(name, data):
    rs = build_root_system(name)
    a = data.draw(weights(rs.rank))
    eta = from_barycentric(rs, a)
    assert barycentric((rs, eta)) == tuple(a)
    assert face_of((rs, eta)).support == frozenset(i for i, x in enumerate(a) if x > 0)
