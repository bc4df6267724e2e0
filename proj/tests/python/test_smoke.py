from fractions import Fraction

import pytest

import dynhull


def test_det_agreement_and_type():
    rows = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    want = dynhull.det(rows, algo="laplace")
    assert isinstance(want, int)
    for algo in ("auto", "bird", "bareiss", "lu"):
        assert dynhull.det(rows, algo=algo) == want


def test_det_rational_entries():
    rows = [[Fraction(1, 2), 2], [3, Fraction(4, 5)]]
    assert dynhull.det(rows) == Fraction(1, 2) * Fraction(4, 5) - 6
    # floats convert exactly, not through repr
    assert dynhull.det([[0.5, 0.0], [0.0, 0.5]]) == Fraction(1, 4)
    assert dynhull.det([["1/3", 0], [0, "3/1"]]) == 1


def test_det_big_integers():
    x = 10**40
    assert dynhull.det([[x, 0], [0, x]]) == x * x


def test_adjoint_and_inverse():
    adj, det = dynhull.adjoint([[2, 0], [0, 4]])
    assert det == 8
    assert adj == [[4, 0], [0, 2]]
    inv, det2 = dynhull.inverse([[2, 0], [0, 4]])
    assert det2 == 8
    assert inv == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
    with pytest.raises(dynhull.SingularMatrix):
        dynhull.inverse([[1, 2], [2, 4]])


def test_dynamic_adjoint_chain():
    a = dynhull.DynamicAdjoint([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert a.det == 1
    assert a.peek_det(0, [2, 0, 0]) == 2
    a.update(0, [2, 0, 0])
    a.update(2, [1, 2, 3])
    assert a.det == dynhull.det(a.matrix())
    before = a.det
    with pytest.raises(dynhull.SingularUpdate):
        a.update(1, [0, 0, 0])
    assert a.det == before  # failed update leaves the state alone


def test_dynamic_inverse_matches_scratch():
    s = dynhull.DynamicInverse([[1, 2], [3, 4]])
    assert s.det == -2
    s.update(0, [5, 6])
    inv, det = dynhull.inverse(s.matrix())
    assert s.inverse() == inv
    assert s.det == det


def test_hull_pentagon():
    h = dynhull.convex_hull([(0, 1), (1, 2), (2, 1), (1, 0), (2, 2)])
    assert h.dim == 2
    assert h.vertices() == [0, 1, 2, 3, 4]
    assert h.volume() == Fraction(5, 2)


def test_hull_cube_zero_policy():
    # corner, its three edge neighbours (an affinely independent seed),
    # then the rest; lex order would start with four coplanar corners
    corners = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    seed = [(-1, -1, -1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    pts = seed + [c for c in corners if c not in seed]
    h = dynhull.convex_hull(pts, on_zero="not-visible", order="input")
    assert h.volume() == 8
    assert len(h.vertices()) == 8
    # the default policy treats the coplanar facet corners as degenerate
    with pytest.raises(dynhull.DegenerateInput):
        dynhull.convex_hull(pts, order="input")


def test_locate_walks():
    pts = dynhull.gen_points(20, 3, dist="sphere", seed=11)
    h = dynhull.convex_hull(pts, algo="hashed")
    assert h.has_states
    centroid = [sum(p[i] for p in pts) // len(pts) for i in range(3)]
    cell = h.locate(centroid)
    assert cell >= 0
    assert h.locate_scratch(centroid) >= 0
    assert h.contains(centroid)
    far = [10**9] * 3
    assert h.locate(far, hint=cell) == -1
    assert not h.contains(far)


def test_gen_points_scalar_kinds():
    pts = dynhull.gen_points(5, 4, scenario="d", seed=2)
    assert len(pts) == 5
    assert all(len(p) == 4 for p in pts)
    assert all(isinstance(x, int) for p in pts for x in p)
    rat = dynhull.gen_points(3, 2, scenario="b", seed=2)
    assert all(isinstance(x, Fraction) for p in rat for x in p)


def test_type_errors():
    with pytest.raises(TypeError):
        dynhull.det([[True, 0], [0, 1]])
    with pytest.raises(dynhull.DimensionMismatch):
        a = dynhull.DynamicAdjoint([[1, 0], [0, 1]])
        a.update(5, [1, 2])
