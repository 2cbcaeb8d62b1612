import math
from fractions import Fraction

import pytest

from altkit import catalog, units
from altkit.core import Algebra

F = Fraction


def test_verify_unit_examples():
    M = catalog.mplus()
    q = M.element([0.0, math.sqrt(2), 1.0, 0.0])
    assert units.verify_unit(M, q)

    Z = catalog.mzero()
    assert units.verify_unit(Z, Z.element([0, 1, 1, 0]), 0.0)

    H = catalog.quaternions()
    assert not units.verify_unit(H, H.one())


def test_newton_sphere():
    H = catalog.quaternions()
    cloud = units.solve_units_sampled(H, seeds=100)
    assert cloud.kind == units.KIND_CLOUD
    assert len(cloud.points) > 10
    for q in cloud.points:
        assert abs(float(q.coords[0])) <= 1e-8
        r = sum(float(c) ** 2 for c in q.coords[1:])
        assert abs(r - 1) <= 1e-8


def test_newton_isolated_roots():
    A2 = catalog.ak(2, a11=1, a12=2, a21=F(1, 2), a22=3)
    cloud = units.solve_units_sampled(A2, seeds=150)
    rounded = sorted(tuple(round(float(c), 6) for c in q.coords)
                     for q in cloud.points)
    assert rounded == [
        (0.0, -1.0, 0.0, 0.0, 0.0, 0.0),
        (0.0, 1.0, 0.0, 0.0, 0.0, 0.0),
    ]


def test_newton_empty_for_reals():
    # one-dimensional real line: x^2 = -1 has no solution
    R = Algebra([[[1]]], labels=["1"], unit=[1])
    cloud = units.solve_units_sampled(R, seeds=50)
    assert cloud.points == ()


@pytest.mark.parametrize(
    "builder,kind,x2,y2,z2,rhs",
    [
        (catalog.mplus, units.KIND_HYPERBOLOID, -1, 1, 1, -1),
        (catalog.mzero, units.KIND_PLANES, 1, 0, 0, 1),
        (catalog.quaternions, units.KIND_SPHERE, 1, 1, 1, 1),
    ],
)
def test_classify_locus_named_tables(builder, kind, x2, y2, z2, rhs):
    A = builder()
    locus = units.classify_locus_tn(A)
    assert locus.kind == kind
    assert locus.equation == {"x2": F(x2), "y2": F(y2), "z2": F(z2), "rhs": F(rhs)}
    assert locus.ambient == (1, 2, 3)
    for q in locus.points:
        assert units.verify_unit(A, q, 0.0)


def test_classify_locus_finite():
    A = catalog.tn(a=2, b=1)
    locus = units.classify_locus_tn(A)
    assert locus.kind == units.KIND_FINITE
    assert locus.complete
    assert set(locus.points) == {A.basis(1), -A.basis(1)}


def test_classify_locus_accepts_params():
    locus = units.classify_locus_tn({"a": F(3)})
    assert locus.kind == units.KIND_HYPERBOLOID


def test_rational_locus_points_are_exact_units():
    for a in (F(2), F(0), F(-5, 4)):
        A = catalog.tn(a=a, g=-a)
        pts = units.rational_locus_points(A, a, 12)
        assert len(pts) == 12
        for q in pts:
            assert units.verify_unit(A, q, 0.0)


def test_cloud_points_satisfy_equation():
    M = catalog.mplus()
    locus = units.classify_locus_tn(M)
    cloud = units.solve_units_sampled(M, seeds=100)
    for q in cloud.points:
        assert units.equation_satisfied(locus, q, 1e-8)


def test_grid_search_finds_only_the_two_roots():
    A = catalog.ak(1, a11=F(3, 2), a12=F(7, 4))
    found = units.grid_unit_search(A)
    assert set(found) == {A.by_label("e1"), -A.by_label("e1")}


def test_grid_search_finds_grid_units_on_sphere():
    H = catalog.quaternions()
    found = units.grid_unit_search(H, radius=1.0)
    # grid points on the unit sphere in span{i, j, k}: exactly +-i, +-j, +-k
    labels = {q: None for q in found}
    expected = set()
    for lab in ("i", "j", "k"):
        expected.add(H.by_label(lab))
        expected.add(-H.by_label(lab))
    assert set(found) == expected


def test_locus_to_dict_caps_points():
    H = catalog.quaternions()
    cloud = units.solve_units_sampled(H, seeds=150)
    data = cloud.to_dict(max_points=50)
    assert len(data["points"]) <= 50
    assert data["kind"] == "sampled-cloud"
