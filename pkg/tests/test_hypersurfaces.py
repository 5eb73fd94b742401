"""
过平面 / 过点的型系统、奇点扫描与平面点组位置
"""

import pytest

from core.algebra.fields import RATIONALS, prime_field
from core.algebra.polynomials import MultiPoly
from core.errors import BudgetExceededError, DimensionError, FieldError
from core.grassmann import Plane
from core.hypersurfaces import (
    check_at_points,
    check_on_planes,
    plane_coordinates,
    position_check,
    restrict_to_plane,
    singular_scan,
    through_planes,
    through_points,
    unique_form,
)
from core.tens import construct_3331, construct_reye_family


def test_linear_forms_through_coordinate_plane(f29):
    sys = through_planes([Plane.coordinate(f29, (0, 1, 2))], 1)
    assert sys.dimension == 3
    assert sys.expected_dimension == 3
    for i in (3, 4, 5):
        assert sys.contains(MultiPoly.variable(f29, 6, i))
    assert not sys.contains(MultiPoly.variable(f29, 6, 0))


def test_quadrics_through_coordinate_plane(f29):
    assert through_planes([Plane.coordinate(f29, (0, 1, 2))], 2).dimension == 21 - 6


def test_ruling_lies_on_its_quadric(rng):
    f5 = prime_field(5)
    ruling = construct_reye_family(f5, seed=0)
    sys = through_planes(ruling.planes, 2)
    quadric = MultiPoly.from_ints(f5, 6, {(1, 0, 0, 1, 0, 0): 1, (0, 1, 0, 0, 1, 0): 1, (0, 0, 1, 0, 0, 1): 1})
    assert sys.dimension >= 1
    assert sys.contains(quadric)
    assert check_on_planes(sys, ruling.planes, rng, points_per_plane=10)


def test_through_planes_arguments(f29):
    with pytest.raises(DimensionError):
        through_planes([Plane.coordinate(f29, (0, 1, 2))], 0)
    with pytest.raises(DimensionError):
        through_planes([], 3)


def test_unique_form_needs_dimension_one(f29):
    with pytest.raises(DimensionError):
        unique_form(through_planes([Plane.coordinate(f29, (0, 1, 2))], 1))


def test_through_points(f29):
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
    sys, rank = through_points(f29, pts, 2, n=3)
    assert rank == 5
    assert sys.dimension == 1
    assert check_at_points(sys, pts)
    conic = unique_form(sys)
    assert all(not conic.evaluate(pt) for pt in pts)


def test_restrict_to_plane(f29):
    plane = Plane.coordinate(f29, (0, 1, 2))
    assert restrict_to_plane(MultiPoly.variable(f29, 6, 4), plane).is_zero()
    restricted = restrict_to_plane(MultiPoly.variable(f29, 6, 1).power(2), plane)
    assert restricted.n == 3 and restricted.coefficient((0, 2, 0)) == 1


def test_plane_coordinates(f29):
    plane = Plane.from_ints(f29, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 1]])
    assert plane_coordinates(plane, (2, 3, 4, 0, 0, 4)) == (2, 3, 4)
    assert plane_coordinates(plane, (0, 0, 0, 1, 0, 0)) is None


# ==================== 奇点扫描 ====================

def test_fermat_cubic_is_smooth():
    f7 = prime_field(7)
    fermat = MultiPoly.from_ints(f7, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    report = singular_scan(fermat, max_degree=2)
    assert report.partial_certificate
    assert [s["points"] for s in report.scanned] == [57, 2451]
    assert "partial certificate" in report.statement


def test_coordinate_triangle_has_three_singular_points():
    f5 = prime_field(5)
    triangle = MultiPoly.from_ints(f5, 3, {(1, 1, 1): 1})
    report = singular_scan(triangle)
    assert sorted(pt for _, pt in report.points) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert not report.partial_certificate
    data = report.to_dict()
    assert data["points"][0]["k"] == 1


def test_scan_counts_only_new_points_in_extension():
    f5 = prime_field(5)
    triangle = MultiPoly.from_ints(f5, 3, {(1, 1, 1): 1})
    report = singular_scan(triangle, max_degree=2)
    assert all(k == 1 for k, _ in report.points)
    assert len(report.points) == 3


def test_scan_budget():
    f7 = prime_field(7)
    form = MultiPoly.from_ints(f7, 3, {(3, 0, 0): 1})
    with pytest.raises(BudgetExceededError) as info:
        singular_scan(form, budget=10)
    assert info.value.needed == 57


def test_scan_needs_finite_field():
    form = MultiPoly.from_ints(RATIONALS, 3, {(3, 0, 0): 1})
    with pytest.raises(FieldError):
        singular_scan(form)


# ==================== 平面点组 ====================

def test_position_of_general_points(f29):
    report = position_check(f29, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert report.collinear_triples == []
    assert report.conic_sextuples == []
    assert report.cubic_dimension == 6


def test_position_detects_collinear_triple(f29):
    report = position_check(f29, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 1, 0)])
    assert report.collinear_triples == [(0, 1, 4), (2, 3, 4)]
    assert report.cubic_dimension == 5
    assert report.to_dict()["collinear_triples"] == [[0, 1, 4], [2, 3, 4]]


def test_position_detects_conic_sextuple(f29):
    # x0*x1 = x2^2 上的六个点
    pts = [(t * t % 29, 1, t) for t in range(1, 6)] + [(1, 0, 0)]
    report = position_check(f29, pts)
    assert report.conic_sextuples == [(0, 1, 2, 3, 4, 5)]


def test_position_point_count(f29):
    with pytest.raises(DimensionError):
        position_check(f29, [(1, 0, 0)])


@pytest.mark.slow
def test_unique_cubic_through_three_conic_ten():
    cfg = construct_3331(seed=0)
    sys = through_planes(cfg.planes, 3)
    assert sys.dimension == 1
    expected = MultiPoly.from_ints(cfg.field, 6, {(0, 0, 0, 1, 1, 1): 1})
    assert unique_form(sys) == expected
