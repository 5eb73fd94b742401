"""
平面、Plücker 坐标、辛配对与坐标卡
"""

import random

import pytest

from core.algebra import linalg
from core.errors import ChartError, DimensionError
from core.grassmann import (
    TRIPLES,
    Plane,
    bitangent_pencil,
    chart_incident,
    chart_matrix,
    intersection_point,
    is_decomposable,
    meet,
    pairing,
    random_invertible,
    random_plane,
)
from core.tens import construct_reye_family


def transverse_plane(field, rng):
    """与坐标卡 (0,1,2) 横截的随机平面"""
    while True:
        p = random_plane(field, rng)
        try:
            chart_matrix(p)
        except ChartError:
            continue
        return p


def test_dependent_rows_are_rejected(f29):
    with pytest.raises(DimensionError):
        Plane.from_ints(f29, [[1, 0, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]])


def test_plane_needs_three_by_six(f29):
    with pytest.raises(DimensionError):
        Plane.from_ints(f29, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]])


def test_coordinate_plane_plucker(f29):
    p = Plane.coordinate(f29, (0, 1, 2))
    assert p.plucker[0] == 1
    assert sum(1 for x in p.plucker if x) == 1
    assert len(TRIPLES) == 20


def test_complementary_pairing(f29):
    a = Plane.coordinate(f29, (0, 1, 2))
    b = Plane.coordinate(f29, (3, 4, 5))
    assert pairing(f29, a.plucker, b.plucker) == 1


def test_pairing_is_antisymmetric(any_field, rng):
    p, q = random_plane(any_field, rng), random_plane(any_field, rng)
    assert pairing(any_field, p.plucker, q.plucker) == any_field.neg(pairing(any_field, q.plucker, p.plucker))
    assert pairing(any_field, p.plucker, p.plucker) == any_field.zero


def test_meet_dimensions(f29):
    e012 = Plane.coordinate(f29, (0, 1, 2))
    assert meet(e012, Plane.coordinate(f29, (3, 4, 5))) == -1
    assert meet(e012, Plane.coordinate(f29, (2, 3, 4))) == 0
    assert meet(e012, Plane.coordinate(f29, (1, 2, 3))) == 1
    assert meet(e012, e012) == 2


def test_intersection_point(f29):
    e012 = Plane.coordinate(f29, (0, 1, 2))
    assert intersection_point(e012, Plane.coordinate(f29, (2, 3, 4))) == (0, 0, 1, 0, 0, 0)
    assert intersection_point(e012, Plane.coordinate(f29, (3, 4, 5))) is None


def test_meeting_planes_pair_to_zero(f29):
    a = Plane.from_ints(f29, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    b = Plane.from_ints(f29, [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 1]])
    assert meet(a, b) == 0
    assert pairing(f29, a.plucker, b.plucker) == 0


def test_canonical_rows_ignore_basis(f29, rng):
    p = random_plane(f29, rng)
    mix = random_invertible(f29, 3, rng)
    q = Plane(f29, tuple(map(tuple, linalg.matmul(f29, mix, p.rows))))
    assert p.same_as(q)


def test_random_point_lies_on_plane(any_field, rng):
    p = random_plane(any_field, rng)
    for _ in range(5):
        assert p.contains(p.random_point(rng))


def test_apply_transform(f101, rng):
    p = random_plane(f101, rng)
    g = random_invertible(f101, 6, rng)
    q = p.apply_transform(g)
    v = p.random_point(rng)
    assert q.contains(linalg.mat_vec(f101, g, v))


def test_is_decomposable(f29sq, rng):
    p = random_plane(f29sq, rng)
    recovered = is_decomposable(f29sq, p.plucker)
    assert recovered is not None and recovered.same_as(p)


def test_sum_of_skew_planes_is_not_decomposable(f29):
    a = Plane.coordinate(f29, (0, 1, 2)).plucker
    b = Plane.coordinate(f29, (3, 4, 5)).plucker
    assert is_decomposable(f29, [f29.add(x, y) for x, y in zip(a, b)]) is None
    with pytest.raises(DimensionError):
        is_decomposable(f29, [0] * 20)


def test_chart_round_trip(f101, rng):
    p = transverse_plane(f101, rng)
    chart = chart_matrix(p, (0, 1, 2))
    assert chart.to_plane(f101).same_as(p)


def test_chart_error_for_non_transverse_plane(f29):
    with pytest.raises(ChartError) as info:
        chart_matrix(Plane.coordinate(f29, (3, 4, 5)), (0, 1, 2))
    assert info.value.rank_defect == 3


def test_chart_incidence_criterion(f101, rng):
    ruling = construct_reye_family(f101, seed=1)
    a, b = (chart_matrix(p) for p in ruling.planes[:2])
    assert chart_incident(f101, a, b)
    for _ in range(5):
        p, q = transverse_plane(f101, rng), transverse_plane(f101, rng)
        assert chart_incident(f101, chart_matrix(p), chart_matrix(q)) == (meet(p, q) >= 0)


def test_bitangent_pencil_needs_four_quadrics(f29):
    with pytest.raises(DimensionError):
        bitangent_pencil(f29, [[[1, 0, 0, 0]] * 4] * 3, [1, 0, 0, 0], [0, 1, 0, 0])


def random_meeting_plane(p, rng):
    """与 p 至少交于一点的随机平面"""
    f = p.field
    while True:
        rows = [p.random_point(rng)] + [tuple(f.random_element(rng) for _ in range(6)) for _ in range(2)]
        try:
            return Plane(f, tuple(rows))
        except DimensionError:
            continue


@pytest.mark.slow
def test_pairing_vanishes_exactly_on_meeting_planes(any_field):
    rng = random.Random(f"incidence:{any_field.to_json()}")
    seen = {True: 0, False: 0}
    for i in range(10_000):
        p = random_plane(any_field, rng)
        q = random_meeting_plane(p, rng) if i % 2 else random_plane(any_field, rng)
        incident = meet(p, q) >= 0
        assert (pairing(any_field, p.plucker, q.plucker) == 0) == incident
        seen[incident] += 1
    assert seen[True] >= 5_000
    assert seen[False] > 0


def test_plucker_of_transformed_plane(any_field, rng):
    # Cauchy–Binet：(R g^T) 的 3×3 子式 = Σ det(g[ijk; abc]) · (R 的子式)
    f = any_field
    for _ in range(3):
        p = random_plane(f, rng)
        g = random_invertible(f, 6, rng)
        expected = []
        for ijk in TRIPLES:
            acc = f.zero
            for idx, abc in enumerate(TRIPLES):
                minor = linalg.det(f, [[g[i][a] for a in abc] for i in ijk])
                acc = f.add(acc, f.mul(minor, p.plucker[idx]))
            expected.append(acc)
        assert p.apply_transform(g).plucker == tuple(expected)
