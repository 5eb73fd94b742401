"""
带重数的平面曲线系统、结点搜索与 Coble 十平面
"""

import pytest

from core.algebra.fields import prime_field
from core.algebra.polynomials import MultiPoly
from core.epw import PATH_DIVISION, SEXTIC, LagrangianSubspace, check_power, epw_form
from core.errors import ConstructionError, DimensionError
from core.hypersurfaces import through_planes, unique_form
from core.plane_curves import (
    MultPointSet,
    basis_independent,
    check_multiplicities,
    coble_data,
    coble_ten,
    conditions_independent,
    expected_mult_dimension,
    find_nodes,
    forms_with_mult,
    winger_nodes,
)
from core.tens import verify

COORDINATE_POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_point_set_validation(f29):
    with pytest.raises(DimensionError):
        MultPointSet.uniform(f29, [(1, 0, 0), (2, 0, 0)], 1)
    with pytest.raises(DimensionError):
        MultPointSet.uniform(f29, [(0, 0, 0)], 1)
    with pytest.raises(DimensionError):
        MultPointSet.uniform(f29, [(1, 0, 0)], 0)
    with pytest.raises(DimensionError):
        MultPointSet(f29, ((1, 0, 0),), (1, 2))


def test_point_set_normalizes(f29):
    s = MultPointSet.uniform(f29, [(2, 4, 6)], 2)
    assert s.points == ((1, 2, 3),)
    assert s.condition_count == 3
    assert len(s.without(0)) == 0


def test_conic_through_five_points(f29):
    s = MultPointSet.uniform(f29, COORDINATE_POINTS + [(1, 1, 1), (1, 2, 3)], 1)
    sys = forms_with_mult(2, s)
    assert sys.dimension == 1
    assert conditions_independent(sys, s)


def test_cubics_with_a_double_point(f29):
    s = MultPointSet.uniform(f29, [(1, 0, 0)], 2)
    sys = forms_with_mult(3, s)
    assert sys.dimension == 7
    assert check_multiplicities(sys, s)


def test_double_point_away_from_origin(f29):
    s = MultPointSet.uniform(f29, [(1, 2, 3)], 2)
    sys = forms_with_mult(3, s)
    assert sys.dimension == 7
    assert check_multiplicities(sys, s)


def test_quartics_with_three_double_points(f29):
    s = MultPointSet.uniform(f29, COORDINATE_POINTS, 2)
    sys = forms_with_mult(4, s)
    assert sys.dimension == expected_mult_dimension(4, s) == 6
    assert check_multiplicities(sys, s)


def test_mixed_multiplicities(f29):
    s = MultPointSet(f29, tuple(COORDINATE_POINTS), (1, 2, 3))
    sys = forms_with_mult(4, s)
    assert sys.dimension == 15 - (1 + 3 + 6)
    assert check_multiplicities(sys, s)


def test_overdetermined_system_is_empty(f29):
    s = MultPointSet.uniform(f29, [(1, 0, 0)], 3)
    assert forms_with_mult(1, s).dimension == 0
    assert expected_mult_dimension(1, s) == 0


def test_over_prime_field(f29sq):
    s = MultPointSet.uniform(f29sq, [(1, 0, 0), (0, 1, 5)], 2)
    base = s.over_prime_field()
    assert base is not None
    assert base.field == prime_field(29)
    assert base.points == ((0, 1, 5), (1, 0, 0)) or base.points == ((1, 0, 0), (0, 1, 5))


def test_find_nodes_of_nodal_cubic(f29):
    # y^2 z = x^3 + x^2 z，原点处一个结点
    f = MultiPoly.from_ints(f29, 3, {(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})
    nodes = find_nodes(f, max_degree=1)
    assert nodes.points == ((0, 0, 1),)
    assert nodes.multiplicities == (2,)


def test_coble_needs_ten_nodes(f29):
    with pytest.raises(ConstructionError):
        coble_data(MultPointSet.uniform(f29, COORDINATE_POINTS, 2), "septic")


@pytest.fixture(scope="module")
def winger():
    return winger_nodes()


@pytest.mark.slow
def test_winger_prime_has_ten_nodes(winger):
    prime, nodes = winger
    assert 31 <= prime <= 499
    assert len(nodes) == 10
    assert set(nodes.multiplicities) == {2}


@pytest.mark.slow
@pytest.mark.parametrize("kind, degree, exp", [("septic", 2, 3), ("decimic", 3, 2)])
def test_coble_ten(winger, kind, degree, exp):
    prime, nodes = winger
    data = coble_data(nodes, kind)
    assert data.space.dimension == 6
    assert data.node_dims() == [(1, 3)] * 10
    assert basis_independent(data)
    cfg = coble_ten(data, prime)
    assert len(cfg) == 10
    assert cfg.provenance.recipe == f"coble_{kind}"
    assert cfg.provenance.extra["prime"] == prime
    rep = verify(cfg)
    assert rep.planes_distinct
    assert rep.lagrangian_spanning

    # septic 十平面落在唯一二次型上，decimic 落在唯一三次型上
    sys = through_planes(cfg.planes, degree)
    assert sys.dimension == 1
    base = unique_form(sys)
    assert base.d == degree

    res = epw_form(LagrangianSubspace.from_ten(cfg), seed=0, check_points=30)
    assert res.verdict == SEXTIC
    assert res.path == PATH_DIVISION
    if res.work_field != base.field:
        base = base.map_coefficients(lambda c: base.field.embed(c, res.work_field), res.work_field)
    assert check_power(res.form, base, exp)
