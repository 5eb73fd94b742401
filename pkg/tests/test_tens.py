"""
十平面：构造、关联验证、切空间秩、对偶、导入
"""

import json

import pytest

from core.algebra.fields import prime_field
from core.errors import ConstructionError
from core.grassmann import meet, random_invertible
from core.tens import (
    MATCHING_COUNT,
    TenConfig,
    construct_3331,
    construct_morin13,
    construct_reye_family,
    dualize,
    load_ten,
    morin_sanity,
    random_ten,
    tangent_rank,
    three_conic_data,
    verify,
)


@pytest.fixture
def ruling():
    return construct_reye_family(prime_field(5), seed=0)


def test_ruling_family_is_lagrangian(ruling):
    report = verify(ruling)
    assert report.size == 10
    assert report.total_pairs == 45
    assert report.incident_pairs == 45
    assert report.all_incident
    assert report.planes_distinct
    assert report.isotropic
    assert report.span_dimension == 10
    assert report.lagrangian_spanning


def test_ruling_planes_meet_in_points(ruling):
    report = verify(ruling)
    assert all(report.dims[i][j] == 0 for i in range(10) for j in range(10) if i != j)
    assert len(report.points) == 45


def test_random_planes_fail(f101):
    report = verify(random_ten(f101, seed=0))
    assert not report.all_incident
    assert not report.isotropic
    assert report.nonzero_pairings
    assert not report.lagrangian_spanning


def test_random_ten_is_seeded(f101):
    a, b = random_ten(f101, seed=4), random_ten(f101, seed=4)
    assert all(p.same_as(q) for p, q in zip(a.planes, b.planes))
    assert a.provenance.recipe == "random"


def test_verify_is_coordinate_free(ruling, rng):
    g = random_invertible(ruling.field, 6, rng)
    moved = verify(ruling.apply_transform(g))
    assert moved.lagrangian_spanning
    assert moved.dims == verify(ruling).dims


def test_report_dict(ruling):
    data = verify(ruling).to_dict(ruling.field)
    assert data["incident_pairs"] == 45
    assert data["lagrangian_spanning"] is True
    assert len(data["points"]) == 45
    assert data["points"][0]["pair"] == [0, 1]


def test_tangent_rank(ruling):
    rank, corank = tangent_rank(ruling)
    assert rank + corank == 45
    assert 0 < rank <= 45


def test_dualize_twice_is_identity(ruling):
    twice = dualize(dualize(ruling))
    assert all(p.same_as(q) for p, q in zip(ruling.planes, twice.planes))
    assert twice.provenance.recipe == "dual:dual:reye"


def test_dual_keeps_incidence(ruling):
    dual = dualize(ruling)
    assert verify(dual).dims == verify(ruling).dims
    assert verify(dual).all_incident


def test_dual_of_random_planes_keeps_meet(f101):
    cfg = random_ten(f101, seed=2, count=3)
    dual = dualize(cfg)
    for i in range(3):
        for j in range(i + 1, 3):
            assert meet(dual.planes[i], dual.planes[j]) == meet(cfg.planes[i], cfg.planes[j])


def test_json_round_trip(ruling, tmp_path):
    path = tmp_path / "ten.json"
    path.write_text(json.dumps(ruling.to_json()), encoding="utf-8")
    loaded = load_ten(path)
    assert loaded.field == ruling.field
    assert all(p.same_as(q) for p, q in zip(loaded.planes, ruling.planes))
    assert loaded.provenance.recipe == "reye"


def test_from_json_accepts_plane_objects(ruling):
    data = ruling.to_json()
    data["planes"] = [{"rows": rows} for rows in data["planes"]]
    assert len(TenConfig.from_json(data)) == 10


def test_load_missing_file(tmp_path):
    with pytest.raises(ConstructionError):
        load_ten(tmp_path / "missing.json")


def test_load_malformed_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConstructionError):
        load_ten(bad)
    rank_deficient = tmp_path / "rank.json"
    rank_deficient.write_text(json.dumps({
        "field": {"p": 5, "k": 1},
        "planes": [[[[1], [0], [0], [0], [0], [0]]] * 3],
    }), encoding="utf-8")
    with pytest.raises(ConstructionError):
        load_ten(rank_deficient)


def test_three_conic_points():
    conics, e_sets = three_conic_data(prime_field(29))
    assert len(conics) == 3
    assert sorted(e_sets) == [0, 1, 2]
    for k, pts in e_sets.items():
        assert len(pts) == 3
        i, j = [x for x in range(3) if x != k]
        for pt in pts:
            assert not conics[i].evaluate(pt)
            assert not conics[j].evaluate(pt)


@pytest.mark.slow
def test_construct_3331():
    cfg = construct_3331(seed=0)
    assert cfg.field.order == 29 ** 2
    assert len(cfg) == 10
    assert 0 <= cfg.provenance.extra["matching"] < MATCHING_COUNT
    assert verify(cfg).lagrangian_spanning


@pytest.mark.slow
def test_construct_3331_is_deterministic():
    a, b = construct_3331(seed=0), construct_3331(seed=0)
    assert a.to_json() == b.to_json()


@pytest.mark.slow
def test_morin13():
    cfg = construct_morin13(prime_field(11), seed=0)
    report = verify(cfg)
    assert len(cfg) == 13
    assert report.all_incident
    assert report.planes_distinct
    assert report.isotropic
    assert report.span_dimension <= 10
    counts = morin_sanity(cfg)
    assert sum(counts.values()) == 78
