"""
产物存储：原子写入、摘要与领域对象的读写
"""

import json

import pytest

from core.algebra.fields import ext_field, prime_field
from core.algebra.polynomials import MultiPoly
from core.errors import ConstructionError, DimensionError
from core.grassmann import Plane
from core.lattices import plane_class_gram
from core.tens import construct_reye_family
from database import ArtifactStore


@pytest.fixture
def store(tmp_path):
    return ArtifactStore(tmp_path)


def test_write_is_sorted_and_leaves_no_temp(store, tmp_path):
    target = store.write_json("out/a.json", {"b": 1, "a": [1, 2]})
    assert target == tmp_path / "out" / "a.json"
    text = target.read_text(encoding="utf-8")
    assert text.index('"a"') < text.index('"b"')
    assert not (tmp_path / "out" / "a.json.tmp").exists()
    assert store.read_json("out/a.json") == {"a": [1, 2], "b": 1}


def test_same_data_same_digest(store):
    store.write_json("x.json", {"k": [3, 2, 1]})
    store.write_json("y.json", {"k": [3, 2, 1]})
    assert store.digest("x.json") == store.digest("y.json")
    assert len(store.digest("x.json")) == 64


def test_digests_skip_missing_and_stdio(store):
    store.write_json("x.json", {})
    got = store.digests(["x.json", "missing.json", "-"])
    assert list(got) == ["x.json"]


def test_unserializable_data_is_rejected(store, tmp_path):
    with pytest.raises(ConstructionError):
        store.write_json("bad.json", {"x": object()})
    assert not (tmp_path / "bad.json").exists()
    assert not (tmp_path / "bad.json.tmp").exists()


def test_read_errors(store, tmp_path):
    with pytest.raises(ConstructionError):
        store.read_json("nothing.json")
    (tmp_path / "broken.json").write_text("{", encoding="utf-8")
    with pytest.raises(ConstructionError):
        store.read_json("broken.json")


def test_stdout(store, capsys):
    assert store.write_json("-", {"ok": True}) is None
    assert json.loads(capsys.readouterr().out) == {"ok": True}


def test_field_and_plane(store):
    fld = ext_field(29, 2)
    store.save_field("field.json", fld)
    assert store.load_field("field.json") == fld

    plane = Plane.from_ints(prime_field(7), [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 2, 3, 4]])
    store.save_plane("plane.json", plane)
    assert store.load_plane("plane.json").same_as(plane)


def test_ten(store):
    cfg = construct_reye_family(prime_field(5), 0)
    store.save_ten("ten.json", cfg)
    loaded = store.load_ten("ten.json")
    assert len(loaded) == 10
    assert all(p.same_as(q) for p, q in zip(loaded.planes, cfg.planes))


def test_form_needs_a_field(store):
    f7 = prime_field(7)
    form = MultiPoly.from_ints(f7, 3, {(2, 0, 0): 1, (0, 1, 1): 3})
    bare = {k: v for k, v in form.to_json().items() if k != "field"}
    store.write_json("bare.json", bare)
    with pytest.raises(DimensionError):
        store.load_form("bare.json")
    assert store.load_form("bare.json", f7) == form
    store.save_form("with_field.json", form)
    assert store.load_form("with_field.json") == form


def test_gram_formats(store):
    store.save_lattice("m10.json", plane_class_gram(10))
    lat = store.load_gram("m10.json")
    assert lat.det() == 13312

    store.write_json("rows.json", [[2, 1], [1, 2]])
    assert store.load_gram("rows.json").det() == 3

    store.write_json("text.json", {"gram": [["a", 1], [1, 2]]})
    with pytest.raises(DimensionError):
        store.load_gram("text.json")
