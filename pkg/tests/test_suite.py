"""
验收套件：检查块、配方、导入与报告
"""

import json

import pytest

from core.algebra.fields import prime_field
from core.epw import DEGENERATE
from core.errors import ConstructionError, DimensionError
from core.suite import (
    CheckRecord,
    CheckStatus,
    RunReport,
    SuiteConfig,
    SuiteRunner,
    load_suite_config,
    run_suite,
)
from core.tens import construct_reye_family


def test_lattice_block_passes():
    report = run_suite({"blocks": ["lattice"]})
    ids = [r.check_id for r in report.records]
    assert ids[0] == "lattice.m10"
    assert all(i.startswith("lattice.") for i in ids)
    assert report.passed
    assert report.get("lattice.bb_text").status is CheckStatus.PARTIAL
    assert report.get("lattice.m10").observed["det"] == 13312


def test_citations_are_attached():
    report = run_suite({"blocks": ["lattice"]})
    assert all(r.citation for r in report.records)


@pytest.mark.slow
def test_algebra_block_passes():
    report = run_suite({"blocks": ["algebra"], "budget": 1_000_000})
    assert report.passed
    assert report.get("algebra.singular_scan").status is CheckStatus.PARTIAL
    assert report.get("algebra.determinism").status is CheckStatus.PASS


def test_unknown_block_rejected():
    with pytest.raises(DimensionError):
        SuiteConfig.from_dict({"blocks": ["lattice", "surfaces"]})


def test_empty_block_list_runs_nothing():
    cfg = SuiteConfig.from_dict({"blocks": []})
    assert cfg.active_blocks == []
    report = run_suite(cfg)
    assert report.records == []
    assert report.passed


def test_unknown_recipe_fails_without_aborting():
    report = run_suite({"blocks": [], "recipes": ["nonsense", "reye"]})
    bad = report.get("recipe.nonsense")
    assert bad.status is CheckStatus.FAIL
    assert "nonsense" in bad.message
    assert report.get("recipe.reye").status is CheckStatus.PASS
    assert not report.passed


def test_random_recipe_is_only_recorded():
    report = run_suite({"blocks": [], "recipes": ["random"]})
    assert report.get("recipe.random").status is CheckStatus.PARTIAL
    assert report.passed


def test_imported_ten(tmp_path):
    good = tmp_path / "reye.json"
    good.write_text(json.dumps(construct_reye_family(prime_field(5), 0).to_json()), encoding="utf-8")
    missing = tmp_path / "missing.json"
    report = run_suite({"blocks": [], "imports": [str(good), str(missing)]})
    assert report.get("import.0").status is CheckStatus.PASS
    assert report.get("import.0").observed["incident_pairs"] == 45
    assert report.get("import.1").status is CheckStatus.FAIL


def test_duplicate_check_id():
    report = RunReport(seed=0)
    report.add(CheckRecord("x", "plumbing", CheckStatus.PASS))
    with pytest.raises(DimensionError):
        report.add(CheckRecord("x", "plumbing", CheckStatus.FAIL))


def test_report_dict_without_runtime():
    report = run_suite({"blocks": [], "recipes": ["reye"]})
    data = report.to_dict(include_runtime=False)
    assert data["summary"] == {"pass": 1, "fail": 0, "partial": 0}
    assert data["passed"] is True
    assert "runtime" not in data["checks"][0]
    assert "runtime" in report.to_dict()["checks"][0]


def test_load_suite_config_digests(tmp_path):
    path = tmp_path / "suite.json"
    path.write_text(json.dumps({"seed": 3, "blocks": []}), encoding="utf-8")
    cfg, digests = load_suite_config(path)
    assert cfg.seed == 3
    assert len(digests[str(path)]) == 64

    report = run_suite(path)
    assert report.seed == 3
    assert str(path) in report.input_digests


def test_load_suite_config_malformed(tmp_path):
    path = tmp_path / "suite.json"
    path.write_text("[1, 2", encoding="utf-8")
    with pytest.raises(ConstructionError):
        load_suite_config(path)
    with pytest.raises(ConstructionError):
        load_suite_config(tmp_path / "absent.json")


# ==================== EPW 附加记录 ====================

def epw_runner(**overrides) -> SuiteRunner:
    return SuiteRunner(SuiteConfig.from_dict({"blocks": ["epw"], **overrides}))


def test_dual_epw_needs_epw_block():
    report = run_suite({"blocks": [], "recipes": ["reye"]})
    assert report.get("recipe.reye.dual_epw") is None


@pytest.mark.slow
def test_dual_epw_recorded_per_recipe():
    runner = epw_runner(recipes=["reye", "random", "nonsense"])
    runner._block_recipes()
    rec = runner.report.get("recipe.reye.dual_epw")
    assert rec.status is CheckStatus.PASS
    assert (rec.observed["primal"] == DEGENERATE) == (rec.observed["dual"] == DEGENERATE)
    assert runner.report.get("recipe.random.dual_epw").status is CheckStatus.PARTIAL
    assert runner.report.get("recipe.nonsense.dual_epw") is None


def test_imported_ten_plane_curve(tmp_path):
    path = tmp_path / "reye.json"
    path.write_text(json.dumps(construct_reye_family(prime_field(5), 0).to_json()), encoding="utf-8")
    runner = epw_runner(imports=[str(path)])
    runner._block_imports()
    rec = runner.report.get("import.0.plane_curve")
    assert rec.status is CheckStatus.PARTIAL
    assert rec.observed["points_scanned"] == 31
    assert rec.observed["recipe"] == "reye"


def test_plane_curve_over_budget_is_skipped(tmp_path):
    path = tmp_path / "reye.json"
    path.write_text(json.dumps(construct_reye_family(prime_field(5), 0).to_json()), encoding="utf-8")
    runner = epw_runner(imports=[str(path)], budget=10)
    runner._block_imports()
    assert runner.report.get("import.0.plane_curve").observed == {"skipped": "budget", "needed": 31, "budget": 10}


@pytest.mark.slow
@pytest.mark.parametrize("kind", ["septic", "decimic"])
def test_coble_plane_curve_respects_budget(kind):
    runner = epw_runner()
    prime = runner._winger()[0]
    status, observed = runner._plane_curve_outcome(runner._coble_ten(kind))
    assert status is CheckStatus.PARTIAL
    q = prime ** 2
    assert observed["skipped"] == "budget"
    assert observed["needed"] == q * q + q + 1
