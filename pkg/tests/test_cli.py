"""
命令行入口：子命令、JSON 输出与退出码
"""

import json

import pytest

from main import build_parser, main, parse_args


@pytest.fixture
def run(tmp_path):
    data_dir = tmp_path / "runtime"

    def _run(*argv):
        out = tmp_path / "result.json"
        if out.exists():
            out.unlink()
        code = main([*argv, "--json", str(out), "--data-dir", str(data_dir)])
        payload = json.loads(out.read_text(encoding="utf-8")) if out.exists() else None
        return code, payload

    return _run


def test_global_flags_anywhere():
    args = parse_args(["--seed", "4", "lattice", "gram", "--preset", "M10"])
    assert args.seed == 4
    args = parse_args(["lattice", "gram", "--preset", "M10", "--seed", "5"])
    assert args.seed == 5
    assert args.json == "-"
    assert args.budget is None


def test_parser_rejects_unknown_command():
    with pytest.raises(SystemExit) as e:
        build_parser().parse_args(["plot"])
    assert e.value.code == 2


def test_lattice_gram(run):
    code, payload = run("lattice", "gram", "--preset", "M10")
    assert code == 0
    assert payload["det"] == 13312
    assert payload["signature"] == [11, 0]


def test_lattice_smith_roundtrip(run, tmp_path):
    gram = tmp_path / "m11.json"
    assert run("lattice", "gram", "--preset", "M11", "--out", str(gram))[0] == 0
    code, payload = run("lattice", "smith", "--in", str(gram))
    assert code == 0
    assert payload["det"] == 2 ** 11 * 14


def test_ten_construct_and_verify(run, tmp_path):
    cfg = tmp_path / "reye.json"
    code, payload = run("ten", "construct", "--recipe", "reye", "--p", "5", "--out", str(cfg))
    assert code == 0
    assert len(payload["planes"]) == 10

    code, report = run("ten", "verify", "--in", str(cfg))
    assert code == 0
    assert report["incident_pairs"] == 45

    code, payload = run("ten", "tangent-rank", "--in", str(cfg))
    assert code == 0
    assert payload["rank"] + payload["corank"] == 45


def test_random_planes_fail_verification(run, tmp_path):
    cfg = tmp_path / "random.json"
    assert run("ten", "construct", "--recipe", "random", "--out", str(cfg))[0] == 0
    code, report = run("ten", "verify", "--in", str(cfg))
    assert code == 1
    assert report["incident_pairs"] < 45


def test_epw_corank(run, tmp_path):
    cfg = tmp_path / "reye.json"
    run("ten", "construct", "--recipe", "reye", "--p", "5", "--out", str(cfg))
    code, payload = run("epw", "corank", "--in", str(cfg), "--point", "1,0,0,0,0,0")
    assert code == 0
    assert payload["corank"] >= 0
    assert run("epw", "corank", "--in", str(cfg), "--point", "1,0,0")[0] == 2


def test_toolkit_errors_exit_two(run, tmp_path):
    assert run("ten", "construct", "--recipe", "3331", "--p", "31")[0] == 2
    assert run("lattice", "smith", "--in", str(tmp_path / "missing.json"))[0] == 2


def test_bad_settings_file(tmp_path):
    settings = tmp_path / "settings.json"
    settings.write_text("{", encoding="utf-8")
    assert main(["lattice", "gram", "--preset", "M10", "--settings", str(settings),
                 "--data-dir", str(tmp_path / "runtime"), "--json", str(tmp_path / "out.json")]) == 2


def test_suite_lattice_block(run, tmp_path):
    config = tmp_path / "suite.json"
    config.write_text(json.dumps({"seed": 0, "recipes": [], "imports": []}), encoding="utf-8")
    code, report = run("suite", "--config", str(config), "--blocks", "lattice", "--no-runtime", "--freeze")
    assert code == 0
    assert report["passed"] is True
    assert all("runtime" not in c for c in report["checks"])
    assert (tmp_path / "runtime" / "baseline.json").exists()
