import json

import pytest

from weylnoise.cli import main
from weylnoise.config import ConfigError, SuiteConfig, load_config_file, merge_config
from weylnoise.report import emit_report, report_to_dict, run_suites
from weylnoise.suites import ANCHORS, SUITE_NAMES

FAST = SuiteConfig(suites="group_law,white_noise")


def test_config_file_parsing(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nseed = 7\n\ntol_exact = 1e-9  # trailing\ndensity = printed\n")
    values = load_config_file(cfg)
    assert values == {"seed": 7, "tol_exact": 1e-9, "density": "printed"}
    merged = merge_config(values, {"seed": 11, "density": None})
    assert merged.seed == 11 and merged.density == "printed"


@pytest.mark.parametrize(
    "body",
    [
        "seed 7",
        "seed = 7\nseed = 8",
        "unknown_key = 1",
        "seed = notanint",
        "= 3",
    ],
)
def test_config_file_rejections(tmp_path, body):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(body)
    with pytest.raises(ConfigError):
        load_config_file(cfg)


def test_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig(density="gaussian")
    with pytest.raises(ConfigError):
        SuiteConfig(r_min=2.0, r_max=1.0)
    with pytest.raises(ConfigError):
        SuiteConfig(tol_exact=-1e-10)
    assert SuiteConfig(suites="").selected_suites() == ()
    assert SuiteConfig(suites="all").selected_suites() == ()
    assert SuiteConfig(suites="fiber, clifford").selected_suites() == ("fiber", "clifford")


def test_unknown_suite_is_config_error():
    with pytest.raises(ConfigError):
        run_suites(SuiteConfig(suites="group_law,nosuch"))


def test_empty_report_is_valid():
    d = report_to_dict([], FAST)
    assert d["summary"] == {"total": 0, "passed": 0, "failed": 0}
    parsed = json.loads(emit_report(d, "json"))
    assert parsed == d
    text = emit_report(d, "text")
    assert "0 checks" in text
    with pytest.raises(ConfigError):
        emit_report(d, "yaml")


@pytest.fixture(scope="module")
def fast_reports():
    return run_suites(FAST)


def test_selected_suites_run_in_registry_order(fast_reports):
    assert [r.name for r in fast_reports] == ["group_law", "white_noise"]


def test_anchors_come_from_the_registry(fast_reports):
    known = set(ANCHORS.values())
    ids = []
    for rep in fast_reports:
        for c in rep.checks:
            assert c.anchor in known
            assert c.comparison in ("max", "min")
            ids.append(c.check_id)
    assert len(ids) == len(set(ids))


def test_subset_run_reproduces_full_substream(fast_reports):
    solo = run_suites(SuiteConfig(suites="white_noise"))
    a = {c.check_id: c.discrepancy for c in solo[0].checks}
    b = {
        c.check_id: c.discrepancy
        for rep in fast_reports
        if rep.name == "white_noise"
        for c in rep.checks
    }
    assert a == b


def test_json_roundtrip_and_count_agreement(fast_reports):
    d = report_to_dict(fast_reports, FAST)
    parsed = json.loads(emit_report(d, "json"))
    assert parsed == d
    text = emit_report(d, "text")
    s = d["summary"]
    assert f"{s['total']} checks, {s['passed']} passed, {s['failed']} failed" in text
    assert text.count("\n  pass") + text.count("\n  fail") == s["total"]


def test_rows_sorted_by_check_id(fast_reports):
    d = report_to_dict(fast_reports, FAST)
    for suite in d["suites"]:
        ids = [row["check_id"] for row in suite["checks"]]
        assert ids == sorted(ids)


def test_determinism_modulo_timing(fast_reports):
    again = run_suites(FAST)
    a = emit_report(report_to_dict(fast_reports, FAST, include_timing=False), "json")
    b = emit_report(report_to_dict(again, FAST, include_timing=False), "json")
    assert a == b
    with_timing = report_to_dict(fast_reports, FAST)
    assert all("runtime_ms" in row for s in with_timing["suites"] for row in s["checks"])
    without = report_to_dict(fast_reports, FAST, include_timing=False)
    assert all("runtime_ms" not in row for s in without["suites"] for row in s["checks"])


def test_cli_exit_codes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(
        ["--suite", "white_noise", "--output", "json", "--out", str(out)]
    )
    assert code == 0
    parsed = json.loads(out.read_text())
    assert parsed["summary"]["failed"] == 0
    assert parsed["config"]["suites"] == "white_noise"

    assert main(["--suite", "nosuch"]) == 2
    err = capsys.readouterr().err
    assert "unknown suite" in err

    bad = tmp_path / "bad.cfg"
    bad.write_text("mystery = 1\n")
    assert main(["--config", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "line 1" in err

    missing = tmp_path / "missing.cfg"
    assert main(["--config", str(missing)]) == 2

    assert main(["--suite", "white_noise", "--tol-quad", "1e-15"]) == 1


def test_cli_flags_override_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("seed = 3\nsuites = white_noise\n")
    out = tmp_path / "r.json"
    code = main(
        ["--config", str(cfg), "--seed", "99", "--output", "json", "--out", str(out)]
    )
    assert code == 0
    parsed = json.loads(out.read_text())
    assert parsed["config"]["seed"] == 99
    assert parsed["config"]["suites"] == "white_noise"


def test_suite_flag_repeats(tmp_path):
    out = tmp_path / "r.json"
    code = main(
        [
            "--suite",
            "white_noise",
            "--suite",
            "group_law",
            "--output",
            "json",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    parsed = json.loads(out.read_text())
    assert [s["name"] for s in parsed["suites"]] == ["group_law", "white_noise"]
    assert set(SUITE_NAMES) >= {s["name"] for s in parsed["suites"]}
