import json
from pathlib import Path

from click.testing import CliRunner

from poch_verify.cli import cli
from poch_verify.main import Config


def _invoke(tmp_path: Path, *args: str):
    return CliRunner().invoke(cli, ["--work-dir", str(tmp_path), *args])


def test_list(tmp_path):
    result = _invoke(tmp_path, "list")
    assert result.exit_code == 0
    # header and separator rows of the table
    assert len(result.output.splitlines()) >= 62
    assert "poch.lemma_ab.rozn" in result.output
    assert "registry.selftest" not in result.output


def test_list_filter(tmp_path):
    result = _invoke(tmp_path, "list", "--id-filter", "jacobi.upr.")
    assert result.exit_code == 0
    assert len(result.output.splitlines()) == 8 + 2


def test_list_no_match(tmp_path):
    result = _invoke(tmp_path, "list", "--id-filter", "zzz")
    assert result.exit_code == 0
    assert result.output == ""


def test_verify_passes(tmp_path):
    result = _invoke(tmp_path, "verify", "--id-filter", "poch.", "--max-n", "4")
    assert result.exit_code == 0
    assert "status: ok" in result.output
    assert (tmp_path / "debug.log").exists()


def test_verify_json_report(tmp_path):
    output = tmp_path / "report.json"
    result = _invoke(
        tmp_path, "verify", "--id-filter", "poch.stirling.", "--max-n", "4", "--format", "json", "--output", str(output)
    )
    assert result.exit_code == 0
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["config"]["max_n"] == 4
    assert report["config"]["id_filter"] == "poch.stirling."
    assert [entry["id"] for entry in report["reports"]] == [
        "poch.stirling.s1",
        "poch.stirling.s2",
        "poch.stirling.srising",
    ]
    assert report["summary"]["proved_exact"] == 3
    assert {entry["max_n"] for entry in report["reports"]} == {4}
    assert report["summary"]["failed"] == 0


def test_verify_failure_exits_one(tmp_path):
    output = tmp_path / "report.txt"
    result = _invoke(
        tmp_path, "verify", "--id-filter", "registry.selftest.sabotaged", "--max-n", "3", "--output", str(output)
    )
    assert result.exit_code == 1
    text = output.read_text(encoding="utf-8")
    assert "witness registry.selftest.sabotaged" in text
    assert text.rstrip().endswith("status: failed")


def test_verify_empty_selection(tmp_path):
    result = _invoke(tmp_path, "verify", "--id-filter", "zzz")
    assert result.exit_code == 0
    assert "status: ok-empty" in result.output


def test_verify_strict_empty_selection(tmp_path):
    result = _invoke(tmp_path, "verify", "--id-filter", "zzz", "--strict")
    assert result.exit_code == 2
    assert "no matching identities" in result.output


def test_verify_bad_precision(tmp_path):
    result = _invoke(tmp_path, "verify", "--precision-bits", "16")
    assert result.exit_code == 2
    assert "invalid precision context" in result.output


def test_verify_bad_max_n(tmp_path):
    assert _invoke(tmp_path, "verify", "--max-n", "0").exit_code == 2


def test_eval(tmp_path):
    result = _invoke(tmp_path, "eval", "rising(1/2, 3)")
    assert result.exit_code == 0
    assert result.output == "15/8\n"
    assert _invoke(tmp_path, "eval", "conn(0, 0, 1, 2, 3, 4)").output == "1\n"


def test_eval_errors(tmp_path):
    result = _invoke(tmp_path, "eval", "rising(1/2,)")
    assert result.exit_code == 2
    assert "parse error at position 12: expected a number" in result.output
    assert _invoke(tmp_path, "eval", "gamma(2)").exit_code == 2
    assert _invoke(tmp_path, "eval").exit_code == 2


def test_config_json_round_trip(tmp_path):
    config = Config(tmp_path)
    config.id_filter = "q."
    config.output = tmp_path / "out.json"
    config.format = "json"
    restored = Config.from_json(config.to_json())
    assert restored.work_dir == tmp_path
    assert restored.to_dict() == config.to_dict()


def test_verify_series_at_lower_precision(tmp_path):
    output = tmp_path / "report.json"
    result = _invoke(
        tmp_path,
        "verify",
        "--id-filter",
        "asc.qh.pm",
        "--precision-bits",
        "128",
        "--format",
        "json",
        "--output",
        str(output),
    )
    assert result.exit_code == 0
    (report,) = json.loads(output.read_text(encoding="utf-8"))["reports"]
    assert report["status"] == "passed_numeric"
    assert report["terms_used"] > 1


def test_verify_table_shows_max_n(tmp_path):
    result = _invoke(tmp_path, "verify", "--id-filter", "poch.stirling.s1", "--max-n", "3")
    assert result.exit_code == 0
    header, _, row, *_ = result.output.splitlines()
    assert "max n" in header
    assert row.split("|")[6].strip() == "3"
