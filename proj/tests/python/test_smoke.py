import json
import os
import subprocess

import pytest

import aibomkit


def test_validate_fixtures():
    verdict, diagnostics = aibomkit.validate(aibomkit.fixture_text("simplehtr"))
    assert verdict == "conformant"
    assert diagnostics == []

    verdict, diagnostics = aibomkit.validate(aibomkit.fixture_text("co2"))
    assert verdict == "non-conformant"
    assert [d["ruleId"] for d in diagnostics] == ["DS-M-10"]
    assert diagnostics[0]["path"] == "relationship:hasConcludedLicense"


def test_profile_selection_downgrades():
    verdict, _ = aibomkit.validate(aibomkit.fixture_text("co2"), profile="ai")
    assert verdict == "conformant with notes"


def test_canonicalize_is_idempotent():
    text = aibomkit.fixture_text("full")
    once = aibomkit.canonicalize(text)
    assert aibomkit.canonicalize(once) == once
    shuffled = json.dumps(dict(reversed(list(json.loads(text).items()))))
    assert aibomkit.canonicalize(shuffled) == once


def test_report():
    assert "eu-ai-act" in aibomkit.framework_ids()
    report = aibomkit.report(aibomkit.fixture_text("full"), "eu-ai-act")
    summary = report["summary"]
    assert summary["satisfied"] == summary["total"] - summary["notMappable"]
    assert "| AIA-01: " in aibomkit.report(aibomkit.fixture_text("full"), "eu-ai-act", "markdown")


def test_scaffold_has_no_errors():
    for kind in ("ai", "dataset"):
        _, diagnostics = aibomkit.validate(aibomkit.scaffold(kind))
        assert all(d["severity"] != "error" for d in diagnostics)


def test_errors_are_raised():
    with pytest.raises(aibomkit.AibomError):
        aibomkit.validate("{")
    with pytest.raises(aibomkit.AibomError):
        aibomkit.report("[]", "no-such-framework")
    with pytest.raises(aibomkit.AibomError):
        aibomkit.fixture_text("no-such-fixture")


def test_run_cli_in_process():
    code, out, _ = aibomkit.run_cli(["scaffold", "ai"])
    assert code == 0
    assert json.loads(out)["@graph"]
    code, _, err = aibomkit.run_cli(["validate", "/nonexistent/file.json"])
    assert code == 2
    assert "cannot read" in err


@pytest.mark.skipif("AIBOMKIT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary(tmp_path):
    path = tmp_path / "co2.json"
    path.write_text(aibomkit.fixture_text("co2"))
    result = subprocess.run([os.environ["AIBOMKIT_CLI"], "validate", str(path)], capture_output=True)
    assert result.returncode == 1
