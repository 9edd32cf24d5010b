"""AI and dataset bill-of-materials toolkit."""

import json

from . import _core
from ._core import AibomError, canonicalize, fixture_names, fixture_text, framework_ids, run_cli, scaffold

__all__ = [
    "AibomError",
    "canonicalize",
    "fixture_names",
    "fixture_text",
    "framework_ids",
    "report",
    "run_cli",
    "scaffold",
    "validate",
]


def validate(text, profile="auto"):
    """Return (verdict, list of diagnostic dicts)."""
    verdict, diagnostics = _core.validate(text, profile)
    return verdict, json.loads(diagnostics)


def report(text, framework, format="json"):
    out = _core.report(text, framework, format)
    return json.loads(out) if format == "json" else out
