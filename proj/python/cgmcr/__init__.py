"""Python bindings for the cgmcr conflict-analysis library."""

from ._core import (
    CONCEPTS,
    Conflict,
    ParseError,
    Report,
    CgmcrError,
    export_dot,
    fixture_names,
    load_fixture,
    serialize_model,
    validate,
)

__all__ = [
    "CONCEPTS",
    "Conflict",
    "ParseError",
    "Report",
    "CgmcrError",
    "export_dot",
    "fixture_names",
    "load_fixture",
    "serialize_model",
    "validate",
]
