"""Liaison, Rao modules and ACM sheaves over GF(p)."""

from ._gliaison import (
    GenericityError,
    ParseError,
    Ring,
    Subscheme,
    analyze,
    ci_link,
    link,
    mf_verify,
    run_scenario,
    scenarios,
)

__all__ = [
    "GenericityError",
    "ParseError",
    "Ring",
    "Subscheme",
    "analyze",
    "ci_link",
    "link",
    "mf_verify",
    "run_scenario",
    "scenarios",
]
