"""Exact algebra of hesitant fuzzy sets.

Degrees are exact: they are returned as ``fractions.Fraction`` and accepted as
strings (``"0.45"``, ``"1/3"``), ints or Fractions.
"""

import json

from ._core import (
    Document,
    DocumentError,
    Error,
    Hfe,
    UniverseMismatch,
    best_q,
    complement,
    evaluate_law,
    hunt,
    intersection,
    laws,
    load_document,
    parse_document,
    relation,
    relation_profile,
    union,
)
from . import _core

__all__ = [
    "Document",
    "DocumentError",
    "Error",
    "Hfe",
    "UniverseMismatch",
    "best_q",
    "complement",
    "evaluate_law",
    "hunt",
    "intersection",
    "laws",
    "load_document",
    "parse_document",
    "rank",
    "relation",
    "relation_profile",
    "run_suite",
    "union",
]


def rank(document, set_name, kind="m"):
    """Layers, ties and unresolved pairs of the elements of one set."""
    return json.loads(_core._rank_json(document, set_name, kind))


def run_suite(seed=20240917, trials=10_000, grid=100, threads=1, laws=None):
    """Runs the law suite and returns the report as a dict."""
    return json.loads(_core._run_suite_json(seed, trials, grid, threads, list(laws or [])))
