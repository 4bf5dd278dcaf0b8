"""Exact structure analysis of finite-dimensional associative algebras.

Thin wrapper over the native module: the heavy operations run in C++ and
exchange canonical JSON, which this package decodes into plain dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    InputError,
    NeedsSuppliedDataError,
    NotSplitError,
    RetryExhaustedError,
    ValidationError,
    analyze_file as _analyze_file,
    analyze_json as _analyze_json,
    bgg_json as _bgg_json,
    example_json as _example_json,
    rref_q as _rref_q,
    validate_json as _validate_json,
)

__all__ = [
    "InputError",
    "ValidationError",
    "NotSplitError",
    "NeedsSuppliedDataError",
    "RetryExhaustedError",
    "example",
    "analyze",
    "analyze_path",
    "validate",
    "bgg",
    "rref",
]


def _as_text(bundle):
    if isinstance(bundle, str):
        return bundle
    return _json.dumps(bundle)


def example(name, field="Q", n=2, c="0", p=3):
    """Build a named example; returns the algebra file as a dict.

    Names: group-c2, group-c3, group-s3, smash, rrca-c2, usl2.
    """
    return _json.loads(_example_json(name, field=field, n=n, c=c, p=p))


def analyze(bundle, seed=0, with_frobenius=True):
    """Run the full analysis pipeline on a bundle dict (or JSON text)."""
    return _json.loads(_analyze_json(_as_text(bundle), seed, with_frobenius))


def analyze_path(path, seed=0, with_frobenius=True):
    return _json.loads(_analyze_file(path, seed, with_frobenius))


def validate(bundle):
    """Check the algebraic identities of a presentation; returns {ok, message}."""
    return _json.loads(_validate_json(_as_text(bundle)))


def bgg(bundle, vermas, seed=0):
    """Multiplicity matrix of the named modules plus the reciprocity checks."""
    return _json.loads(_bgg_json(_as_text(bundle), list(vermas), seed))


def rref(rows):
    """Reduced row echelon form over Q; entries are scalar texts like '3/4'."""
    return _json.loads(_rref_q([[str(x) for x in row] for row in rows]))
