"""Exact verification of Lie superalgebra constructions.

Sources are ``builtin:<name>`` or paths to JSON documents. Reports come back
as dictionaries with checks sorted by name.
"""

import json

from . import _core
from ._core import SuperlieError, builtin_algebras, h_spectrum, normalize_scalar

__all__ = [
    "SuperlieError",
    "affinize",
    "algebra_document",
    "builtin_algebras",
    "decompose",
    "h_spectrum",
    "module_document",
    "normalize_scalar",
    "twist",
    "verify",
]


def _source(s):
    s = str(s)
    if s.startswith("builtin:") or "/" in s or s.endswith(".json"):
        return s
    return "builtin:" + s


def algebra_document(source):
    return json.loads(_core.algebra_document(_source(source)))


def module_document(source):
    return json.loads(_core.module_document(_source(source)))


def verify(source):
    """Full pipeline plus the cross-module check when the pipeline passes."""
    return json.loads(_core.verify(_source(source)))


def decompose(source):
    return json.loads(_core.decompose(_source(source)))


def affinize(base="osp12", rank=1, q=None, window=3, samples=500, seed=0):
    """q is a rank x rank matrix of exact scalars (ints or strings); None means trivial."""
    rows = [[str(v) for v in row] for row in q] if q is not None else []
    return json.loads(_core.affinize(_source(base), rank, rows, window, samples, seed))


def twist(m=1, n=1, zero=False, zero_prime=False, kind="auto", window=4, torus_window=1, samples=500, seed=0):
    return json.loads(_core.twist(m, n, zero, zero_prime, kind, window, torus_window, samples, seed))
