"""Exact spectral tools for graphs with few eigenvalues outside {2, -1}.

Every function mirrors a subcommand of the ``exspec`` command-line tool and
returns the same JSON document, decoded into Python objects.
"""

import json as _json

from . import _exspec
from ._exspec import EnumerationCapError, Graph6Error

__all__ = [
    "build",
    "graph6",
    "spectrum",
    "classify",
    "certify",
    "quotient_polys",
    "cospectral",
    "ds",
    "survey",
    "connected_graphs",
    "canonical_form",
    "char_poly",
    "acceptance",
    "Graph6Error",
    "EnumerationCapError",
]


def build(descriptor):
    """{"descriptor", "order", "graph6"} for a family descriptor such as "I(3,4)"."""
    return _json.loads(_exspec.build(descriptor))


def graph6(descriptor):
    return build(descriptor)["graph6"]


def spectrum(g6, numeric=False, tolerance=1e-6):
    return _json.loads(_exspec.spectrum(g6, numeric, tolerance))


def classify(g6):
    return _json.loads(_exspec.classify(g6))


def certify(descriptor):
    return _json.loads(_exspec.certify(descriptor))


def quotient_polys():
    return _json.loads(_exspec.quotient_polys())


def cospectral(descriptor):
    return _json.loads(_exspec.cospectral(descriptor))


def ds(descriptor):
    return _json.loads(_exspec.ds(descriptor))


def survey(n, jobs=1, allow_n10=False):
    return _json.loads(_exspec.survey(n, jobs, allow_n10))


def connected_graphs(n, allow_n10=False):
    """graph6 strings of all connected graphs on n vertices, one per isomorphism class."""
    return _exspec.connected_graphs(n, allow_n10)


def canonical_form(g6):
    return _exspec.canonical_form(g6)


def char_poly(g6):
    """Characteristic polynomial coefficients, constant term first, as Python ints."""
    return [int(c) for c in _exspec.char_poly(g6)]


def acceptance(only=(), jobs=1):
    return _json.loads(_exspec.acceptance(list(only), jobs))
