"""Witt decomposition of diagonal quadratic forms over Q and Q(sqrt(d)).

Field elements are strings in t, e.g. "-3-9*t" or "(1+t)/2", where t is sqrt(d).
"""

import json as _json

from . import _core
from ._core import QfwittError, adim, equivalent, field_name, hilbert, local_adim, normalize, singular_group

__all__ = [
    "QfwittError",
    "adim",
    "certificate",
    "decompose",
    "equivalent",
    "error_kind",
    "field_name",
    "hilbert",
    "isotropic",
    "local_adim",
    "normalize",
    "run",
    "singular_group",
]


def error_kind(exc):
    """The kind prefix of a QfwittError, e.g. "Parse" or "DegenerateForm"."""
    return str(exc).split(":", 1)[0]


def decompose(field, form, trace=False):
    """Dict with adim, witt_index and anisotropic_part (list of strings)."""
    return _json.loads(_core.decompose(field, list(form), trace))


def certificate(field, form, extra_primes=()):
    return _json.loads(_core.certificate(field, list(form), list(extra_primes)))


def isotropic(field, form):
    form = list(form)
    return adim(field, form) < len(form)


def run(command, text, verify=False, trace=False, json=False):
    """Runs a job file's text as the command-line tool would; returns (output, exit_code)."""
    return _core.run(command, text, verify, trace, json)
