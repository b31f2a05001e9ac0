"""Compact DG modules over k[T] with deg T = w - 1.

Labels are pairs (i, r) standing for S^i X_r. Modules travel as JSON text or
dicts in the schema used by the command-line tool.
"""

import json

from . import _core
from ._core import (
    DEFAULT_PRIME,
    SphercatError,
    ar_triangle,
    component_count,
    hom_dim,
    hom_table,
    quiver_dot,
    quiver_window,
    serre,
    tau,
)

__all__ = [
    "DEFAULT_PRIME",
    "SphercatError",
    "ar_triangle",
    "canonical_check",
    "closed_vs_oracle",
    "component_count",
    "decompose",
    "hom_dim",
    "hom_table",
    "indec_module",
    "quiver_dot",
    "quiver_window",
    "serre",
    "silting_check",
    "sparseness_evidence",
    "tau",
    "thick_closure",
    "truncate",
]


def _module_text(module):
    return module if isinstance(module, str) else json.dumps(module)


def indec_module(w, t, prime=DEFAULT_PRIME):
    return json.loads(_core.indec_module_json(w, tuple(t), prime))


def decompose(module):
    return _core.decompose(_module_text(module))


def truncate(module, threshold=0):
    return json.loads(_core.truncate(_module_text(module), threshold))


def closed_vs_oracle(w, **window):
    return json.loads(_core.closed_vs_oracle(w, **window))


def canonical_check(w, oracle=False, **window):
    return json.loads(_core.canonical_check(w, oracle, **window))


def sparseness_evidence(w, **window):
    return json.loads(_core.sparseness_evidence(w, **window))


def silting_check(w, n_max=12, oracle=True):
    return json.loads(_core.silting_check(w, n_max, oracle))


def thick_closure(w, seed, **window):
    return _core.thick_closure(w, tuple(seed), **window)
