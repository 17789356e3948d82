"""Representation varieties of surface groups.

Reports are returned as plain dictionaries with the same layout as the
``flatmod`` command-line tool.
"""

import json

from ._flatmod import (
    KernelRecognitionError,
    RelationError,
    UnsupportedError,
    commutator_preimage,
    coxeter_element,
    random_su,
    relation_value,
)
from . import _flatmod

__all__ = [
    "KernelRecognitionError",
    "RelationError",
    "UnsupportedError",
    "commutator_preimage",
    "connect",
    "coxeter_element",
    "involutions",
    "obstruction",
    "predict",
    "random_su",
    "relation_value",
    "sample_fiber",
    "selftest",
]


def predict(group, surface):
    """Component count for e.g. ``predict("SO:3", "nonorientable:5")``."""
    return json.loads(_flatmod._predict(group, surface))


def obstruction(representation, validate=True, tol=1e-8):
    """Obstruction class of a representation given as a dict (the JSON file layout)."""
    text = representation if isinstance(representation, str) else json.dumps(representation)
    return json.loads(_flatmod._obstruction(text, validate, tol))


def connect(group, crosscaps, central_k=0, targets=(), samples=101, tol=1e-9, seed=1):
    """Path certificate for the explicit in-fiber path (SU(n) only)."""
    return json.loads(_flatmod._connect(group, crosscaps, central_k, list(targets), samples, tol, seed))


def involutions(family, n):
    return json.loads(_flatmod._involutions(family, n))


def sample_fiber(group, surface, central_k=0, seed=1):
    return json.loads(_flatmod._sample_fiber(group, surface, central_k, seed))


def selftest(seed=1):
    return [{"name": n, "passed": p, "detail": d} for n, p, d in _flatmod._selftest(seed)]
