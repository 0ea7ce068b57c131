"""Graph monoids of row-infinite graphs.

Graphs, elements, morphisms and chains are plain dicts in the same JSON
layout the ``graphmonoid`` command-line tool reads; results come back as
dicts as well.
"""

import json as _json

from . import _core
from ._core import BudgetExhausted, Error, InvalidInput, TruncationError

__all__ = [
    "BudgetExhausted",
    "Error",
    "InvalidInput",
    "TruncationError",
    "validate",
    "present",
    "normal_form",
    "equal",
    "desingularize",
    "phi",
    "psi",
    "ck_check",
    "induced_map",
    "colimit",
    "continuity_check",
    "oracle_check",
]


def _dump(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def validate(graph):
    """Report structural violations and the class of every vertex."""
    return _json.loads(_core.validate(_dump(graph)))


def present(graph):
    """Generators and defining relations of the graph monoid."""
    return _json.loads(_core.present(_dump(graph)))


def normal_form(graph, element, budget=None):
    return _json.loads(_core.normal_form(_dump(graph), _dump(element), budget))


def equal(graph, lhs, rhs, budget=None):
    """Decide lhs == rhs; the result carries a replayable certificate."""
    return _json.loads(_core.equal(_dump(graph), _dump(lhs), _dump(rhs), budget))


def desingularize(graph, level):
    return _json.loads(_core.desingularize(_dump(graph), level))


def phi(graph, element, level=None):
    """Image in the desingularized graph; picks the smallest fitting level by default."""
    return _json.loads(_core.phi(_dump(graph), _dump(element), level))


def psi(graph, element, level):
    return _json.loads(_core.psi(_dump(graph), _dump(element), level))


def ck_check(source, target, morphism):
    return _json.loads(_core.ck_check(_dump(source), _dump(target), _dump(morphism)))


def induced_map(source, target, morphism):
    return _json.loads(_core.induced_map(_dump(source), _dump(target), _dump(morphism)))


def colimit(chain):
    return _json.loads(_core.colimit(_dump(chain)))


def continuity_check(chain, degree=3, budget=None):
    return _json.loads(_core.continuity_check(_dump(chain), degree, budget))


def oracle_check(graph, samples=50, max_degree=5, seed=0, budget=None):
    return _json.loads(_core.oracle_check(_dump(graph), samples, max_degree, seed, budget))
