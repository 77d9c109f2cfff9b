"""Circuit depth of QAOA from the structure of a combinatorial problem."""

import json

from . import _core
from ._core import QaoaDepthError, __version__

__all__ = [
    "QaoaDepthError",
    "__version__",
    "analyze",
    "color",
    "dualize",
    "exit_code",
    "knapsack_problem",
    "maxcut_problem",
    "maxindset_problem",
    "read_dimacs_graph",
    "sat_problem",
    "to_dot",
    "verify",
    "vertex_cover_problem",
]


def _text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem)


def _num(value):
    return None if value is None else str(value)


def exit_code(error):
    """Process exit code carried by a QaoaDepthError."""
    return error.args[1] if len(error.args) > 1 else 1


def maxcut_problem(n, edges):
    return json.loads(_core.maxcut_problem(n, [tuple(e) for e in edges]))


def maxindset_problem(n, edges, penalty=None):
    return json.loads(_core.maxindset_problem(n, [tuple(e) for e in edges], _num(penalty)))


def vertex_cover_problem(n, edges, penalty=None):
    return json.loads(_core.vertex_cover_problem(n, [tuple(e) for e in edges], _num(penalty)))


def knapsack_problem(values, weights, capacity, preprocess=False):
    return json.loads(
        _core.knapsack_problem([str(v) for v in values], [str(w) for w in weights], str(capacity), preprocess)
    )


def sat_problem(clauses):
    return json.loads(_core.sat_problem([list(c) for c in clauses]))


def read_dimacs_graph(text):
    return json.loads(_core.read_dimacs_graph(text))


def dualize(problem, penalty=None):
    return json.loads(_core.dualize(_text(problem), _num(penalty)))


def analyze(problem, gate_width=None, iterations=1, merge=False, exact_limit=20, singletons="pack"):
    return json.loads(
        _core.analyze(_text(problem), gate_width, iterations, merge, exact_limit, singletons)
    )


def verify(problem, var_limit=20):
    return json.loads(_core.verify(_text(problem), var_limit))


def color(supports, method="exact"):
    return json.loads(_core.color([list(s) for s in supports], method))


def to_dot(problem, gate_width=None):
    return _core.to_dot(_text(problem), gate_width)
