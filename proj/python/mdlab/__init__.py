"""Python access to the mdlab core.

Report-producing functions return plain dicts decoded from the JSON the C++
side emits; graphs are ``Graph`` objects or graph6 strings.
"""

import json

from . import _core
from ._core import CapacityError, DomainError, Graph, GraphError, ParseError

__all__ = [
    "CapacityError",
    "DomainError",
    "Graph",
    "GraphError",
    "ParseError",
    "build",
    "census",
    "check",
    "closure",
    "enumerate_connected",
    "family_names",
    "md",
    "md_oracle",
    "product",
    "run_cli",
    "threshold_f",
    "threshold_g",
    "verify_coloring",
]


def _graph(g):
    return Graph.from_graph6(g) if isinstance(g, str) else g


def md(graph, node_budget=0, time_budget_ms=0):
    """md(G) report: value, bounds, certificate colors and stats."""
    return json.loads(_core.md(_graph(graph), node_budget, time_budget_ms))


def md_oracle(graph):
    return _core.md_oracle(_graph(graph))


def verify_coloring(graph, colors):
    """Colors follow the sorted edge order of ``Graph.edges``."""
    return json.loads(_core.verify_coloring(_graph(graph), list(colors)))


def closure(graph):
    return json.loads(_core.closure(_graph(graph)))


def build(family, *params):
    return _core.build(family, list(params))


def family_names():
    return _core.family_names()


def product(g, h, kind="cartesian"):
    return _core.product(_graph(g), _graph(h), kind)


def threshold_f(n, r):
    return _core.threshold_f(n, r)


def threshold_g(n, r):
    return _core.threshold_g(n, r)


def enumerate_connected(n):
    """graph6 strings, one per isomorphism class of connected graphs of order n."""
    return _core.enumerate_connected(n)


def census(which, n, r=0, jobs=1):
    """Threshold reports for f or g at order n; r = 0 means every r."""
    return json.loads(_core.census(which, n, r, jobs))


def check(suite, max_order=0, seed=1):
    return json.loads(_core.check(suite, max_order, seed))


def run_cli(args, input=""):
    """(exit code, stdout, stderr) of one command-line invocation."""
    return _core.run_cli(list(args), input)
