"""Exact invariants, classification and comparison of graph algebras.

Thin wrappers over the C++ core; the *_json entry points are re-exposed as
dict-returning helpers.
"""

import json as _json

from ._graphalg import (  # noqa: F401
    CapacityError,
    DslParseError,
    Graph,
    census_json,
    classify_json,
    compare_json,
    compare_stabilized_json,
    dimension,
    elem_eval,
    graphs_isomorphic,
    invariants_json,
    stabilized_invariants_json,
)

__all__ = [
    "Graph",
    "DslParseError",
    "CapacityError",
    "parse_graph",
    "classify",
    "invariants",
    "stabilized_invariants",
    "compare",
    "compare_stabilized",
    "census",
    "graphs_isomorphic",
    "elem_eval",
    "dimension",
]


def parse_graph(dsl: str) -> Graph:
    return Graph.parse(dsl)


def classify(graph: Graph) -> dict:
    return _json.loads(classify_json(graph))


def invariants(graph: Graph) -> dict:
    return _json.loads(invariants_json(graph))


def stabilized_invariants(graph: Graph) -> dict:
    return _json.loads(stabilized_invariants_json(graph))


def compare(e: Graph, f: Graph, relation: str = "iso", algebra: str = "cstar") -> dict:
    return _json.loads(compare_json(e, f, relation, algebra))


def compare_stabilized(e: Graph, f: Graph, relation: str = "iso", algebra: str = "cstar") -> dict:
    return _json.loads(compare_stabilized_json(e, f, relation, algebra))


def census() -> dict:
    return _json.loads(census_json())
