"""Metric dimension and exchange property of non-zero component graphs."""

import json

from ._resolvdim import (  # noqa: F401
    ComponentGraph,
    ResolvdimError,
    canonical_basis,
    check_q2_correspondence,
    contains_v_basis,
    dim_of_powerset_intersection,
    enumerate_minimal_resolving_sets,
    intersection_edges,
    is_minimal,
    is_resolving,
    metric_dimension_formula,
    metric_dimension_search,
    non_exchange_witness,
    order_formula,
    partitions_coincide,
    realize_as_intersection_family,
    size_formula,
    twin_classes,
    vn_minus_one_set,
)
from . import _resolvdim


def resolving_report(graph, w):
    return json.loads(_resolvdim.resolving_report_json(graph, list(w)))


def exchange_report(graph, budget=100_000_000, allow_theorem=False):
    return json.loads(_resolvdim.exchange_report_json(graph, budget, allow_theorem))


def verify(qs, ns, budget=100_000_000, workers=1, seed=0):
    return json.loads(_resolvdim.verify_json(list(qs), list(ns), budget, workers, seed))
