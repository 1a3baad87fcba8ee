"""Exact flow-polytope volumes, Kostant partition functions and labeled Dyck paths."""

import json
from fractions import Fraction

from ._core import (
    car_ct_expression,
    count_dld,
    count_ld,
    count_prefixes,
    ct_evaluate,
    ehrhart,
    ehrhart_car_closed,
    ehrhart_ps_closed,
    enumerate_dld,
    enumerate_ld,
    enumerate_prefixes,
    ind,
    kpf,
    list_flows,
    project,
    ps_ct_expression,
    shift,
    suite_names,
    volume,
    volume_identity,
)
from . import _core


def ehrhart_fit(graph, k_max):
    """Coefficients of E_G(k) in ascending powers, as fractions."""
    return [Fraction(num, den) for num, den in _core.ehrhart_fit(graph, k_max)]


def verify(suite, max_n=None, max_k=None, workers=1):
    """Run a verification suite and return the parsed JSON report."""
    return json.loads(_core.verify_json(suite, max_n, max_k, workers))


__all__ = [
    "car_ct_expression",
    "count_dld",
    "count_ld",
    "count_prefixes",
    "ct_evaluate",
    "ehrhart",
    "ehrhart_car_closed",
    "ehrhart_fit",
    "ehrhart_ps_closed",
    "enumerate_dld",
    "enumerate_ld",
    "enumerate_prefixes",
    "ind",
    "kpf",
    "list_flows",
    "project",
    "ps_ct_expression",
    "shift",
    "suite_names",
    "verify",
    "volume",
    "volume_identity",
]
