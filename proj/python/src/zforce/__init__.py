"""Zero forcing number and iteration index by exact search."""

import json as _json

from ._core import (
    BudgetExceeded,
    Graph,
    build_family,
    closure,
    families,
    generic_kernel_rounds,
    is_zero_forcing_set,
    iteration_index,
    llfc,
    parse_edge_list,
    run_forcing,
    solve,
    zero_forcing_number,
)
from ._core import _report_json


def report(graph, family=None, params=None, workers=1, budget=None):
    """Z, I, witnesses, bounds and the closed-form comparison as a dict."""
    return _json.loads(_report_json(graph, family, params, workers, budget))


__all__ = [
    "BudgetExceeded",
    "Graph",
    "build_family",
    "closure",
    "families",
    "generic_kernel_rounds",
    "is_zero_forcing_set",
    "iteration_index",
    "llfc",
    "parse_edge_list",
    "report",
    "run_forcing",
    "solve",
    "zero_forcing_number",
]
