"""Monochromatic subgraph counts under uniform random colorings.

Thin Python layer over the C++ core: exact rationals come back as
``fractions.Fraction`` and limit laws as dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Graph,
    MonochromeError,
    birthday_no_match,
    birthday_threshold,
    count_cycles,
    count_subgraph,
    deficiency,
    delta_conditional_mgf,
    eigenvalues,
    gadget_char_function,
    is_union_of_stars,
    ks_two_sample,
    mono_count,
    run_cli,
    simulate,
    tuple_census,
    tv_distance,
    usn_ratio,
    weighted_chisq_mgf,
)

__version__ = _core.__version__

__all__ = [
    "Graph",
    "MonochromeError",
    "birthday_no_match",
    "birthday_threshold",
    "conditional_moment",
    "count_cycles",
    "count_subgraph",
    "deficiency",
    "delta_conditional_mgf",
    "eigenvalues",
    "exact_distribution",
    "fourth_moment_report",
    "gadget_char_function",
    "gamma",
    "is_union_of_stars",
    "ks_two_sample",
    "law_cdf",
    "law_pmf",
    "limit_for",
    "mono_count",
    "run_cli",
    "sample_law",
    "simulate",
    "stirling_moment",
    "tuple_census",
    "tv_distance",
    "usn_ratio",
    "weighted_chisq_mgf",
]


def _law_text(law):
    return law if isinstance(law, str) else json.dumps(law)


def gamma(graph):
    """Fractional stable number and an optimal half-integral phi."""
    value, phi = _core.gamma(graph)
    return Fraction(value), phi


def exact_distribution(graph, c, stat="edges"):
    return {k: Fraction(p) for k, p in _core.exact_distribution(graph, c, stat).items()}


def stirling_moment(m, c, k):
    return Fraction(_core.stirling_moment(m, c, k))


def conditional_moment(graph, kind, order, c):
    out = _core.conditional_moment(graph, kind, order, c)
    for key in ("unscaled", "scale_base", "scale_exponent"):
        out[key] = Fraction(out[key])
    if out["value"] is not None:
        out["value"] = Fraction(out["value"])
    return out


def fourth_moment_report(graph, c):
    return {k: Fraction(v) for k, v in _core.fourth_moment_report(graph, c).items()}


def limit_for(source, colors=None, ratio=None):
    """Limit law for a Graph, a family spec string or an edge-list path.

    Pass ``colors`` for a fixed color count or ``ratio`` (lim m/c, may be
    ``float('inf')``) for the growing regime.
    """
    if isinstance(source, Graph):
        text = _core.limit_for_graph(source, colors, ratio)
    else:
        text = _core.limit_for(source, colors, ratio)
    return json.loads(text)


def sample_law(law, count, seed=0):
    return _core.sample_law(_law_text(law), count, seed)


def law_cdf(law, x):
    return _core.law_cdf(_law_text(law), x)


def law_pmf(law, k):
    return _core.law_pmf(_law_text(law), k)
