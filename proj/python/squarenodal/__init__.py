"""Nodal sets of Dirichlet eigenfunctions on the square."""

from ._core import (
    count_nodal_domains,
    courant_sharp,
    courant_sharp_candidates,
    critical_zeroes,
    eval,
    grad,
    parse_theta,
    render_svg,
    run_cli,
    special_theta,
    spectrum,
    summary_json,
    sweep,
)

__all__ = [
    "count_nodal_domains",
    "courant_sharp",
    "courant_sharp_candidates",
    "critical_zeroes",
    "eval",
    "grad",
    "parse_theta",
    "render_svg",
    "run_cli",
    "special_theta",
    "spectrum",
    "summary_json",
    "sweep",
]
