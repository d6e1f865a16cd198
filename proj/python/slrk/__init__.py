"""Python access to the SLRK core: exact tableaux, order conditions,
stability polynomials, the Lawson-type integrator and the search."""

from fractions import Fraction

from . import _core
from ._core import (
    Tableau,
    amplification,
    builtin_tableau_names,
    convergence_study,
    integrate,
    load_tableau,
    real_axis_boundary,
    region_boundary,
    search,
    tableau,
    verified_order,
)


def order_residuals(tab, order):
    return [(tree, Fraction(r)) for tree, r in _core.order_residuals(tab, order)]


def stability_coefficients(tab):
    return [Fraction(c) for c in _core.stability_coefficients(tab)]


__all__ = [
    "Tableau",
    "amplification",
    "builtin_tableau_names",
    "convergence_study",
    "integrate",
    "load_tableau",
    "order_residuals",
    "real_axis_boundary",
    "region_boundary",
    "search",
    "stability_coefficients",
    "tableau",
    "verified_order",
]
