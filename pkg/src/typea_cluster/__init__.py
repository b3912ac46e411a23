"""Cluster variables of type A with boundary coefficients.

Four combinatorial expansions of the numerator f^[i,j] (angle matchings,
maximal discrete subsets, minimal cuts, snake-graph matchings) and the
seed-mutation oracle they are checked against.
"""

from .cluster import exchange_graph, numerator_table
from .geometry import Triangulation, subpolygon, triangulation_from_json, triangulation_from_orientation
from .laurent import LaurentPoly
from .matchings import angle_formula, discrete_formula
from .qp import build_qp, cut_formula, minimal_cuts
from .quiver import quiver_of_triangulation
from .snake import build_snake_graph, ms_formula

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "Triangulation", "angle_formula", "build_qp", "build_snake_graph",
    "cut_formula", "discrete_formula", "exchange_graph", "minimal_cuts", "ms_formula",
    "numerator_table", "quiver_of_triangulation", "subpolygon", "triangulation_from_json",
    "triangulation_from_orientation",
]
