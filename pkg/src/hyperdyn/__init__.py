"""Multivalued maps into finite hyperspaces: periods, colorings and bright colorings."""
from .coloring import (
    Coloring,
    brighten,
    conflict_graph,
    is_bright_color,
    is_color,
    is_n_bright,
    n_bright_ball,
    synth_coloring,
    verify_coloring,
)
from .dynamics import (
    MultiMap,
    OrbitGraph,
    UndefinedAt,
    extend_map,
    fix_points,
    internal_images,
    iterate,
    orbit_graph,
    period_at,
    periodic_set,
)
from .errors import HyperdynError
from .geometry import GridSpace, Resolution, Subspace, closure_eps, dist2, nearest_in
from .hyperspace import KSet, VietorisNbhd, ball_nbhd, hausdorff2, vietoris_member
from .surd import Surd, exact_sqrt

__version__ = "0.1.0"
