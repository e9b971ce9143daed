"""Exact border (relevant) points for the nearest-neighbor classifier."""
from .datagen import GenSpec, generate
from .errors import CoincidentPoints, DimensionMismatch, DuplicateConflict, EmptySet, InvalidSpec
from .extreme import SeparationResult, extreme_points, separate_from_hull
from .geometry import EPS, InvertedSet, LabeledPointSet, build_inverted_set, invert_around, squared_distance
from .oracle import (
    Certificate,
    brute_force_border,
    is_delaunay_neighbor,
    nn_classify,
    verify_certificate,
)
from .search import (
    BorderResult,
    EdgeList,
    euclidean_mst,
    find_border_points,
    find_border_points_baseline,
    inversion_method,
    mst_bichromatic_seed,
)

__version__ = "0.1.0"
