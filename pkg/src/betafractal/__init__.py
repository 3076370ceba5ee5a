"""Exact beta-space geometry and IFS attractors over formal Laurent polynomials."""
from .geometry import (
    Ball,
    BallUnion,
    Level,
    SumRollRegion,
    closure,
    in_level_set,
    is_swing_value,
    level_cmp,
    region_subset,
    roll,
    sum_roll,
    sum_roll_member,
)
from .hyperspace import IFS, ContractionMap, hyper_in, iterate_to_fixed
from .laurent import INF, Laurent, LiteralError, X, cmp, parse_laurent

__all__ = [
    "INF",
    "IFS",
    "Ball",
    "BallUnion",
    "ContractionMap",
    "Laurent",
    "Level",
    "LiteralError",
    "SumRollRegion",
    "X",
    "closure",
    "cmp",
    "hyper_in",
    "in_level_set",
    "is_swing_value",
    "iterate_to_fixed",
    "level_cmp",
    "parse_laurent",
    "region_subset",
    "roll",
    "sum_roll",
    "sum_roll_member",
]
__version__ = "0.1.0"
