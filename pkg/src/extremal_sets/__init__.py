"""Exact toolkit for intersecting set families: constructions, bounds, oracles, profile polytopes."""

from .bounds import (
    AkResult,
    ak,
    ak_term,
    ekr_t_bound,
    ekr_uniform_bound,
    katona_bound,
    nonuniform_intersecting_bound,
    union_t_bound,
    uv_bound,
)
from .constructions import (
    ak_family,
    ekr_counterexample,
    halving_family,
    katona_family,
    korner_family,
    star,
    star_plus,
    uniform_star,
    union_t_family,
)
from .core import (
    CapacityError,
    DomainError,
    InvalidFamilyError,
    SetFamily,
    binomial,
    canonicalize,
    format_family,
    parse_family,
    profile,
)
from .predicates import (
    ViolationWitness,
    is_t_intersecting,
    is_union_t_intersecting,
    is_uv_union_intersecting,
)

__version__ = "0.1.0"

__all__ = [
    "AkResult",
    "CapacityError",
    "DomainError",
    "InvalidFamilyError",
    "SetFamily",
    "ViolationWitness",
    "ak",
    "ak_family",
    "ak_term",
    "binomial",
    "canonicalize",
    "ekr_counterexample",
    "ekr_t_bound",
    "ekr_uniform_bound",
    "format_family",
    "halving_family",
    "is_t_intersecting",
    "is_union_t_intersecting",
    "is_uv_union_intersecting",
    "katona_bound",
    "katona_family",
    "korner_family",
    "nonuniform_intersecting_bound",
    "parse_family",
    "profile",
    "star",
    "star_plus",
    "uniform_star",
    "union_t_bound",
    "union_t_family",
    "uv_bound",
]
