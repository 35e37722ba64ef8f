"""Exact enumeration of pattern and submap occurrences in random planar maps."""

from . import kernels
from .asymptotics import (
    PuiseuxExpansion,
    a_coeff,
    expectation_pattern,
    expectation_submap,
    kappa,
    singular_S,
    singular_T,
    transfer_asymptotic,
)
from .counting import F_ell, M_bivariate, M_closed_form, M_univariate, count_table, local_pattern_probability, m_count, p_star, xi
from .errors import *  # noqa: F401,F403
from .maps import CombinatorialMap, PatternDescriptor, canonical_code, descriptor, load_map, parse_map, validate
from .occurrence import F_pattern, OccurrenceSeries, S_submap, T_pattern
from .oracle import count_marked_patterns, count_marked_submaps, count_pure_gon, enumerate_maps
from .series import UPoly, UZSeries, ZSeries, differentiate, divide_exact, sqrt_series

__version__ = "0.1.0"
