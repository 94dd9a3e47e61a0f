"""Counts, label sums and structure of the {4,q} Pascal pyramid."""

from ._core import (
    Level,
    build_level,
    char_poly_p6,
    char_poly_ps,
    closed_form_counts,
    closed_form_shat,
    counts,
    empirical_ratio,
    euclidean_counts,
    gf,
    gf_series,
    growth_ratio,
    level_size_bound,
    oracle_label,
    sums,
    sums_by_matrix,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Level",
    "build_level",
    "char_poly_p6",
    "char_poly_ps",
    "closed_form_counts",
    "closed_form_shat",
    "counts",
    "empirical_ratio",
    "euclidean_counts",
    "gf",
    "gf_series",
    "growth_ratio",
    "level_size_bound",
    "oracle_label",
    "sums",
    "sums_by_matrix",
    "verify",
    "__version__",
]
