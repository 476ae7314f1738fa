"""Heterogeneous mixture fitting via Hermite moment matching and polynomial ideals."""

from _hermix import (
    HermixError,
    eda,
    family_cdf,
    fit,
    gen,
    gram_charlier_coeffs,
    he_eval,
    he_monomial_coeffs,
    ks_statistic,
    raw_moments,
    roots,
)

__all__ = [
    "HermixError",
    "eda",
    "family_cdf",
    "fit",
    "gen",
    "gram_charlier_coeffs",
    "he_eval",
    "he_monomial_coeffs",
    "ks_statistic",
    "raw_moments",
    "roots",
]
