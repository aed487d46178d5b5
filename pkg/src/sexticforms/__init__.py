"""Exact computation of degree-2 Siegel modular forms from covariants of
binary sextics: classical invariant theory, theta expansions, the
substitution map from covariants to forms, ring verification at fixed
truncation, and positive-characteristic invariants."""

__version__ = "0.1.0"

__all__ = [
    "arith",
    "covariants",
    "theta",
    "qexp",
    "numap",
    "ringlab",
    "modp",
    "cli",
    "errors",
]
