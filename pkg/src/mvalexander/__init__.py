"""Multivariable Alexander polynomials of links and their one-variable multilink specializations."""

from .fox import alexander_polynomial, delta1
from .laurent import (
    LaurentPoly,
    UnitClass,
    canonicalize,
    exact_div,
    format_poly,
    gcd_multivar,
    involution,
    parse_poly,
    substitute_powers,
)
from .linkdiag import braid_closure, linking_matrix, load_diagram, parse_pd
from .multilink import MultilinkSpec, specialize_prop1
from .seifert import SeifertPair, delta_from_seifert

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "MultilinkSpec",
    "SeifertPair",
    "UnitClass",
    "alexander_polynomial",
    "braid_closure",
    "canonicalize",
    "delta1",
    "delta_from_seifert",
    "exact_div",
    "format_poly",
    "gcd_multivar",
    "involution",
    "linking_matrix",
    "load_diagram",
    "parse_pd",
    "parse_poly",
    "specialize_prop1",
    "substitute_powers",
]
