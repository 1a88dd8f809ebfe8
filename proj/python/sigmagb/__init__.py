from ._core import (
    ParseError,
    Polynomial,
    Ring,
    certify,
    dehomogenize,
    gbasis,
    homogenize,
    load_problem,
    nf_mod_N,
    reduce,
    saturate,
    spoly,
)

__all__ = [
    "ParseError",
    "Polynomial",
    "Ring",
    "certify",
    "dehomogenize",
    "gbasis",
    "homogenize",
    "load_problem",
    "nf_mod_N",
    "reduce",
    "saturate",
    "spoly",
]
