"""Exact verification of tightness, stackedness and related invariants of
triangulated spaces."""

from .complex import (
    PermutationSpec,
    SimplicialComplex,
    from_facets,
    induced_subcomplex,
    link,
    antistar,
    orbit_complex,
)
from .errors import CapExceeded, DecompositionError, ValidationError
from .homology import FieldSpec, betti, integral_homology
from .kernels import BACKEND
from .tightness import brute_force_tight, mu_vector, sigma_vector

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "DecompositionError",
    "FieldSpec",
    "PermutationSpec",
    "SimplicialComplex",
    "ValidationError",
    "antistar",
    "betti",
    "brute_force_tight",
    "from_facets",
    "induced_subcomplex",
    "integral_homology",
    "link",
    "mu_vector",
    "orbit_complex",
    "sigma_vector",
]
