"""Induced additive actions on projective hypersurfaces via local algebras."""
from .artin import LocalAlgebra, Presentation, Subspace, build_algebra
from .errors import AddactError
from .exactpoly import Poly, parse_poly
from .hpair import HPair, action_matrix, hypersurface_equation, make_hpair, reduction

__version__ = "0.1.0"

__all__ = [
    "AddactError", "HPair", "LocalAlgebra", "Poly", "Presentation", "Subspace",
    "action_matrix", "build_algebra", "hypersurface_equation", "make_hpair",
    "parse_poly", "reduction",
]
