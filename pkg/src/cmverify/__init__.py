"""Exact verification of linear independence results for cotangent values
and the Hurwitz zeta values they encode."""

__version__ = "0.1.0"

from .cotangent import cotan_norm, cotan_trace_sum, cotan_via_operator
from .cyclotomic import CycloElem, embed, galois_apply, root_of_unity
from .characters import DirichletChar, all_characters, char_eval, l_coordinates
from .numerics import bridge_residual, dirichlet_L, hurwitz_zeta
from .spaces import SpanReport, verify_theorem

__all__ = [
    "CycloElem",
    "DirichletChar",
    "SpanReport",
    "all_characters",
    "bridge_residual",
    "char_eval",
    "cotan_norm",
    "cotan_trace_sum",
    "cotan_via_operator",
    "dirichlet_L",
    "embed",
    "galois_apply",
    "hurwitz_zeta",
    "l_coordinates",
    "root_of_unity",
    "verify_theorem",
]
