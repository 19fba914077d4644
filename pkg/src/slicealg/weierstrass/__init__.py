"""2-local algebroid of plane-cubic transformations and its comodules."""

from .algebroid import (
    BASIS,
    Algebroid,
    AlgebroidError,
    GPoly,
    Tensor,
    Triple,
    gp_add,
    gp_const,
    gp_from_mpoly,
    gp_mul,
    gp_scale,
    gp_str,
    gp_sub,
    gp_to_mpoly,
    gp_var,
    hopf_axiom_check,
    monomials_at,
)
from .cobar import Cobar, cobar_ext, symbol_str, vector_str
from .comodule import (
    E_CLASSES,
    GENS,
    RELATIONS,
    ModuleSolver,
    amonos_at,
    coaction_axioms,
    composite_value,
    gp_eval,
    module_presentation,
    psi,
    solve_coaction,
    subalgebra_closure,
    tensor_of_pairs,
    two_point_value,
    verify_e_classes,
)
from .curves import IDENTITY, Curve, Transform, compose, invert, transform_curve
from .hurewicz import CAPS, TRANSFER, TruncF2, derive_maps, h_images, hurewicz_check, transfer_shadow
from .mpoly import MPoly

__all__ = [
    "BASIS",
    "Algebroid",
    "AlgebroidError",
    "GPoly",
    "Tensor",
    "Triple",
    "gp_add",
    "gp_const",
    "gp_from_mpoly",
    "gp_mul",
    "gp_scale",
    "gp_str",
    "gp_sub",
    "gp_to_mpoly",
    "gp_var",
    "hopf_axiom_check",
    "monomials_at",
    "Cobar",
    "cobar_ext",
    "symbol_str",
    "vector_str",
    "E_CLASSES",
    "GENS",
    "RELATIONS",
    "ModuleSolver",
    "amonos_at",
    "coaction_axioms",
    "composite_value",
    "gp_eval",
    "module_presentation",
    "psi",
    "solve_coaction",
    "subalgebra_closure",
    "tensor_of_pairs",
    "two_point_value",
    "verify_e_classes",
    "IDENTITY",
    "Curve",
    "Transform",
    "compose",
    "invert",
    "transform_curve",
    "CAPS",
    "TRANSFER",
    "TruncF2",
    "derive_maps",
    "h_images",
    "hurewicz_check",
    "transfer_shadow",
    "MPoly",
]
