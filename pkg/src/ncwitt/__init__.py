"""p-typical Witt vector calculus over free associative algebras."""
from .algebra import (
    XY,
    FreePoly,
    GeneratorSet,
    MatrixAssignment,
    ParseError,
    RingMismatchError,
    UnknownGeneratorError,
    arith,
    commutator,
    eval_matrix,
    format_poly,
    parse,
    reduce_mod,
    trace,
)
from .cuntz_deninger import (
    ESymbol,
    TeichWitness,
    XElement,
    cd_teichmuller,
    cd_verschiebung,
    eta_bar,
    gamma_bar,
    omega_embed,
    realize,
)
from .ghost import (
    GhostVector,
    IntWittVector,
    NotInImage,
    ghost_components,
    ghost_inverse_int,
    ghost_map,
    witt_add_int,
    witt_mul_int,
)
from .hesselholt import WittVector, ghost_image, teichmuller, verschiebung, witt_eq
from .necklace import NecklacePoly, frobenius_p, min_rotation, necklace_eq, project

__version__ = "0.1.0"

__all__ = [
    "ESymbol",
    "FreePoly",
    "GeneratorSet",
    "GhostVector",
    "IntWittVector",
    "MatrixAssignment",
    "NecklacePoly",
    "NotInImage",
    "ParseError",
    "RingMismatchError",
    "TeichWitness",
    "UnknownGeneratorError",
    "WittVector",
    "XElement",
    "XY",
    "arith",
    "cd_teichmuller",
    "cd_verschiebung",
    "commutator",
    "eta_bar",
    "eval_matrix",
    "format_poly",
    "frobenius_p",
    "gamma_bar",
    "ghost_components",
    "ghost_image",
    "ghost_inverse_int",
    "ghost_map",
    "min_rotation",
    "necklace_eq",
    "omega_embed",
    "parse",
    "project",
    "realize",
    "reduce_mod",
    "teichmuller",
    "trace",
    "verschiebung",
    "witt_add_int",
    "witt_eq",
    "witt_mul_int",
]
