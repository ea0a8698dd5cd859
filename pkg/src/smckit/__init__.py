"""Exact computations with restricted root systems, chamber arrangements,
and simple-minded collections over finite-dimensional quiver algebras."""

from .dynkin import DynkinDiagram, parse_dynkin, restrict_roots, primitive_restricted_roots
from .arrangement import ChamberGraph, hyperplanes_from, atoms_from, atom_length, longest_atom
from .algebra import (
    QuiverAlgebra,
    Module,
    ModuleMap,
    preprojective_algebra,
    corner_algebra,
    simple_module,
    projective_module,
    hom_module,
    hom_dim,
    is_brick,
    is_semibrick,
    enumerate_bricks,
)
from .derived import (
    ComplexOfModules,
    stalk_complex,
    complex_direct_sum,
    cone,
    minimize,
    standard_model,
    is_isomorphic_complexes,
    hom_db,
    hom_table,
    has_no_negative_selfext,
)
from .smc import (
    SMC,
    MutationPath,
    standard_smc,
    validate,
    smc_bounds,
    smc_leq,
    left_mutate,
    right_mutate,
    narrow,
    heart_membership,
    complete_semibrick,
    semibrick_pair_check,
)
from .errors import (
    SmckitError,
    ParseError,
    PreconditionError,
    BudgetError,
    InternalError,
)

__version__ = "0.1.0"
