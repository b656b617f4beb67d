"""Exact computation in the isobaric ring of symmetric polynomials.

Generalized Fibonacci and Lucas polynomials, the LOG/EXP operators, companion
and different matrices, Schur polynomials and symmetric-group characters,
Polya counting, and arithmetic functions represented by linear recursions.
"""

from .arith import (
    BUILTINS,
    ArithFn,
    FormalLog,
    LocalRep,
    TrigPair,
    additive_companion,
    companion_of,
    dirichlet_conv,
    dirichlet_inverse,
    get_function,
    global_rep,
    infer_core,
    local_rep,
    rearick_log,
    representability_check,
    trig,
)
from .errors import IsoringError
from .logexp import (
    build_E_matrix,
    build_L_matrix,
    conv,
    conv_inverse,
    conv_power,
    exp_op,
    f_from_g,
    g_from_f,
    log_op,
)
from .matrices import (
    companion,
    det,
    different_matrix,
    different_vector,
    discriminant,
    infinite_companion,
    infinite_different,
    log_of_window,
)
from .partitions import partitions, z_alpha
from .polya import PermGroup, count_colorings, cycle_indicator, pattern_count, pattern_inventory
from .poly import Poly, parse, render
from .schur import character, character_table, expand_f_to_g, schur
from .sequences import GFP, GLP, Core, Seq, Weight, extend_negative, gfp, glp, partial_derivative, weighted

__version__ = "0.1.0"

__all__ = [
    "additive_companion",
    "ArithFn",
    "build_E_matrix",
    "build_L_matrix",
    "BUILTINS",
    "character",
    "character_table",
    "companion",
    "companion_of",
    "conv",
    "conv_inverse",
    "conv_power",
    "Core",
    "count_colorings",
    "cycle_indicator",
    "det",
    "different_matrix",
    "different_vector",
    "dirichlet_conv",
    "dirichlet_inverse",
    "discriminant",
    "exp_op",
    "expand_f_to_g",
    "extend_negative",
    "f_from_g",
    "FormalLog",
    "g_from_f",
    "get_function",
    "GFP",
    "gfp",
    "global_rep",
    "GLP",
    "glp",
    "infer_core",
    "infinite_companion",
    "infinite_different",
    "IsoringError",
    "local_rep",
    "LocalRep",
    "log_of_window",
    "log_op",
    "parse",
    "partial_derivative",
    "partitions",
    "pattern_count",
    "pattern_inventory",
    "PermGroup",
    "Poly",
    "rearick_log",
    "render",
    "representability_check",
    "schur",
    "Seq",
    "trig",
    "TrigPair",
    "Weight",
    "weighted",
    "z_alpha",
]
