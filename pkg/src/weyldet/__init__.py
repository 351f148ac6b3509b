"""Exact determinants of matrices over Weyl algebras A_m(Q)."""

from .det import (
    DetResult,
    ReductionTrace,
    check_det_one,
    det_f,
    det_f_triangular,
    gauss_reduce,
    is_invertible,
    verify_elementary_product,
)
from .errors import *  # noqa: F401,F403
from .matrix import (
    ElementaryDescriptor,
    WeylMatrix,
    diag_first,
    direct_sum,
    elementary,
    identity,
    is_in_f0,
    mat_mul,
)
from .ore import OrePair, OreSearchConfig, left_ore_pair
from .parse import format_symbol, format_weyl, parse_matrix_document, parse_weyl_expr
from .symbols import SymbolPoly, commutative_det, exact_div, is_homogeneous_in_y, sym_mul
from .weyl import WeylElement, bernstein_degree, order_degree, principal_symbol

__version__ = "0.1.0"
