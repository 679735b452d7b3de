"""Linear l-intersection pairs of codes over finite fields and the
entanglement-assisted quantum codes built from them."""

__version__ = "0.1.0"

from .code import LinearCode, dual, intersect, code_sum, min_distance
from .eaqecc import EaqeccParams, eaqecc_from_pair, mds_eaqecc, mds_grid
from .errors import EllPairsError
from .gf import GF, Field, field_of_order
from .grs import GrsSpec, grs, grs_code, grs_extended_code, grs_pair
from .matrix import Matrix
from .pairs import IntersectionPair, ell_by_rank, extend_length, reduce_ell, tune_by_monomial
from .poly import Poly

__all__ = [
    "EaqeccParams", "EllPairsError", "Field", "GF", "GrsSpec", "IntersectionPair", "LinearCode",
    "Matrix", "Poly", "code_sum", "dual", "eaqecc_from_pair", "ell_by_rank", "extend_length",
    "field_of_order", "grs", "grs_code", "grs_extended_code", "grs_pair", "intersect",
    "mds_eaqecc", "mds_grid", "min_distance", "reduce_ell", "tune_by_monomial",
]
