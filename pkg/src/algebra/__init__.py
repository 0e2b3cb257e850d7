"""Exact arithmetic, sparse linear algebra and chain complexes."""

from .chain import (
    DEFAULT_CHECK_LIMIT,
    BettiTable,
    ChainComplex,
    ChainMap,
    EliminationStep,
    Reduction,
    accumulate,
    direct_sum,
    euler_characteristic,
    eliminate_pairs,
    gauss_eliminate,
    random_complex,
    set_check_limit,
    transport_map,
)
from .laurent import (
    LaurentPoly,
    RationalFn,
    TwoVarPoly,
    laurent_div_exact,
    quantum_integer,
)
from .linalg import FieldTag, SparseMatrix, gf2_rank, gf2_solve, row_reduce

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "TwoVarPoly",
    "quantum_integer",
    "laurent_div_exact",
    "FieldTag",
    "SparseMatrix",
    "row_reduce",
    "gf2_rank",
    "gf2_solve",
    "ChainComplex",
    "ChainMap",
    "EliminationStep",
    "Reduction",
    "accumulate",
    "direct_sum",
    "gauss_eliminate",
    "eliminate_pairs",
    "transport_map",
    "BettiTable",
    "euler_characteristic",
    "random_complex",
    "DEFAULT_CHECK_LIMIT",
    "set_check_limit",
]
