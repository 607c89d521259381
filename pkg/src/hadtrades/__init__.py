"""Exact constructions, trade verification and exhaustive trade searches for
real and Butson-type complex Hadamard matrices."""

from .constructions import (
    SizeLimitError,
    example_paley8,
    fourier,
    paley_I,
    petrescu7,
    sylvester,
    weave_w64,
)
from .cyclotomic import (
    CycloNumber,
    CycloVector,
    RootExp,
    cyclo_arith,
    cyclo_nullspace,
    cyclo_rank,
    cyclotomic_poly,
    is_vanishing_sum,
)
from .matrix import (
    InvalidKindError,
    NotHadamardError,
    UnitMatrix,
    dephase,
    equivalence_op,
    format_matrix,
    format_real,
    from_signs,
    is_complex_hadamard,
    is_weighing,
    kronecker,
    parse_matrix,
    permute_cols,
    permute_rows,
    scale_col,
    scale_row,
    verify_hadamard,
    verify_weighing,
)
from .search import (
    SearchReport,
    enumerate_nearby_hadamard,
    fourier_divisor_witness,
    max_rank_one_area,
    min_support_column_span,
    min_trade_search_real,
    petrescu_paired_trade,
    petrescu_scalar_sweep,
)
from .trades import (
    NotSkewError,
    RectBlock,
    Trade,
    TradeError,
    ViolatesTradeError,
    apply_switch,
    diagonal_trade,
    enumerate_rank_one_blocks,
    is_rank_one,
    is_rectangular_trade,
    is_trade,
    lemma1_necessary,
    row_pair_trade,
    symmetric_difference,
    trade_profile,
    trade_from_json,
    trade_space_gf2,
    trade_to_json,
)

__version__ = "0.1.0"
