"""Counting upper-triangular nilpotent matrices over F_q by Jordan type."""

from .jordan import (
    ConsistencyError,
    catalan,
    edge_weight,
    f_hook,
    f_lambda,
    f_lambda_syt,
    f_two_columns,
    f_two_equal_alt,
    f_two_rows,
    g_lambda,
)
from .partition import conjugate, make_partition, num_syt, partitions_of
from .qpoly import Poly, extract_qminus1, format_factored, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "Poly",
    "catalan",
    "conjugate",
    "edge_weight",
    "extract_qminus1",
    "f_hook",
    "f_lambda",
    "f_lambda_syt",
    "f_two_columns",
    "f_two_equal_alt",
    "f_two_rows",
    "format_factored",
    "format_poly",
    "g_lambda",
    "make_partition",
    "num_syt",
    "parse_poly",
    "partitions_of",
]
