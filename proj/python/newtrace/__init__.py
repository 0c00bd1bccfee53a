"""Exact traces of Hecke operators on newform spaces.

Thin python surface over the C++ core: newform dimensions, traces of Hecke
operators on full cuspform and newform spaces, eigenvalue-sign splits, and
exact q-expansion verification for the level-14 primitive forms.
"""

from ._core import (
    class_number,
    d_table,
    delta14_coefficients,
    dim_full,
    dim_newform,
    dim_split,
    factor,
    kronecker,
    nstar,
    split_disc,
    table,
    trace_full,
    trace_newform,
    trace_split,
    unit_count,
    verify_delta14,
    weight4_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "class_number",
    "d_table",
    "delta14_coefficients",
    "dim_full",
    "dim_newform",
    "dim_split",
    "factor",
    "kronecker",
    "nstar",
    "split_disc",
    "table",
    "trace_full",
    "trace_newform",
    "trace_split",
    "unit_count",
    "verify_delta14",
    "weight4_coefficients",
]
