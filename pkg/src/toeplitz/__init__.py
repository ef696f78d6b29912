"""Toeplitz graph analysis.

Closed-form results on cliques, covers, chordality, perfectness and degree
sequences of ``G_n<t_1, ..., t_k>``, with brute-force oracles to check them.
"""

from .core import (
    CapExceeded,
    DenseGraph,
    PreconditionError,
    ToeplitzError,
    ToeplitzSpec,
    format_spec,
    new_spec,
    parse_spec,
    to_dense,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "CapExceeded",
    "DenseGraph",
    "PreconditionError",
    "ToeplitzError",
    "ToeplitzSpec",
    "format_spec",
    "new_spec",
    "parse_spec",
    "to_dense",
]
