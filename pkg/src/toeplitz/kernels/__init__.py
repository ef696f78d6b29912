"""Exponential search kernels with a compiled core and a pure-Python fallback.

The compiled extension ``_ckernels`` is used when it was built and the graph
fits in 63 vertices.  Setting ``TOEPLITZ_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("TOEPLITZ_PURE_PYTHON", "").strip() not in ("", "0"):
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_C_LIMIT = 63


def _impl(n: int):
    if _ckernels is not None and n <= _C_LIMIT:
        return _ckernels
    return _pykernels


def max_clique(adj: Sequence[int], n: int) -> tuple[int, int]:
    return _impl(n).max_clique(adj, n)


def chromatic(adj: Sequence[int], n: int) -> tuple[int, list[int]]:
    return _impl(n).chromatic(adj, n)


def find_hole(adj: Sequence[int], n: int, odd: bool = False) -> Optional[list[int]]:
    return _impl(n).find_hole(adj, n, odd)


def edge_clique_cover(adj: Sequence[int], n: int, cliques: Sequence[int]) -> list[int]:
    return _impl(n).edge_clique_cover(adj, n, list(cliques))


__all__ = ["BACKEND", "max_clique", "chromatic", "find_hole", "edge_clique_cover"]
