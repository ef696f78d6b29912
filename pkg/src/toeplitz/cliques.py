"""Clique number, K_q-freeness and clique covers of Toeplitz graphs.

Everything is decided from the offsets.  A maximum clique can always be
translated to contain vertex 1, whose neighbours are ``1 + t_i``, so clique
questions reduce to subsets of offsets whose pairwise differences are again
offsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Literal, Optional

from .core import PreconditionError, ToeplitzError, ToeplitzSpec, adjacent, components, is_arithmetic

CoverKind = Literal["vertex", "edge"]


@dataclass(frozen=True)
class CliqueCover:
    """Cliques covering every vertex (``kind="vertex"``) or every edge (``kind="edge"``).

    ``bound_only`` marks covers whose size is only known to be an upper bound
    on the optimum.
    """

    kind: CoverKind
    cliques: tuple[tuple[int, ...], ...]
    bound_only: bool = False

    def __len__(self) -> int:
        return len(self.cliques)

    def validate(self, spec: ToeplitzSpec) -> None:
        for clique in self.cliques:
            for a, b in combinations(clique, 2):
                if not adjacent(spec, a, b):
                    raise ToeplitzError(f"{clique} is not a clique: {a} and {b} are non-adjacent")
        if self.kind == "vertex":
            covered = set().union(*self.cliques) if self.cliques else set()
            missing = set(range(1, spec.n + 1)) - covered
            if missing:
                raise ToeplitzError(f"vertices not covered: {sorted(missing)}")
        else:
            members = [set(c) for c in self.cliques]
            for i in range(1, spec.n + 1):
                for t in spec.offsets:
                    j = i + t
                    if j <= spec.n and not any(i in c and j in c for c in members):
                        raise ToeplitzError(f"edge {i}-{j} not covered")

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "cliques": [list(c) for c in self.cliques]}
        if self.bound_only:
            out["bound_only"] = True
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "CliqueCover":
        kind = data["kind"]
        if kind not in ("vertex", "edge"):
            raise ToeplitzError(f"unknown cover kind {kind!r}")
        return cls(kind, tuple(tuple(c) for c in data["cliques"]), bool(data.get("bound_only", False)))


def _extends_clique(members: list[int], t: int, offsets: frozenset[int]) -> bool:
    return all(abs(t - m) in offsets for m in members)


def is_kq_free(spec: ToeplitzSpec, q: int) -> bool:
    """True iff every (q-1)-subset of offsets has a pair whose difference is not an offset.

    Subsets are grown one offset at a time and abandoned as soon as they
    contain a bad pair, which enumerates exactly the witnessing subsets.
    """
    if q < 3:
        raise ToeplitzError(f"q must be at least 3, got {q}")
    need = q - 1
    offs = spec.offsets
    if len(offs) < need:
        return True
    present = spec.offset_set
    chosen: list[int] = []

    def grow(start: int) -> bool:
        if len(chosen) == need:
            return True
        for idx in range(start, len(offs) - (need - len(chosen)) + 1):
            t = offs[idx]
            if _extends_clique(chosen, t, present):
                chosen.append(t)
                if grow(idx + 1):
                    return True
                chosen.pop()
        return False

    return not grow(0)


def is_triangle_free(spec: ToeplitzSpec) -> bool:
    present = spec.offset_set
    return all(b - a not in present for a, b in combinations(spec.offsets, 2))


def clique_number(spec: ToeplitzSpec) -> int:
    """Size of a maximum clique; at most ``k + 1``, attained iff the offsets are arithmetic."""
    if not spec.offsets:
        return 1
    if is_arithmetic(spec) is not None:
        return spec.k + 1
    q = 3
    while not is_kq_free(spec, q):
        q += 1
    return q - 1


def maximum_clique(spec: ToeplitzSpec) -> tuple[int, ...]:
    """A maximum clique containing vertex 1."""
    size = clique_number(spec)
    present = spec.offset_set
    chosen: list[int] = []

    def grow(start: int) -> bool:
        if len(chosen) == size - 1:
            return True
        for idx in range(start, spec.k):
            t = spec.offsets[idx]
            if _extends_clique(chosen, t, present):
                chosen.append(t)
                if grow(idx + 1):
                    return True
                chosen.pop()
        return False

    grow(0)
    return (1,) + tuple(1 + t for t in chosen)


def _require_arithmetic(spec: ToeplitzSpec) -> int:
    step = is_arithmetic(spec)
    if step is None:
        raise PreconditionError(f"offsets {list(spec.offsets)} are not of the form t, 2t, ..., kt")
    return step


def edge_clique_cover_number_arith(spec: ToeplitzSpec) -> int:
    """Edge clique cover number of ``G_n<t, 2t, ..., kt>``.

    Equals ``max(t, n - kt)`` except when ``n < 2t`` (forcing ``k = 1``):
    then residue classes with a single vertex carry no edges and the graph
    is a matching with ``n - t`` edges.
    """
    t = _require_arithmetic(spec)
    n, k = spec.n, spec.k
    return max(min(t, n - t), n - k * t)


def edge_clique_cover_arith(spec: ToeplitzSpec) -> CliqueCover:
    """Explicit minimum edge clique cover of an arithmetic Toeplitz graph.

    Above ``(k + 1)t`` vertices the cover is the runs ``{i, i + t, ..., i + kt}``
    for ``i = 1..n - kt``; otherwise every component is complete and each
    component with an edge is one clique.
    """
    t = _require_arithmetic(spec)
    n, k = spec.n, spec.k
    if n > (k + 1) * t:
        cliques = tuple(tuple(range(i, i + k * t + 1, t)) for i in range(1, n - k * t + 1))
    else:
        cliques = tuple(block for block in components(spec) if len(block) > 1)
    return CliqueCover("edge", cliques)


def vertex_clique_cover_threshold(spec: ToeplitzSpec) -> int:
    """The cover-number formula is claimed only for ``n`` above this value, ``(2k - 1)t``."""
    t = _require_arithmetic(spec)
    return (2 * spec.k - 1) * t


def vertex_clique_cover_number_arith(spec: ToeplitzSpec) -> int:
    t = _require_arithmetic(spec)
    n, k = spec.n, spec.k
    if n <= (2 * k - 1) * t:
        raise PreconditionError(f"vertex clique cover formula needs n > (2k-1)t = {(2 * k - 1) * t}, got n={n}")
    s = n % t or t
    long_len = -(-n // t)
    short_len = n // t
    return s * ceil(long_len / (k + 1)) + (t - s) * ceil(short_len / (k + 1))


def vertex_clique_cover_arith(spec: ToeplitzSpec) -> CliqueCover:
    """Each residue class split into runs of ``k + 1`` consecutive members.

    Tagged ``bound_only`` when ``n <= (2k - 1)t``, where optimality is not
    asserted.
    """
    t = _require_arithmetic(spec)
    k = spec.k
    cliques = []
    for block in components(spec):
        for start in range(0, len(block), k + 1):
            cliques.append(tuple(block[start:start + k + 1]))
    return CliqueCover("vertex", tuple(cliques), bound_only=spec.n <= (2 * k - 1) * t)


def theta_e_lower_bound_witness(spec: ToeplitzSpec) -> Optional[int]:
    """For ``H`` with ``s_1 = t`` and ``s_k = kt``: the arithmetic graph it must dominate.

    Returns ``max(min(t, n - t), n - kt)``, the edge clique cover number of
    ``G_n<t, 2t, ..., kt>``, or ``None`` when the largest offset is not a
    multiple ``k * s_1`` of the smallest.
    """
    if not spec.offsets:
        return None
    t, k = spec.offsets[0], spec.k
    if spec.offsets[-1] != k * t:
        return None
    n = spec.n
    return max(min(t, n - t), n - k * t)
