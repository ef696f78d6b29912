"""Chordality, interval representation and perfectness of Toeplitz graphs.

Each verdict records whether it came from a closed-form characterization or
from the brute-force oracle, so callers can tell theorem coverage apart from
fallback computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal, Optional

from . import oracle
from .core import (
    Hole,
    PreconditionError,
    ToeplitzError,
    ToeplitzSpec,
    adjacent,
    complement_spec,
    components,
    is_arithmetic,
    to_dense,
)

Source = Literal["closed-form", "oracle"]


@dataclass(frozen=True)
class Verdict:
    verdict: str
    source: Source = "closed-form"

    @property
    def holds(self) -> bool:
        return not self.verdict.startswith("not-")

    def __str__(self) -> str:
        return self.verdict if self.source == "closed-form" else f"oracle-sourced-{self.verdict}"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "source": self.source}


def _yes_no(flag: bool, name: str, source: Source) -> Verdict:
    return Verdict(name if flag else f"not-{name}", source)


def above_chordal_threshold(spec: ToeplitzSpec) -> bool:
    """``n >= t_{k-1} + t_k`` (needs ``k >= 2``)."""
    return spec.k >= 2 and spec.n >= spec.offsets[-2] + spec.offsets[-1]


def chordality_verdict(spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> Verdict:
    """Chordal iff the offsets are arithmetic, once ``n >= t_{k-1} + t_k``.

    Arithmetic graphs are chordal for every ``n``; below the threshold a
    non-arithmetic graph is handed to the oracle.
    """
    if spec.k <= 1 or is_arithmetic(spec) is not None:
        return Verdict("chordal")
    if above_chordal_threshold(spec):
        return Verdict("not-chordal")
    return _yes_no(oracle.is_chordal(to_dense(spec, _cap(budget)), budget), "chordal", "oracle")


def is_interval(spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> Verdict:
    if spec.k <= 1 or is_arithmetic(spec) is not None:
        return Verdict("interval")
    if above_chordal_threshold(spec):
        return Verdict("not-interval")
    return _yes_no(oracle.is_interval(to_dense(spec, _cap(budget)), budget), "interval", "oracle")


def _cap(budget: Optional[oracle.OracleBudget]) -> Optional[int]:
    return budget.max_vertices if budget is not None else None


def construct_hole_k2(spec: ToeplitzSpec) -> Hole:
    """Hole of length ``(t_1 + t_2) / gcd(t_1, t_2)`` in ``G_n<t_1, t_2>``.

    Starting at vertex 1, repeatedly jump up by ``t_2`` and walk back down in
    steps of ``t_1`` until landing in ``[1, t_1]``; the walk closes at 1.
    """
    if spec.k != 2:
        raise PreconditionError(f"hole construction needs exactly two offsets, got {spec.k}")
    t1, t2 = spec.offsets
    if spec.n < t1 + t2:
        raise PreconditionError(f"hole construction needs n >= t1 + t2 = {t1 + t2}, got n={spec.n}")
    if t2 == 2 * t1:
        raise PreconditionError(f"t2 = 2*t1 = {t2}: the graph is chordal and has no hole")
    cycle = [1]
    low = 1
    while True:
        v = low + t2
        while v > t1:
            cycle.append(v)
            v -= t1
        low = v
        if low == 1:
            break
        cycle.append(low)
    hole = Hole(tuple(cycle))
    hole.validate(lambda a, b: adjacent(spec, a, b))
    expected = (t1 + t2) // gcd(t1, t2)
    if len(hole) != expected:
        raise AssertionError(f"constructed cycle has length {len(hole)}, expected {expected}")
    return hole


@dataclass(frozen=True)
class IntervalModel:
    """``intervals[v - 1]`` is the closed integer interval assigned to vertex ``v``."""

    intervals: tuple[tuple[int, int], ...]

    def validate(self, spec: ToeplitzSpec) -> None:
        if len(self.intervals) != spec.n:
            raise ToeplitzError("model does not assign one interval per vertex")
        for u in range(1, spec.n + 1):
            lo_u, hi_u = self.intervals[u - 1]
            for v in range(u + 1, spec.n + 1):
                lo_v, hi_v = self.intervals[v - 1]
                meet = max(lo_u, lo_v) <= min(hi_u, hi_v)
                if meet != adjacent(spec, u, v):
                    raise ToeplitzError(f"intervals of {u} and {v} disagree with adjacency")

    def to_dict(self) -> dict:
        return {str(v): list(iv) for v, iv in enumerate(self.intervals, start=1)}


def interval_model(spec: ToeplitzSpec) -> IntervalModel:
    """Interval representation of ``G_n<t, 2t, ..., kt>``.

    The ``s``-th member (1-based) of a residue class gets ``[s, s + k]``;
    component ``c`` (0-based) is shifted right by ``c * (k + n)`` so different
    components never meet.
    """
    if is_arithmetic(spec) is None:
        raise PreconditionError("interval model is only constructed for offsets t, 2t, ..., kt")
    k, n = spec.k, spec.n
    intervals: list[tuple[int, int]] = [(0, 0)] * n
    for c, block in enumerate(components(spec)):
        shift = c * (k + n)
        for s, v in enumerate(block, start=1):
            intervals[v - 1] = (s + shift, s + k + shift)
    model = IntervalModel(tuple(intervals))
    model.validate(spec)
    return model


def perfect_k2_condition(t1: int, t2: int) -> bool:
    """``(t_1 + t_2) / gcd`` is even or equals 3."""
    r = (t1 + t2) // gcd(t1, t2)
    return r % 2 == 0 or r == 3


def _require_k2(spec: ToeplitzSpec) -> tuple[int, int]:
    if spec.k != 2:
        raise PreconditionError(f"needs exactly two offsets, got {spec.k}")
    return spec.offsets[0], spec.offsets[1]


def perfectness_verdict_k2(spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> Verdict:
    t1, t2 = _require_k2(spec)
    if spec.n >= t1 + t2:
        return _yes_no(perfect_k2_condition(t1, t2), "perfect", "closed-form")
    return _yes_no(oracle.is_berge(to_dense(spec, _cap(budget)), budget), "perfect", "oracle")


def odd_hole_free_verdict_k2(spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> Verdict:
    t1, t2 = _require_k2(spec)
    if spec.n >= t1 + t2:
        return _yes_no(perfect_k2_condition(t1, t2), "odd-hole-free", "closed-form")
    g = to_dense(spec, _cap(budget))
    return _yes_no(oracle.find_hole(g, "odd", budget) is None, "odd-hole-free", "oracle")


def weakly_perfect_verdict_k2(spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> Verdict:
    t1, t2 = _require_k2(spec)
    if spec.n >= t1 + t2:
        return _yes_no(perfect_k2_condition(t1, t2), "weakly-perfect", "closed-form")
    return _yes_no(oracle.is_weakly_perfect(to_dense(spec, _cap(budget)), budget), "weakly-perfect", "oracle")


def perfectness_verdict_complement_form(spec: ToeplitzSpec) -> Verdict:
    """Perfectness of ``G_n<t_1, ..., t_{n-3}>`` via its two missing offsets.

    Returns ``not-applicable`` when the missing offsets sum to more than ``n``.
    """
    if spec.k != spec.n - 3:
        raise PreconditionError(f"needs k = n - 3 = {spec.n - 3} offsets, got {spec.k}")
    s1, s2 = complement_spec(spec).offsets
    if s1 + s2 > spec.n:
        return Verdict("not-applicable")
    return _yes_no(perfect_k2_condition(s1, s2), "perfect", "closed-form")
