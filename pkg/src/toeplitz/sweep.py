"""Exhaustive closed-form versus oracle verification sweeps.

Every theorem check takes one Toeplitz graph, computes the closed-form claim
and the brute-force answer, and emits a :class:`VerificationRecord`.  Checks
that do not apply to a graph emit nothing; checks that apply to the family
but whose extra hypothesis fails emit a ``skipped-precondition`` record.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Literal, Optional, Sequence

from . import cliques, degrees, oracle, structure
from .core import (
    CapExceeded,
    DenseGraph,
    ToeplitzError,
    ToeplitzSpec,
    complement_spec,
    components,
    degree,
    ell,
    format_spec,
    is_arithmetic,
    iter_specs,
    neighbors,
    to_dense,
)

Verdict = Literal["match", "mismatch", "skipped-precondition"]
Family = Literal["all", "arithmetic", "k2", "threshold", "complement"]
FAMILIES = ("all", "arithmetic", "k2", "threshold", "complement")


@dataclass
class VerificationRecord:
    subject: str
    theorem_id: str
    closed_form_value: Any
    oracle_value: Any
    verdict: Verdict
    elapsed: float = 0.0
    note: Optional[str] = None

    def __post_init__(self) -> None:
        if self.verdict == "mismatch" and (self.closed_form_value is None or self.oracle_value is None):
            raise ValueError("a mismatch needs both values")
        if self.verdict == "skipped-precondition" and not self.note:
            raise ValueError("a skipped record must name the unmet precondition")

    def to_dict(self, timing: bool = True) -> dict:
        out = asdict(self)
        if not timing:
            out.pop("elapsed")
        return out


class Context:
    """Per-graph cache of dense form and oracle answers shared by the checks."""

    def __init__(self, spec: ToeplitzSpec, budget: oracle.OracleBudget):
        self.spec = spec
        self.budget = budget
        self._cache: dict[str, Any] = {}

    def _memo(self, key: str, fn: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def g(self) -> DenseGraph:
        return self._memo("g", lambda: to_dense(self.spec, self.budget.max_vertices))

    @property
    def omega(self) -> int:
        return self._memo("omega", lambda: oracle.clique_number(self.g, self.budget))

    @property
    def chi(self) -> int:
        return self._memo("chi", lambda: oracle.chromatic_number(self.g, self.budget))

    @property
    def chordal(self) -> bool:
        return self._memo("chordal", lambda: oracle.is_chordal(self.g, self.budget))

    @property
    def hole(self):
        return self._memo("hole", lambda: oracle.find_hole(self.g, "any", self.budget))

    @property
    def interval(self) -> bool:
        return self._memo("interval", lambda: oracle.is_interval(self.g, self.budget))

    @property
    def berge(self) -> bool:
        return self._memo("berge", lambda: oracle.is_berge(self.g, self.budget))

    @property
    def odd_hole(self):
        return self._memo("odd_hole", lambda: oracle.find_hole(self.g, "odd", self.budget))

    @property
    def dense_degrees(self) -> list[int]:
        return self._memo("deg", lambda: [self.g.degree(v) for v in range(1, self.g.n + 1)])


def _compare(closed: Any, observed: Any) -> Verdict:
    return "match" if closed == observed else "mismatch"


def _skip(reason: str) -> tuple[None, None, Verdict, str]:
    return None, None, "skipped-precondition", reason


# Each check returns None (not applicable) or (closed, oracle, verdict, note).
CheckResult = Optional[tuple[Any, Any, Verdict, Optional[str]]]


def check_degree_formula(ctx: Context) -> CheckResult:
    spec = ctx.spec
    closed = [degree(spec, i) for i in range(1, spec.n + 1)]
    counted = [len(neighbors(spec, i)) for i in range(1, spec.n + 1)]
    observed = ctx.dense_degrees
    verdict = "match" if closed == observed == counted else "mismatch"
    return closed, observed, verdict, None


def check_ell_step(ctx: Context) -> CheckResult:
    spec = ctx.spec
    closed = [ell(spec, j + 1) - ell(spec, j) for j in range(1, spec.n)]
    observed = [int(j in spec.offset_set) for j in range(1, spec.n)]
    return closed, observed, _compare(closed, observed), None


def check_degree_symmetry(ctx: Context) -> CheckResult:
    d = ctx.dense_degrees
    observed = d == d[::-1]
    return True, observed, _compare(True, observed), None


def check_center_parity(ctx: Context) -> CheckResult:
    n = ctx.spec.n
    if n % 2 == 0:
        return None
    observed = ctx.dense_degrees[(n + 1) // 2 - 1] % 2 == 0
    return True, observed, _compare(True, observed), None


def check_degree_step_bound(ctx: Context) -> CheckResult:
    d = ctx.dense_degrees
    observed = all(abs(d[j + 1] - d[j]) <= 1 for j in range(len(d) - 1))
    return True, observed, _compare(True, observed), None


def check_components(ctx: Context) -> CheckResult:
    closed = components(ctx.spec).as_lists()
    observed = [list(b) for b in oracle.components(ctx.g)]
    return closed, observed, _compare(closed, observed), None


def check_complement(ctx: Context) -> CheckResult:
    comp = complement_spec(ctx.spec)
    closed = list(to_dense(comp, ctx.budget.max_vertices).rows)
    observed = list(ctx.g.complement().rows)
    ok = closed == observed and complement_spec(comp) == ctx.spec
    return list(comp.offsets), ok, "match" if ok else "mismatch", None


def check_clique_number(ctx: Context) -> CheckResult:
    closed = cliques.clique_number(ctx.spec)
    witness = cliques.maximum_clique(ctx.spec)
    ok_witness = len(witness) == closed and ctx.g.is_clique(witness)
    verdict = _compare(closed, ctx.omega) if ok_witness else "mismatch"
    return closed, ctx.omega, verdict, None if ok_witness else f"bad witness {witness}"


def check_clique_bound(ctx: Context) -> CheckResult:
    k = ctx.spec.k
    arith = is_arithmetic(ctx.spec) is not None
    closed = {"omega<=k+1": True, "omega=k+1": arith}
    observed = {"omega<=k+1": ctx.omega <= k + 1, "omega=k+1": ctx.omega == k + 1}
    return closed, observed, _compare(closed, observed), None


def check_kq_free(ctx: Context) -> CheckResult:
    qs = range(3, ctx.spec.k + 3)
    closed = {q: cliques.is_kq_free(ctx.spec, q) for q in qs}
    observed = {q: ctx.omega < q for q in qs}
    ok = closed == observed and cliques.is_triangle_free(ctx.spec) == (ctx.omega < 3)
    return closed, observed, "match" if ok else "mismatch", None


def check_theta_e(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if is_arithmetic(spec) is None:
        return None
    if spec.n > ctx.budget.max_cover_vertices:
        return _skip(f"n={spec.n} above edge-cover cap {ctx.budget.max_cover_vertices}")
    number = cliques.edge_clique_cover_number_arith(spec)
    cover = cliques.edge_clique_cover_arith(spec)
    note = None
    try:
        cover.validate(spec)
    except ToeplitzError as exc:
        note = f"invalid cover: {exc}"
    observed = oracle.edge_clique_cover_number(ctx.g, ctx.budget)
    closed = [number, len(cover)]
    verdict = _compare(closed, [observed, observed]) if note is None else "mismatch"
    return closed, [observed, observed], verdict, note


def check_theta_e_monotone(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if spec.k < 3 or is_arithmetic(spec) is not None:
        return None
    bound = cliques.theta_e_lower_bound_witness(spec)
    if bound is None:
        return None
    if spec.n > ctx.budget.max_cover_vertices:
        return _skip(f"n={spec.n} above edge-cover cap {ctx.budget.max_cover_vertices}")
    observed = oracle.edge_clique_cover_number(ctx.g, ctx.budget)
    return bound, observed, "match" if observed >= bound else "mismatch", "claim: oracle >= closed form"


def check_theta_v(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if is_arithmetic(spec) is None:
        return None
    threshold = cliques.vertex_clique_cover_threshold(spec)
    if spec.n <= threshold:
        return _skip(f"n={spec.n} <= (2k-1)t={threshold}")
    number = cliques.vertex_clique_cover_number_arith(spec)
    cover = cliques.vertex_clique_cover_arith(spec)
    note = None
    try:
        cover.validate(spec)
    except ToeplitzError as exc:
        note = f"invalid cover: {exc}"
    observed = oracle.vertex_clique_cover_number(ctx.g, ctx.budget)
    closed = [number, len(cover)]
    verdict = _compare(closed, [observed, observed]) if note is None else "mismatch"
    return closed, [observed, observed], verdict, note


def check_chordal_equivalence(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if spec.k < 2:
        return None
    if not structure.above_chordal_threshold(spec):
        return _skip(f"n={spec.n} < t_(k-1)+t_k={spec.offsets[-2] + spec.offsets[-1]}")
    arith = is_arithmetic(spec) is not None
    chordal = structure.chordality_verdict(spec, ctx.budget)
    interval = structure.is_interval(spec, ctx.budget)
    closed = {
        "chordal": chordal.holds,
        "hole-free": chordal.holds,
        "interval": interval.holds,
        "omega=k+1": arith,
    }
    observed = {
        "chordal": ctx.chordal,
        "hole-free": ctx.hole is None,
        "interval": ctx.interval,
        "omega=k+1": ctx.omega == spec.k + 1,
    }
    ok = closed == observed and len(set(closed.values())) == 1
    return closed, observed, "match" if ok else "mismatch", None


def check_arithmetic_chordal(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if is_arithmetic(spec) is None:
        return None
    note = None
    try:
        structure.interval_model(spec)
        model_ok = True
    except ToeplitzError as exc:
        model_ok, note = False, str(exc)
    closed = {"chordal": True, "interval": True, "model": True}
    observed = {"chordal": ctx.chordal, "interval": ctx.interval, "model": model_ok}
    return closed, observed, _compare(closed, observed), note


def check_hole_k2(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if spec.k != 2:
        return None
    t1, t2 = spec.offsets
    if t2 == 2 * t1:
        return _skip("t2 = 2*t1")
    if spec.n < t1 + t2:
        return _skip(f"n={spec.n} < t1+t2={t1 + t2}")
    expected = (t1 + t2) // gcd(t1, t2)
    try:
        hole = structure.construct_hole_k2(spec)
        hole.validate(ctx.g.adjacent)
        observed = len(hole)
        note = None
    except (ToeplitzError, AssertionError) as exc:
        observed, note = -1, str(exc)
    return expected, observed, _compare(expected, observed), note


def check_perfect_k2(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if spec.k != 2:
        return None
    t1, t2 = spec.offsets
    if spec.n < t1 + t2:
        return _skip(f"n={spec.n} < t1+t2={t1 + t2}")
    closed = {
        "perfect": structure.perfectness_verdict_k2(spec, ctx.budget).holds,
        "odd-hole-free": structure.odd_hole_free_verdict_k2(spec, ctx.budget).holds,
        "weakly-perfect": structure.weakly_perfect_verdict_k2(spec, ctx.budget).holds,
    }
    observed = {
        "perfect": ctx.berge,
        "odd-hole-free": ctx.odd_hole is None,
        "weakly-perfect": ctx.omega == ctx.chi,
    }
    ok = closed == observed and len(set(closed.values())) == 1
    return closed, observed, "match" if ok else "mismatch", None


def check_perfect_complement(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if spec.k != spec.n - 3:
        return None
    verdict = structure.perfectness_verdict_complement_form(spec)
    if verdict.verdict == "not-applicable":
        s1, s2 = complement_spec(spec).offsets
        return _skip(f"s1+s2={s1 + s2} > n={spec.n}")
    return verdict.holds, ctx.berge, _compare(verdict.holds, ctx.berge), None


def check_step_trichotomy(ctx: Context) -> CheckResult:
    d = ctx.dense_degrees
    sign = {1: "up", 0: "equal", -1: "down"}
    closed = [degrees.profile_step_classification(ctx.spec, j) for j in range(1, ctx.spec.n)]
    observed = [sign.get(d[j] - d[j - 1], "jump") for j in range(1, ctx.spec.n)]
    return closed, observed, _compare(closed, observed), None


def check_regular_circulant(ctx: Context) -> CheckResult:
    d = ctx.dense_degrees
    regular = len(set(d)) == 1
    closed = {"circulant": degrees.is_circulant(ctx.spec), "regular": degrees.is_regular(ctx.spec) is not None}
    observed = {"circulant": regular, "regular": regular}
    return closed, observed, _compare(closed, observed), None


def check_circulant_parity(ctx: Context) -> CheckResult:
    spec = ctx.spec
    if not degrees.is_circulant(spec):
        return None
    has_half = spec.n % 2 == 0 and spec.n // 2 in spec.offset_set
    closed = "odd" if has_half else "even"
    observed = "odd" if spec.k % 2 else "even"
    return closed, observed, _compare(closed, observed), None


def check_realize_roundtrip(ctx: Context) -> CheckResult:
    profile = degrees.degree_profile(ctx.spec)
    try:
        realized = degrees.realize_profile(profile)
    except (ToeplitzError, AssertionError) as exc:
        return format_spec(ctx.spec), None, "mismatch", str(exc)
    g2 = to_dense(realized, ctx.budget.max_vertices)
    observed = [g2.degree(v) for v in range(1, g2.n + 1)]
    return list(profile), observed, _compare(list(profile), observed), format_spec(realized)


def check_oracle_chordal_hole(ctx: Context) -> CheckResult:
    return ctx.chordal, ctx.hole is None, _compare(ctx.chordal, ctx.hole is None), None


def check_oracle_clique_chromatic(ctx: Context) -> CheckResult:
    return True, ctx.omega <= ctx.chi, _compare(True, ctx.omega <= ctx.chi), None


def check_oracle_berge_perfect(ctx: Context) -> CheckResult:
    if ctx.spec.n > ctx.budget.max_perfect_vertices:
        return _skip(f"n={ctx.spec.n} above induced-subgraph cap {ctx.budget.max_perfect_vertices}")
    brute = oracle.is_perfect_bruteforce(ctx.g, ctx.budget)
    return ctx.berge, brute, _compare(ctx.berge, brute), None


def check_oracle_theta_v_partition(ctx: Context) -> CheckResult:
    if ctx.spec.n > ctx.budget.max_perfect_vertices:
        return _skip(f"n={ctx.spec.n} above induced-subgraph cap {ctx.budget.max_perfect_vertices}")
    via_chi = oracle.vertex_clique_cover_number(ctx.g, ctx.budget)
    direct = oracle.min_clique_partition_bruteforce(ctx.g, ctx.budget)
    return via_chi, direct, _compare(via_chi, direct), None


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    module: str
    check: Callable[[Context], CheckResult]
    description: str


THEOREMS: tuple[Theorem, ...] = (
    Theorem("degree-formula", "core", check_degree_formula, "deg(i) = ell(i) + ell(n-i+1) = |N(i)|"),
    Theorem("ell-step", "core", check_ell_step, "ell(j+1) - ell(j) = 1 iff j is an offset"),
    Theorem("degree-symmetry", "core", check_degree_symmetry, "deg(j) = deg(n-j+1)"),
    Theorem("center-parity", "core", check_center_parity, "odd n: middle vertex has even degree"),
    Theorem("degree-step-bound", "core", check_degree_step_bound, "|deg(j+1) - deg(j)| <= 1"),
    Theorem("components-bfs", "core", check_components, "component partition equals BFS"),
    Theorem("complement", "core", check_complement, "complement offsets give the graph complement"),
    Theorem("clique-number", "cliques", check_clique_number, "closed-form omega equals oracle omega"),
    Theorem("clique-bound", "cliques", check_clique_bound, "omega <= k+1, equality iff arithmetic"),
    Theorem("kq-free", "cliques", check_kq_free, "K_q-free criterion for q in [3, k+2]"),
    Theorem("theta-e", "cliques", check_theta_e, "edge clique cover number of arithmetic graphs"),
    Theorem("theta-e-monotone", "cliques", check_theta_e_monotone, "theta_E(G) <= theta_E(H) for same s_1, s_k"),
    Theorem("theta-v", "cliques", check_theta_v, "vertex clique cover number of arithmetic graphs"),
    Theorem("chordal-equivalence", "structure", check_chordal_equivalence, "interval = chordal = arithmetic = omega k+1"),
    Theorem("arithmetic-chordal", "structure", check_arithmetic_chordal, "arithmetic graphs are chordal and interval"),
    Theorem("hole-k2", "structure", check_hole_k2, "explicit hole of length (t1+t2)/gcd"),
    Theorem("perfect-k2", "structure", check_perfect_k2, "perfect = odd-hole-free = weakly perfect for k=2"),
    Theorem("perfect-complement", "structure", check_perfect_complement, "perfectness when k = n-3"),
    Theorem("step-trichotomy", "degrees", check_step_trichotomy, "degree step read off j, n-j"),
    Theorem("regular-circulant", "degrees", check_regular_circulant, "regular iff circulant"),
    Theorem("circulant-parity", "degrees", check_circulant_parity, "circulant: k odd iff n/2 is an offset"),
    Theorem("realize-roundtrip", "degrees", check_realize_roundtrip, "profile realizes back to itself"),
    Theorem("oracle-chordal-hole", "oracle", check_oracle_chordal_hole, "MCS chordality agrees with hole search"),
    Theorem("oracle-clique-chromatic", "oracle", check_oracle_clique_chromatic, "omega <= chi"),
    Theorem("oracle-berge-perfect", "oracle", check_oracle_berge_perfect, "Berge check equals induced-subgraph perfectness"),
    Theorem("oracle-theta-v-partition", "oracle", check_oracle_theta_v_partition, "chi(complement) equals direct clique partition"),
)
THEOREM_IDS = tuple(t.theorem_id for t in THEOREMS)
SEQUENCE_THEOREM_ID = "realize-sequence"
_BY_ID = {t.theorem_id: t for t in THEOREMS}


def run_theorem(theorem_id: str, spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> Optional[VerificationRecord]:
    """Run one check on one graph; ``None`` when it does not apply."""
    theorem = _BY_ID[theorem_id]
    budget = budget if budget is not None else oracle.OracleBudget()
    return _run(theorem, Context(spec, budget))


def _run(theorem: Theorem, ctx: Context) -> Optional[VerificationRecord]:
    start = time.perf_counter()
    try:
        result = theorem.check(ctx)
    except CapExceeded as exc:
        result = _skip(f"oracle cap exceeded: {exc}")
    if result is None:
        return None
    closed, observed, verdict, note = result
    return VerificationRecord(
        format_spec(ctx.spec), theorem.theorem_id, closed, observed, verdict,
        time.perf_counter() - start, note,
    )


def verify_spec(spec: ToeplitzSpec, theorem_ids: Sequence[str], budget: oracle.OracleBudget) -> list[VerificationRecord]:
    ctx = Context(spec, budget)
    out = []
    for tid in theorem_ids:
        record = _run(_BY_ID[tid], ctx)
        if record is not None:
            out.append(record)
    return out


# ------------------------------------------------------------------ degree sequences

def toeplitz_degree_multisets(n: int) -> set[tuple[int, ...]]:
    """Sorted (non-increasing) degree sequences of every Toeplitz graph on ``n`` vertices, edgeless included."""
    out = set()
    for spec in iter_specs(n, include_edgeless=True):
        out.add(tuple(sorted(degrees.degree_profile(spec), reverse=True)))
    return out


def random_nonrealizable(n: int, count: int, rng: random.Random, realizable: set[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Distinct random non-increasing sequences on ``[0, n-1]`` that no Toeplitz graph has.

    Returns fewer than ``count`` when the space is too small.
    """
    seen: set[tuple[int, ...]] = set()
    out = []
    attempts = 0
    while len(out) < count and attempts < 200 * count:
        attempts += 1
        seq = tuple(sorted((rng.randrange(n) for _ in range(n)), reverse=True))
        if seq in realizable or seq in seen:
            continue
        seen.add(seq)
        out.append(seq)
    return out


def verify_sequence(seq: Sequence[int], expected: bool) -> VerificationRecord:
    start = time.perf_counter()
    result = degrees.realize_sequence(seq)
    found = result is not None
    note = None
    if result is not None:
        arrangement, spec = result
        if sorted(degrees.degree_profile(spec), reverse=True) != list(seq):
            found, note = False, f"realized {format_spec(spec)} has the wrong degrees"
        else:
            note = format_spec(spec)
    return VerificationRecord(
        json.dumps(list(seq)), SEQUENCE_THEOREM_ID, found, expected,
        _compare(found, expected), time.perf_counter() - start, note,
    )


def sequence_records(n: int, random_count: int, seed: int) -> list[VerificationRecord]:
    realizable = toeplitz_degree_multisets(n)
    rng = random.Random(seed * 1009 + n)
    out = [verify_sequence(seq, True) for seq in sorted(realizable, reverse=True)]
    out.extend(verify_sequence(seq, False) for seq in random_nonrealizable(n, random_count, rng, realizable))
    return out


# ------------------------------------------------------------------ sweep runner

@dataclass
class SweepConfig:
    n_min: int = 2
    n_max: int = 10
    k_min: int = 1
    k_max: Optional[int] = None
    family: Family = "all"
    budget: oracle.OracleBudget = field(default_factory=oracle.OracleBudget)
    jobs: int = 1
    theorems: Optional[Sequence[str]] = None
    sequences: bool = True
    random_sequences: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ToeplitzError(f"empty or invalid n range [{self.n_min}, {self.n_max}]")
        if self.k_max is not None and self.k_max < self.k_min:
            raise ToeplitzError(f"empty k range [{self.k_min}, {self.k_max}]")
        if self.family not in FAMILIES:
            raise ToeplitzError(f"unknown family {self.family!r}")
        if self.jobs < 1:
            raise ToeplitzError("jobs must be at least 1")
        if self.theorems is not None:
            unknown = [t for t in self.theorems if t not in _BY_ID and t != SEQUENCE_THEOREM_ID]
            if unknown:
                raise ToeplitzError(f"unknown theorem ids: {unknown}")

    @property
    def theorem_ids(self) -> tuple[str, ...]:
        if self.theorems is None:
            return THEOREM_IDS
        return tuple(t for t in THEOREM_IDS if t in self.theorems)

    @property
    def run_sequences(self) -> bool:
        if self.theorems is not None:
            return SEQUENCE_THEOREM_ID in self.theorems
        return self.sequences and self.family == "all"


def in_family(spec: ToeplitzSpec, family: Family) -> bool:
    if family == "arithmetic":
        return is_arithmetic(spec) is not None
    if family == "k2":
        return spec.k == 2
    if family == "threshold":
        return structure.above_chordal_threshold(spec)
    if family == "complement":
        return spec.k == spec.n - 3
    return True


def iter_sweep_specs(config: SweepConfig) -> Iterator[ToeplitzSpec]:
    """n ascending, then offset sets in ascending bitmask order."""
    for n in range(max(config.n_min, 2), config.n_max + 1):
        for spec in iter_specs(n):
            if spec.k < config.k_min or (config.k_max is not None and spec.k > config.k_max):
                continue
            if in_family(spec, config.family):
                yield spec


def _work(args: tuple[ToeplitzSpec, tuple[str, ...], oracle.OracleBudget]) -> list[VerificationRecord]:
    spec, ids, budget = args
    return verify_spec(spec, ids, budget)


def iter_records(config: SweepConfig) -> Iterator[VerificationRecord]:
    """All records in enumeration order, whatever the worker count."""
    ids = config.theorem_ids
    items = ((spec, ids, config.budget) for spec in iter_sweep_specs(config))
    if config.jobs == 1:
        for item in items:
            yield from _work(item)
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for batch in pool.map(_work, items, chunksize=8):
                yield from batch
    if config.run_sequences:
        for n in range(config.n_min, config.n_max + 1):
            yield from sequence_records(n, config.random_sequences, config.seed)


@dataclass
class SweepSummary:
    counts: dict[str, Counter] = field(default_factory=lambda: defaultdict(Counter))
    elapsed: float = 0.0

    def add(self, record: VerificationRecord) -> None:
        self.counts[record.theorem_id][record.verdict] += 1

    @property
    def mismatches(self) -> int:
        return sum(c["mismatch"] for c in self.counts.values())

    def table(self) -> str:
        lines = [f"{'theorem_id':<26} {'match':>7} {'mismatch':>9} {'skipped':>8}"]
        order = list(THEOREM_IDS) + [SEQUENCE_THEOREM_ID]
        for tid in order:
            if tid not in self.counts:
                continue
            c = self.counts[tid]
            lines.append(f"{tid:<26} {c['match']:>7} {c['mismatch']:>9} {c['skipped-precondition']:>8}")
        lines.append(f"total mismatches: {self.mismatches}  ({self.elapsed:.1f}s)")
        return "\n".join(lines)


CSV_FIELDS = ("subject", "theorem_id", "closed_form_value", "oracle_value", "verdict", "elapsed", "note")


class RecordWriter:
    """Streams records as JSON lines or CSV to a text stream."""

    def __init__(self, stream: io.TextIOBase, fmt: Literal["jsonl", "csv"] = "jsonl", timing: bool = True):
        if fmt not in ("jsonl", "csv"):
            raise ToeplitzError(f"unknown record format {fmt!r}")
        self.stream = stream
        self.fmt = fmt
        self.timing = timing
        self._csv = None
        if fmt == "csv":
            fields = CSV_FIELDS if timing else tuple(f for f in CSV_FIELDS if f != "elapsed")
            self._csv = csv.DictWriter(stream, fieldnames=fields)
            self._csv.writeheader()

    def write(self, record: VerificationRecord) -> None:
        data = record.to_dict(self.timing)
        if self._csv is not None:
            for key in ("closed_form_value", "oracle_value"):
                data[key] = json.dumps(data[key])
            if data["note"] is None:
                data["note"] = ""
            self._csv.writerow(data)
        else:
            self.stream.write(json.dumps(data) + "\n")


def run_sweep(config: SweepConfig, writer: Optional[RecordWriter] = None) -> SweepSummary:
    summary = SweepSummary()
    start = time.perf_counter()
    for record in iter_records(config):
        summary.add(record)
        if writer is not None:
            writer.write(record)
    summary.elapsed = time.perf_counter() - start
    return summary


def open_writer(path: Optional[Path], fmt: str, timing: bool = True):
    """Context-free helper: returns ``(writer, closer)``."""
    if path is None:
        return None, lambda: None
    fh = open(path, "w", newline="" if fmt == "csv" else None)
    return RecordWriter(fh, fmt, timing), fh.close


def collect(records: Iterable[VerificationRecord]) -> SweepSummary:
    summary = SweepSummary()
    for r in records:
        summary.add(r)
    return summary
