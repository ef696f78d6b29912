"""Parametric Toeplitz graph model.

A Toeplitz graph ``G_n<t_1, ..., t_k>`` has vertices ``1..n`` and an edge
``ij`` exactly when ``|i - j|`` is one of the offsets.  Everything here works
on the ``(n, offsets)`` pair directly; :class:`DenseGraph` is the explicit
bitmask form used by the brute-force oracle.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_VERTEX_CAP = 14
CAP_ENV_VAR = "TOEPLITZ_ORACLE_CAP"


class ToeplitzError(ValueError):
    """Base class for invalid input to this package."""


class PreconditionError(ToeplitzError):
    """An operation was called outside the domain where it is defined."""


class CapExceeded(ToeplitzError):
    """A brute-force computation was requested above its vertex cap."""


def default_vertex_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_VERTEX_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ToeplitzError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ToeplitzError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class ToeplitzSpec:
    """The pair ``(n, offsets)`` describing ``G_n<t_1, ..., t_k>``.

    Use :func:`new_spec` to build one from arbitrary input; the constructor
    only validates and expects offsets already sorted and unique.
    """

    n: int
    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ToeplitzError(f"vertex count must be a positive integer, got {self.n!r}")
        prev = 0
        for t in self.offsets:
            if not 1 <= t <= self.n - 1:
                raise ToeplitzError(f"offset {t} outside [1, {self.n - 1}]")
            if t <= prev:
                raise ToeplitzError("offsets must be strictly increasing")
            prev = t

    @property
    def k(self) -> int:
        return len(self.offsets)

    @property
    def offset_set(self) -> frozenset[int]:
        return frozenset(self.offsets)

    @property
    def is_edgeless(self) -> bool:
        return not self.offsets

    def __str__(self) -> str:
        return format_spec(self)


def new_spec(n: int, offsets: Iterable[int], *, allow_edgeless: bool = False) -> ToeplitzSpec:
    """Validate and normalize a Toeplitz graph description.

    Duplicate offsets are dropped and the rest sorted.  An empty offset list
    is rejected unless ``allow_edgeless`` is set.

    >>> new_spec(5, [4, 2, 1, 2]).offsets
    (1, 2, 4)
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise ToeplitzError(f"vertex count must be an integer, got {n!r}")
    if n < 1:
        raise ToeplitzError(f"vertex count must be at least 1, got {n}")
    clean = set()
    for t in offsets:
        if isinstance(t, bool) or not isinstance(t, int):
            raise ToeplitzError(f"offset must be an integer, got {t!r}")
        if not 1 <= t <= n - 1:
            raise ToeplitzError(f"offset {t} outside [1, {n - 1}] for n={n}")
        clean.add(t)
    if not clean and not allow_edgeless:
        raise ToeplitzError("empty offset list (pass allow_edgeless=True for the edgeless graph)")
    return ToeplitzSpec(n, tuple(sorted(clean)))


_SPEC_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)$")


def parse_spec(text: str) -> ToeplitzSpec:
    """Parse the one-line ``n: t1,t2,...,tk`` form.

    ``"5:"`` denotes the edgeless graph on five vertices.
    """
    m = _SPEC_RE.match(text)
    if m is None:
        raise ToeplitzError(f"cannot parse spec {text!r}; expected 'n: t1,t2,...'")
    n = int(m.group(1))
    body = m.group(2).strip()
    offsets = [int(tok) for tok in body.split(",")] if body else []
    return new_spec(n, offsets, allow_edgeless=True)


def format_spec(spec: ToeplitzSpec) -> str:
    if not spec.offsets:
        return f"{spec.n}:"
    return f"{spec.n}: " + ",".join(str(t) for t in spec.offsets)


def _check_vertex(spec: ToeplitzSpec, i: int) -> None:
    if not 1 <= i <= spec.n:
        raise ToeplitzError(f"vertex {i} outside [1, {spec.n}]")


def adjacent(spec: ToeplitzSpec, i: int, j: int) -> bool:
    _check_vertex(spec, i)
    _check_vertex(spec, j)
    return abs(i - j) in spec.offset_set


def neighbors(spec: ToeplitzSpec, i: int) -> list[int]:
    _check_vertex(spec, i)
    out = [i - t for t in spec.offsets if i - t >= 1]
    out.extend(i + t for t in spec.offsets if i + t <= spec.n)
    return sorted(out)


def ell(spec: ToeplitzSpec, i: int) -> int:
    """Number of offsets strictly below ``i``."""
    _check_vertex(spec, i)
    count = 0
    for t in spec.offsets:
        if t >= i:
            break
        count += 1
    return count


def degree(spec: ToeplitzSpec, i: int) -> int:
    """Degree of vertex ``i``: offsets that fit to the left plus those that fit to the right."""
    return ell(spec, i) + ell(spec, spec.n - i + 1)


def is_arithmetic(spec: ToeplitzSpec) -> Optional[int]:
    """Return the step ``t`` if the offsets are ``t, 2t, ..., kt``, else ``None``."""
    if not spec.offsets:
        return None
    t = spec.offsets[0]
    for idx, off in enumerate(spec.offsets, start=1):
        if off != idx * t:
            return None
    return t


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def components(spec: ToeplitzSpec) -> ComponentPartition:
    """Connected components, blocks ordered by their smallest vertex."""
    n = spec.n
    seen = [False] * (n + 1)
    blocks = []
    for root in range(1, n + 1):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        block = []
        while stack:
            v = stack.pop()
            block.append(v)
            for t in spec.offsets:
                for w in (v - t, v + t):
                    if 1 <= w <= n and not seen[w]:
                        seen[w] = True
                        stack.append(w)
        blocks.append(tuple(sorted(block)))
    part = ComponentPartition(tuple(blocks))

    step = is_arithmetic(spec)
    if step is not None:
        expected = tuple(tuple(range(i, n + 1, step)) for i in range(1, step + 1))
        assert part.blocks == expected, (spec, part.blocks)
    return part


def complement_spec(spec: ToeplitzSpec) -> ToeplitzSpec:
    present = spec.offset_set
    return ToeplitzSpec(spec.n, tuple(t for t in range(1, spec.n) if t not in present))


@dataclass(frozen=True)
class DenseGraph:
    """Explicit graph on vertices ``1..n``.

    ``rows[v - 1]`` is a bitmask whose bit ``w - 1`` is set when ``v ~ w``.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ToeplitzError("row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ToeplitzError(f"row {v + 1} has bits outside the graph or on the diagonal")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ToeplitzError("adjacency is not symmetric")
                w ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DenseGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ToeplitzError("self-loops are not allowed")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def neighbors(self, i: int) -> list[int]:
        return mask_to_vertices(self.rows[i - 1])

    def degree(self, i: int) -> int:
        return self.rows[i - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in self.neighbors(u) if u < v]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def complement(self) -> "DenseGraph":
        full = self.full_mask
        return DenseGraph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(a, b) for x, a in enumerate(vs) for b in vs[x + 1:])

    def induced(self, vertices: Sequence[int]) -> "DenseGraph":
        """Induced subgraph relabelled ``1..len(vertices)`` in the given order."""
        pos = {v: idx for idx, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in self.neighbors(v):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return DenseGraph(len(vertices), tuple(rows))

    def matrix(self) -> list[list[int]]:
        return [[int(self.adjacent(i, j)) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def mask_to_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def to_dense(spec: ToeplitzSpec, cap: Optional[int] = None) -> DenseGraph:
    if cap is None:
        cap = default_vertex_cap()
    if spec.n > cap:
        raise CapExceeded(f"n={spec.n} exceeds the oracle vertex cap {cap}")
    rows = []
    for i in range(1, spec.n + 1):
        row = 0
        for t in spec.offsets:
            if i - t >= 1:
                row |= 1 << (i - t - 1)
            if i + t <= spec.n:
                row |= 1 << (i + t - 1)
        rows.append(row)
    return DenseGraph(spec.n, tuple(rows))


def iter_specs(n: int, *, include_edgeless: bool = False) -> Iterator[ToeplitzSpec]:
    """All Toeplitz graphs on ``n`` vertices, offset sets in ascending bitmask order.

    Offset ``t`` corresponds to bit ``t - 1``.
    """
    start = 0 if include_edgeless else 1
    for mask in range(start, 1 << (n - 1)):
        yield ToeplitzSpec(n, tuple(t for t in range(1, n) if mask >> (t - 1) & 1))


@dataclass(frozen=True)
class Hole:
    """Chordless cycle ``v_1 v_2 ... v_l v_1`` with ``l >= 4``."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def validate(self, adjacent_fn) -> None:
        """Raise :class:`ToeplitzError` unless this is a hole under ``adjacent_fn(u, v)``."""
        vs = self.vertices
        size = len(vs)
        if size < 4:
            raise ToeplitzError(f"hole must have length >= 4, got {size}")
        if len(set(vs)) != size:
            raise ToeplitzError("hole repeats a vertex")
        for a in range(size):
            for b in range(a + 1, size):
                consecutive = b == a + 1 or (a == 0 and b == size - 1)
                if adjacent_fn(vs[a], vs[b]) != consecutive:
                    kind = "missing cycle edge" if consecutive else "chord"
                    raise ToeplitzError(f"{kind} between {vs[a]} and {vs[b]}")

    def to_json(self) -> list[int]:
        return list(self.vertices)
