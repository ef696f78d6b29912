"""Brute-force ground truth on explicit graphs.

Nothing here knows about offsets: every function takes a :class:`DenseGraph`
and decides its property by exhaustive search, so results can be compared
against the closed forms in :mod:`toeplitz.cliques`, :mod:`toeplitz.structure`
and :mod:`toeplitz.degrees`.  Each search refuses graphs above its cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

from . import kernels
from .core import (
    CapExceeded,
    DenseGraph,
    Hole,
    ToeplitzError,
    default_vertex_cap,
    mask_to_vertices,
)

DEFAULT_COVER_CAP = 12
DEFAULT_PERFECT_CAP = 9


@dataclass(frozen=True)
class OracleBudget:
    """Vertex caps for the exponential procedures.

    ``max_vertices`` bounds the polynomially-checkable and single-search
    oracles, ``max_cover_vertices`` the edge clique cover search and
    ``max_perfect_vertices`` the induced-subgraph enumerations.
    """

    max_vertices: int = field(default_factory=default_vertex_cap)
    max_cover_vertices: Optional[int] = None
    max_perfect_vertices: int = DEFAULT_PERFECT_CAP

    def __post_init__(self) -> None:
        if self.max_cover_vertices is None:
            object.__setattr__(self, "max_cover_vertices", min(DEFAULT_COVER_CAP, self.max_vertices))
        if min(self.max_vertices, self.max_cover_vertices, self.max_perfect_vertices) < 1:
            raise ToeplitzError("oracle caps must be positive")
        if self.max_cover_vertices > self.max_vertices:
            raise ToeplitzError("edge-cover cap cannot exceed the vertex cap")


def _budget(budget: Optional[OracleBudget]) -> OracleBudget:
    return budget if budget is not None else OracleBudget()


def _require(g: DenseGraph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceeded(f"{what}: n={g.n} exceeds cap {cap}")


def max_clique(g: DenseGraph, budget: Optional[OracleBudget] = None) -> tuple[int, tuple[int, ...]]:
    """Size and witness of a maximum clique."""
    _require(g, _budget(budget).max_vertices, "max_clique")
    size, mask = kernels.max_clique(g.rows, g.n)
    return size, tuple(mask_to_vertices(mask))


def clique_number(g: DenseGraph, budget: Optional[OracleBudget] = None) -> int:
    return max_clique(g, budget)[0]


def optimal_coloring(g: DenseGraph, budget: Optional[OracleBudget] = None) -> tuple[int, dict[int, int]]:
    """Chromatic number with a witness colouring (vertex -> colour in ``0..chi-1``)."""
    _require(g, _budget(budget).max_vertices, "chromatic_number")
    k, colors = kernels.chromatic(g.rows, g.n)
    coloring = {v + 1: c for v, c in enumerate(colors)}
    for u, v in g.edges():
        assert coloring[u] != coloring[v]
    return k, coloring


def chromatic_number(g: DenseGraph, budget: Optional[OracleBudget] = None) -> int:
    return optimal_coloring(g, budget)[0]


def find_hole(
    g: DenseGraph,
    parity: Literal["any", "odd"] = "any",
    budget: Optional[OracleBudget] = None,
) -> Optional[Hole]:
    """Lexicographically least hole, or ``None`` when the graph has none.

    With ``parity="odd"`` only odd holes (length >= 5) are considered.
    """
    if parity not in ("any", "odd"):
        raise ToeplitzError(f"parity must be 'any' or 'odd', got {parity!r}")
    _require(g, _budget(budget).max_vertices, "find_hole")
    found = kernels.find_hole(g.rows, g.n, parity == "odd")
    if found is None:
        return None
    hole = Hole(tuple(v + 1 for v in found))
    hole.validate(g.adjacent)
    return hole


def find_antihole(
    g: DenseGraph,
    parity: Literal["any", "odd"] = "any",
    budget: Optional[OracleBudget] = None,
) -> Optional[Hole]:
    """A hole of the complement, i.e. the vertex cycle of an anti-hole in ``g``."""
    return find_hole(g.complement(), parity, budget)


def perfect_elimination_order(g: DenseGraph) -> list[int]:
    """Reverse maximum cardinality search order (ties to the smallest vertex)."""
    n = g.n
    weight = [0] * (n + 1)
    visited: list[int] = []
    remaining = set(range(1, n + 1))
    while remaining:
        v = min(remaining, key=lambda x: (-weight[x], x))
        remaining.discard(v)
        visited.append(v)
        for w in g.neighbors(v):
            if w in remaining:
                weight[w] += 1
    return visited[::-1]


def is_chordal(g: DenseGraph, budget: Optional[OracleBudget] = None) -> bool:
    """Perfect elimination ordering test on a maximum cardinality search order."""
    _require(g, _budget(budget).max_vertices, "is_chordal")
    order = perfect_elimination_order(g)
    position = {v: idx for idx, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if position[w] > position[v]]
        if not g.is_clique(later):
            return False
    return True


def _components_avoiding(g: DenseGraph, removed: int) -> list[int]:
    """Component label per vertex (index ``v - 1``) in ``g`` minus ``removed``; -1 if removed."""
    label = [-1] * g.n
    alive = g.full_mask & ~removed
    current = 0
    while alive:
        low = alive & -alive
        frontier = low
        comp = low
        while frontier:
            nxt = 0
            w = frontier
            while w:
                lb = w & -w
                nxt |= g.rows[lb.bit_length() - 1]
                w ^= lb
            frontier = nxt & alive & ~comp
            comp |= frontier
        for v in mask_to_vertices(comp):
            label[v - 1] = current
        current += 1
        alive &= ~comp
    return label


def find_asteroidal_triple(g: DenseGraph, budget: Optional[OracleBudget] = None) -> Optional[tuple[int, int, int]]:
    """First (lexicographic) asteroidal triple, or ``None``.

    ``a, b, c`` is asteroidal when they are pairwise non-adjacent and each two
    lie in one component of the graph with the third's closed neighbourhood
    deleted.
    """
    _require(g, _budget(budget).max_vertices, "find_asteroidal_triple")
    n = g.n
    labels = [_components_avoiding(g, g.rows[x] | 1 << x) for x in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if g.rows[a] >> b & 1:
                continue
            for c in range(b + 1, n):
                if g.rows[a] >> c & 1 or g.rows[b] >> c & 1:
                    continue
                if labels[a][b] == labels[a][c] and labels[b][a] == labels[b][c] and labels[c][a] == labels[c][b]:
                    return a + 1, b + 1, c + 1
    return None


def is_interval(g: DenseGraph, budget: Optional[OracleBudget] = None) -> bool:
    """Chordal and free of asteroidal triples."""
    return is_chordal(g, budget) and find_asteroidal_triple(g, budget) is None


def is_berge(g: DenseGraph, budget: Optional[OracleBudget] = None) -> bool:
    """No odd hole and no odd anti-hole."""
    return find_hole(g, "odd", budget) is None and find_antihole(g, "odd", budget) is None


def is_weakly_perfect(g: DenseGraph, budget: Optional[OracleBudget] = None) -> bool:
    return clique_number(g, budget) == chromatic_number(g, budget)


def _subset_tables(g: DenseGraph) -> tuple[list[int], list[int]]:
    """Clique number and chromatic number of every induced subgraph, by subset DP."""
    n = g.n
    size = 1 << n
    omega = [0] * size
    independent = [True] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        omega[s] = max(omega[rest], 1 + omega[rest & g.rows[v]])
        independent[s] = independent[rest] and not (g.rows[v] & rest)
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = n
        sub = rest
        while True:
            t = sub | low
            if independent[t]:
                cand = 1 + chi[s ^ t]
                if cand < best:
                    best = cand
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return omega, chi


def is_perfect_bruteforce(g: DenseGraph, budget: Optional[OracleBudget] = None) -> bool:
    """omega == chi on every induced subgraph, without the Berge characterization."""
    _require(g, _budget(budget).max_perfect_vertices, "is_perfect_bruteforce")
    omega, chi = _subset_tables(g)
    return omega == chi


def vertex_clique_cover_number(g: DenseGraph, budget: Optional[OracleBudget] = None) -> int:
    """Fewest cliques covering all vertices, as the chromatic number of the complement."""
    return chromatic_number(g.complement(), budget)


def min_clique_partition_bruteforce(g: DenseGraph, budget: Optional[OracleBudget] = None) -> int:
    """Fewest cliques partitioning the vertices, by direct subset DP."""
    _require(g, _budget(budget).max_perfect_vertices, "min_clique_partition_bruteforce")
    n = g.n
    size = 1 << n
    is_clique = [True] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        v = low.bit_length() - 1
        is_clique[s] = is_clique[rest] and (g.rows[v] & rest) == rest
    best_for = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = n
        sub = rest
        while True:
            t = sub | low
            if is_clique[t]:
                best = min(best, 1 + best_for[s ^ t])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best_for[s] = best
    return best_for[size - 1]


def maximal_cliques(g: DenseGraph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting), sorted ascending."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot = max(mask_to_vertices(px), key=lambda u: (g.rows[u - 1] & p).bit_count())
        cand = p & ~g.rows[pivot - 1]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            bk(r | low, p & g.rows[v], x & g.rows[v])
            p &= ~low
            x |= low
            cand ^= low

    if g.n:
        bk(0, g.full_mask, 0)
    return sorted(out)


def edge_clique_cover(g: DenseGraph, budget: Optional[OracleBudget] = None) -> list[tuple[int, ...]]:
    """A minimum edge clique cover (empty for an edgeless graph)."""
    _require(g, _budget(budget).max_cover_vertices, "edge_clique_cover")
    cliques = [c for c in maximal_cliques(g) if c.bit_count() >= 2]
    chosen = kernels.edge_clique_cover(g.rows, g.n, cliques)
    return [tuple(mask_to_vertices(c)) for c in chosen]


def edge_clique_cover_number(g: DenseGraph, budget: Optional[OracleBudget] = None) -> int:
    return len(edge_clique_cover(g, budget))


def components(g: DenseGraph) -> list[tuple[int, ...]]:
    """Connected components by breadth-first search, ordered by smallest vertex."""
    label = _components_avoiding(g, 0)
    blocks: dict[int, list[int]] = {}
    for v, lab in enumerate(label, start=1):
        blocks.setdefault(lab, []).append(v)
    return [tuple(b) for _, b in sorted(blocks.items(), key=lambda kv: kv[1][0])]
