"""Pure-Python exponential search kernels.

All kernels take ``adj``, a sequence of ``n`` neighbourhood bitmasks with
0-indexed vertices, and return 0-indexed results.  ``_ckernels.pyx`` is a
line-for-line port; both must return identical values.
"""

from __future__ import annotations

from typing import Optional, Sequence


def max_clique(adj: Sequence[int], n: int) -> tuple[int, int]:
    """Return ``(size, mask)`` of a maximum clique.

    Branch and bound, lowest vertex first; the witness is the first maximum
    clique met in that order.
    """
    best_size = 0
    best_mask = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if cand == 0:
            if size > best_size:
                best_size, best_mask = size, clique
            return
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(clique | low, size + 1, cand & adj[v])
            cand ^= low

    expand(0, 0, (1 << n) - 1)
    return best_size, best_mask


def _k_colorable(adj: Sequence[int], order: Sequence[int], k: int, colors: list[int]) -> bool:
    n = len(order)
    classes = [0] * k

    def place(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        bit = 1 << v
        # a fresh colour is only tried once (symmetry breaking)
        top = used + 1 if used < k else k
        for c in range(top):
            if classes[c] & adj[v] == 0:
                classes[c] |= bit
                colors[v] = c
                if place(pos + 1, used + 1 if c == used else used):
                    return True
                classes[c] ^= bit
        return False

    return place(0, 0)


def chromatic(adj: Sequence[int], n: int) -> tuple[int, list[int]]:
    """Return ``(chi, colouring)``, trying ``k = omega, omega + 1, ...``."""
    if n == 0:
        return 0, []
    lower, _ = max_clique(adj, n)
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    k = max(lower, 1)
    while True:
        colors = [-1] * n
        if _k_colorable(adj, order, k, colors):
            return k, colors
        k += 1


def find_hole(adj: Sequence[int], n: int, odd: bool) -> Optional[list[int]]:
    """Lexicographically least chordless cycle of length >= 4 (odd length if ``odd``).

    Depth-first over induced paths whose first vertex is the cycle minimum.
    """
    path: list[int] = []

    def extend(start: int, blocked: int, last: int) -> Optional[list[int]]:
        # blocked: closed neighbourhoods of interior path vertices plus the start
        cand = adj[last] & ~blocked & ~((2 << start) - 1)
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if adj[w] >> start & 1:
                if len(path) >= 3 and (not odd or (len(path) + 1) % 2 == 1):
                    return path + [w]
                continue
            path.append(w)
            found = extend(start, blocked | adj[last] | (1 << last), w)
            path.pop()
            if found is not None:
                return found
        return None

    for v in range(n):
        path.append(v)
        nb = adj[v] & ~((2 << v) - 1)
        while nb:
            low = nb & -nb
            u = low.bit_length() - 1
            nb ^= low
            path.append(u)
            found = extend(v, 1 << v, u)
            path.pop()
            if found is not None:
                return found
        path.pop()
    return None


def _packing_bound(adj: Sequence[int], unc: list[int], n: int) -> int:
    """Greedy count of uncovered edges no two of which fit in one clique."""
    picked: list[int] = []
    for u in range(n):
        row = unc[u] & ~((2 << u) - 1)
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            pair = (1 << u) | low
            ok = True
            for other in picked:
                union = pair | other
                # the two edges share a clique iff their endpoints are pairwise adjacent
                w = union
                clique = True
                while w:
                    lb = w & -w
                    x = lb.bit_length() - 1
                    if (union & ~lb) & ~adj[x]:
                        clique = False
                        break
                    w ^= lb
                if clique:
                    ok = False
                    break
            if ok:
                picked.append(pair)
    return len(picked)


def edge_clique_cover(adj: Sequence[int], n: int, cliques: Sequence[int]) -> list[int]:
    """Minimum edge clique cover chosen from ``cliques`` (normally the maximal cliques).

    Returns the chosen clique masks.  Exact: branch on the cliques containing
    the first uncovered edge, bounded by a greedy edge packing.
    """
    unc = list(adj)
    if not any(unc):
        return []

    # greedy upper bound
    greedy: list[int] = []
    work = list(adj)
    while any(work):
        best_c, best_gain = 0, -1
        for c in cliques:
            gain = 0
            w = c
            while w:
                lb = w & -w
                gain += (work[lb.bit_length() - 1] & c).bit_count()
                w ^= lb
            if gain > best_gain:
                best_c, best_gain = c, gain
        greedy.append(best_c)
        w = best_c
        while w:
            lb = w & -w
            work[lb.bit_length() - 1] &= ~best_c
            w ^= lb

    best = list(greedy)
    chosen: list[int] = []

    def search() -> None:
        nonlocal best
        u = -1
        for x in range(n):
            if unc[x]:
                u = x
                break
        if u < 0:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _packing_bound(adj, unc, n) >= len(best):
            return
        v = (unc[u] & -unc[u]).bit_length() - 1
        need = (1 << u) | (1 << v)
        for c in cliques:
            if c & need != need:
                continue
            saved = []
            w = c
            while w:
                lb = w & -w
                x = lb.bit_length() - 1
                saved.append((x, unc[x]))
                unc[x] &= ~c
                w ^= lb
            chosen.append(c)
            search()
            chosen.pop()
            for x, row in saved:
                unc[x] = row
            if len(chosen) + 1 >= len(best):
                return

    search()
    return best
