"""Exact combinatorial oracles: clique number, chromatic number,
independence number, brute-force induced-subgraph search, and an odd
hole / odd antihole probe.

Everything here is exhaustive and certificate-producing.  The oracles are
the ground truth the constructive algorithms are checked against, so they
deliberately share as little code as possible with the recognizers: the
brute-force induced search below enumerates permutations directly instead
of using the recognizers' encoded-subset scan.

Size caps keep runtimes at desk scale; an oracle asked about a larger
graph raises SizeBoundError instead of silently approximating, and an
exhausted node budget raises SearchBudgetError ("inconclusive"), never a
wrong number.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import PatternSizeError, SearchBudgetError, SizeBoundError
from .graph import Graph, bits, complement, mask_of


@dataclass
class OracleResult:
    """Exact value plus the certificate that proves the 'at least' side.

    For omega/alpha the certificate is the clique / independent set; for
    the chromatic number it is a proper coloring dict using exactly
    `value` colors (optimality is established by the exhausted search for
    value - 1).
    """

    value: int
    certificate: object
    nodes_explored: int


# ----------------------------------------------------------------------
# clique number


def omega_exact(g: Graph, *, size_cap: int = 64,
                node_budget: int | None = None) -> OracleResult:
    """Maximum clique via branch and bound with greedy coloring bounds."""
    n = g.n
    if n > size_cap:
        raise SizeBoundError(f"omega oracle capped at n={size_cap}, got {n}")
    if n == 0:
        return OracleResult(0, frozenset(), 0)
    rows = g.rows
    nodes = 0
    best: list[int] = []

    def expand(chosen: list[int], pool: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetError(
                f"omega search exceeded {node_budget} nodes")
        # Greedy-color the pool; a vertex in color class c can extend the
        # clique by at most c vertices, which orders and prunes branches.
        seq: list[tuple[int, int]] = []
        rem = pool
        color = 0
        while rem:
            color += 1
            avail = rem
            while avail:
                v = (avail & -avail).bit_length() - 1
                seq.append((v, color))
                avail &= ~rows[v] & ~(1 << v)
                rem &= ~(1 << v)
        live = pool
        for v, bound in reversed(seq):
            if len(chosen) + bound <= len(best):
                return
            chosen.append(v)
            nxt = live & rows[v]
            if nxt:
                expand(chosen, nxt)
            elif len(chosen) > len(best):
                best = chosen.copy()
            chosen.pop()
            live &= ~(1 << v)

    expand([], g.vertex_mask)
    return OracleResult(len(best), frozenset(best), nodes)


def alpha_exact(g: Graph, *, size_cap: int = 64,
                node_budget: int | None = None) -> OracleResult:
    """Maximum independent set: clique search on the complement."""
    res = omega_exact(complement(g), size_cap=size_cap, node_budget=node_budget)
    return OracleResult(res.value, res.certificate, res.nodes_explored)


# ----------------------------------------------------------------------
# chromatic number


def _dsatur_greedy(g: Graph) -> dict[int, int]:
    """Greedy DSATUR coloring; an upper bound, not necessarily optimal."""
    n = g.n
    colors: dict[int, int] = {}
    neighbor_colors = [0] * n  # bitmask of colors seen next door
    while len(colors) < n:
        pick = -1
        key = (-1, -1, 0)
        for v in range(n):
            if v in colors:
                continue
            sat = neighbor_colors[v].bit_count()
            deg = g.degree(v)
            cand = (sat, deg, -v)
            if cand > key:
                key = cand
                pick = v
        c = 0
        while (neighbor_colors[pick] >> c) & 1:
            c += 1
        colors[pick] = c
        for w in bits(g.rows[pick]):
            neighbor_colors[w] |= 1 << c
    return colors


def _k_colorable(g: Graph, k: int, clique: list[int],
                 budget_left: list[int]) -> dict[int, int] | None:
    """Backtracking k-coloring with the clique pre-colored for symmetry.

    Further symmetry breaking: a vertex may open color c only if colors
    below c are already in use.  budget_left is a single-cell mutable node
    counter shared across the iterative-deepening loop.
    """
    n = g.n
    if len(clique) > k:
        return None
    full = (1 << k) - 1
    colors = [-1] * n
    avail = [full] * n
    uncolored = n

    def assign(v: int, c: int, touched: list[int]) -> bool:
        colors[v] = c
        ok = True
        for w in bits(g.rows[v]):
            if colors[w] == -1 and (avail[w] >> c) & 1:
                avail[w] &= ~(1 << c)
                touched.append(w)
                if avail[w] == 0:
                    ok = False
        return ok

    for idx, v in enumerate(clique):
        touched: list[int] = []
        ok = assign(v, idx, touched)
        uncolored -= 1
        if not ok:
            # some vertex outside the clique just lost its last color
            return None
    max_used = len(clique) - 1

    def dfs(uncolored: int, max_used: int) -> bool:
        if budget_left[0] <= 0:
            raise SearchBudgetError("chromatic search exceeded node budget")
        budget_left[0] -= 1
        if uncolored == 0:
            return True
        # most-constrained vertex first; ties by degree then index
        pick = -1
        key = (k + 1, -1, 0)
        for v in range(n):
            if colors[v] != -1:
                continue
            cand = (avail[v].bit_count(), -g.degree(v), v)
            if cand < key:
                key = cand
                pick = v
        cap = min(k - 1, max_used + 1)
        allowed = avail[pick] & ((1 << (cap + 1)) - 1)
        for c in bits(allowed):
            touched: list[int] = []
            ok = assign(pick, c, touched)
            if ok and dfs(uncolored - 1, max(max_used, c)):
                return True
            colors[pick] = -1
            for w in touched:
                avail[w] |= 1 << c
        return False

    if uncolored == 0 or dfs(uncolored, max_used):
        return {v: colors[v] for v in range(n)}
    return None


def chromatic_exact(g: Graph, *, size_cap: int = 32,
                    node_budget: int | None = None) -> OracleResult:
    """Chromatic number by iterative deepening from the clique bound.

    A maximum clique is computed first and pre-colored, which both starts
    the deepening at a true lower bound and kills the color-permutation
    symmetry the plain backtracking search would otherwise drown in.
    """
    n = g.n
    if n > size_cap:
        raise SizeBoundError(f"chromatic oracle capped at n={size_cap}, got {n}")
    if n == 0:
        return OracleResult(0, {}, 0)
    om = omega_exact(g, size_cap=max(size_cap, 64), node_budget=node_budget)
    clique = sorted(om.certificate)
    greedy = _dsatur_greedy(g)
    ub = len(set(greedy.values()))
    nodes_used = om.nodes_explored
    budget_start = (node_budget - nodes_used if node_budget is not None
                    else 1 << 62)
    budget_left = [budget_start]
    for k in range(om.value, ub):
        try:
            found = _k_colorable(g, k, clique, budget_left)
        except SearchBudgetError:
            raise SearchBudgetError(
                f"chromatic search for k={k} exceeded node budget") from None
        if found is not None:
            return OracleResult(
                k, found, nodes_used + budget_start - budget_left[0])
    return OracleResult(
        ub, greedy, nodes_used + budget_start - budget_left[0])


# ----------------------------------------------------------------------
# brute-force induced subgraph search (independent of the recognizers)


def contains_induced_bruteforce(g: Graph, pattern: Graph):
    """Plain subsets-times-permutations induced search, no pruning.

    Kept deliberately naive so it can serve as an independent check of the
    recognizers' faster scan.  Patterns up to 6 vertices.
    """
    k = pattern.n
    if k > 6:
        raise PatternSizeError(
            f"brute-force induced search capped at 6 pattern vertices, got {k}")
    if k == 0:
        return ()
    if k > g.n:
        return None
    for subset in combinations(range(g.n), k):
        for perm in permutations(range(k)):
            ok = True
            for a in range(k):
                for b in range(a + 1, k):
                    if g.has_edge(subset[a], subset[b]) != \
                            pattern.has_edge(perm[a], perm[b]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return subset
    return None


# ----------------------------------------------------------------------
# odd hole / odd antihole probe


def _induced_cycle_order(g: Graph, subset) -> tuple[int, ...] | None:
    """Cyclic order if the subset induces a cycle, else None."""
    smask = mask_of(subset)
    for v in subset:
        if (g.rows[v] & smask).bit_count() != 2:
            return None
    start = subset[0]
    order = [start]
    prev = -1
    cur = start
    for _ in range(len(subset) - 1):
        opts = [w for w in bits(g.rows[cur] & smask) if w != prev]
        if not opts:
            return None
        prev, cur = cur, min(opts)
        order.append(cur)
    if len(set(order)) != len(subset) or not g.has_edge(order[-1], start):
        return None
    return tuple(order)


def find_odd_hole_or_antihole(g: Graph, *, size_cap: int = 16):
    """First odd hole or odd antihole found, as (kind, ordered tuple).

    Scans subset sizes in increasing order, holes before antiholes at
    each size (a size-5 antihole is a size-5 hole, so antiholes start at
    7).  Returns None when the graph has neither, which together with the
    complement view makes this a small perfection probe.
    """
    n = g.n
    if n > size_cap:
        raise SizeBoundError(
            f"odd hole probe capped at n={size_cap}, got {n}")
    co = complement(g)
    for k in range(5, n + 1, 2):
        for subset in combinations(range(n), k):
            order = _induced_cycle_order(g, subset)
            if order is not None:
                return "odd_hole", order
        if k >= 7:
            for subset in combinations(range(n), k):
                order = _induced_cycle_order(co, subset)
                if order is not None:
                    return "odd_antihole", order
    return None
