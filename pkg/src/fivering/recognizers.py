"""Hereditary class recognizers, hole finders, and structure predicates.

The induced-pattern search encodes each candidate vertex subset's upper
triangle as an integer and tests membership in the precomputed set of
codes of all labeled copies of the pattern.  That turns the inner loop
into bit fiddling plus one set lookup, which is what makes exhaustive
class checks over thousands of walk states practical in pure Python.

`must_include` exists for incremental rechecks: after toggling one pair
in a known class member, any new forbidden pattern must use both touched
vertices, so the scan can restrict itself to subsets containing them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import PatternSizeError
from .graph import (Graph, bits, complete_graph, cycle_graph, disjoint_union,
                    induced_subgraph, join, mask_of, path_graph)

P5 = path_graph(5)
C5 = cycle_graph(5)
K3 = complete_graph(3)
K1_UNION_K3 = disjoint_union(complete_graph(1), K3)
K1_JOIN_K1_UNION_K3 = join(complete_graph(1), K1_UNION_K3)

#: class name -> forbidden pattern (besides being an induced-subgraph-closed
#: family, each class here is "free" of exactly one small pattern)
CLASS_PATTERNS: dict[str, Graph] = {
    "p5_free": P5,
    "k1uk3_free": K1_UNION_K3,
    "k1_join_k1uk3_free": K1_JOIN_K1_UNION_K3,
    "k3_free": K3,
}

_PATTERN_MAX = 8


@lru_cache(maxsize=64)
def _pattern_codes(n: int, rows: tuple[int, ...]) -> frozenset[int]:
    """Upper-triangle codes of every labeled copy of the pattern."""
    from itertools import permutations
    codes = set()
    for perm in permutations(range(n)):
        code = 0
        bit = 0
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                if (rows[perm[i]] >> pj) & 1:
                    code |= 1 << bit
                bit += 1
        codes.add(code)
    return frozenset(codes)


def contains_induced(g: Graph, pattern: Graph, must_include=()):
    """Lexicographically least vertex subset inducing the pattern, or None.

    Subsets are enumerated in combination order, so the returned tuple is
    deterministic.  With `must_include`, only subsets containing those
    vertices are scanned (least such subset in the restricted order).
    Patterns are capped at 8 vertices.
    """
    k = pattern.n
    if k > _PATTERN_MAX:
        raise PatternSizeError(
            f"induced search capped at {_PATTERN_MAX} pattern vertices, got {k}")
    if k == 0:
        return ()
    fixed = tuple(sorted(set(must_include)))
    if len(fixed) > k or k > g.n:
        return None
    for v in fixed:
        if not (0 <= v < g.n):
            raise ValueError(f"must_include vertex {v} out of range")
    codes = _pattern_codes(pattern.n, pattern.rows)
    rows = g.rows
    free = [v for v in range(g.n) if v not in fixed]
    need = k - len(fixed)

    if not fixed and k == 5:
        # hottest path: unrolled 5-subset encoding
        for s in combinations(range(g.n), 5):
            a, b, c, d, e = s
            rb, rc, rd, re = rows[b], rows[c], rows[d], rows[e]
            code = ((rb >> a) & 1) | ((rc >> a) & 1) << 1 | ((rc >> b) & 1) << 2 \
                | ((rd >> a) & 1) << 3 | ((rd >> b) & 1) << 4 | ((rd >> c) & 1) << 5 \
                | ((re >> a) & 1) << 6 | ((re >> b) & 1) << 7 | ((re >> c) & 1) << 8 \
                | ((re >> d) & 1) << 9
            if code in codes:
                return s
        return None

    for chosen in combinations(free, need):
        s = tuple(sorted(fixed + chosen))
        code = 0
        bit = 0
        for j in range(1, k):
            rj = rows[s[j]]
            for i in range(j):
                if (rj >> s[i]) & 1:
                    code |= 1 << bit
                bit += 1
        if code in codes:
            return s
    return None


def is_p5_free(g: Graph) -> bool:
    return contains_induced(g, P5) is None


def is_k1uk3_free(g: Graph) -> bool:
    return contains_induced(g, K1_UNION_K3) is None


def is_k1_join_k1uk3_free(g: Graph) -> bool:
    return contains_induced(g, K1_JOIN_K1_UNION_K3) is None


def is_k3_free(g: Graph) -> bool:
    return contains_induced(g, K3) is None


@dataclass
class RecognitionReport:
    """Class membership flags with forbidden-subgraph witnesses.

    flags[name] is True when the graph is free of that class's pattern;
    witnesses[name] holds the least induced copy otherwise.  omega/alpha
    are filled on request only.
    """

    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)
    omega: int | None = None
    alpha: int | None = None

    @property
    def all_free(self) -> bool:
        return all(self.flags.values())

    def to_json_obj(self) -> dict:
        return {
            "flags": dict(self.flags),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "omega": self.omega,
            "alpha": self.alpha,
        }


def recognize(g: Graph, classes=None, with_numbers: bool = False) -> RecognitionReport:
    """Run the requested class recognizers (all four by default)."""
    names = list(CLASS_PATTERNS) if classes is None else list(classes)
    report = RecognitionReport()
    for name in names:
        if name not in CLASS_PATTERNS:
            raise ValueError(f"unknown class {name!r}")
        hit = contains_induced(g, CLASS_PATTERNS[name])
        report.flags[name] = hit is None
        if hit is not None:
            report.witnesses[name] = hit
    if with_numbers:
        from .oracles import alpha_exact, omega_exact
        report.omega = omega_exact(g).value
        report.alpha = alpha_exact(g).value
    return report


# ----------------------------------------------------------------------
# hole finding


def _cycle_order(g: Graph, subset) -> tuple[int, ...] | None:
    """Cyclic vertex order if the subset induces a cycle, else None.

    Starts at the least vertex and walks toward its smaller neighbor, so
    the order is canonical for a given subset.
    """
    smask = mask_of(subset)
    for v in subset:
        if (g.rows[v] & smask).bit_count() != 2:
            return None
    start = subset[0]
    order = [start]
    prev = -1
    cur = start
    for _ in range(len(subset) - 1):
        nxt = [w for w in bits(g.rows[cur] & smask) if w != prev]
        if not nxt:
            return None
        prev, cur = cur, min(nxt)
        order.append(cur)
    if len(set(order)) != len(subset) or not g.has_edge(order[-1], start):
        return None
    return tuple(order)


def find_hole(g: Graph, length: int) -> tuple[int, ...] | None:
    """Least vertex subset inducing a chordless cycle of that length,
    returned in canonical cyclic order."""
    if length < 4:
        raise ValueError("holes have length at least 4")
    for subset in combinations(range(g.n), length):
        order = _cycle_order(g, subset)
        if order is not None:
            return order
    return None


def find_five_hole(g: Graph) -> tuple[int, ...] | None:
    return find_hole(g, 5)


def find_non_dominating_five_hole(g: Graph):
    """First 5-hole (subset order) leaving some vertex at distance >= 2.

    Returns (ordered hole, frozenset of far vertices) or None when every
    5-hole dominates the graph (or there is no 5-hole at all).
    """
    full = g.vertex_mask
    for subset in combinations(range(g.n), 5):
        order = _cycle_order(g, subset)
        if order is None:
            continue
        closed = mask_of(subset)
        for v in subset:
            closed |= g.rows[v]
        far = full & ~closed
        if far:
            return order, frozenset(bits(far))
    return None


def find_clique_cutset(g: Graph) -> tuple[int, ...] | None:
    """First complete vertex subset whose removal leaves >= 2 components.

    A disconnected input reports the empty tuple (the empty clique
    already separates it), so `find_clique_cutset(g) is None` reads as
    "connected and not decomposable by any clique separator".  Complete
    subsets are grown depth-first by common neighbors above the largest
    member, which keeps the scan deterministic; fine at desk scale.
    """
    full = g.vertex_mask
    if _disconnected_within(g, full):
        return ()

    def grow(clique: tuple[int, ...], cand_mask: int):
        for v in bits(cand_mask):
            cut = clique + (v,)
            if _disconnected_within(g, full & ~mask_of(cut)):
                return cut
            deeper = grow(cut, cand_mask & g.rows[v] & ~((1 << (v + 1)) - 1))
            if deeper is not None:
                return deeper
        return None

    return grow((), full)


def _disconnected_within(g: Graph, region: int) -> bool:
    """Does the induced subgraph on this vertex mask split in two?"""
    if region == 0:
        return False
    seen = region & -region
    while True:
        grown = seen
        for v in bits(seen):
            grown |= g.rows[v] & region
        if grown == seen:
            return grown != region
        seen = grown


# ----------------------------------------------------------------------
# bipartiteness


@dataclass
class BipartiteResult:
    bipartite: bool
    colors: dict[int, int] | None    # proper 2-coloring when bipartite
    odd_cycle: tuple[int, ...] | None  # cyclically ordered witness otherwise


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-coloring; on failure returns an odd cycle as the witness."""
    colors: dict[int, int] = {}
    parent: dict[int, int] = {}
    for root in range(g.n):
        if root in colors:
            continue
        colors[root] = 0
        parent[root] = -1
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in bits(g.rows[v]):
                if w not in colors:
                    colors[w] = colors[v] ^ 1
                    parent[w] = v
                    queue.append(w)
                elif colors[w] == colors[v]:
                    return BipartiteResult(False, None, _odd_cycle(parent, v, w))
    return BipartiteResult(True, colors, None)


def _odd_cycle(parent: dict[int, int], u: int, v: int) -> tuple[int, ...]:
    """Close the BFS tree paths of the conflicting edge into an odd cycle."""
    up, vp = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(up)
        up.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        vp.append(x)
    meet = seen[x]
    cycle = up[:meet + 1] + vp[:-1][::-1]
    return tuple(cycle)


# ----------------------------------------------------------------------
# twin structure


def twin_quotient(g: Graph) -> tuple[Graph, list[tuple[int, ...]]]:
    """Quotient by false twins plus the bag map.

    Vertices with identical neighbor masks are mutually non-adjacent and
    interchangeable; each group becomes one quotient vertex.  Bags are
    ordered by least member, and the original graph is exactly the
    blow-up of the quotient along the returned bags.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v], []).append(v)
    bags = sorted((tuple(vs) for vs in groups.values()), key=lambda b: b[0])
    index = {}
    for i, bag in enumerate(bags):
        for v in bag:
            index[v] = i
    rows = [0] * len(bags)
    for i, bag in enumerate(bags):
        rep = bag[0]
        for w in bits(g.rows[rep]):
            rows[i] |= 1 << index[w]
    return Graph(len(bags), tuple(rows)), bags


def is_five_ring(g: Graph) -> list[tuple[int, ...]] | None:
    """Bags in cyclic order when g is a blow-up of C5 with nonempty bags.

    The twin quotient of such a graph is exactly C5, so the test is: five
    twin classes whose quotient is a 5-cycle.  Returns None otherwise.
    """
    quotient, bags = twin_quotient(g)
    if quotient.n != 5:
        return None
    order = _cycle_order(quotient, tuple(range(5)))
    if order is None:
        return None
    return [bags[i] for i in order]


def is_blow_up_of(g: Graph, pattern: Graph, allow_empty_bags: bool = False) -> bool:
    """Whether g arises from the pattern by substituting independent bags.

    Checks for an injective assignment of g's twin classes to pattern
    vertices that preserves adjacency exactly; with allow_empty_bags the
    assignment may miss pattern vertices (their bags are empty), without
    it the assignment must be onto.  Patterns are capped at 10 vertices.

    Note the check is phrased on the twin quotient, so a pattern that
    itself contains false twins is matched through its smaller reduced
    forms; callers that enumerate candidate patterns (as the partition
    checker does) are unaffected.
    """
    if pattern.n > 10:
        raise PatternSizeError("blow-up check capped at 10 pattern vertices")
    quotient, _bags = twin_quotient(g)
    q = quotient.n
    if allow_empty_bags:
        if q > pattern.n:
            return False
    elif q != pattern.n:
        return False
    image = [-1] * q
    used = [False] * pattern.n

    def place(i: int) -> bool:
        if i == q:
            return True
        for w in range(pattern.n):
            if used[w]:
                continue
            ok = True
            for j in range(i):
                if quotient.has_edge(j, i) != pattern.has_edge(image[j], w):
                    ok = False
                    break
            if ok:
                image[i] = w
                used[w] = True
                if place(i + 1):
                    return True
                used[w] = False
                image[i] = -1
        return False

    return place(0)


# ----------------------------------------------------------------------
# convenience: induced subgraph on a vertex set, with class recheck hooks


def induced_on(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Alias of graph.induced_subgraph, re-exported for callers here."""
    return induced_subgraph(g, vertices)
