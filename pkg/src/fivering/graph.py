"""Immutable dense graphs with bitset adjacency rows, constructors, algebra.

Vertices are always 0..n-1.  Each row is an int whose set bits are the
neighbors of that vertex, which keeps neighborhood intersections, trace
computations, and exhaustive subgraph scans cheap at desk scale (n up to a
couple hundred).  Graphs are value objects: every operation returns a new
graph, nothing mutates, and instances hash, so they are safe to share and
to use as dict keys.
"""

from __future__ import annotations

from itertools import permutations

from .errors import PatternSizeError


def mask_of(vertices) -> int:
    """Bitmask with one bit per vertex in the iterable."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph on 0..n-1; `rows[v]` is the neighbor bitmask.

    The constructor trusts its arguments (symmetric, loop-free rows); build
    graphs through `from_edges` and friends unless you maintain the
    invariant yourself.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.rows = rows

    # ------------------------------------------------------------------
    # queries

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            higher = self.rows[v] >> (v + 1)
            for w in bits(higher):
                out.append((v, v + 1 + w))
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    # ------------------------------------------------------------------
    # value semantics

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# ----------------------------------------------------------------------
# constructors


def from_edges(n: int, edges) -> Graph:
    """Graph on n vertices from an iterable of (u, v) pairs.

    Duplicate edges collapse; self-loops and out-of-range endpoints are
    rejected with the offending pair in the message.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


# ----------------------------------------------------------------------
# algebra


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full & ~r & ~(1 << v)) for v, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h, with h's vertices shifted up by g.n."""
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def blow_up(pattern: Graph, sizes) -> tuple[Graph, list[list[int]]]:
    """Replace pattern vertex i by an independent bag of sizes[i] vertices.

    Bags of adjacent pattern vertices are completely joined, bags of
    non-adjacent ones see no edges.  Size 0 bags are allowed.  Returns the
    graph and the bag map (bag i lists the vertices standing in for
    pattern vertex i, in ascending order).
    """
    sizes = list(sizes)
    if len(sizes) != pattern.n:
        raise ValueError(
            f"need {pattern.n} bag sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise ValueError("bag sizes must be nonnegative")
    bags: list[list[int]] = []
    offset = 0
    for s in sizes:
        bags.append(list(range(offset, offset + s)))
        offset += s
    n = offset
    bag_masks = [mask_of(b) for b in bags]
    rows = [0] * n
    for i in range(pattern.n):
        nbr_mask = 0
        for j in bits(pattern.rows[i]):
            nbr_mask |= bag_masks[j]
        for v in bags[i]:
            rows[v] = nbr_mask
    return Graph(n, tuple(rows)), bags


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the relabel map (new index -> old vertex).

    The kept vertices are sorted, so the relabeling is order preserving
    and deterministic.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        row = g.rows[v]
        for w in keep:
            if (row >> w) & 1:
                r |= 1 << index[w]
        rows.append(r)
    return Graph(len(keep), tuple(rows)), keep


def add_vertex(g: Graph, neighbor_mask: int) -> Graph:
    """New graph with vertex g.n attached to the set bits of neighbor_mask."""
    if neighbor_mask >> g.n:
        raise ValueError("neighbor mask references vertices beyond the graph")
    v = g.n
    rows = [r | (1 << v) if (neighbor_mask >> i) & 1 else r
            for i, r in enumerate(g.rows)]
    rows.append(neighbor_mask)
    return Graph(g.n + 1, tuple(rows))


def toggle_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError(f"cannot toggle a loop at {u}")
    if not (0 <= u < g.n) or not (0 <= v < g.n):
        raise ValueError(f"pair ({u}, {v}) out of range for n={g.n}")
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


# ----------------------------------------------------------------------
# traversal


def component_masks(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by least vertex."""
    seen = 0
    out = []
    full = g.vertex_mask
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.rows[v]
            frontier = grow & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def components(g: Graph) -> list[tuple[int, ...]]:
    return [tuple(bits(m)) for m in component_masks(g)]


def components_within(g: Graph, vertices) -> list[frozenset[int]]:
    """Components of the subgraph induced on `vertices`, in original labels.

    Ordered by least vertex, like component_masks.
    """
    remaining = mask_of(vertices)
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.rows[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        out.append(frozenset(bits(comp)))
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def bfs_layers(g: Graph, start_mask: int) -> list[int]:
    """Masks of vertices at distance 0, 1, 2, ... from the start set.

    Stops once no new vertices appear; unreachable vertices show up in no
    layer.
    """
    layers = [start_mask]
    seen = start_mask
    while True:
        grow = 0
        for v in bits(layers[-1]):
            grow |= g.rows[v]
        nxt = grow & ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt


# ----------------------------------------------------------------------
# isomorphism (brute force, small graphs only)

_ISO_MAX = 10


def isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """An isomorphism g -> h as a dict, or None.

    Brute-force backtracking with degree pruning; limited to graphs on at
    most 10 vertices, which is all the package ever compares (named
    constructions and quotients).
    """
    if g.n > _ISO_MAX or h.n > _ISO_MAX:
        raise PatternSizeError(
            f"isomorphism supports at most {_ISO_MAX} vertices")
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return None
    n = g.n
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or gdeg[v] != hdeg[w]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(v + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    if place(0):
        return {v: image[v] for v in range(n)}
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None


def relabeled(g: Graph, perm) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("relabeling must be a permutation of the vertices")
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for w in bits(g.rows[v]):
            r |= 1 << perm[w]
        rows[perm[v]] = r
    return Graph(g.n, tuple(rows))


def all_labelings(pattern: Graph) -> frozenset[tuple[int, ...]]:
    """Row tuples of every labeled copy of the pattern on its own vertex set."""
    out = set()
    for perm in permutations(range(pattern.n)):
        out.add(relabeled(pattern, perm).rows)
    return frozenset(out)
