"""Named constructions and in-class graph streams.

Two handcrafted graphs anchor the test corpus: twin_rings (two 5-cycles
cross-wired so that independent sets stay small) and ring_of_rings (a
5-cycle of 5-cycles with consecutive rings fully joined, the extremal
example whose chromatic number doubles its clique number).  The rest of
the module produces streams of hereditary-class members, either by
exhaustive labeled growth (small n) or by a seeded edge-toggle random
walk that only ever visits members.

Class membership during growth and walking is checked incrementally:
after toggling one pair, any newly created forbidden pattern must use
both endpoints, so the recognizer only scans pattern placements through
them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .errors import GraphFormatError, SizeBoundError, WalkStalledError
from .graph import (
    Graph,
    add_vertex,
    blow_up,
    complement,
    cycle_graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    is_isomorphic,
    path_graph,
    toggle_edge,
)
from .recognizers import (
    K1_JOIN_K1_UNION_K3,
    K1_UNION_K3,
    K3,
    P5,
    contains_induced,
)
from .serialize import graph_from_json_obj

WALK_CLASSES = {
    "p5_k1uk3_free": (P5, K1_UNION_K3),
    "p5_k1joink1uk3_free": (P5, K1_JOIN_K1_UNION_K3),
    "p5_k3_free": (P5, K3),
}


def forbidden_patterns(class_name: str) -> tuple[Graph, ...]:
    try:
        return WALK_CLASSES[class_name]
    except KeyError:
        raise GraphFormatError(
            f"unknown class {class_name!r}, expected one of "
            f"{sorted(WALK_CLASSES)}") from None


def in_class(g: Graph, class_name: str) -> bool:
    """Full membership check against the class's forbidden patterns."""
    return all(contains_induced(g, p) is None
               for p in forbidden_patterns(class_name))


def in_class_incremental(g: Graph, class_name: str, pair) -> bool:
    """Membership recheck after toggling one pair of a known member.

    Any forbidden pattern that was absent before the toggle and present
    after must contain both endpoints, so only those placements are
    scanned.
    """
    return all(contains_induced(g, p, must_include=pair) is None
               for p in forbidden_patterns(class_name))


# ----------------------------------------------------------------------
# named constructions


def twin_rings() -> Graph:
    """Two 5-cycles x0..x4 (vertices 0..4) and y0..y4 (vertices 5..9),
    plus the cross edges x_k y_k, x_k y_{k+1}, x_k y_{k+3}.

    25 edges total; every independent set has size at most 3 and the
    chromatic number is 4.
    """
    edges = []
    for k in range(5):
        edges.append((k, (k + 1) % 5))
        edges.append((5 + k, 5 + (k + 1) % 5))
        for off in (0, 1, 3):
            edges.append((k, 5 + (k + off) % 5))
    return from_edges(10, edges)


def ring_of_rings() -> Graph:
    """A 5-cycle of 5-cycles: ring b occupies vertices 5b..5b+4, and
    consecutive rings are completely joined.

    25 vertices and 150 edges; clique number 4, chromatic number 8.
    """
    edges = []
    for b in range(5):
        base = 5 * b
        for k in range(5):
            edges.append((base + k, base + (k + 1) % 5))
        nxt = 5 * ((b + 1) % 5)
        for u in range(base, base + 5):
            for w in range(nxt, nxt + 5):
                edges.append((u, w))
    return from_edges(25, edges)


def gen_five_ring(sizes) -> Graph:
    """Blow up a 5-cycle into a ring of independent bags.

    Bag i holds size[i] vertices on consecutive indices, matching
    five_ring_bags.
    """
    sizes = list(sizes)
    if len(sizes) != 5 or any(s < 1 for s in sizes):
        raise GraphFormatError(
            f"five_ring needs 5 sizes, all at least 1, got {sizes!r}")
    g, _bags = blow_up(cycle_graph(5), sizes)
    return g


def five_ring_bags(sizes) -> list[list[int]]:
    """The bag layout gen_five_ring(sizes) uses."""
    sizes = list(sizes)
    bags = []
    at = 0
    for s in sizes:
        bags.append(list(range(at, at + s)))
        at += s
    return bags


# ----------------------------------------------------------------------
# family specs (wire format of the CLI gen command)


_FAMILIES = ("cycle", "path", "complete", "five_ring", "F", "H",
             "blowup", "random_class", "enumerate_class")


@dataclass(frozen=True)
class FamilySpec:
    """Declarative recipe for a graph or a stream of graphs.

    Doubles as the replay record in findings files: the same spec always
    rebuilds the same stream.
    """

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"family": self.family, "params": dict(self.params)}
        if self.seed is not None:
            obj["seed"] = self.seed
        return obj

    @staticmethod
    def from_json_obj(obj) -> "FamilySpec":
        if not isinstance(obj, dict):
            raise GraphFormatError("family spec must be a JSON object")
        family = obj.get("family")
        if family not in _FAMILIES:
            raise GraphFormatError(
                f"unknown family {family!r}, expected one of {_FAMILIES}")
        params = obj.get("params", {})
        if not isinstance(params, dict):
            raise GraphFormatError("family params must be an object")
        seed = obj.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise GraphFormatError("seed must be an integer")
        return FamilySpec(family=family, params=dict(params), seed=seed)


def _int_param(params: dict, key: str, minimum: int) -> int:
    val = params.get(key)
    if not isinstance(val, int) or isinstance(val, bool) or val < minimum:
        raise GraphFormatError(
            f"param {key!r} must be an integer >= {minimum}, got {val!r}")
    return val


def build_family(spec: FamilySpec) -> Iterator[Graph]:
    """Realize a family spec as a graph stream (single-graph families
    yield exactly one)."""
    fam, p = spec.family, spec.params
    if fam == "cycle":
        yield cycle_graph(_int_param(p, "n", 3))
    elif fam == "path":
        yield path_graph(_int_param(p, "n", 1))
    elif fam == "complete":
        yield complete_graph(_int_param(p, "n", 0))
    elif fam == "five_ring":
        yield gen_five_ring(p.get("sizes", ()))
    elif fam == "F":
        yield twin_rings()
    elif fam == "H":
        yield ring_of_rings()
    elif fam == "blowup":
        if "pattern" not in p:
            raise GraphFormatError("blowup needs a 'pattern' graph object")
        pattern = graph_from_json_obj(p["pattern"])
        sizes = p.get("sizes")
        if not isinstance(sizes, list) or len(sizes) != pattern.n:
            raise GraphFormatError(
                "blowup needs 'sizes' with one entry per pattern vertex")
        g, _bags = blow_up(pattern, sizes)
        yield g
    elif fam == "random_class":
        cls = p.get("class")
        n = _int_param(p, "n", 1)
        iters = _int_param(p, "iters", 0)
        stride = p.get("stride", 1)
        if not isinstance(stride, int) or stride < 1:
            raise GraphFormatError("stride must be a positive integer")
        seed = spec.seed if spec.seed is not None else 0
        yield from gen_random_in_class(cls, n, seed, iters, stride=stride)
    elif fam == "enumerate_class":
        cls = p.get("class")
        yield from enumerate_class(cls, _int_param(p, "max_n", 1))
    else:  # pragma: no cover - from_json_obj already screens this
        raise GraphFormatError(f"unknown family {fam!r}")


# ----------------------------------------------------------------------
# exhaustive labeled enumeration


def enumerate_class(class_name: str, max_n: int) -> Iterator[Graph]:
    """Every labeled class member with 1..max_n vertices, exactly once.

    Grows one vertex at a time over all neighborhood bitmasks; since the
    classes are closed under deleting the last vertex, each member has
    exactly one parent in the search tree and the walk is duplicate-free.
    """
    patterns = forbidden_patterns(class_name)
    if max_n > 8:
        raise SizeBoundError(
            f"labeled enumeration capped at 8 vertices, asked for {max_n}")

    def grow(g: Graph) -> Iterator[Graph]:
        yield g
        if g.n == max_n:
            return
        k = g.n
        for mask in range(1 << k):
            h = add_vertex(g, mask)
            if all(contains_induced(h, pat, must_include=(k,)) is None
                   for pat in patterns):
                yield from grow(h)

    if max_n >= 1:
        yield from grow(empty_graph(1))


def dedup_isomorphs(graphs) -> list[Graph]:
    """Filter a finite stream down to isomorphism representatives.

    Brute-force pairwise checks, for reporting counts at desk scale.
    """
    reps: list[Graph] = []
    for g in graphs:
        if not any(is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


# ----------------------------------------------------------------------
# seeded random walk inside a class


def _walk_start(class_name: str, n: int, rng: random.Random) -> Graph:
    """A class member on exactly n vertices to start the walk from.

    Rotates over a small library keyed by the rng's first draw: a padded
    5-cycle, a padded random ring, and (for the class that tolerates
    dominated triangles) a padded 7-cycle complement.
    """
    choices = ["c5", "ring"]
    if class_name == "p5_k1joink1uk3_free" and n >= 7:
        choices.append("co_c7")
    pick = choices[rng.randrange(len(choices))] if n >= 5 else "empty"
    if pick == "empty":
        return empty_graph(n)
    if pick == "c5":
        core = cycle_graph(5)
    elif pick == "co_c7":
        core = complement(cycle_graph(7))
    else:
        sizes = [1, 1, 1, 1, 1]
        for _ in range(n - 5):
            sizes[rng.randrange(5)] += 1
        core = gen_five_ring(sizes)
    if core.n < n:
        core = disjoint_union(core, empty_graph(n - core.n))
    return core


def _decode_pair(k: int, n: int) -> tuple[int, int]:
    """The k-th pair in lexicographic order over all unordered pairs."""
    u = 0
    row = n - 1
    while k >= row:
        k -= row
        u += 1
        row -= 1
    return u, u + 1 + k


def gen_random_in_class(class_name: str, n: int, seed: int, iters: int,
                        stride: int = 1) -> Iterator[Graph]:
    """Seeded edge-toggle walk emitting only class members.

    Starts from a library member, proposes uniform random pair toggles,
    and accepts exactly those that keep membership (checked
    incrementally).  Emits the start graph, then every stride-th
    accepted state, until `iters` acceptances happened.  Deterministic
    for fixed arguments.

    Some members admit no legal toggle at all: a ring whose bags cover
    every vertex loses an induced P5 witness with any cross edge it
    drops and gains a forbidden pattern with any edge it adds.  When
    the walk lands on such a state it jumps to a fresh library start;
    the jump counts as one accepted transition, so the stream length
    stays 1 + iters // stride.  Raises WalkStalledError only when the
    vertex count leaves nothing to toggle.
    """
    patterns = forbidden_patterns(class_name)
    if n < 1:
        raise GraphFormatError(f"walk needs n >= 1, got {n}")
    rng = random.Random(seed)
    g = _walk_start(class_name, n, rng)
    yield g
    if n < 2:
        if iters > 0:
            raise WalkStalledError("no pairs to toggle on a 1-vertex graph")
        return
    npairs = n * (n - 1) // 2
    accepted = 0
    rejects_in_a_row = 0
    while accepted < iters:
        u, v = _decode_pair(rng.randrange(npairs), n)
        candidate = toggle_edge(g, u, v)
        if all(contains_induced(candidate, pat, must_include=(u, v)) is None
               for pat in patterns):
            g = candidate
            accepted += 1
            rejects_in_a_row = 0
            if accepted % stride == 0:
                yield g
            continue
        rejects_in_a_row += 1
        if rejects_in_a_row >= 2 * npairs:
            # random proposals keep missing; scan every pair once to
            # distinguish bad luck from a genuinely stuck state
            stuck = True
            for k in range(npairs):
                a, b = _decode_pair(k, n)
                cand = toggle_edge(g, a, b)
                if all(contains_induced(cand, pat, must_include=(a, b))
                       is None for pat in patterns):
                    stuck = False
                    break
            if stuck:
                # legitimate dead end (saturated ring); restart elsewhere
                g = _walk_start(class_name, n, rng)
                accepted += 1
                if accepted % stride == 0:
                    yield g
            rejects_in_a_row = 0


__all__ = [
    "FamilySpec",
    "WALK_CLASSES",
    "build_family",
    "dedup_isomorphs",
    "enumerate_class",
    "five_ring_bags",
    "forbidden_patterns",
    "gen_five_ring",
    "gen_random_in_class",
    "in_class",
    "in_class_incremental",
    "ring_of_rings",
    "twin_rings",
]
