"""Constructive colorings driven by 5-hole trace buckets.

Every coloring here is built the same way: pick a hole, sort the rest of
the graph into trace buckets, and hand whole buckets to color classes.
The class definitions are frozen set expressions, so properness is not an
emergent property of some search; it either follows from the structure
theory or it does not, and each constructor validates the result and
raises a structural-assumption error instead of returning a bad
certificate.

The entry point for the union class is color_p5_k1uk3, which recurses on
clique number: templates handle everything near the hole, and the parts
they cannot touch (the full-trace set and selected buckets) go back
through the same machinery with a disjoint palette.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (ClassViolationError, HypothesisNotApplicableError,
                     PartialColoringError, StructuralAssumptionError)
from .graph import Graph, bits, components, induced_subgraph
from .holes import HolePartition, partition_by_hole
from .oracles import omega_exact
from .recognizers import (K1_UNION_K3, K3, P5, contains_induced,
                          find_five_hole, is_bipartite, is_five_ring)


@dataclass(frozen=True)
class ColoringCertificate:
    """A (possibly partial) vertex coloring plus how it was produced."""

    colors: dict[int, int]
    num_colors: int
    algorithm: str
    valid: bool

    def normalized(self) -> "ColoringCertificate":
        """Remap colors to 0..k-1 in order of first appearance by vertex."""
        remap: dict[int, int] = {}
        out: dict[int, int] = {}
        for v in sorted(self.colors):
            c = self.colors[v]
            if c not in remap:
                remap[c] = len(remap)
            out[v] = remap[c]
        return ColoringCertificate(out, len(remap), self.algorithm, self.valid)

    def to_json_obj(self, n: int | None = None) -> dict:
        if n is None:
            n = max(self.colors) + 1 if self.colors else 0
        return {
            "colors": [self.colors.get(v) for v in range(n)],
            "num_colors": self.num_colors,
            "algorithm": self.algorithm,
            "valid": self.valid,
        }


def _certificate(colors: dict[int, int], algorithm: str,
                 valid: bool) -> ColoringCertificate:
    return ColoringCertificate(dict(colors), len(set(colors.values())),
                               algorithm, valid)


def _first_clash(g: Graph, colors: dict[int, int]) -> tuple[int, int] | None:
    """Lexicographically first monochromatic edge among colored vertices."""
    for v in sorted(colors):
        c = colors[v]
        for w in bits(g.rows[v] >> (v + 1)):
            u = v + 1 + w
            if colors.get(u) == c:
                return (v, u)
    return None


def validate_coloring(g: Graph,
                      cert: ColoringCertificate) -> tuple[bool, tuple[int, int] | None]:
    """Check properness of a full coloring.

    Returns (True, None) or (False, first bad edge).  A coloring that
    misses vertices is rejected outright rather than judged.
    """
    uncolored = tuple(v for v in range(g.n) if v not in cert.colors)
    if uncolored:
        raise PartialColoringError(uncolored)
    clash = _first_clash(g, cert.colors)
    return (clash is None, clash)


def _classes_to_colors(g: Graph, classes: list[set[int]],
                       domain: frozenset[int],
                       claim_prefix: str) -> dict[int, int]:
    """Assign class index i as color i, insisting the classes tile the domain.

    Buckets are disjoint by construction, so only two things can go wrong
    on a bad input: a vertex of the domain sits in a bucket no class
    mentions, or two adjacent vertices land in the same class.  Both are
    reported as structural failures under the given claim prefix.
    """
    colors: dict[int, int] = {}
    for idx, cls in enumerate(classes):
        for v in cls:
            assert v not in colors
            assert v in domain
            colors[v] = idx
    missing = domain - colors.keys()
    if missing:
        v = min(missing)
        raise StructuralAssumptionError(
            claim_prefix + ".coverage", (v,),
            detail="vertex not covered by any color class")
    clash = _first_clash(g, colors)
    if clash is not None:
        raise StructuralAssumptionError(
            claim_prefix + ".proper", clash,
            detail="adjacent vertices fell in the same color class")
    return colors


def coloring_psi(g: Graph, hp: HolePartition) -> ColoringCertificate:
    """5-class template on the hole plus its neighborhood, full trace excluded.

    Pairs each spread-pair bucket with the one triple bucket it tolerates,
    and slots the hole vertices into whichever class avoids their
    neighbors.  Valid on the union class; out-of-class inputs surface as
    coverage or properness failures.
    """
    v = hp.hole_vertex
    classes = [
        hp.bucket(2, 4) | hp.bucket(1, 2, 4) | {v(3)},
        hp.bucket(3, 5) | hp.bucket(2, 3, 5) | {v(4)},
        hp.bucket(1, 4) | hp.bucket(1, 3, 4) | {v(2), v(5)},
        hp.bucket(2, 5) | hp.bucket(2, 4, 5) | {v(1)},
        hp.bucket(1, 3) | hp.bucket(1, 3, 5),
    ]
    domain = (hp.hole_set | hp.neighborhood) - hp.full_trace
    colors = _classes_to_colors(g, classes, domain, "psi")
    return _certificate(colors, "psi", True)


def coloring_phi(g: Graph, hp: HolePartition) -> ColoringCertificate:
    """4-class variant of the same domain, for holes with a far side.

    A nonempty far side forces extra anticompleteness between spread
    buckets, which is exactly what lets three classes absorb two spread
    buckets each; the last class is a single triple bucket.
    """
    v = hp.hole_vertex
    classes = [
        hp.bucket(1, 4) | hp.bucket(1, 2, 4) | hp.bucket(2, 4) | {v(3), v(5)},
        hp.bucket(2, 5) | hp.bucket(2, 3, 5) | hp.bucket(3, 5) | {v(1), v(4)},
        hp.bucket(1, 3) | hp.bucket(1, 3, 4) | hp.bucket(1, 3, 5) | {v(2)},
        hp.bucket(2, 4, 5),
    ]
    domain = (hp.hole_set | hp.neighborhood) - hp.full_trace
    colors = _classes_to_colors(g, classes, domain, "phi")
    return _certificate(colors, "phi", True)


def coloring_phi3(g: Graph, hp: HolePartition) -> ColoringCertificate:
    """Rotationally symmetric 5-class template for the join class.

    Class i holds v_i, the spread pair missing it, the split triple based
    one past it, and the quad missing exactly position i.  The domain
    skips the full trace and both distance layers beyond the
    neighborhood; run triples are expected to be empty here.
    """
    v = hp.hole_vertex
    classes = [
        {v(i)} | hp.bucket(i + 2, i + 4) | hp.bucket(i + 1, i + 2, i + 4)
        | hp.bucket(i + 1, i + 2, i + 3, i + 4)
        for i in range(1, 6)
    ]
    domain = (frozenset(g.vertices) - hp.full_trace
              - hp.layer(2) - hp.layer(3))
    colors = _classes_to_colors(g, classes, domain, "phi3")
    return _certificate(colors, "phi3", True)


def coloring_rotated_traces(g: Graph, hp: HolePartition, *,
                            require_hypothesis: bool = False) -> ColoringCertificate:
    """5-class template covering run triples, splits and quads.

    Class i holds the hole vertex three steps on, the spread pair at i,
    and every bucket whose trace is a window around i.  Domain is the
    whole graph minus the full trace and the far side.  The guarantee
    behind it assumes some full-trace component has an edge; pass
    require_hypothesis=True to refuse inputs where that fails instead of
    validating the outcome directly.
    """
    if require_hypothesis:
        full = hp.full_trace
        if _first_edge_within(g, full) is None:
            raise HypothesisNotApplicableError(
                "no full-trace component has an edge")
    v = hp.hole_vertex
    classes = [
        {v(i + 3)} | hp.bucket(i, i + 2) | hp.bucket(i - 1, i, i + 1)
        | hp.bucket(i - 1, i, i + 2) | hp.bucket(i - 1, i, i + 1, i + 2)
        for i in range(1, 6)
    ]
    domain = frozenset(g.vertices) - hp.full_trace - hp.m_set
    colors = _classes_to_colors(g, classes, domain, "rotated-traces")
    return _certificate(colors, "rotated-traces", True)


def _first_edge_within(g: Graph, vs) -> tuple[int, int] | None:
    for v in sorted(vs):
        for w in bits(g.rows[v] >> (v + 1)):
            u = v + 1 + w
            if u in vs:
                return (v, u)
    return None


def _run_mapped(fn, keep):
    """Run fn, relabeling any witness it raises back through keep."""
    try:
        return fn()
    except ClassViolationError as exc:
        w = tuple(keep[x] for x in exc.witness) if exc.witness else None
        raise ClassViolationError(exc.class_name, w) from None
    except StructuralAssumptionError as exc:
        w = tuple(keep[x] for x in exc.witness) if exc.witness else None
        raise StructuralAssumptionError(exc.claim_id, w,
                                        detail=exc.detail) from None


def _sumner_component(sub: Graph, keep) -> dict[int, int]:
    """3-color one connected triangle-free component, or explain why not."""
    bip = is_bipartite(sub)
    if bip.bipartite:
        return dict(bip.colors)
    bags = is_five_ring(sub)
    if bags is not None:
        colors = {}
        for pos, bag in enumerate(bags):
            c = 2 if pos == 4 else pos % 2
            for x in bag:
                colors[x] = c
        return colors
    w = contains_induced(sub, P5) or contains_induced(sub, K3)
    if w is not None:
        raise ClassViolationError("p5_k3_free", tuple(keep[x] for x in w))
    raise StructuralAssumptionError(
        "sumner.decomposition", tuple(keep[x] for x in sub.vertices),
        detail="component is neither bipartite nor a ring, "
               "yet no witness was found")


def _sumner_colors(g: Graph) -> dict[int, int]:
    out: dict[int, int] = {}
    for comp in components(g):
        sub, keep = induced_subgraph(g, sorted(comp))
        part = _sumner_component(sub, keep)
        for x, c in part.items():
            out[keep[x]] = c
    return out


def color_sumner(g: Graph) -> ColoringCertificate:
    """Color a (P5, K3)-free graph with at most 3 colors.

    Each connected component is bipartite or a ring of independent bags
    over a 5-cycle; components share one palette.  Membership is checked
    exactly where the theory needs it: a component that is neither
    bipartite nor a ring is rejected with the forbidden subgraph that
    witnesses the failure, so graphs outside the class that happen to
    decompose anyway are colored without complaint.
    """
    colors = _sumner_colors(g)
    cert = _certificate(colors, "sumner", True)
    if g.n:
        ok, edge = validate_coloring(g, cert)
        assert ok, edge
    return cert


def color_p5_k1uk3(g: Graph, *, verify: bool = True) -> ColoringCertificate:
    """Color a (P5, K1 union K3)-free graph with at most 2w-1 colors.

    Recursive template algorithm; w is the clique number.  Components are
    colored independently over a shared palette, the assembled coloring is
    re-validated, and the budget is enforced against the exact clique
    number before the certificate is returned.  verify=False skips the
    up-front class membership test for callers that already know.
    """
    if verify:
        w = contains_induced(g, P5) or contains_induced(g, K1_UNION_K3)
        if w is not None:
            raise ClassViolationError("p5_k1uk3_free", w)
    colors: dict[int, int] = {}
    for comp in components(g):
        sub, keep = induced_subgraph(g, sorted(comp))
        part = _run_mapped(lambda: _color_in_class(sub), keep)
        for x, c in part.items():
            colors[keep[x]] = c
    cert = _certificate(colors, "main0", True).normalized()
    if g.n:
        ok, edge = validate_coloring(g, cert)
        if not ok:
            raise StructuralAssumptionError(
                "main0.proper", edge,
                detail="assembled coloring is not proper")
        omega = omega_exact(g).value
        if cert.num_colors > 2 * omega - 1:
            raise StructuralAssumptionError(
                "main0.budget", (),
                detail=f"{cert.num_colors} colors on clique number {omega}")
    return cert


def _recurse(g: Graph, verts, offset: int, out: dict[int, int]) -> int:
    """Color g[verts] into out with palette colors offset, offset+1, ...

    Returns how many colors the sub-coloring used.
    """
    verts = sorted(verts)
    if not verts:
        return 0
    sub, keep = induced_subgraph(g, verts)
    part = _run_mapped(lambda: _color_parts(sub), keep)
    used = 0
    for x, c in part.items():
        out[keep[x]] = c + offset
        used = max(used, c + 1)
    return used


def _color_parts(g: Graph) -> dict[int, int]:
    """Color each component with the recursive algorithm, sharing a palette."""
    out: dict[int, int] = {}
    for comp in components(g):
        sub, keep = induced_subgraph(g, sorted(comp))
        part = _run_mapped(lambda: _color_in_class(sub), keep)
        for x, c in part.items():
            out[keep[x]] = c
    return out


def _color_in_class(g: Graph) -> dict[int, int]:
    """Recursive worker: g is connected, nonempty and inside the union class."""
    h = omega_exact(g).value
    if h <= 2:
        return _sumner_colors(g)

    hole = find_five_hole(g)
    if hole is None:
        # without a 5-hole, deleting any closed neighborhood complement
        # pair works: the non-neighbors of v must induce a bipartite graph
        v = 0
        rest = sorted(set(g.vertices) - set(bits(g.rows[v])))
        sub, keep = induced_subgraph(g, rest)
        bip = is_bipartite(sub)
        if not bip.bipartite:
            raise StructuralAssumptionError(
                "main0.no-hole-bipartite",
                tuple(keep[x] for x in bip.odd_cycle),
                detail="graph has no 5-hole but an odd cycle survives "
                       "outside a vertex neighborhood")
        out = {keep[x]: c for x, c in bip.colors.items()}
        _recurse(g, bits(g.rows[v]), 2, out)
        return out

    hp = partition_by_hole(g, hole)
    full = hp.full_trace
    far = hp.m_set

    if not full and not far:
        return coloring_psi(g, hp).colors

    if not full:
        if not hp.triple_union:
            # nothing connects the far side to the hole's neighborhood,
            # so the two parts can reuse one palette independently
            out = dict(coloring_phi(g, hp).colors)
            _recurse(g, far, 0, out)
            return out
        edge = _first_edge_within(g, far)
        if edge is not None:
            raise StructuralAssumptionError(
                "main0.far-independent", edge,
                detail="far side has an edge although triple buckets "
                       "are populated")
        out = dict(coloring_phi(g, hp).colors)
        for x in far:
            out[x] = 4
        return out

    if not far:
        sub_full, keep_full = induced_subgraph(g, sorted(full))
        res = omega_exact(sub_full)
        t = res.value
        if t > h - 2:
            raise StructuralAssumptionError(
                "main0.full-trace-omega",
                tuple(keep_full[x] for x in res.certificate),
                detail=f"clique number {t} inside the full-trace set, "
                       f"limit {h - 2}")
        if t <= h - 3:
            out = dict(coloring_psi(g, hp).colors)
            _recurse(g, full, 5, out)
            return out
        # t == h-2: fold the lone spread bucket of the fifth class into
        # the third, recurse on the full trace plus the leftover triple
        v = hp.hole_vertex
        classes = [
            hp.bucket(2, 4) | hp.bucket(1, 2, 4) | {v(3)},
            hp.bucket(3, 5) | hp.bucket(2, 3, 5) | {v(4)},
            hp.bucket(1, 4) | hp.bucket(1, 3, 4) | hp.bucket(1, 3)
            | {v(2), v(5)},
            hp.bucket(2, 5) | hp.bucket(2, 4, 5) | {v(1)},
        ]
        domain = (hp.hole_set | hp.neighborhood) - full - hp.bucket(1, 3, 5)
        out = _classes_to_colors(g, classes, domain, "main0.recolored")
        _recurse(g, full | hp.bucket(1, 3, 5), 4, out)
        return out

    if not hp.triple_union:
        # full trace and far side both present but no triple buckets:
        # everything outside the full trace is rings and bipartite parts
        rest = sorted(set(g.vertices) - full)
        sub, keep = induced_subgraph(g, rest)
        try:
            part = _sumner_colors(sub)
        except (ClassViolationError, StructuralAssumptionError) as exc:
            w = getattr(exc, "witness", None)
            mapped = tuple(keep[x] for x in w) if w else None
            raise StructuralAssumptionError(
                "main0.sumner-part", mapped,
                detail="part outside the full trace is not a union of "
                       "bipartite graphs and rings") from None
        out = {keep[x]: c for x, c in part.items()}
        used = max(part.values(), default=-1) + 1
        _recurse(g, full, used, out)
        return out

    edge = _first_edge_within(g, far)
    if edge is not None:
        raise StructuralAssumptionError(
            "main0.far-independent", edge,
            detail="far side has an edge although triple buckets "
                   "are populated")
    # three doubled-up spread classes as in the 4-class template, with the
    # far side standing in for the triple bucket that gets recursed instead
    v = hp.hole_vertex
    classes = [
        hp.bucket(1, 4) | hp.bucket(1, 2, 4) | hp.bucket(2, 4) | {v(3), v(5)},
        hp.bucket(2, 5) | hp.bucket(2, 3, 5) | hp.bucket(3, 5) | {v(1), v(4)},
        hp.bucket(1, 3) | hp.bucket(1, 3, 4) | hp.bucket(1, 3, 5) | {v(2)},
        set(far),
    ]
    domain = frozenset(g.vertices) - full - hp.bucket(2, 4, 5)
    out = _classes_to_colors(g, classes, domain, "main0.phi-far")
    _recurse(g, full | hp.bucket(2, 4, 5), 4, out)
    return out
