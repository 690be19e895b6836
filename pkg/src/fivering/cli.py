"""Command line front end and falsification campaign runner.

Subcommands map one-to-one onto the library layers: gen builds graphs
from family specs, recognize runs the class recognizers, decompose dumps
a hole partition with its structure checks, color produces certificates,
verify pits constructive colorings and exact oracles against the class
bounds, and campaign sweeps whole families through every check at once.

Exit codes are a stable contract: 0 all checks pass, 1 the input is
outside the claimed class or a bound fails, 2 the input itself is
unusable, 3 a structural assumption failed on an in-class graph.  The
last one is the interesting outcome; campaign and the single-graph
commands append those events to a findings file as one JSON object per
line, each carrying enough replay information to rebuild the exact graph
and re-run the exact check.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .coloring import (ColoringCertificate, color_p5_k1uk3, color_sumner,
                       validate_coloring)
from .errors import (ClassViolationError, FiveringError, GraphFormatError,
                     InvalidHoleError, SizeBoundError,
                     StructuralAssumptionError, WalkStalledError)
from .generators import (FamilySpec, build_family, forbidden_patterns,
                         in_class)
from .graph import Graph, complement
from .holes import (antihole_decompose, check_antihole_structure,
                    check_apex_structure, check_hole_partition,
                    check_hole_traces, check_ring_structure, find_antihole,
                    partition_by_hole)
from .oracles import (alpha_exact, chromatic_exact,
                      contains_induced_bruteforce, omega_exact)
from .recognizers import (C5, CLASS_PATTERNS, contains_induced,
                          find_five_hole, is_k1_join_k1uk3_free,
                          is_k1uk3_free, is_p5_free, recognize)
from .serialize import (encode_graph6, graph_from_json_obj,
                        graph_to_json_obj, parse_dimacs, parse_graph6,
                        parse_graph6_lines, parse_json, to_dimacs, to_json)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_FINDING = 3


# ----------------------------------------------------------------------
# findings


@dataclass(frozen=True)
class Finding:
    """One falsification event, replayable from its own record."""

    kind: str
    graph: Graph
    claim_id: str
    witness: tuple[int, ...]
    replay: dict
    timestamp: str = field(default_factory=lambda: datetime.now(
        timezone.utc).isoformat(timespec="seconds"))

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "graph": {"n": self.graph.n, "edges": [list(e) for e in
                                                   self.graph.edges()]},
            "claim_id": self.claim_id,
            "witness": list(self.witness),
            "replay": self.replay,
            "timestamp": self.timestamp,
        }


FINDING_KINDS = ("bound_violation", "lemma_violation",
                 "structural_assumption_failure", "oracle_disagreement")


def append_finding(store: str | Path, finding: Finding) -> None:
    """One JSON object per line, append-only; safe to interleave runs."""
    with open(store, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(finding.to_json_obj(), sort_keys=True) + "\n")


def _replay_graph(replay: dict) -> Graph:
    """Rebuild the graph a finding was raised on from its replay record."""
    if "input" in replay:
        return _read_graph(replay["input"], replay.get("format", "auto"))
    spec = FamilySpec.from_json_obj(replay["spec"])
    index = replay.get("index", 0)
    for i, g in enumerate(build_family(spec)):
        if i == index:
            return g
    raise GraphFormatError(
        f"replay spec yielded fewer than {index + 1} graphs")


def replay_finding(obj: dict, *, chi_cap: int = 14, omega_cap: int = 32,
                   extra_checks=None) -> bool:
    """Re-run a finding record; True when the same failure reappears.

    The graph is rebuilt from the replay spec, compared against the
    stored edge list, and pushed through the same per-instance checks the
    campaign applies.  A finding that came from an injected extra check
    reproduces only when the same (claim_id, fn) pairs are passed again.
    """
    g = _replay_graph(obj["replay"])
    stored = obj.get("graph", {})
    if stored and (stored.get("n") != g.n
                   or [list(e) for e in g.edges()] != stored.get("edges")):
        return False
    class_name = obj["replay"].get("class")
    if class_name is None:
        return False
    events = _campaign_instance(g, class_name, chi_cap=chi_cap,
                                omega_cap=omega_cap,
                                extra_checks=extra_checks)
    return any(kind == obj["kind"] and claim == obj["claim_id"]
               for kind, claim, _ in events)


# ----------------------------------------------------------------------
# graph I/O


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _sniff_format(path: str, text: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".col", ".dimacs"):
        return "dimacs"
    if suffix == ".json":
        return "json"
    head = text.lstrip()[:1]
    if head in ("{", "["):
        return "json"
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped[0] in "cp" and (stripped.startswith("c ")
                                    or stripped.startswith("p ")
                                    or stripped == "c"):
            return "dimacs"
        break
    return "graph6"


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    text = _read_text(path)
    if fmt == "auto":
        fmt = _sniff_format(path, text)
    if fmt == "graph6":
        return parse_graph6_lines(text)
    if fmt == "dimacs":
        return [parse_dimacs(text)]
    if fmt == "json":
        obj = json.loads(text)
        if isinstance(obj, list):
            return [graph_from_json_obj(o) for o in obj]
        return [parse_json(text)]
    raise GraphFormatError(f"unknown format {fmt!r}")


def _read_graph(path: str, fmt: str) -> Graph:
    graphs = _read_graphs(path, fmt)
    if len(graphs) != 1:
        raise GraphFormatError(
            f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _write_graphs(graphs: list[Graph], out: str | None, fmt: str) -> None:
    if fmt == "graph6":
        text = "".join(encode_graph6(g) + "\n" for g in graphs)
    elif fmt == "dimacs":
        if len(graphs) != 1:
            raise GraphFormatError(
                "dimacs output holds a single graph; use graph6 or json "
                "for streams")
        text = to_dimacs(graphs[0])
    elif fmt == "json":
        if len(graphs) == 1:
            text = to_json(graphs[0]) + "\n"
        else:
            text = json.dumps([graph_to_json_obj(g) for g in graphs],
                              indent=2) + "\n"
    else:
        raise GraphFormatError(f"unknown format {fmt!r}")
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# ----------------------------------------------------------------------
# gen


_SIZE_FAMILIES = {"cycle": "n", "path": "n", "complete": "n"}


def _parse_params(family: str, text: str | None) -> dict:
    if not text:
        return {}
    if "=" in text:
        params: dict = {}
        for token in text.split(","):
            if "=" not in token:
                raise GraphFormatError(
                    f"mixed positional and key=value params in {text!r}")
            key, _, val = token.partition("=")
            key = key.strip()
            val = val.strip()
            params[key] = int(val) if val.lstrip("-").isdigit() else val
        return params
    try:
        numbers = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise GraphFormatError(f"bad params {text!r}: {exc}") from None
    if family in _SIZE_FAMILIES:
        if len(numbers) != 1:
            raise GraphFormatError(f"{family} takes one size parameter")
        return {_SIZE_FAMILIES[family]: numbers[0]}
    if family == "five_ring":
        return {"sizes": numbers}
    raise GraphFormatError(
        f"{family} cannot take positional params; pass key=value pairs "
        "or a --spec file")


def cmd_gen(args) -> int:
    if args.spec:
        spec = FamilySpec.from_json_obj(json.loads(_read_text(args.spec)))
    else:
        if not args.family:
            raise GraphFormatError("gen needs --family or --spec")
        family = args.family.replace("-", "_")
        spec = FamilySpec(family=family,
                          params=_parse_params(family, args.params),
                          seed=args.seed)
    graphs = list(build_family(spec))
    fmt = "graph6" if args.format == "auto" else args.format
    _write_graphs(graphs, args.out, fmt)
    return EXIT_PASS


# ----------------------------------------------------------------------
# recognize


_CLASS_ALIASES = {
    "p5": "p5_free",
    "k1uk3": "k1uk3_free",
    "k1join": "k1_join_k1uk3_free",
    "k3": "k3_free",
}


def cmd_recognize(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.classes:
        names = []
        for token in args.classes.split(","):
            token = token.strip()
            name = _CLASS_ALIASES.get(token, token)
            if name not in CLASS_PATTERNS:
                raise GraphFormatError(f"unknown class {token!r}")
            names.append(name)
    else:
        names = list(CLASS_PATTERNS)
    report = recognize(g, names, with_numbers=args.numbers)
    _emit(report.to_json_obj(), args.out)
    return EXIT_PASS if all(report.flags.values()) else EXIT_VIOLATION


# ----------------------------------------------------------------------
# decompose


_HOLE_CHECKS = ("traces", "ring", "partition", "apex", "antihole")


def _trace_key(trace: frozenset[int]) -> str:
    return ",".join(str(i) for i in sorted(trace))


def _partition_json(hp) -> dict:
    return {
        "hole": list(hp.hole),
        "buckets": {_trace_key(t): sorted(vs)
                    for t, vs in sorted(hp.buckets.items(),
                                        key=lambda kv: sorted(kv[0]))
                    if vs},
        "layers": {str(i): sorted(hp.layers[i]) for i in sorted(hp.layers)},
        "m_set": sorted(hp.m_set),
    }


def cmd_decompose(args) -> int:
    g = _read_graph(args.input, args.format)
    wanted = ([tok.strip() for tok in args.checks.split(",")]
              if args.checks else list(_HOLE_CHECKS))
    for tok in wanted:
        if tok not in _HOLE_CHECKS:
            raise GraphFormatError(f"unknown check {tok!r}")

    if args.hole == "auto":
        hole = find_five_hole(g)
        if hole is None:
            raise GraphFormatError("graph has no 5-hole")
    else:
        hole = tuple(int(tok) for tok in args.hole.split(","))
    hp = partition_by_hole(g, hole)

    out: dict = {"partition": _partition_json(hp), "checks": {}}
    reports = {}
    if "traces" in wanted:
        reports["traces"] = check_hole_traces(g, hp)
    if "ring" in wanted:
        reports["ring"] = check_ring_structure(g, hp)
    if "partition" in wanted:
        reports["partition"] = check_hole_partition(g, hole)
    if "apex" in wanted:
        reports["apex"] = check_apex_structure(g, hp)
    if "antihole" in wanted:
        antihole = find_antihole(g)
        if antihole is None:
            out["antihole"] = None
        else:
            dec = antihole_decompose(g, antihole)
            out["antihole"] = {
                "antihole": list(dec.antihole),
                "s_set": sorted(dec.s_set),
                "t_buckets": {str(i): sorted(vs)
                              for i, vs in sorted(dec.t_buckets.items())},
                "n2": sorted(dec.n2),
            }
            reports["antihole"] = check_antihole_structure(g, dec)
    for name, report in reports.items():
        out["checks"][name] = report.to_json_obj()

    failures = []
    for name, report in reports.items():
        if report.hypothesis_holds:
            failures.extend(report.failures)
    _emit(out, args.out)
    if failures:
        if args.store:
            for row in failures:
                append_finding(args.store, Finding(
                    kind="lemma_violation", graph=g, claim_id=row.claim_id,
                    witness=tuple(row.witness),
                    replay={"input": args.input, "format": args.format}))
        return EXIT_FINDING
    return EXIT_PASS


# ----------------------------------------------------------------------
# color


def cmd_color(args) -> int:
    g = _read_graph(args.input, args.format)
    try:
        if args.algorithm == "main0":
            cert = color_p5_k1uk3(g)
        elif args.algorithm == "sumner":
            cert = color_sumner(g)
        else:
            res = chromatic_exact(g, size_cap=args.chi_cap)
            cert = ColoringCertificate(dict(res.certificate), res.value,
                                       "exact", True)
            if g.n:
                ok, edge = validate_coloring(g, cert)
                assert ok, edge
    except ClassViolationError as exc:
        _emit({"error": "class violation", "class": exc.class_name,
               "witness": list(exc.witness or ())}, args.out)
        return EXIT_VIOLATION
    except StructuralAssumptionError as exc:
        _emit({"error": "structural assumption failed",
               "claim_id": exc.claim_id,
               "witness": list(exc.witness or ())}, args.out)
        if args.store:
            append_finding(args.store, Finding(
                kind="structural_assumption_failure", graph=g,
                claim_id=exc.claim_id, witness=tuple(exc.witness or ()),
                replay={"input": args.input, "format": args.format}))
        return EXIT_FINDING
    _emit(cert.to_json_obj(g.n), args.out)
    return EXIT_PASS


# ----------------------------------------------------------------------
# verify


_BOUNDS = ("two_omega_minus_one", "max_two_omega_15")


def _bound_value(bound: str, omega: int) -> int:
    if bound == "two_omega_minus_one":
        return 2 * omega - 1
    return max(2 * omega, 15)


def _bound_class_ok(bound: str, g: Graph):
    """Witness of the class violation for the bound's class, or None."""
    w = contains_induced(g, CLASS_PATTERNS["p5_free"])
    if w is not None:
        return w
    key = ("k1uk3_free" if bound == "two_omega_minus_one"
           else "k1_join_k1uk3_free")
    return contains_induced(g, CLASS_PATTERNS[key])


def _verify_one(g: Graph, bound: str, mode: str, chi_cap: int) -> dict:
    omega = omega_exact(g).value
    limit = _bound_value(bound, omega) if g.n else 0
    report: dict = {"n": g.n, "bound": bound, "omega": omega,
                    "limit": limit, "constructive": None, "exact": None,
                    "notes": []}
    if mode in ("constructive", "both"):
        if bound == "two_omega_minus_one":
            report["constructive"] = color_p5_k1uk3(
                g, verify=False).num_colors
        elif mode == "constructive":
            raise GraphFormatError(
                "no constructive algorithm backs this bound; "
                "use --mode oracle")
        else:
            report["notes"].append("constructive side not available "
                                   "for this bound")
    if mode in ("oracle", "both"):
        if g.n <= chi_cap:
            report["exact"] = chromatic_exact(g).value
        else:
            report["notes"].append(
                f"oracle skipped, n={g.n} above cap {chi_cap}")
    used = [v for v in (report["constructive"], report["exact"])
            if v is not None]
    report["pass"] = all(v <= limit for v in used) if g.n else True
    return report


def cmd_verify(args) -> int:
    if args.spec:
        spec = FamilySpec.from_json_obj(json.loads(_read_text(args.spec)))
        graphs = list(build_family(spec))
        replay_base = {"spec": spec.to_json_obj()}
    else:
        if not args.input:
            raise GraphFormatError("verify needs --in or --spec")
        graphs = _read_graphs(args.input, args.format)
        replay_base = {"input": args.input, "format": args.format}

    reports = []
    exit_code = EXIT_PASS
    for index, g in enumerate(graphs):
        witness = _bound_class_ok(args.bound, g)
        if witness is not None:
            reports.append({"n": g.n, "bound": args.bound,
                            "error": "class violation",
                            "witness": list(witness)})
            exit_code = max(exit_code, EXIT_VIOLATION)
            continue
        report = _verify_one(g, args.bound, args.mode, args.chi_cap)
        reports.append(report)
        if not report["pass"]:
            exit_code = max(exit_code, EXIT_VIOLATION)
            if args.store:
                replay = dict(replay_base)
                replay["index"] = index
                append_finding(args.store, Finding(
                    kind="bound_violation", graph=g,
                    claim_id="bound." + args.bound, witness=(),
                    replay=replay))
    _emit(reports[0] if len(reports) == 1 else reports, args.out)
    return exit_code


# ----------------------------------------------------------------------
# campaign


def _checker_events(g: Graph, class_name: str,
                    counters: dict | None = None
                    ) -> list[tuple[str, str, tuple]]:
    """Run the hole and antihole checkers suited to the class."""
    events: list[tuple[str, str, tuple]] = []
    hole = find_five_hole(g)
    reports: list[tuple[str, object]] = []
    if hole is not None:
        hp = partition_by_hole(g, hole)
        reports.append(("hole-traces", check_hole_traces(g, hp)))
        if class_name in ("p5_k1uk3_free", "p5_k3_free"):
            reports.append(("ring-structure", check_ring_structure(g, hp)))
            reports.append(("hole-partition", check_hole_partition(g, hole)))
        if class_name == "p5_k1joink1uk3_free":
            reports.append(("apex-structure", check_apex_structure(g, hp)))
    if class_name == "p5_k1joink1uk3_free" and contains_induced(g, C5) is None:
        try:
            antihole = find_antihole(g)
        except SizeBoundError:
            antihole = None
        if antihole is not None:
            reports.append(("antihole-structure", check_antihole_structure(
                g, antihole_decompose(g, antihole))))
    for label, report in reports:
        if not report.hypothesis_holds:
            continue
        if counters is not None:
            counters[label] = counters.get(label, 0) + 1
        for row in report.failures:
            events.append(("lemma_violation", row.claim_id,
                           tuple(row.witness)))
    return events


def _campaign_instance(g: Graph, class_name: str, *, chi_cap: int,
                       omega_cap: int, extra_checks=None,
                       counters: dict | None = None
                       ) -> list[tuple[str, str, tuple]]:
    """All falsification events for one graph; empty means all pass."""
    events: list[tuple[str, str, tuple]] = []

    def count(label: str) -> None:
        if counters is not None:
            counters[label] = counters.get(label, 0) + 1

    if extra_checks:
        for claim_id, fn in extra_checks:
            count("extra." + claim_id)
            witness = fn(g)
            if witness is not None:
                events.append(("lemma_violation", claim_id, tuple(witness)))

    count("class-membership")
    if not in_class(g, class_name):
        events.append(("oracle_disagreement", "campaign.class-membership",
                       ()))
        return events

    if g.n <= 8:
        count("oracle-cross-checks")
        for pattern in forbidden_patterns(class_name):
            fast = contains_induced(g, pattern)
            slow = contains_induced_bruteforce(g, pattern)
            if (fast is None) != (slow is None):
                events.append(("oracle_disagreement",
                               "cross.contains-induced",
                               tuple(fast or slow or ())))
        if alpha_exact(g).value != omega_exact(complement(g)).value:
            events.append(("oracle_disagreement",
                           "cross.alpha-omega-duality", ()))

    events.extend(_checker_events(g, class_name, counters))

    omega = None
    if g.n <= omega_cap:
        omega = omega_exact(g).value
    chi = None
    if g.n and g.n <= chi_cap:
        chi = chromatic_exact(g).value
        count("chromatic-oracle")
    elif g.n:
        count("oracle-skipped")

    if class_name in ("p5_k1uk3_free", "p5_k3_free") and g.n:
        count("constructive-coloring")
        try:
            cert = color_p5_k1uk3(g, verify=False)
        except StructuralAssumptionError as exc:
            events.append(("structural_assumption_failure", exc.claim_id,
                           tuple(exc.witness or ())))
            cert = None
        except ClassViolationError as exc:
            events.append(("oracle_disagreement",
                           "campaign.class-membership",
                           tuple(exc.witness or ())))
            cert = None
        if cert is not None and chi is not None and cert.num_colors < chi:
            events.append(("oracle_disagreement", "cross.chi-witness", ()))
        if chi is not None and omega is not None and chi > 2 * omega - 1:
            events.append(("bound_violation", "bound.two_omega_minus_one",
                           ()))

    if class_name == "p5_k3_free" and g.n:
        count("sumner-coloring")
        try:
            if color_sumner(g).num_colors > 3:
                events.append(("bound_violation", "bound.sumner-three", ()))
        except ClassViolationError as exc:
            events.append(("oracle_disagreement",
                           "campaign.class-membership",
                           tuple(exc.witness or ())))

    if (class_name == "p5_k1joink1uk3_free" and chi is not None
            and omega is not None):
        count("bound-max-two-omega-15")
        if chi > max(2 * omega, 15):
            events.append(("bound_violation", "bound.max_two_omega_15", ()))

    return events


def run_campaign(class_name: str, *, max_n: int | None = None,
                 n: int | None = None, seeds: int = 1, iters: int = 0,
                 stride: int = 1, chi_cap: int = 14, omega_cap: int = 32,
                 store: str | None = None, extra_checks=None):
    """Sweep enumerated and/or sampled class members through every check.

    Returns (summary, findings).  extra_checks is a sequence of
    (claim_id, fn) pairs where fn(graph) returns a witness tuple to
    report or None; it exists so the harness can prove to itself that an
    injected failure really lands in the store.
    """
    phases: list[tuple[dict, FamilySpec]] = []
    if max_n is not None:
        phases.append(({"phase": "enumerate"}, FamilySpec(
            "enumerate_class",
            {"class": class_name, "max_n": max_n})))
    if n is not None and iters:
        for seed in range(seeds):
            phases.append(({"phase": "random", "seed": seed}, FamilySpec(
                "random_class",
                {"class": class_name, "n": n, "iters": iters,
                 "stride": stride},
                seed=seed)))
    findings: list[Finding] = []
    instances = 0
    per_claim: dict[str, int] = {}
    counters: dict[str, int] = {}
    for _tag, spec in phases:
        for index, g in enumerate(build_family(spec)):
            instances += 1
            events = _campaign_instance(g, class_name, chi_cap=chi_cap,
                                        omega_cap=omega_cap,
                                        extra_checks=extra_checks,
                                        counters=counters)
            for kind, claim_id, witness in events:
                per_claim[claim_id] = per_claim.get(claim_id, 0) + 1
                finding = Finding(
                    kind=kind, graph=g, claim_id=claim_id, witness=witness,
                    replay={"spec": spec.to_json_obj(), "index": index,
                            "class": class_name})
                findings.append(finding)
                if store:
                    append_finding(store, finding)
    summary = {
        "class": class_name,
        "instances": instances,
        "checks": dict(sorted(counters.items())),
        "findings": len(findings),
        "findings_by_claim": dict(sorted(per_claim.items())),
        "store": store,
    }
    return summary, findings


def cmd_campaign(args) -> int:
    if args.max_n is None and not (args.n and args.iters):
        raise GraphFormatError(
            "campaign needs --max-n and/or both --n and --iters")
    summary, findings = run_campaign(
        args.class_name, max_n=args.max_n, n=args.n, seeds=args.seeds,
        iters=args.iters, stride=args.stride, chi_cap=args.chi_cap,
        omega_cap=args.omega_cap, store=args.store)
    _emit(summary, args.out)
    if not findings:
        return EXIT_PASS
    worst = {"bound_violation": EXIT_VIOLATION}
    code = max(worst.get(f.kind, EXIT_FINDING) for f in findings)
    return code


def cmd_replay(args) -> int:
    lines = [ln for ln in _read_text(args.input).splitlines() if ln.strip()]
    results = []
    all_reproduced = True
    for ln in lines:
        obj = json.loads(ln)
        reproduced = replay_finding(obj, chi_cap=args.chi_cap,
                                    omega_cap=args.omega_cap)
        all_reproduced &= reproduced
        results.append({"claim_id": obj.get("claim_id"),
                        "kind": obj.get("kind"),
                        "reproduced": reproduced})
    _emit(results, args.out)
    return EXIT_PASS if all_reproduced else EXIT_FINDING


# ----------------------------------------------------------------------
# argument wiring


def _add_io(sub, input_required: bool = True) -> None:
    if input_required:
        sub.add_argument("--in", dest="input", required=True,
                         help="input graph file, or - for stdin")
    else:
        sub.add_argument("--in", dest="input",
                         help="input graph file, or - for stdin")
    sub.add_argument("--format", default="auto",
                     choices=("auto", "graph6", "dimacs", "json"),
                     help="input format (default: sniff)")
    sub.add_argument("--out", help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fivering",
        description="structure checks and constructive colorings around "
                    "5-holes")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="build graphs from a family spec")
    gen.add_argument("--family", help="family name, e.g. cycle or five-ring")
    gen.add_argument("--params", help="family parameters: sizes like "
                                      "2,2,2,2,2 or key=value pairs")
    gen.add_argument("--seed", type=int, help="seed for random families")
    gen.add_argument("--spec", help="JSON file holding a full family spec")
    gen.add_argument("--format", default="auto",
                     choices=("auto", "graph6", "dimacs", "json"))
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(fn=cmd_gen)

    rec = commands.add_parser("recognize", help="run class recognizers")
    _add_io(rec)
    rec.add_argument("--classes",
                     help="comma list from p5,k1uk3,k1join,k3 "
                          "(default all)")
    rec.add_argument("--numbers", action="store_true",
                     help="also compute clique and independence numbers")
    rec.set_defaults(fn=cmd_recognize)

    dec = commands.add_parser("decompose",
                              help="dump a hole partition and run "
                                   "structure checks")
    _add_io(dec)
    dec.add_argument("--hole", default="auto",
                     help="auto or five comma-separated vertices in "
                          "cyclic order")
    dec.add_argument("--checks",
                     help="comma list from traces,ring,partition,apex,"
                          "antihole (default all)")
    dec.add_argument("--store", help="findings file for failed checks")
    dec.set_defaults(fn=cmd_decompose)

    col = commands.add_parser("color", help="produce a coloring certificate")
    _add_io(col)
    col.add_argument("--algorithm", default="main0",
                     choices=("main0", "sumner", "exact"))
    col.add_argument("--chi-cap", type=int, default=32,
                     help="size cap for the exact algorithm")
    col.add_argument("--store", help="findings file for structural failures")
    col.set_defaults(fn=cmd_color)

    ver = commands.add_parser("verify",
                              help="check a chromatic bound on graphs")
    _add_io(ver, input_required=False)
    ver.add_argument("--spec", help="JSON family spec instead of --in")
    ver.add_argument("--bound", required=True, choices=_BOUNDS)
    ver.add_argument("--mode", default="both",
                     choices=("constructive", "oracle", "both"))
    ver.add_argument("--chi-cap", type=int, default=16,
                     help="largest n for the exact chromatic oracle")
    ver.add_argument("--store", help="findings file for bound violations")
    ver.set_defaults(fn=cmd_verify)

    camp = commands.add_parser("campaign",
                               help="sweep a class through every check")
    camp.add_argument("--class", dest="class_name", required=True,
                      choices=("p5_k1uk3_free", "p5_k1joink1uk3_free",
                               "p5_k3_free"))
    camp.add_argument("--max-n", type=int,
                      help="exhaustively enumerate members up to this size")
    camp.add_argument("--n", type=int, help="walk state size")
    camp.add_argument("--seeds", type=int, default=1,
                      help="number of walk seeds (0..seeds-1)")
    camp.add_argument("--iters", type=int, default=0,
                      help="accepted steps per walk")
    camp.add_argument("--stride", type=int, default=1,
                      help="emit every stride-th accepted state")
    camp.add_argument("--chi-cap", type=int, default=14)
    camp.add_argument("--omega-cap", type=int, default=32)
    camp.add_argument("--store", help="append findings to this JSONL file")
    camp.add_argument("--out", help="summary file (default stdout)")
    camp.set_defaults(fn=cmd_campaign)

    rep = commands.add_parser("replay",
                              help="re-run findings from a JSONL store")
    rep.add_argument("--in", dest="input", required=True,
                     help="findings JSONL file")
    rep.add_argument("--chi-cap", type=int, default=14)
    rep.add_argument("--omega-cap", type=int, default=32)
    rep.add_argument("--out", help="output file (default stdout)")
    rep.set_defaults(fn=cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, InvalidHoleError, SizeBoundError,
            WalkStalledError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ClassViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except FiveringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FINDING


if __name__ == "__main__":
    sys.exit(main())
