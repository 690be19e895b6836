"""Command line driver: exit codes, wire formats, findings, replay."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fivering.cli import (EXIT_FINDING, EXIT_INPUT, EXIT_PASS,
                          EXIT_VIOLATION, FINDING_KINDS, Finding,
                          append_finding, main, replay_finding,
                          run_campaign)
from fivering.graph import cycle_graph
from fivering.serialize import (encode_graph6, parse_graph6_lines, to_dimacs,
                                to_json)


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# ----------------------------------------------------------------------
# gen


def test_gen_cycle_graph6(capsys):
    code, out = run(capsys, "gen", "--family", "cycle", "--params", "5")
    assert code == EXIT_PASS
    assert out.strip() == "Dhc"


def test_gen_five_ring_sizes(capsys):
    code, out = run(capsys, "gen", "--family", "five-ring",
                    "--params", "2,2,2,2,2")
    assert code == EXIT_PASS
    g = parse_graph6_lines(out)[0]
    assert g.n == 10 and g.num_edges == 20


def test_gen_named_h(capsys):
    code, out = run(capsys, "gen", "--family", "H", "--format", "json")
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["n"] == 25 and len(obj["edges"]) == 150


def test_gen_walk_stream(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "family": "random_class",
        "params": {"class": "p5_k1uk3_free", "n": 8, "iters": 20,
                   "stride": 10},
        "seed": 7}))
    code, out = run(capsys, "gen", "--spec", str(spec))
    assert code == EXIT_PASS
    assert len(parse_graph6_lines(out)) == 3


def test_gen_rejects_bad_family(capsys):
    assert main(["gen", "--family", "petersen"]) == EXIT_INPUT
    assert main(["gen"]) == EXIT_INPUT
    capsys.readouterr()


# ----------------------------------------------------------------------
# recognize


def test_recognize_pass_and_fail(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(5)) + "\n")
    code, out = run(capsys, "recognize", "--in", str(f))
    assert code == EXIT_PASS
    assert all(json.loads(out)["flags"].values())

    f.write_text(encode_graph6(cycle_graph(6)) + "\n")
    code, out = run(capsys, "recognize", "--in", str(f),
                    "--classes", "p5", "--numbers")
    assert code == EXIT_VIOLATION
    obj = json.loads(out)
    assert obj["flags"] == {"p5_free": False}
    assert len(obj["witnesses"]["p5_free"]) == 5
    assert obj["omega"] == 2

    code, _ = run(capsys, "recognize", "--in", str(f), "--classes", "p9")
    assert code == EXIT_INPUT


def test_recognize_reads_dimacs_and_json(capsys, tmp_path):
    f = tmp_path / "g.dimacs"
    f.write_text(to_dimacs(cycle_graph(5)))
    code, _ = run(capsys, "recognize", "--in", str(f))
    assert code == EXIT_PASS

    f = tmp_path / "g.json"
    f.write_text(to_json(cycle_graph(5)))
    code, _ = run(capsys, "recognize", "--in", str(f))
    assert code == EXIT_PASS


# ----------------------------------------------------------------------
# decompose


def test_decompose_bare_hole(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(5)) + "\n")
    code, out = run(capsys, "decompose", "--in", str(f))
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["partition"]["hole"] == [0, 1, 2, 3, 4]
    assert obj["partition"]["buckets"] == {}
    assert obj["partition"]["m_set"] == []
    for report in obj["checks"].values():
        assert all(c["pass"] for c in report["checks"]
                   if c["hypothesis_applicable"])


def test_decompose_explicit_hole_and_checks(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(5)) + "\n")
    code, out = run(capsys, "decompose", "--in", str(f),
                    "--hole", "0,1,2,3,4", "--checks", "traces,ring")
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert set(obj["checks"]) == {"traces", "ring"}


def test_decompose_requires_hole(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(4)) + "\n")
    code, _ = run(capsys, "decompose", "--in", str(f))
    assert code == EXIT_INPUT


# ----------------------------------------------------------------------
# color


def test_color_main_algorithm(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(5)) + "\n")
    code, out = run(capsys, "color", "--in", str(f))
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["num_colors"] == 3
    assert obj["algorithm"] == "main0"
    assert obj["valid"] is True
    assert len(obj["colors"]) == 5


def test_color_exact_and_sumner(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(6)) + "\n")
    code, out = run(capsys, "color", "--in", str(f), "--algorithm", "sumner")
    assert code == EXIT_PASS
    assert json.loads(out)["num_colors"] == 2

    code, out = run(capsys, "color", "--in", str(f), "--algorithm", "exact")
    assert code == EXIT_PASS
    assert json.loads(out)["num_colors"] == 2


def test_color_rejects_out_of_class(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(6)) + "\n")
    code, out = run(capsys, "color", "--in", str(f))
    assert code == EXIT_VIOLATION
    obj = json.loads(out)
    assert obj["error"] == "class violation"
    assert len(obj["witness"]) == 5


# ----------------------------------------------------------------------
# verify


def test_verify_tight_bound(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(5)) + "\n")
    code, out = run(capsys, "verify", "--in", str(f),
                    "--bound", "two_omega_minus_one")
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["omega"] == 2 and obj["limit"] == 3
    assert obj["constructive"] == 3 and obj["exact"] == 3
    assert obj["pass"] is True


def test_verify_oracle_mode_join_bound(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"family": "five_ring",
                                "params": {"sizes": [3, 3, 3, 3, 3]}}))
    code, out = run(capsys, "verify", "--spec", str(spec),
                    "--bound", "max_two_omega_15", "--mode", "oracle")
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["exact"] == 3 and obj["pass"] is True


def test_verify_constructive_unavailable_for_join_bound(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(5)) + "\n")
    code, _ = run(capsys, "verify", "--in", str(f),
                  "--bound", "max_two_omega_15", "--mode", "constructive")
    assert code == EXIT_INPUT

    code, out = run(capsys, "verify", "--in", str(f),
                    "--bound", "max_two_omega_15", "--mode", "both")
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["constructive"] is None
    assert any("constructive" in note for note in obj["notes"])


def test_verify_class_violation(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle_graph(6)) + "\n")
    code, out = run(capsys, "verify", "--in", str(f),
                    "--bound", "two_omega_minus_one")
    assert code == EXIT_VIOLATION
    assert json.loads(out)["error"] == "class violation"


# ----------------------------------------------------------------------
# campaign and replay


def test_campaign_small_sweep(capsys, tmp_path):
    store = tmp_path / "findings.jsonl"
    code, out = run(capsys, "campaign", "--class", "p5_k1uk3_free",
                    "--max-n", "4", "--store", str(store))
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["instances"] == 71
    assert obj["findings"] == 0
    assert obj["checks"]["class-membership"] == 71
    assert not store.exists()  # nothing to record


def test_campaign_requires_config(capsys):
    assert main(["campaign", "--class", "p5_k3_free"]) == EXIT_INPUT
    capsys.readouterr()


def test_campaign_deterministic_summary(capsys):
    _, a = run(capsys, "campaign", "--class", "p5_k3_free",
               "--n", "8", "--iters", "40", "--seeds", "2", "--stride", "20")
    _, b = run(capsys, "campaign", "--class", "p5_k3_free",
               "--n", "8", "--iters", "40", "--seeds", "2", "--stride", "20")
    assert a == b


def test_finding_wire_format(tmp_path):
    store = tmp_path / "f.jsonl"
    finding = Finding(kind="lemma_violation", graph=cycle_graph(5),
                      claim_id="demo.claim", witness=(0, 1),
                      replay={"input": "g.g6", "format": "graph6"})
    append_finding(str(store), finding)
    row = json.loads(store.read_text())
    assert set(row) == {"kind", "graph", "claim_id", "witness", "replay",
                        "timestamp"}
    assert row["kind"] in FINDING_KINDS
    assert row["graph"] == {"n": 5,
                            "edges": [[0, 1], [0, 4], [1, 2], [2, 3],
                                      [3, 4]]}
    assert row["witness"] == [0, 1]


def test_broken_checker_self_test(tmp_path, capsys):
    # an intentionally broken checker must land findings in the store,
    # and those findings must replay against the same broken checker
    store = tmp_path / "f.jsonl"
    hook = [("selftest.even-edges",
             lambda g: (g.num_edges,) if g.num_edges % 2 == 0 else None)]
    summary, findings = run_campaign("p5_k3_free", max_n=3,
                                     store=str(store), extra_checks=hook)
    assert summary["findings"] > 0
    rows = [json.loads(ln) for ln in store.read_text().splitlines()]
    assert len(rows) == summary["findings"]
    for row in rows:
        assert row["kind"] == "lemma_violation"
        assert row["claim_id"] == "selftest.even-edges"
        assert replay_finding(row, extra_checks=hook)
        assert not replay_finding(row)  # healthy checkers find nothing

    # the replay command agrees once the hook is gone: nothing reproduces
    code, out = run(capsys, "replay", "--in", str(store))
    assert code == EXIT_FINDING
    results = json.loads(out)
    assert all(not r["reproduced"] for r in results)


def test_replay_reproduces_real_bound_shape(tmp_path, capsys):
    # findings written through the walk replay spec rebuild byte-equal
    hook = [("selftest.always", lambda g: (0,) if g.n else None)]
    store = tmp_path / "w.jsonl"
    summary, _ = run_campaign("p5_k1uk3_free", n=7, seeds=1, iters=10,
                              stride=5, store=str(store), extra_checks=hook)
    rows = [json.loads(ln) for ln in store.read_text().splitlines()]
    assert rows
    for row in rows:
        assert replay_finding(row, extra_checks=hook)


def test_bad_input_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("not graph6 at all\x01\n")
    code, _ = run(capsys, "recognize", "--in", str(f))
    assert code == EXIT_INPUT
    missing = tmp_path / "nope.g6"
    code, _ = run(capsys, "recognize", "--in", str(missing))
    assert code == EXIT_INPUT


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fivering.cli", "gen", "--family", "cycle",
         "--params", "5"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "Dhc"
