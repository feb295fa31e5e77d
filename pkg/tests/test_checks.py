"""Campaign runner: statuses, merging, shrinking, determinism."""

from __future__ import annotations

import json

import pytest

import hyperbetti.checks as checks
from hyperbetti.checks import (
    CHECK_NAMES,
    CampaignReport,
    CheckResult,
    _merge_results,
    run_checks,
    run_fuzz,
    shrink_failure,
)
from hyperbetti.formats import instance_payload, parse_json
from hyperbetti.generators import path_graph
from hyperbetti.hypergraph import build
from hyperbetti.linalg import GF2, QQ

from conftest import cycle_graph


FIELDS = [QQ, GF2]


@pytest.mark.parametrize("field", FIELDS, ids=str)
@pytest.mark.parametrize("name", ["p3", "c4", "p6", "triples"])
def test_fixtures_pass_everything(name, field):
    fixtures = {
        "p3": path_graph(3),
        "c4": cycle_graph(4),
        "p6": path_graph(6),
        "triples": build(
            ["x1", "x2", "x3", "x4", "x5", "x6"],
            [(0, 1, 2), (1, 2, 3), (1, 4, 5)],
        ),
    }
    report = run_checks(fixtures[name], field)
    assert report.ok
    statuses = {r.name: r.status for r in report.checks}
    assert "fail" not in statuses.values()
    assert [r.name for r in report.checks] == list(CHECK_NAMES)


def test_report_shape_and_determinism():
    h = path_graph(4)
    a = run_checks(h, QQ, seed=3).as_dict()
    b = run_checks(h, QQ, seed=3).as_dict()
    assert a["schema_version"] == 1
    assert set(a) == {"schema_version", "ok", "seed", "instances", "checks",
                      "failures", "meta"}
    # everything that may vary between runs lives under meta
    a.pop("meta"), b.pop("meta")
    assert a == b


def test_large_instance_skips_exact_checks_without_failing():
    # an 11-edge matching exceeds both exact caps but no family budget
    labels = [f"v{i}" for i in range(22)]
    h = build(labels, [(2 * i, 2 * i + 1) for i in range(11)])
    report = run_checks(h)
    assert report.ok
    statuses = {r.name: r.status for r in report.checks}
    assert statuses["engine-agreement"] == "skip"
    assert statuses["restriction-monotonicity"] == "skip"
    assert statuses["invariant-inequalities"] == "pass"


def test_cap_override_via_env(monkeypatch):
    monkeypatch.setenv("BETTI_CAP_N", "3")
    report = run_checks(path_graph(4))
    statuses = {r.name: r.status for r in report.checks}
    assert statuses["engine-agreement"] == "skip"
    monkeypatch.delenv("BETTI_CAP_N")
    report = run_checks(path_graph(4))
    statuses = {r.name: r.status for r in report.checks}
    assert statuses["engine-agreement"] == "pass"


def test_merge_results_precedence():
    def rep(status, checked, counter=None):
        results = [CheckResult(name, "skip", 0) for name in CHECK_NAMES]
        results[0] = CheckResult(CHECK_NAMES[0], status, checked,
                                 detail=status, counterexample=counter)
        return CampaignReport(results)

    merged = _merge_results([rep("pass", 2), rep("fail", 1, {"x": 1}),
                             rep("fail", 1, {"x": 2}), rep("skip", 0)])
    first = merged[0]
    assert first.status == "fail"
    assert first.checked == 4
    assert first.counterexample == {"x": 1}  # first failure wins
    assert [r.name for r in merged] == list(CHECK_NAMES)
    # a check no instance exercised stays skip with a reason
    assert merged[1].status == "skip" and merged[1].detail


# a synthetic check, named after a real one so merged reports accept it
_FAKE = CHECK_NAMES[0]


def _fails_while_two_edges(ctx):
    if ctx.h.m >= 2:
        return checks._fail(_FAKE, ctx.h, "two edges remain")
    return CheckResult(_FAKE, "pass", 1)


def test_shrink_failure_reaches_single_deletion_minimum(monkeypatch):
    monkeypatch.setattr(checks, "_CHECKS", (_fails_while_two_edges,))
    small = shrink_failure(path_graph(6), _FAKE)
    # minimal under one-step deletion: two edges, no removable vertex
    assert small.m == 2
    assert small.n == 3


def test_failure_payload_replays(monkeypatch):
    monkeypatch.setattr(checks, "_CHECKS", (_fails_while_two_edges,))
    report = run_checks(path_graph(3))
    assert not report.ok
    payload = report.failures[0]["instance"]
    again = parse_json(json.dumps(payload))
    assert again.labels == path_graph(3).labels
    assert again.edges == path_graph(3).edges


def test_run_fuzz_merges_and_is_deterministic():
    kwargs = dict(class_spec="general", n=6, m=5, count=4, seed=9)
    a = run_fuzz(**kwargs)
    b = run_fuzz(**kwargs)
    assert a.ok and a.instances == 4
    da, db = a.as_dict(), b.as_dict()
    da.pop("meta"), db.pop("meta")
    assert da == db
    assert json.dumps(da) == json.dumps(db)


def test_run_fuzz_parallel_matches_serial():
    serial = run_fuzz("uniform:2", 6, 5, 4, seed=5, jobs=1).as_dict()
    parallel = run_fuzz("uniform:2", 6, 5, 4, seed=5, jobs=2).as_dict()
    serial.pop("meta"), parallel.pop("meta")
    assert serial == parallel


def test_run_fuzz_shrinks_first_failure(monkeypatch):
    monkeypatch.setattr(checks, "_CHECKS", (_fails_while_two_edges,))
    report = run_fuzz("general", 6, 5, count=3, seed=1)
    assert not report.ok
    assert report.failures
    failure = report.failures[0]
    assert set(failure) == {"check", "index", "seed", "instance", "shrunk", "message"}
    h = parse_json(json.dumps(failure["shrunk"]))
    assert h.m == 2
    covered = 0
    for s in range(h.m):
        covered |= h.edges[s]
    assert covered.bit_count() == h.n  # no deletable isolated vertex remains


def test_instance_payload_round_trip():
    h = cycle_graph(5)
    payload = instance_payload(h)
    again = parse_json(json.dumps(payload))
    assert again.labels == h.labels and again.edges == h.edges
