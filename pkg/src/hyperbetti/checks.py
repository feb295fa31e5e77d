"""Theorem-backed verification campaigns.

``run_checks`` runs every applicable check on one instance and reports
pass/fail/skip per check; nothing raises on a violated property, the
failure becomes report content with a replayable instance attached.
``run_fuzz`` drives batches of random instances through the same
campaign and shrinks the first failure.

Exact-table checks are gated by default at 10 vertices and 10 edges;
the BETTI_CAP_N environment variable overrides the vertex cap. Family
sweeps stop at 16 edges. Reports are deterministic for fixed inputs and
seed: everything that varies between runs lives under the ``meta`` key.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from datetime import datetime, timezone
from math import comb

from .bitsets import bits_of
from .errors import CertificateError, ViolationFound
from .families import (
    FAMILY_BUDGET,
    classify,
    compute_invariants,
    survey,
)
from .formats import instance_payload
from .generators import derive_seed, make_batch
from .homology import betti_table, homology_of_restrictions, table_from_homology
from .hypergraph import (
    TRIANGULATED_CAP,
    Hypergraph,
    delete_edge,
    induced_subhypergraph,
    is_triangulated,
    uniformity_profile,
)
from .linalg import QQ, Field
from .splitting import (
    find_simplicial_vertex,
    split,
    verify_disjointness_characterization,
    verify_matching_persistence,
    verify_split_extension,
)
from .taylor import (
    TAYLOR_BUDGET,
    Certificate,
    analyze_taylor,
    certify_nonvanishing,
    is_l_admissible,
    is_maximal_l_admissible,
)

SCHEMA_VERSION = 1
EXACT_N_CAP = 10
EXACT_M_CAP = 10
SAMPLED_ORDERINGS = 6

CHECK_NAMES = (
    "implication-chain",
    "invariant-inequalities",
    "graph-identities",
    "uniform-spread-identity",
    "degree-window",
    "restriction-monotonicity",
    "engine-agreement",
    "induced-matching-slices",
    "pd-reg-lower-bounds",
    "lower-bound-certificates",
    "basis-sandwich",
    "conditional-slice-bounds",
    "conditional-pd-cap",
    "admissibility-orderings",
    "splitting-recursion",
    "matching-persistence",
    "split-extension",
    "disjointness-characterization",
)


def exact_vertex_cap() -> int:
    raw = os.environ.get("BETTI_CAP_N")
    return int(raw) if raw else EXACT_N_CAP


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skip
    checked: int = 0
    detail: str = ""
    witness: dict | None = None
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "checked": self.checked}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class CampaignReport:
    checks: list[CheckResult]
    seed: int | None = None
    instances: int = 1
    failures: list[dict] = dc_field(default_factory=list)
    meta: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.checks)

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "ok": self.ok,
            "seed": self.seed,
            "instances": self.instances,
            "checks": [r.as_dict() for r in self.checks],
            "failures": self.failures,
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def _fail(name: str, h: Hypergraph, message: str, checked: int = 0,
          extra: dict | None = None) -> CheckResult:
    payload = {"instance": instance_payload(h), "message": message}
    if extra:
        payload.update(extra)
    return CheckResult(name, "fail", checked, detail=message, counterexample=payload)


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items)
        return [_jsonable(v) for v in items]
    return value


class _Ctx:
    """Shared per-instance artifacts, each computed at most once."""

    def __init__(self, h: Hypergraph, field: Field, seed: int):
        self.h = h
        self.field = field
        self.seed = seed
        self.profile = uniformity_profile(h)
        self.exact_ok = h.n <= exact_vertex_cap() and h.m <= EXACT_M_CAP
        self.survey_ok = h.m <= FAMILY_BUDGET
        self.hom = None
        self.table = None
        if self.exact_ok:
            self.hom = homology_of_restrictions(h, field, cap=h.n)
            self.table = table_from_homology(self.hom, field, h.n)
        self.sv = survey(h) if self.survey_ok else None
        report = compute_invariants(h, precomputed=self.sv) if self.survey_ok else None
        self.inv = report.as_dict() if report is not None else None
        self.witnesses = report.witnesses if report is not None else None
        self.taylor = (
            analyze_taylor(h, field) if self.exact_ok and h.m <= TAYLOR_BUDGET else None
        )
        self.special = (
            self.profile.is_special_class
            and self.profile.d is not None
            and h.n <= TRIANGULATED_CAP
            and is_triangulated(h)
        )


def _skip(name: str, why: str) -> CheckResult:
    return CheckResult(name, "skip", 0, detail=why)


def _check_implication_chain(ctx: _Ctx) -> CheckResult:
    name = "implication-chain"
    if not ctx.survey_ok or ctx.h.m > EXACT_M_CAP:
        return _skip(name, "family enumeration too large")
    h = ctx.h
    checked = 0
    for bits in range(1, 1 << h.m):
        fam = tuple(bits_of(bits))
        cls = classify(h, fam)
        rules = (
            ("induced->matching", not cls.induced or cls.matching),
            ("induced->self_semi_induced", not cls.induced or cls.self_semi_induced),
            ("induced->self_disjoint", not cls.induced or cls.self_disjoint),
            ("ssi->semi_induced", not cls.self_semi_induced or cls.semi_induced),
            ("ssi->self_contained", not cls.self_semi_induced or cls.self_contained),
            ("ssi->ssd", not cls.self_semi_induced or cls.self_semi_disjoint),
            ("sd->ssd", not cls.self_disjoint or cls.self_semi_disjoint),
            ("ordered->self_contained", not cls.self_ordered or cls.self_contained),
        )
        for rule, holds in rules:
            if not holds:
                return _fail(name, h, f"family {fam} violates {rule}", checked)
        checked += 1
    return CheckResult(name, "pass", checked)


def _check_invariant_inequalities(ctx: _Ctx) -> CheckResult:
    name = "invariant-inequalities"
    if not ctx.survey_ok:
        return _skip(name, "family enumeration too large")
    v = ctx.inv
    relations = (
        ("a<=m", v["a"] <= v["m"]),
        ("a<=b", v["a"] <= v["b"]),
        ("b<=d2", v["b"] <= v["d2"]),
        ("b<=e", v["b"] <= v["e"]),
        ("a<=d1", v["a"] <= v["d1"]),
        ("d1<=d2", v["d1"] <= v["d2"]),
        ("c<=e", v["c"] <= v["e"]),
        ("b_prime<=d2_prime", v["b_prime"] <= v["d2_prime"]),
        ("d1_prime<=d2_prime", v["d1_prime"] <= v["d2_prime"]),
    )
    for rel, holds in relations:
        if not holds:
            return _fail(name, ctx.h, f"inequality {rel} fails: {v}", 0)
    return CheckResult(name, "pass", len(relations))


def _check_graph_identities(ctx: _Ctx) -> CheckResult:
    name = "graph-identities"
    if not ctx.survey_ok:
        return _skip(name, "family enumeration too large")
    if ctx.profile.d != 2 and ctx.h.m > 0:
        return _skip(name, "not a graph")
    v = ctx.inv
    if not (v["d_g"] == v["d1"] == v["d2"]):
        return _fail(name, ctx.h, f"d_G {v['d_g']} vs d1 {v['d1']}, d2 {v['d2']}")
    if not (v["d_g_prime"] == v["d1_prime"] == v["d2_prime"]):
        return _fail(
            name, ctx.h,
            f"d_G' {v['d_g_prime']} vs d1' {v['d1_prime']}, d2' {v['d2_prime']}")
    if ctx.sv.types["self_disjoint"] != ctx.sv.types["self_semi_disjoint"]:
        return _fail(name, ctx.h, "graph has a self semi-disjoint type with no self disjoint set")
    return CheckResult(name, "pass", 3)


def _check_uniform_spread_identity(ctx: _Ctx) -> CheckResult:
    name = "uniform-spread-identity"
    if not ctx.survey_ok:
        return _skip(name, "family enumeration too large")
    if not ctx.profile.is_uniform or ctx.profile.d is None:
        return _skip(name, "not uniform")
    v = ctx.inv
    d = ctx.profile.d
    if v["d1_prime"] != (d - 1) * v["a"]:
        return _fail(name, ctx.h, f"d1' {v['d1_prime']} != (d-1)*a = {(d - 1) * v['a']}")
    return CheckResult(name, "pass", 1)


def _check_degree_window(ctx: _Ctx) -> CheckResult:
    name = "degree-window"
    if ctx.table is None:
        return _skip(name, "instance above exact-table caps")
    if ctx.h.m == 0:
        return _skip(name, "no edges")
    sizes = [mask.bit_count() for mask in ctx.h.edges]
    t, tp = max(sizes), min(sizes)
    checked = 0
    for (i, j), value in ctx.table.entries.items():
        if i == 0 or value == 0:
            continue
        if not (i + tp - 1 <= j <= min(ctx.h.n, t * i)):
            return _fail(name, ctx.h, f"entry ({i},{j}) outside degree window", checked)
        checked += 1
    pd, reg = ctx.table.projective_dimension(), ctx.table.regularity()
    if not (tp - 1 <= reg <= (t - 1) * pd):
        return _fail(name, ctx.h, f"reg {reg} outside [{tp - 1}, {(t - 1) * pd}]", checked)
    return CheckResult(name, "pass", checked + 1)


def _check_restriction_monotonicity(ctx: _Ctx) -> CheckResult:
    name = "restriction-monotonicity"
    if ctx.hom is None:
        return _skip(name, "instance above exact-table caps")
    full = ctx.table
    checked = 0
    for wmask in range((1 << ctx.h.n) - 1):
        sub = table_from_homology(ctx.hom, ctx.field, ctx.h.n, within=wmask)
        for (i, j), value in sub.entries.items():
            if value > full.get(i, j):
                return _fail(
                    name, ctx.h,
                    f"restriction {wmask:b} has beta({i},{j})={value} above full {full.get(i, j)}",
                    checked)
        if sub.projective_dimension() > full.projective_dimension():
            return _fail(name, ctx.h, f"restriction {wmask:b} raises pd", checked)
        if sub.regularity() > full.regularity():
            return _fail(name, ctx.h, f"restriction {wmask:b} raises reg", checked)
        checked += 1
    return CheckResult(name, "pass", checked)


def _check_engine_agreement(ctx: _Ctx) -> CheckResult:
    name = "engine-agreement"
    if ctx.table is None:
        return _skip(name, "instance above exact-table caps")
    checked = 0
    if ctx.taylor is not None:
        if ctx.taylor.table().entries != ctx.table.entries:
            return _fail(name, ctx.h, "Taylor table differs from restriction-homology table")
        checked += 1
    if ctx.special:
        from .splitting import betti_recursive

        rec = betti_recursive(ctx.h, ctx.field)
        if rec.entries != ctx.table.entries:
            return _fail(name, ctx.h, "recursive table differs from restriction-homology table",
                         checked)
        checked += 1
    if checked == 0:
        return _skip(name, "no second engine applicable")
    return CheckResult(name, "pass", checked)


def _check_induced_matching_slices(ctx: _Ctx) -> CheckResult:
    name = "induced-matching-slices"
    if ctx.table is None or not ctx.survey_ok:
        return _skip(name, "needs exact table and family sweep")
    if ctx.h.m == 0:
        return _skip(name, "no edges")
    t = max(mask.bit_count() for mask in ctx.h.edges)
    checked = 0
    for i in range(1, ctx.h.m + 1):
        expected = ctx.sv.counts_induced_uniform.get((t, i), 0)
        actual = ctx.table.get(i, t * i)
        if expected != actual:
            return _fail(
                name, ctx.h,
                f"beta({i},{t * i})={actual} but {expected} induced matchings of {t}-sets",
                checked)
        checked += 1
    return CheckResult(name, "pass", checked)


def _check_pd_reg_lower_bounds(ctx: _Ctx) -> CheckResult:
    name = "pd-reg-lower-bounds"
    if ctx.table is None or not ctx.survey_ok:
        return _skip(name, "needs exact table and family sweep")
    v = ctx.inv
    pd, reg = ctx.table.projective_dimension(), ctx.table.regularity()
    bounds = [
        ("pd>=b", pd >= v["b"]),
        ("pd>=c", pd >= v["c"]),
        ("pd>=d2", pd >= v["d2"]),
        ("reg>=b_prime", reg >= v["b_prime"]),
        ("reg>=c_prime", reg >= v["c_prime"]),
        ("reg>=d2_prime", reg >= v["d2_prime"]),
    ]
    for t, a_t in v["a_t"].items():
        bounds.append((f"reg>=({t}-1)*a_{t}", reg >= (t - 1) * a_t))
    for rel, holds in bounds:
        if not holds:
            return _fail(name, ctx.h, f"bound {rel} fails: pd={pd} reg={reg} {v}")
    return CheckResult(name, "pass", len(bounds))


def _check_lower_bound_certificates(ctx: _Ctx) -> CheckResult:
    name = "lower-bound-certificates"
    if ctx.table is None or not ctx.survey_ok:
        return _skip(name, "needs exact table and family sweep")
    plans = (
        ("a", "induced_matching"),
        ("b", "semi_induced"),
        ("c", "self_ordered"),
        ("d2", "self_semi_disjoint"),
    )
    issued = []
    for key, kind in plans:
        fam = ctx.witnesses[key]
        if not fam:
            continue
        union = 0
        for s in fam:
            union |= ctx.h.edge_mask(s)
        cert = Certificate(kind, tuple(fam), len(fam), union.bit_count())
        try:
            verdict = certify_nonvanishing(ctx.h, cert, ctx.field, table=ctx.table)
        except CertificateError as exc:
            return _fail(
                name, ctx.h, f"{kind} certificate for {tuple(fam)} failed: {exc}",
                len(issued))
        issued.append(
            {"kind": kind, "family": list(fam), "i": cert.i, "j": cert.j,
             "beta": verdict.beta})
    if not issued:
        return _skip(name, "no nonempty witness families")
    return CheckResult(name, "pass", len(issued), witness={"certificates": issued})


def _check_basis_sandwich(ctx: _Ctx) -> CheckResult:
    name = "basis-sandwich"
    if ctx.taylor is None or not ctx.survey_ok:
        return _skip(name, "needs Taylor analysis and family sweep")
    checked = 0
    for (i, j) in sorted(ctx.taylor.slices):
        if i == 0:
            continue
        b = len(ctx.taylor.b_set(i, j))
        ssi = ctx.sv.counts_ssi.get((i, j), 0)
        scsi = ctx.sv.counts_scsi.get((i, j), 0)
        if not ssi <= b <= scsi:
            return _fail(
                name, ctx.h,
                f"slice ({i},{j}): ssi {ssi} <= |B| {b} <= scsi {scsi} fails", checked)
        checked += 1
    return CheckResult(name, "pass", checked)


def _check_conditional_slice_bounds(ctx: _Ctx) -> CheckResult:
    name = "conditional-slice-bounds"
    if ctx.table is None or ctx.taylor is None or not ctx.survey_ok:
        return _skip(name, "needs exact table, Taylor analysis, family sweep")
    checked = 0
    for (i, j) in sorted(ctx.taylor.slices):
        if i == 0 or not ctx.taylor.slices[(i, j)]:
            continue
        hyp1 = ctx.sv.families_all_reduced(i, j)
        hyp2 = ctx.sv.absorbing_families_stay_reduced(i, j)
        if not hyp1 and not hyp2:
            continue
        beta = ctx.table.get(i, j)
        b = len(ctx.taylor.b_set(i, j))
        ssi = ctx.sv.counts_ssi.get((i, j), 0)
        scsi = ctx.sv.counts_scsi.get((i, j), 0)
        if hyp1 and not (beta <= b and beta <= scsi):
            return _fail(
                name, ctx.h,
                f"slice ({i},{j}) under all-reduced hypothesis: beta {beta} > |B| {b} or scsi {scsi}",
                checked)
        if hyp2 and not (beta >= b and beta >= ssi):
            return _fail(
                name, ctx.h,
                f"slice ({i},{j}) under no-double-absorption hypothesis: beta {beta} < |B| {b} or ssi {ssi}",
                checked)
        if hyp1 and hyp2 and beta != b:
            return _fail(name, ctx.h,
                         f"slice ({i},{j}) under both hypotheses: beta {beta} != |B| {b}",
                         checked)
        checked += 1
    if checked == 0:
        return _skip(name, "no slice satisfies either hypothesis")
    return CheckResult(name, "pass", checked)


def _check_conditional_pd_cap(ctx: _Ctx) -> CheckResult:
    name = "conditional-pd-cap"
    if ctx.table is None or not ctx.survey_ok:
        return _skip(name, "needs exact table and family sweep")
    e = ctx.inv["e"]
    if any(i >= e for (i, j) in ctx.sv.hyp1_violations):
        return _skip(name, "all-reduced hypothesis fails at or above e")
    pd = ctx.table.projective_dimension()
    if pd > e:
        return _fail(name, ctx.h, f"pd {pd} exceeds e {e} despite hypothesis")
    return CheckResult(name, "pass", 1, witness={"pd": pd, "e": e})


def _check_admissibility_orderings(ctx: _Ctx) -> CheckResult:
    name = "admissibility-orderings"
    if not ctx.survey_ok or ctx.h.m == 0:
        return _skip(name, "needs edges within the family budget")
    h = ctx.h
    rng = random.Random(ctx.seed)
    orderings = [tuple(range(h.m))]
    for _ in range(SAMPLED_ORDERINGS):
        perm = list(range(h.m))
        rng.shuffle(perm)
        orderings.append(tuple(perm))
    families = []
    seen = set()
    for key in ("a", "b", "c", "d2", "e"):
        fam = tuple(sorted(ctx.witnesses[key]))
        if fam and fam not in seen:
            seen.add(fam)
            families.append(fam)
    checked = 0
    for fam in families:
        cls = classify(h, fam)
        for order in orderings:
            positions = tuple(sorted(order.index(s) for s in fam))
            admissible = is_l_admissible(h, order, positions)
            if cls.self_semi_induced and not admissible:
                return _fail(
                    name, h,
                    f"self semi-induced family {fam} not admissible under {order}", checked)
            checked += 1
        fam_first = tuple(fam) + tuple(s for s in range(h.m) if s not in fam)
        front = tuple(range(len(fam)))
        front_ok = is_l_admissible(h, fam_first, front)
        if cls.reduced != front_ok:
            return _fail(
                name, h,
                f"family {fam}: reduced={cls.reduced} but family-first admissibility={front_ok}",
                checked)
        checked += 1
    ordered = ctx.witnesses.get("c", ())
    # Maximality under the family-first ordering needs a prefix member to
    # absorb, so it starts at two edges; a lone edge can sit inside an
    # admissible pair with any disjoint edge.
    if len(ordered) >= 2:
        rest = tuple(s for s in range(h.m) if s not in ordered)
        order = tuple(ordered) + rest
        front = tuple(range(len(ordered)))
        if not is_maximal_l_admissible(h, order, front):
            return _fail(
                name, h,
                f"self ordered family {ordered} not maximal admissible when listed first",
                checked)
        checked += 1
    return CheckResult(name, "pass", checked)


def _check_splitting_recursion(ctx: _Ctx) -> CheckResult:
    name = "splitting-recursion"
    if not ctx.special or ctx.h.m == 0:
        return _skip(name, "needs a triangulated instance of the restricted class")
    if ctx.table is None:
        return _skip(name, "instance above exact-table caps")
    dec = split(ctx.h)
    t, d = dec.t, dec.d
    tab1 = betti_table(dec.h1, ctx.field, cap=ctx.h.n)
    tab2 = betti_table(dec.h2, ctx.field, cap=ctx.h.n)
    checked = 0
    for i in range(ctx.h.m + 2):
        for j in range(ctx.h.n + 1):
            lhs = ctx.table.get(i, j)
            rhs = tab1.get(i, j)
            for ell in range(i):
                rhs += comb(t, ell) * tab2.get(i - 1 - ell, j - d - ell)
            if lhs != rhs:
                return _fail(
                    name, ctx.h,
                    f"recursion mismatch at ({i},{j}): table {lhs}, split sum {rhs}",
                    checked)
            checked += 1
        collapsed = tab1.get(i, ctx.h.n) + tab2.get(i - 1 - t, ctx.h.n - d - t)
        if ctx.table.get(i, ctx.h.n) != collapsed:
            return _fail(
                name, ctx.h,
                f"two-term reduction fails at ({i},{ctx.h.n})", checked)
        checked += 1
    return CheckResult(name, "pass", checked)


def _check_matching_persistence(ctx: _Ctx) -> CheckResult:
    name = "matching-persistence"
    if not ctx.special or ctx.h.m == 0 or not ctx.survey_ok:
        return _skip(name, "needs a triangulated instance of the restricted class")
    x = find_simplicial_vertex(ctx.h)
    s = next(s for s in range(ctx.h.m) if ctx.h.edge_mask(s) >> x & 1)
    try:
        count = verify_matching_persistence(ctx.h, x, s)
    except ViolationFound as exc:
        return _fail(name, ctx.h, str(exc))
    return CheckResult(name, "pass", count, witness={"x": x, "s": s})


def _check_split_extension(ctx: _Ctx) -> CheckResult:
    name = "split-extension"
    if not ctx.special or ctx.h.m == 0 or not ctx.survey_ok:
        return _skip(name, "needs a triangulated instance of the restricted class")
    dec = split(ctx.h)
    try:
        count = verify_split_extension(ctx.h, dec)
    except ViolationFound as exc:
        return _fail(name, ctx.h, str(exc))
    return CheckResult(name, "pass", count, witness={"x": dec.x, "s": dec.s})


def _check_disjointness_characterization(ctx: _Ctx) -> CheckResult:
    name = "disjointness-characterization"
    if not ctx.special or not ctx.survey_ok:
        return _skip(name, "needs a triangulated instance of the restricted class")
    try:
        rep = verify_disjointness_characterization(ctx.h, ctx.field)
    except ViolationFound as exc:
        return _fail(name, ctx.h, str(exc))
    checked = 3
    if ctx.profile.d == 2 or ctx.h.m == 0:
        v = ctx.inv
        if rep["pd"] != v["d_g"] or rep["reg"] != v["d_g_prime"]:
            return _fail(
                name, ctx.h,
                f"chordal identities fail: pd {rep['pd']} vs d_G {v['d_g']}, "
                f"reg {rep['reg']} vs d_G' {v['d_g_prime']}", checked)
        if v["d_g_prime"] != v["a"]:
            return _fail(name, ctx.h,
                         f"chordal spread {v['d_g_prime']} != induced matching number {v['a']}",
                         checked)
        checked += 2
    return CheckResult(name, "pass", checked, witness=_jsonable(rep))


_CHECKS = (
    _check_implication_chain,
    _check_invariant_inequalities,
    _check_graph_identities,
    _check_uniform_spread_identity,
    _check_degree_window,
    _check_restriction_monotonicity,
    _check_engine_agreement,
    _check_induced_matching_slices,
    _check_pd_reg_lower_bounds,
    _check_lower_bound_certificates,
    _check_basis_sandwich,
    _check_conditional_slice_bounds,
    _check_conditional_pd_cap,
    _check_admissibility_orderings,
    _check_splitting_recursion,
    _check_matching_persistence,
    _check_split_extension,
    _check_disjointness_characterization,
)


def run_checks(h: Hypergraph, field: Field = QQ, seed: int = 0) -> CampaignReport:
    """Run every applicable check on one instance."""
    start = time.perf_counter()
    ctx = _Ctx(h, field, seed)
    results = [check(ctx) for check in _CHECKS]
    failures = [r.counterexample for r in results if r.counterexample is not None]
    meta = {
        "runtime_ms": round((time.perf_counter() - start) * 1000, 3),
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "field": str(field),
    }
    return CampaignReport(results, seed=seed, instances=1, failures=failures, meta=meta)


def check_still_fails(h: Hypergraph, name: str, field: Field, seed: int) -> bool:
    report = run_checks(h, field, seed)
    return any(r.name == name and r.status == "fail" for r in report.checks)


def shrink_failure(h: Hypergraph, name: str, field: Field = QQ, seed: int = 0) -> Hypergraph:
    """Greedy single-deletion shrinking that preserves the failing check.

    Tries edge deletions first, then vertex deletions; stops when no
    single move still fails, so the result is minimal under one-step
    deletion.
    """
    current = h
    improved = True
    while improved:
        improved = False
        for s in range(current.m):
            candidate = delete_edge(current, s)
            if check_still_fails(candidate, name, field, seed):
                current = candidate
                improved = True
                break
        if improved:
            continue
        for x in range(current.n):
            candidate, _ = induced_subhypergraph(
                current, [v for v in range(current.n) if v != x])
            if check_still_fails(candidate, name, field, seed):
                current = candidate
                improved = True
                break
    return current


def _merge_results(per_instance: list[CampaignReport]) -> list[CheckResult]:
    merged: dict[str, CheckResult] = {
        name: CheckResult(name, "skip", 0) for name in CHECK_NAMES
    }
    skip_reasons: dict[str, str] = {}
    for report in per_instance:
        for result in report.checks:
            agg = merged[result.name]
            agg.checked += result.checked
            if result.status == "fail":
                agg.status = "fail"
                if agg.counterexample is None:
                    agg.counterexample = result.counterexample
                    agg.detail = result.detail
            elif result.status == "pass" and agg.status != "fail":
                agg.status = "pass"
            elif result.status == "skip" and result.detail:
                skip_reasons.setdefault(result.name, result.detail)
    for name, agg in merged.items():
        if agg.status == "skip":
            agg.detail = skip_reasons.get(name, "not applicable to any instance")
    return [merged[name] for name in CHECK_NAMES]


def _fuzz_one(args) -> CampaignReport:
    payload, field, child_seed = args
    from .hypergraph import build

    h = build(payload["vertices"], [tuple(e) for e in payload["edges"]])
    return run_checks(h, field, seed=child_seed)


def run_fuzz(class_spec: str, n: int, m: int, count: int, seed: int,
             field: Field = QQ, jobs: int = 1) -> CampaignReport:
    """Generate ``count`` seeded instances and run the campaign on each.

    The first failing (instance, check) pair is shrunk and embedded in
    the report. Reports merge in instance order, so the output does not
    depend on the worker schedule.
    """
    start = time.perf_counter()
    instances = make_batch(class_spec, n, m, count, seed)
    tasks = [
        (instance_payload(h), field, derive_seed(seed, k))
        for k, h in enumerate(instances)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_fuzz_one, tasks))
    else:
        reports = [_fuzz_one(task) for task in tasks]
    checks = _merge_results(reports)
    failures = []
    for k, report in enumerate(reports):
        for result in report.checks:
            if result.status == "fail" and not failures:
                shrunk = shrink_failure(instances[k], result.name, field,
                                        seed=derive_seed(seed, k))
                failures.append({
                    "check": result.name,
                    "index": k,
                    "seed": derive_seed(seed, k),
                    "instance": instance_payload(instances[k]),
                    "shrunk": instance_payload(shrunk),
                    "message": result.detail,
                })
    meta = {
        "runtime_ms": round((time.perf_counter() - start) * 1000, 3),
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "field": str(field),
        "class": class_spec,
        "vertices": n,
        "edges": m,
    }
    return CampaignReport(checks, seed=seed, instances=count, failures=failures,
                          meta=meta)
