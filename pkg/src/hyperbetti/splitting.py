"""Recursive Betti tables for triangulated hypergraphs whose distinct
intersecting edges overlap in all but one vertex.

Deleting an edge at a simplicial vertex splits the ideal, giving the
recursion implemented by :func:`betti_recursive`: with S the removed
edge, d its size, t the number of vertices adjacent to S, H1 the
deletion and H2 the restriction away from S and its neighborhood,

    beta_{i,j}(H) = beta_{i,j}(H1)
                    + sum_l C(t, l) * beta_{i-1-l, j-d-l}(H2).

Betti numbers of this class do not depend on the coefficient field;
the ``field`` argument only tags the returned table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .bitsets import bits_of, is_subset, mask_of
from .errors import (
    NotSimplicial,
    NotSpecialClass,
    NotTriangulated,
    SizeCapExceeded,
    ValidationError,
    ViolationFound,
)
from .families import classify, survey
from .homology import BettiTable
from .taylor import betti_via_taylor
from .hypergraph import (
    TRIANGULATED_CAP,
    Hypergraph,
    delete_edge,
    edge_neighborhood,
    induced_subhypergraph,
    is_simplicial_vertex,
    is_triangulated,
    uniformity_profile,
)
from .linalg import QQ, Field


def require_special_class(h: Hypergraph) -> int | None:
    """Common edge size, or None when edgeless; NotSpecialClass otherwise."""
    prof = uniformity_profile(h)
    if not prof.is_special_class:
        raise NotSpecialClass(
            "edges must share a common size d and pairwise intersect in 0 or d-1 vertices")
    return prof.d


def find_simplicial_vertex(h: Hypergraph) -> int | None:
    """Least non-isolated simplicial vertex, or None."""
    covered = 0
    for mask in h.edges:
        covered |= mask
    for x in bits_of(covered):
        if is_simplicial_vertex(h, x):
            return x
    return None


@dataclass(frozen=True)
class SplittingDecomposition:
    """One splitting step at a simplicial vertex.

    ``neighbor_edges[l]`` is the least-indexed edge avoiding ``x``
    whose vertices outside the split edge are exactly
    ``neighbor_vertices[l]``.
    """

    x: int
    s: int
    d: int
    neighbor_vertices: tuple[int, ...]
    neighbor_edges: tuple[int, ...]
    h1: Hypergraph
    h2: Hypergraph
    h1_edge_map: dict[int, int]
    h2_edge_map: dict[int, int]
    removed_vertices: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.neighbor_vertices)


def split(h: Hypergraph, x: int | None = None, s: int | None = None) -> SplittingDecomposition:
    """Split ``h`` at a simplicial vertex ``x`` along an edge ``s``.

    Defaults pick the least simplicial vertex and its least edge. The
    chosen neighbor edges realize each neighbor vertex z of the split
    edge S through an edge avoiding x with exactly z outside S; within
    this class such an edge always exists, so a miss is reported as a
    violation rather than an error of use.
    """
    d = require_special_class(h)
    if d is None:
        raise ValidationError("cannot split an edgeless hypergraph")
    if x is None:
        x = find_simplicial_vertex(h)
        if x is None:
            raise NotSimplicial("no simplicial vertex to split at")
    else:
        h.check_vertex(x)
        if not is_simplicial_vertex(h, x):
            raise NotSimplicial(f"vertex {h.labels[x]} is not simplicial")
    xbit = 1 << x
    if s is None:
        s = next((e for e, mask in enumerate(h.edges) if mask & xbit), None)
        if s is None:
            raise ValidationError(f"vertex {h.labels[x]} lies in no edge")
    elif not h.edge_mask(s) & xbit:
        raise ValidationError(f"edge {s} does not contain vertex {h.labels[x]}")
    smask = h.edge_mask(s)
    nmask = edge_neighborhood(h, s)
    zs = tuple(bits_of(nmask))
    chosen = []
    for z in zs:
        zbit = 1 << z
        pick = next(
            (e for e, mask in enumerate(h.edges)
             if e != s and mask & ~smask == zbit and not mask & xbit),
            None)
        if pick is None:
            raise ViolationFound(
                "neighbor-edge",
                f"no edge through {h.labels[z]} avoiding {h.labels[x]} with the rest inside the split edge",
                instance=h)
        chosen.append(pick)
    keep = [v for v in range(h.n) if not (smask | nmask) >> v & 1]
    h2, h2_map = induced_subhypergraph(h, keep)
    h1 = delete_edge(h, s)
    h1_map = {e: e - (e > s) for e in range(h.m) if e != s}
    return SplittingDecomposition(
        x=x, s=s, d=d,
        neighbor_vertices=zs, neighbor_edges=tuple(chosen),
        h1=h1, h2=h2, h1_edge_map=h1_map, h2_edge_map=h2_map,
        removed_vertices=tuple(bits_of(smask | nmask)),
    )


def canonical_key(h: Hypergraph) -> tuple:
    """Deterministic relabelled edge list; equal keys are isomorphic.

    Vertices are ordered by two rounds of neighborhood refinement with
    original-id tie breaks, and isolated vertices are dropped. The key
    contains the full relabelled edge list, so distinct hypergraphs
    never collide; isomorphic ones may still get different keys, which
    only costs a memo miss.
    """
    covered = 0
    for mask in h.edges:
        covered |= mask
    verts = tuple(bits_of(covered))
    incident = {v: [m for m in h.edges if m >> v & 1] for v in verts}
    sig = {v: str(len(incident[v])) for v in verts}
    for _ in range(2):
        sig = {
            v: sig[v] + "|" + ",".join(sorted(
                "+".join(sorted(sig[u] for u in bits_of(m) if u != v))
                for m in incident[v]))
            for v in verts
        }
    rank = {v: r for r, v in enumerate(sorted(verts, key=lambda v: (sig[v], v)))}
    return tuple(sorted(tuple(sorted(rank[u] for u in bits_of(m))) for m in h.edges))


def betti_recursive(h: Hypergraph, field: Field = QQ,
                    cap: int = TRIANGULATED_CAP) -> BettiTable:
    """Full graded Betti table by the splitting recursion.

    Deleting an edge can drop a hypergraph of this class out of it:
    remove one of the four triples of the complete 3-uniform
    hypergraph on four vertices and no simplicial vertex is left.
    Splits therefore happen only while the instance at hand is still
    triangulated; a stuck branch is finished with the reduced
    edge-subset complex instead, which is where ``field`` enters.
    """
    if h.n > cap:
        raise SizeCapExceeded(f"{h.n} vertices exceeds recursion cap {cap}")
    require_special_class(h)
    if not is_triangulated(h, cap=cap):
        raise NotTriangulated("the hypergraph admits no simplicial elimination order")
    memo: dict[tuple, dict[tuple[int, int], int]] = {}

    def worker(g: Hypergraph) -> dict[tuple[int, int], int]:
        if g.m == 0:
            return {(0, 0): 1}
        key = canonical_key(g)
        got = memo.get(key)
        if got is not None:
            return got
        if g.m == 1:
            out = {(0, 0): 1, (1, g.edges[0].bit_count()): 1}
        elif is_triangulated(g, cap=cap):
            dec = split(g)
            out = dict(worker(dec.h1))
            below = worker(dec.h2)
            for (i2, j2), v in below.items():
                for ell in range(dec.t + 1):
                    pos = (i2 + 1 + ell, j2 + dec.d + ell)
                    out[pos] = out.get(pos, 0) + comb(dec.t, ell) * v
        else:
            out = dict(betti_via_taylor(g, field).entries)
        memo[key] = out
        return out

    return BettiTable(worker(h), field, h.n)


# ---------------------------------------------------------------------------
# instance-level verification of the supporting facts


def verify_matching_persistence(h: Hypergraph, x: int, s: int) -> int:
    """Families of the deletion keep their class in the full hypergraph.

    With x simplicial and s an edge through it, every induced matching
    of H minus that edge stays an induced matching of H, and likewise
    for self disjoint families. Exhaustive over all families of the
    deletion; returns how many were checked.
    """
    if not is_simplicial_vertex(h, x):
        raise NotSimplicial(f"vertex {h.labels[x]} is not simplicial")
    if not h.edge_mask(s) >> x & 1:
        raise ValidationError(f"edge {s} does not contain vertex {h.labels[x]}")
    h1 = delete_edge(h, s)
    back = {e - (e > s): e for e in range(h.m) if e != s}
    checked = 0
    for r in range(h1.m + 1):
        for fam1 in itertools.combinations(range(h1.m), r):
            cls1 = classify(h1, fam1)
            if not (cls1.induced or cls1.self_disjoint):
                continue
            fam = tuple(sorted(back[e] for e in fam1))
            cls = classify(h, fam)
            if cls1.induced and not cls.induced:
                raise ViolationFound(
                    "matching-persistence",
                    f"induced matching {fam} of the deletion breaks in the full hypergraph",
                    instance=h)
            if cls1.self_disjoint and not cls.self_disjoint:
                raise ViolationFound(
                    "matching-persistence",
                    f"self disjoint family {fam} of the deletion breaks in the full hypergraph",
                    instance=h)
            checked += 1
    return checked


def verify_split_extension(h: Hypergraph, dec: SplittingDecomposition) -> int:
    """Self disjoint families below the split extend across it.

    Each self disjoint family of H2 of type (i, j), joined with the
    split edge and the chosen neighbor edges, must be self disjoint in
    H of type (i + 1 + t, j + d + t). Returns how many were checked.
    """
    back2 = {new: old for old, new in dec.h2_edge_map.items()}
    add = (dec.s, *dec.neighbor_edges)
    checked = 0
    for r in range(dec.h2.m + 1):
        for fam2 in itertools.combinations(range(dec.h2.m), r):
            cls2 = classify(dec.h2, fam2)
            if not cls2.self_disjoint:
                continue
            fam = tuple(sorted([back2[e] for e in fam2] + list(add)))
            cls = classify(h, fam)
            want = (cls2.i + 1 + dec.t, cls2.j + dec.d + dec.t)
            if not cls.self_disjoint or (cls.i, cls.j) != want:
                raise ViolationFound(
                    "split-extension",
                    f"family {fam} should be self disjoint of type {want}, "
                    f"got ({cls.i},{cls.j}) disjoint={cls.self_disjoint}",
                    instance=h)
            checked += 1
    return checked


def verify_disjointness_characterization(h: Hypergraph, field: Field = QQ,
                                         cap: int = TRIANGULATED_CAP) -> dict:
    """Nonzero table positions equal the self disjoint types, and the
    homological invariants equal the disjointness invariants."""
    table = betti_recursive(h, field, cap)
    sv = survey(h)
    sd_types = sv.types["self_disjoint"]
    if set(table.entries) != sd_types:
        raise ViolationFound(
            "disjoint-characterization",
            f"nonzero positions {sorted(table.entries)} differ from "
            f"self disjoint types {sorted(sd_types)}",
            instance=h)
    pd, reg = table.projective_dimension(), table.regularity()
    d1, d2 = sv.maxima["d1"].value, sv.maxima["d2"].value
    d1p, d2p = sv.maxima["d1_prime"].value, sv.maxima["d2_prime"].value
    if not pd == d1 == d2:
        raise ViolationFound(
            "disjoint-characterization",
            f"pd {pd} vs disjointness sizes {d1}, {d2}", instance=h)
    if not reg == d1p == d2p:
        raise ViolationFound(
            "disjoint-characterization",
            f"reg {reg} vs disjointness spreads {d1p}, {d2p}", instance=h)
    return {
        "entries": {f"{i},{j}": v for (i, j), v in sorted(table.entries.items())},
        "pd": pd,
        "reg": reg,
        "d1": d1,
        "d2": d2,
        "d1_prime": d1p,
        "d2_prime": d2p,
    }
