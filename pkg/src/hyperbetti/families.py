"""Edge-family classes and the matching-type invariants built from them.

A family is a tuple of distinct edge indices. Its type is (i, j) where
i is the family size and j the number of vertices covered. All classes
except the ordered one are properties of the index set; the ordered
class depends on the tuple order.

Class definitions, for a family S_1, ..., S_i inside a hypergraph H:

* matching: members pairwise disjoint.
* semi-induced matching: no edge of H outside the family is contained
  in the union of the family.
* reduced (used as a building block, not a named class): no member is
  contained in the union of the other members.
* self semi-induced matching: semi-induced and reduced.
* self-contained semi-induced matching: reduced, and every outside edge
  S contained in the union admits a member S_k with
  S_k included in S together with the union of the other members.
* induced matching: matching and semi-induced.
* self disjoint set: reduced, with an induced matching S_0 inside the
  family such that every member outside S_0 differs from some member of
  S_0 by exactly one vertex.
* self semi-disjoint set: same with S_0 only semi-induced.
* self ordered set: a singleton, or reduced and such that every outside
  edge S admits a position k below the last with S_k contained in S
  together with the members after position k.

The empty family vacuously belongs to every unordered class above and
is the degenerate witness of value 0 for each invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .bitsets import bits_of, is_subset, submasks_desc_size, tuple_of
from .errors import (
    BudgetExceeded,
    NotAGraph,
    NotSelfDisjoint,
    NotStronglyDisjoint,
    ValidationError,
    ViolationFound,
)
from .hypergraph import Hypergraph, uniformity_profile

FAMILY_BUDGET = 16


# ---------------------------------------------------------------------------
# single-family classification


@dataclass(frozen=True)
class FamilyClassification:
    family: tuple[int, ...]
    i: int
    j: int
    matching: bool
    semi_induced: bool
    reduced: bool
    self_semi_induced: bool
    self_contained: bool
    induced: bool
    self_disjoint: bool
    self_disjoint_witness: tuple[int, ...] | None
    self_semi_disjoint: bool
    self_semi_disjoint_witness: tuple[int, ...] | None
    self_ordered: bool


def _validate_family(h: Hypergraph, fam) -> tuple[int, ...]:
    fam = tuple(fam)
    for s in fam:
        h.edge_mask(s)
    if len(set(fam)) != len(fam):
        raise ValidationError(f"family {fam} repeats an edge index")
    return fam


def _is_reduced(masks: list[int]) -> bool:
    """No member inside the union of the others."""
    for k, mk in enumerate(masks):
        others = 0
        for t, mt in enumerate(masks):
            if t != k:
                others |= mt
        if is_subset(mk, others):
            return False
    return True


def _is_semi_induced(h: Hypergraph, fam_set: set[int], union: int) -> bool:
    for s, mask in enumerate(h.edges):
        if s not in fam_set and is_subset(mask, union):
            return False
    return True


def _near_one(a: int, b: int) -> bool:
    return (a & ~b).bit_count() == 1


def classify(h: Hypergraph, fam) -> FamilyClassification:
    """Evaluate every family class on ``fam`` (order matters only for the
    ordered class, which is tested in the given order)."""
    fam = _validate_family(h, fam)
    masks = [h.edges[s] for s in fam]
    union = 0
    for mask in masks:
        union |= mask
    i, j = len(fam), union.bit_count()
    fam_set = set(fam)
    reduced = _is_reduced(masks)
    matching = sum(mask.bit_count() for mask in masks) == j
    semi = _is_semi_induced(h, fam_set, union)
    ssi = reduced and semi
    induced = matching and semi
    contained = reduced and _self_contained_holds(h, fam, masks, union)
    sd_w = _disjoint_witness(h, fam, masks, require_matching=True) if reduced else None
    ssd_w = _disjoint_witness(h, fam, masks, require_matching=False) if reduced else None
    return FamilyClassification(
        family=fam,
        i=i,
        j=j,
        matching=matching,
        semi_induced=semi,
        reduced=reduced,
        self_semi_induced=ssi,
        self_contained=contained,
        induced=induced,
        self_disjoint=sd_w is not None,
        self_disjoint_witness=sd_w,
        self_semi_disjoint=ssd_w is not None,
        self_semi_disjoint_witness=ssd_w,
        self_ordered=is_self_ordered(h, fam),
    )


def _self_contained_holds(h: Hypergraph, fam, masks, union) -> bool:
    fam_set = set(fam)
    total = len(masks)
    others = []
    for k in range(total):
        u = 0
        for t in range(total):
            if t != k:
                u |= masks[t]
        others.append(u)
    for s, mask in enumerate(h.edges):
        if s in fam_set or not is_subset(mask, union):
            continue
        if not any(is_subset(masks[k], mask | others[k]) for k in range(total)):
            return False
    return True


def _disjoint_witness(h: Hypergraph, fam, masks, require_matching: bool) -> tuple[int, ...] | None:
    """Witness sub-family S_0 for the (semi-)disjoint classes, or None.

    Candidates are scanned in decreasing size so the full family, which
    works whenever it is itself a (semi-)induced matching, exits first.
    The family is assumed reduced.
    """
    if not fam:
        return ()
    by_pos = list(fam)
    full = (1 << len(fam)) - 1
    for sub in submasks_desc_size(full):
        chosen = [by_pos[p] for p in bits_of(sub)]
        union = 0
        for s in chosen:
            union |= h.edges[s]
        if require_matching and sum(h.edges[s].bit_count() for s in chosen) != union.bit_count():
            continue
        if not _is_semi_induced(h, set(chosen), union):
            continue
        rest = [by_pos[p] for p in bits_of(full ^ sub)]
        if all(any(_near_one(h.edges[s], h.edges[k]) for k in chosen) for s in rest):
            return tuple(chosen)
    return None


def is_self_ordered(h: Hypergraph, fam) -> bool:
    """Test the ordered class in exactly the order given."""
    fam = _validate_family(h, fam)
    i = len(fam)
    if i == 1:
        return True
    if i == 0:
        return h.m == 0
    masks = [h.edges[s] for s in fam]
    if not _is_reduced(masks):
        return False
    suffix = [0] * (i + 1)
    for k in range(i - 1, -1, -1):
        suffix[k] = suffix[k + 1] | masks[k]
    fam_set = set(fam)
    for s, mask in enumerate(h.edges):
        if s in fam_set:
            continue
        if not any(is_subset(masks[k], mask | suffix[k + 1]) for k in range(i - 1)):
            return False
    return True


# ---------------------------------------------------------------------------
# exhaustive survey of all families


class _Max:
    """Running maximum with the first witness kept on ties.

    Subsets are visited in lexicographic order on their sorted index
    tuples, so the kept witness is the lexicographically least optimum.
    """

    __slots__ = ("value", "witness")

    def __init__(self):
        self.value = 0
        self.witness: tuple[int, ...] = ()

    def offer(self, value: int, witness: tuple[int, ...]) -> None:
        if value > self.value:
            self.value = value
            self.witness = witness


@dataclass
class FamilySurvey:
    """Aggregated facts about every edge family of a hypergraph."""

    h: Hypergraph
    types: dict[str, set[tuple[int, int]]]
    counts_ssi: dict[tuple[int, int], int]
    counts_scsi: dict[tuple[int, int], int]
    counts_induced_uniform: dict[tuple[int, int], int]  # (t, i) -> count
    hyp1_violations: set[tuple[int, int]]
    hyp2_violations: set[tuple[int, int]]
    maxima: dict[str, _Max]
    maxima_a_t: dict[int, _Max] = dc_field(default_factory=dict)

    def families_all_reduced(self, i: int, j: int) -> bool:
        """Every size-i family covering j vertices is reduced."""
        return (i, j) not in self.hyp1_violations

    def absorbing_families_stay_reduced(self, i: int, j: int) -> bool:
        """No family of i+1 edges with an absorbed member and union size j
        has a second absorbed member."""
        return (i, j) not in self.hyp2_violations


def survey(h: Hypergraph, budget: int = FAMILY_BUDGET) -> FamilySurvey:
    """Classify every family of edges in one sweep.

    Raises BudgetExceeded when the hypergraph has more than ``budget``
    edges; the sweep is exponential in the edge count by design.
    """
    m = h.m
    if m > budget:
        raise BudgetExceeded(f"{m} edges exceeds family enumeration budget {budget}")
    masks = list(h.edges)
    sizes = [mask.bit_count() for mask in masks]
    full = (1 << m) - 1

    union = [0] * (1 << m)
    size_sum = [0] * (1 << m)
    low_index = {1 << k: k for k in range(m)}
    for bits in range(1, 1 << m):
        low = bits & -bits
        union[bits] = union[bits ^ low] | masks[low_index[low]]
        size_sum[bits] = size_sum[bits ^ low] + sizes[low_index[low]]

    near_mask = [0] * m
    for a in range(m):
        for b in range(m):
            if a != b and _near_one(masks[a], masks[b]):
                near_mask[a] |= 1 << b

    kinds = ("matching", "induced", "semi_induced", "self_semi_induced",
             "self_contained", "self_disjoint", "self_semi_disjoint", "self_ordered")
    types: dict[str, set[tuple[int, int]]] = {k: {(0, 0)} for k in kinds}
    if m > 0:
        types["self_ordered"] = set()
    counts_ssi = {(0, 0): 1}
    counts_scsi = {(0, 0): 1}
    counts_induced_uniform: dict[tuple[int, int], int] = {}
    hyp1_violations: set[tuple[int, int]] = set()
    hyp2_violations: set[tuple[int, int]] = set()
    maxima = {name: _Max() for name in
              ("m", "a", "b", "b_prime", "c", "c_prime", "d1", "d2",
               "d1_prime", "d2_prime", "e")}
    a_t: dict[int, _Max] = {}

    def subfamily_semi_induced(sub_bits: int) -> bool:
        u = union[sub_bits]
        for s in range(m):
            if not sub_bits >> s & 1 and is_subset(masks[s], u):
                return False
        return True

    for bits in _subsets_lex(m):
        members = list(bits_of(bits))
        i = len(members)
        u = union[bits]
        j = u.bit_count()
        fam = tuple(members)

        absorbed = [k for k in members if is_subset(masks[k], union[bits ^ (1 << k)])]
        reduced = not absorbed
        if not reduced:
            hyp1_violations.add((i, j))
        if len(absorbed) >= 2:
            hyp2_violations.add((i - 1, j))

        matching = size_sum[bits] == j
        semi = subfamily_semi_induced(bits)

        if matching:
            types["matching"].add((i, j))
            maxima["m"].offer(i, fam)
        if semi:
            types["semi_induced"].add((i, j))
        if matching and semi:
            types["induced"].add((i, j))
            maxima["a"].offer(i, fam)
            t = sizes[members[0]]
            if all(sizes[k] == t for k in members):
                counts_induced_uniform[t, i] = counts_induced_uniform.get((t, i), 0) + 1
                a_t.setdefault(t, _Max()).offer(i, fam)
        if not reduced:
            continue

        if semi:
            types["self_semi_induced"].add((i, j))
            counts_ssi[i, j] = counts_ssi.get((i, j), 0) + 1
            maxima["b"].offer(i, fam)
            maxima["b_prime"].offer(j - i, fam)

        others_union = [union[bits ^ (1 << k)] for k in members]
        contained = True
        for s in range(m):
            if bits >> s & 1 or not is_subset(masks[s], u):
                continue
            if not any(is_subset(masks[members[k]], masks[s] | others_union[k]) for k in range(i)):
                contained = False
                break
        if contained:
            types["self_contained"].add((i, j))
            counts_scsi[i, j] = counts_scsi.get((i, j), 0) + 1
            maxima["e"].offer(i, fam)

        ssd = sd = False
        for sub in submasks_desc_size(bits):
            if not ssd and subfamily_semi_induced(sub):
                rest = bits ^ sub
                if all(near_mask[k] & sub for k in bits_of(rest)):
                    ssd = True
                    if size_sum[sub] == union[sub].bit_count():
                        sd = True
            if not sd and size_sum[sub] == union[sub].bit_count() and subfamily_semi_induced(sub):
                rest = bits ^ sub
                if all(near_mask[k] & sub for k in bits_of(rest)):
                    sd = True
            if ssd and sd:
                break
        if ssd:
            types["self_semi_disjoint"].add((i, j))
            maxima["d2"].offer(i, fam)
            maxima["d2_prime"].offer(j - i, fam)
        if sd:
            types["self_disjoint"].add((i, j))
            maxima["d1"].offer(i, fam)
            maxima["d1_prime"].offer(j - i, fam)

        if i == 1 or _self_ordered_feasible(masks, union, bits, full):
            types["self_ordered"].add((i, j))
            maxima["c"].offer(i, fam)
            maxima["c_prime"].offer(j - i, fam)

    return FamilySurvey(
        h=h,
        types=types,
        counts_ssi=counts_ssi,
        counts_scsi=counts_scsi,
        counts_induced_uniform=counts_induced_uniform,
        hyp1_violations=hyp1_violations,
        hyp2_violations=hyp2_violations,
        maxima=maxima,
        maxima_a_t=a_t,
    )


def _subsets_lex(m: int):
    """Nonzero edge-index bitmasks in lexicographic order of their sorted
    index tuples: (0), (0,1), (0,1,2), ..., (1), (1,2), ..."""

    def grow(bits: int, start: int):
        for k in range(start, m):
            nxt = bits | (1 << k)
            yield nxt
            yield from grow(nxt, k + 1)

    yield from grow(0, 0)


def _self_ordered_feasible(masks, union, bits: int, full: int) -> bool:
    """Whether some ordering of the reduced family ``bits`` satisfies the
    outside-edge condition of the ordered class.

    Builds orderings back to front; a state is (edges still to place,
    outside edges still lacking a witness position), and the union of
    already placed edges depends only on the set, so states memoize.
    """
    outside0 = full & ~bits
    memo: dict[tuple[int, int], bool] = {}

    def feasible(rem: int, unwit: int) -> bool:
        if not unwit:
            return True
        if not rem:
            return False
        key = (rem, unwit)
        hit = memo.get(key)
        if hit is not None:
            return hit
        placed_union = union[bits ^ rem]
        result = False
        r = rem
        while r:
            low = r & -r
            r ^= low
            e_mask = masks[low.bit_length() - 1]
            new_unwit = unwit
            w = unwit
            while w:
                lw = w & -w
                w ^= lw
                if is_subset(e_mask, masks[lw.bit_length() - 1] | placed_union):
                    new_unwit ^= lw
            if feasible(rem ^ low, new_unwit):
                result = True
                break
        memo[key] = result
        return result

    return feasible(bits, outside0)


def self_ordered_witness(h: Hypergraph, fam) -> tuple[int, ...] | None:
    """Lexicographically least ordering of ``fam`` in the ordered class."""
    fam = tuple(sorted(_validate_family(h, fam)))
    for perm in itertools.permutations(fam):
        if is_self_ordered(h, perm):
            return perm
    return None


# ---------------------------------------------------------------------------
# invariant report


@dataclass(frozen=True)
class InvariantReport:
    """The thirteen matching-type invariants with witnesses.

    Bouquet values ``d_g`` and ``d_g_prime`` are filled for graphs only.
    Every value is 0 with an empty witness when no nonempty family of
    the class exists.
    """

    matching_number: int
    induced_matching_number: int
    induced_matching_by_size: dict[int, int]
    self_semi_induced_max: int
    self_semi_induced_spread: int
    self_ordered_max: int
    self_ordered_spread: int
    self_disjoint_max: int
    self_semi_disjoint_max: int
    self_disjoint_spread: int
    self_semi_disjoint_spread: int
    self_contained_max: int
    witnesses: dict[str, tuple[int, ...]]
    d_g: int | None = None
    d_g_prime: int | None = None
    bouquet_witness: tuple | None = None

    def as_dict(self) -> dict:
        out = {
            "m": self.matching_number,
            "a": self.induced_matching_number,
            "a_t": dict(self.induced_matching_by_size),
            "b": self.self_semi_induced_max,
            "b_prime": self.self_semi_induced_spread,
            "c": self.self_ordered_max,
            "c_prime": self.self_ordered_spread,
            "d1": self.self_disjoint_max,
            "d2": self.self_semi_disjoint_max,
            "d1_prime": self.self_disjoint_spread,
            "d2_prime": self.self_semi_disjoint_spread,
            "e": self.self_contained_max,
        }
        if self.d_g is not None:
            out["d_g"] = self.d_g
            out["d_g_prime"] = self.d_g_prime
        return out


def compute_invariants(h: Hypergraph, budget: int = FAMILY_BUDGET,
                       precomputed: FamilySurvey | None = None) -> InvariantReport:
    """All matching-type invariants of ``h`` by exhaustive enumeration."""
    sv = precomputed if precomputed is not None else survey(h, budget)
    mx = sv.maxima
    witnesses = {name: mx[name].witness for name in mx}
    a_t = {t: tracker.value for t, tracker in sv.maxima_a_t.items()}
    for t, tracker in sv.maxima_a_t.items():
        witnesses[f"a_{t}"] = tracker.witness

    c_val = mx["c"].value
    if c_val > 1:
        order = self_ordered_witness(h, mx["c"].witness)
        if order is not None:
            witnesses["c"] = order
    if mx["c_prime"].value > 1 and len(mx["c_prime"].witness) > 1:
        order = self_ordered_witness(h, mx["c_prime"].witness)
        if order is not None:
            witnesses["c_prime"] = order

    d_g = d_g_prime = None
    bouquet_witness = None
    prof = uniformity_profile(h)
    if prof.d == 2 or h.m == 0:
        rep = bouquet_invariants(h)
        d_g, d_g_prime = rep.total_flowers, rep.bouquet_count
        bouquet_witness = rep.witness_flowers
        witnesses["d_g"] = _stem_family(h, rep.witness_flowers)
        witnesses["d_g_prime"] = _stem_family(h, rep.witness_count)

    return InvariantReport(
        matching_number=mx["m"].value,
        induced_matching_number=mx["a"].value,
        induced_matching_by_size=a_t,
        self_semi_induced_max=mx["b"].value,
        self_semi_induced_spread=mx["b_prime"].value,
        self_ordered_max=mx["c"].value,
        self_ordered_spread=mx["c_prime"].value,
        self_disjoint_max=mx["d1"].value,
        self_semi_disjoint_max=mx["d2"].value,
        self_disjoint_spread=mx["d1_prime"].value,
        self_semi_disjoint_spread=mx["d2_prime"].value,
        self_contained_max=mx["e"].value,
        witnesses=witnesses,
        d_g=d_g,
        d_g_prime=d_g_prime,
        bouquet_witness=bouquet_witness,
    )


def _stem_family(h: Hypergraph, bouquets) -> tuple[int, ...]:
    index = {mask: s for s, mask in enumerate(h.edges)}
    fam = []
    for b in bouquets:
        for a, c in b.stems():
            fam.append(index[(1 << a) | (1 << c)])
    return tuple(sorted(fam))


# ---------------------------------------------------------------------------
# bouquets in graphs


@dataclass(frozen=True)
class Bouquet:
    """A root vertex with a nonempty fan of flowers adjacent to it."""

    root: int
    flowers: tuple[int, ...]

    def vertex_mask(self) -> int:
        mask = 1 << self.root
        for f in self.flowers:
            mask |= 1 << f
        return mask

    def stems(self) -> list[tuple[int, int]]:
        return [(min(self.root, f), max(self.root, f)) for f in self.flowers]


@dataclass(frozen=True)
class BouquetReport:
    total_flowers: int
    bouquet_count: int
    witness_flowers: tuple[Bouquet, ...]
    witness_count: tuple[Bouquet, ...]


def _require_graph(h: Hypergraph) -> None:
    if any(mask.bit_count() != 2 for mask in h.edges):
        raise NotAGraph("bouquets are defined for graphs (all edges of size 2)")


def bouquet_invariants(h: Hypergraph) -> BouquetReport:
    """Extremal strongly disjoint bouquet sets of a graph.

    A set of bouquets is strongly disjoint when the bouquets are
    pairwise vertex disjoint and one stem can be chosen from each so the
    chosen stems form an induced matching. The report carries the best
    total flower count and the best bouquet count, with witnesses.

    Every strongly disjoint set arises from an induced matching (the
    chosen stems) by orienting each stem and greedily assigning every
    remaining vertex adjacent to a root as an extra flower of one such
    root, so the search below is exhaustive.
    """
    _require_graph(h)
    adj = [0] * h.n
    for mask in h.edges:
        a, b = tuple_of(mask)
        adj[a] |= 1 << b
        adj[b] |= 1 << a

    best_total = _Max()
    best_count = _Max()
    witness_total: tuple[Bouquet, ...] = ()
    witness_count: tuple[Bouquet, ...] = ()

    matchings = _induced_matchings(h)
    for matching in matchings:
        size = len(matching)
        covered = 0
        for s in matching:
            covered |= h.edges[s]
        if size > best_count.value:
            best_count.offer(size, matching)
            witness_count = tuple(
                Bouquet(min(h.edge_vertices(s)), (max(h.edge_vertices(s)),)) for s in matching
            )
        endpoints = [h.edge_vertices(s) for s in matching]
        for orient in range(1 << size):
            roots = [endpoints[k][orient >> k & 1] for k in range(size)]
            flowers = {k: [endpoints[k][1 - (orient >> k & 1)]] for k in range(size)}
            total = size
            root_union = 0
            for r in roots:
                root_union |= 1 << r
            for v in range(h.n):
                if covered >> v & 1:
                    continue
                homes = [k for k, r in enumerate(roots) if adj[r] >> v & 1]
                if homes:
                    flowers[homes[0]].append(v)
                    total += 1
            if total > best_total.value:
                best_total.offer(total, matching)
                witness_total = tuple(
                    Bouquet(roots[k], tuple(sorted(flowers[k]))) for k in range(size)
                )
    return BouquetReport(best_total.value, best_count.value, witness_total, witness_count)


def _induced_matchings(h: Hypergraph) -> list[tuple[int, ...]]:
    """All induced matchings of ``h`` as sorted index tuples (empty omitted)."""
    out: list[tuple[int, ...]] = []

    def grow(current: list[int], covered: int, start: int):
        for s in range(start, h.m):
            mask = h.edges[s]
            if mask & covered:
                continue
            u = covered | mask
            chosen = current + [s]
            if all(t in chosen or not is_subset(h.edges[t], u) for t in range(h.m)):
                out.append(tuple(chosen))
            grow(chosen, u, s + 1)

    grow([], 0, 0)
    return out


def family_to_bouquets(h: Hypergraph, fam) -> tuple[Bouquet, ...]:
    """Decompose a self disjoint family of graph edges into a strongly
    disjoint set of bouquets whose stems are exactly the family."""
    _require_graph(h)
    fam = _validate_family(h, fam)
    cls = classify(h, fam)
    if not cls.self_disjoint:
        raise NotSelfDisjoint(f"family {fam} is not self disjoint")
    # vertex-connected components of the family; each must be a star
    comps: list[set[int]] = []
    for s in sorted(fam):
        touching = [c for c in comps if any(h.edges[s] & h.edges[t] for t in c)]
        merged = {s}
        for c in touching:
            merged |= c
            comps.remove(c)
        comps.append(merged)
    bouquets = []
    for comp_set in comps:
        comp = sorted(comp_set)
        if len(comp) == 1:
            a, b = h.edge_vertices(comp[0])
            bouquets.append(Bouquet(a, (b,)))
            continue
        common = h.edges[comp[0]]
        for s in comp[1:]:
            common &= h.edges[s]
        if common.bit_count() != 1:
            raise NotSelfDisjoint(f"component {comp} of family {fam} is not a star")
        root = common.bit_length() - 1
        petals = tuple(sorted((h.edges[s] & ~common).bit_length() - 1 for s in comp))
        bouquets.append(Bouquet(root, petals))
    result = tuple(sorted(bouquets, key=lambda b: b.root))
    if _stem_selection(h, result) is None:
        raise ViolationFound(
            "bouquet-decomposition",
            f"self disjoint family {fam} admits no induced stem selection",
            instance=h,
        )
    return result


def _stem_selection(h: Hypergraph, bouquets: tuple[Bouquet, ...]) -> list[int] | None:
    """One stem index per bouquet forming an induced matching, if any."""
    edge_index = {mask: s for s, mask in enumerate(h.edges)}
    options = []
    for b in bouquets:
        opts = []
        for a, c in b.stems():
            s = edge_index.get((1 << a) | (1 << c))
            if s is None:
                raise NotStronglyDisjoint(f"stem {(a, c)} of bouquet {b} is not an edge")
            opts.append(s)
        options.append(opts)
    for combo in itertools.product(*options):
        chosen = list(combo)
        u = 0
        for s in chosen:
            u |= h.edges[s]
        if sum(h.edges[s].bit_count() for s in chosen) != u.bit_count():
            continue
        if all(t in chosen or not is_subset(h.edges[t], u) for t in range(h.m)):
            return chosen
    return None


def bouquets_to_family(h: Hypergraph, bouquets) -> tuple[int, ...]:
    """Edge-index family of all stems of a strongly disjoint bouquet set."""
    _require_graph(h)
    bouquets = tuple(bouquets)
    seen = 0
    for b in bouquets:
        if not b.flowers:
            raise NotStronglyDisjoint(f"bouquet at {b.root} has no flowers")
        vm = b.vertex_mask()
        if vm.bit_count() != len(b.flowers) + 1:
            raise NotStronglyDisjoint(f"bouquet at {b.root} repeats a vertex")
        if vm & seen:
            raise NotStronglyDisjoint("bouquets share a vertex")
        seen |= vm
    if _stem_selection(h, bouquets) is None:
        raise NotStronglyDisjoint("no stem choice forms an induced matching")
    edge_index = {mask: s for s, mask in enumerate(h.edges)}
    fam = []
    for b in bouquets:
        for a, c in b.stems():
            fam.append(edge_index[(1 << a) | (1 << c)])
    return tuple(sorted(fam))
