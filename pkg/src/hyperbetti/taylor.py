"""Betti numbers from the reduced edge-subset complex, plus symbol
admissibility and nonvanishing certificates.

For a hypergraph with edges S_1, ..., S_m, take a basis symbol for each
subset of edges; its degree is the size of the union. The reduced
boundary of a symbol drops, with alternating sign, exactly those
members contained in the union of the other members. Degree is
preserved, so the complex splits by degree and each graded Betti number
beta_{i,j} is the homology dimension of the (size i, degree j) slice.

A basis symbol lies in the kernel precisely when no member is absorbed
by the others ("reduced" below). The set B_{i,j} collects the reduced
basis symbols of the slice that are also outside the image from above;
under the two subset hypotheses checked here it bounds or equals
beta_{i,j}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bitsets import bits_of, is_subset
from .errors import BettiVanishes, BudgetExceeded, PremiseFails, ValidationError
from .families import classify, is_self_ordered, _validate_family
from .homology import BettiTable, betti_table
from .hypergraph import Hypergraph, induced_subhypergraph
from .linalg import QQ, Field, RowSpace

TAYLOR_BUDGET = 12


def chain_union(h: Hypergraph, chain) -> int:
    u = 0
    for s in chain:
        u |= h.edge_mask(s)
    return u


def chain_degree(h: Hypergraph, chain) -> int:
    return chain_union(h, chain).bit_count()


def in_kernel(h: Hypergraph, chain) -> bool:
    """Boundary of the basis symbol vanishes: no member absorbed."""
    chain = tuple(chain)
    masks = [h.edge_mask(s) for s in chain]
    for k in range(len(chain)):
        others = 0
        for t in range(len(chain)):
            if t != k:
                others |= masks[t]
        if is_subset(masks[k], others):
            return False
    return True


def reduced_boundary(h: Hypergraph, chain) -> list[tuple[int, tuple[int, ...]]]:
    """Signed faces of the reduced boundary of a basis symbol.

    Position k (1-based) is dropped with sign (-1)^k, and only when its
    member is contained in the union of the remaining members, so every
    face keeps the degree of the symbol.
    """
    chain = tuple(chain)
    if len(set(chain)) != len(chain) or list(chain) != sorted(chain):
        raise ValidationError(f"symbol {chain} must be strictly increasing")
    masks = [h.edge_mask(s) for s in chain]
    out = []
    for k in range(len(chain)):
        others = 0
        for t in range(len(chain)):
            if t != k:
                others |= masks[t]
        if is_subset(masks[k], others):
            sign = -1 if k % 2 == 0 else 1
            out.append((sign, chain[:k] + chain[k + 1 :]))
    return out


@dataclass
class TaylorAnalysis:
    """Per-slice data of the reduced complex of one hypergraph."""

    h: Hypergraph
    field: Field
    slices: dict[tuple[int, int], list[tuple[int, ...]]]
    boundary_rank: dict[tuple[int, int], int]
    image_into: dict[tuple[int, int], RowSpace]
    kernel_flags: dict[tuple[int, ...], bool]

    def betti(self, i: int, j: int) -> int:
        basis = self.slices.get((i, j), [])
        return len(basis) - self.boundary_rank.get((i, j), 0) - self.boundary_rank.get((i + 1, j), 0)

    def table(self) -> BettiTable:
        entries = {}
        for (i, j) in self.slices:
            v = self.betti(i, j)
            if v:
                entries[i, j] = v
        return BettiTable(entries, self.field, self.h.n)

    def b_set(self, i: int, j: int) -> list[tuple[int, ...]]:
        """Reduced basis symbols of the slice not hit from above."""
        basis = self.slices.get((i, j), [])
        index = {c: pos for pos, c in enumerate(basis)}
        image = self.image_into.get((i, j))
        out = []
        for c in basis:
            if not self.kernel_flags[c]:
                continue
            if image is not None and image.contains({index[c]: 1}):
                continue
            out.append(c)
        return out


def analyze_taylor(h: Hypergraph, field: Field = QQ, cap: int = TAYLOR_BUDGET) -> TaylorAnalysis:
    """Slice the reduced complex and echelonize every boundary once."""
    m = h.m
    if m > cap:
        raise BudgetExceeded(f"{m} edges exceeds symbol complex budget {cap}")
    slices: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    kernel_flags: dict[tuple[int, ...], bool] = {}
    for size in range(m + 1):
        for chain in itertools.combinations(range(m), size):
            key = (size, chain_degree(h, chain))
            slices.setdefault(key, []).append(chain)
            kernel_flags[chain] = in_kernel(h, chain)
    index: dict[tuple[int, ...], int] = {}
    for basis in slices.values():
        basis.sort()
        for pos, c in enumerate(basis):
            index[c] = pos
    boundary_rank: dict[tuple[int, int], int] = {}
    image_into: dict[tuple[int, int], RowSpace] = {}
    for (i, j), basis in sorted(slices.items()):
        if i == 0:
            continue
        space = RowSpace(field)
        for c in basis:
            row = {}
            for sign, face in reduced_boundary(h, c):
                row[index[face]] = sign
            if row:
                space.add(row)
        boundary_rank[i, j] = space.rank
        image_into[i - 1, j] = space
    return TaylorAnalysis(h, field, slices, boundary_rank, image_into, kernel_flags)


def betti_via_taylor(h: Hypergraph, field: Field = QQ, cap: int = TAYLOR_BUDGET) -> BettiTable:
    return analyze_taylor(h, field, cap).table()


def b_set(h: Hypergraph, i: int, j: int, field: Field = QQ, cap: int = TAYLOR_BUDGET):
    return analyze_taylor(h, field, cap).b_set(i, j)


# ---------------------------------------------------------------------------
# the two basis hypotheses


def all_families_reduced(h: Hypergraph, i: int, j: int) -> bool:
    """Every family of i edges covering j vertices is reduced.

    Under this hypothesis the reduced basis symbols of the slice span
    its homology, so beta_{i,j} is at most the size of B_{i,j}.
    """
    for chain in itertools.combinations(range(h.m), i):
        u = chain_union(h, chain)
        if u.bit_count() == j and not in_kernel(h, chain):
            return False
    return True


def absorbing_families_stay_reduced(h: Hypergraph, i: int, j: int) -> bool:
    """No family of i+1 edges with an absorbed member and union size j
    has a second absorbed member.

    Under this hypothesis the classes of B_{i,j} are independent, so
    beta_{i,j} is at least the size of B_{i,j}.
    """
    masks = h.edges
    for chain in itertools.combinations(range(h.m), i + 1):
        u = chain_union(h, chain)
        absorbed = 0
        for k in chain:
            others = 0
            for t in chain:
                if t != k:
                    others |= masks[t]
            if is_subset(masks[k], others):
                absorbed += 1
                if absorbed >= 2 and u.bit_count() == j:
                    return False
    return True


def basis_bounds(h: Hypergraph, i: int, j: int, field: Field = QQ,
                 analysis: TaylorAnalysis | None = None) -> dict:
    """Betti bounds from B_{i,j} where the hypotheses above apply."""
    an = analysis if analysis is not None else analyze_taylor(h, field)
    size = len(an.b_set(i, j))
    hyp_upper = all_families_reduced(h, i, j)
    hyp_lower = absorbing_families_stay_reduced(h, i, j)
    out = {
        "i": i,
        "j": j,
        "beta": an.betti(i, j),
        "b_size": size,
        "all_reduced": hyp_upper,
        "no_double_absorption": hyp_lower,
        "upper": size if hyp_upper else None,
        "lower": size if hyp_lower else None,
        "exact": size if hyp_upper and hyp_lower else None,
    }
    return out


# ---------------------------------------------------------------------------
# symbol admissibility


@dataclass(frozen=True)
class AdmissibilityConvention:
    """Resolution of the two readings of the admissibility condition.

    ``suffix_members_only`` unions only the symbol members from the
    probed position up; the alternative unions every edge whose
    ordering position lies in the closed interval. ``check_last``
    includes the final symbol position among the probed ones. The
    defaults give the classical construction, under which admissible
    symbols form a complex closed under taking subsymbols.
    """

    suffix_members_only: bool = True
    check_last: bool = True


CLASSICAL = AdmissibilityConvention()


def _ordering_masks(h: Hypergraph, ordering) -> list[int]:
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(h.m)):
        raise ValidationError(f"ordering {ordering} is not a permutation of 0..{h.m - 1}")
    return [h.edges[s] for s in ordering]


def is_l_admissible(h: Hypergraph, ordering, chain,
                    convention: AdmissibilityConvention = CLASSICAL) -> bool:
    """Admissibility of a symbol of ordering positions.

    ``chain`` lists positions into ``ordering`` in strictly increasing
    order. The symbol is admissible when for every probed position p of
    the chain, no edge ordered strictly before p is contained in the
    suffix union at p (see :class:`AdmissibilityConvention`).
    """
    masks = _ordering_masks(h, ordering)
    chain = tuple(chain)
    if list(chain) != sorted(set(chain)) or (chain and not (0 <= chain[0] and chain[-1] < h.m)):
        raise ValidationError(f"chain {chain} must be strictly increasing ordering positions")
    i = len(chain)
    probe_limit = i if convention.check_last else i - 1
    for t in range(probe_limit):
        p = chain[t]
        if convention.suffix_members_only:
            u = 0
            for k in range(t, i):
                u |= masks[chain[k]]
        else:
            u = 0
            for r in range(p, chain[-1] + 1):
                u |= masks[r]
        for q in range(p):
            if is_subset(masks[q], u):
                return False
    return True


def is_maximal_l_admissible(h: Hypergraph, ordering, chain,
                            convention: AdmissibilityConvention = CLASSICAL) -> bool:
    """No strictly larger admissible symbol contains ``chain``.

    Checked against every superset of positions, so the answer is the
    literal one under any convention, monotone or not.
    """
    if not is_l_admissible(h, ordering, chain, convention):
        return False
    chain = tuple(chain)
    rest = [p for p in range(h.m) if p not in chain]
    for size in range(1, len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            bigger = tuple(sorted(chain + extra))
            if is_l_admissible(h, ordering, bigger, convention):
                return False
    return True


# ---------------------------------------------------------------------------
# nonvanishing certificates


CERTIFICATE_KINDS = ("induced_matching", "semi_induced", "self_ordered", "self_semi_disjoint")


@dataclass(frozen=True)
class Certificate:
    """Claim that beta_{i,j} is nonzero, witnessed by a family.

    ``kind`` selects the premise: an induced matching, a self
    semi-induced matching (kind ``semi_induced``), a self ordered family
    in the order given, or a self semi-disjoint family.
    """

    kind: str
    family: tuple[int, ...]
    i: int
    j: int


@dataclass(frozen=True)
class CertificateVerdict:
    ok: bool
    beta: int
    detail: str


def certify_nonvanishing(h: Hypergraph, cert: Certificate, field: Field = QQ,
                         table: BettiTable | None = None) -> CertificateVerdict:
    """Re-validate a certificate's premise, then check the table entry.

    For the self semi-disjoint kind this also rebuilds the symbol that
    realizes the class: inside the restriction to the covered vertices,
    order the family complement of the witness first, all remaining
    edges next, and the witness last; the symbol on the family positions
    must then be maximal admissible.

    ``table`` short-circuits the entry lookup with a precomputed exact
    table; it must belong to ``h`` and ``field``.
    """
    if cert.kind not in CERTIFICATE_KINDS:
        raise ValidationError(f"unknown certificate kind {cert.kind!r}")
    fam = _validate_family(h, cert.family)
    union = chain_union(h, fam)
    i, j = len(fam), union.bit_count()
    if (i, j) != (cert.i, cert.j):
        raise PremiseFails(
            f"family {fam} has type ({i},{j}), certificate claims ({cert.i},{cert.j})", instance=h)
    cls = classify(h, fam)
    if cert.kind == "induced_matching" and not cls.induced:
        raise PremiseFails(f"family {fam} is not an induced matching", instance=h)
    if cert.kind == "semi_induced" and not cls.self_semi_induced:
        raise PremiseFails(f"family {fam} is not a self semi-induced matching", instance=h)
    if cert.kind == "self_ordered" and not is_self_ordered(h, fam):
        raise PremiseFails(f"family {fam} is not self ordered in the given order", instance=h)
    detail = f"{cert.kind} family of type ({i},{j})"
    if cert.kind == "self_semi_disjoint":
        if not cls.self_semi_disjoint:
            raise PremiseFails(f"family {fam} is not self semi-disjoint", instance=h)
        witness = cls.self_semi_disjoint_witness
        sub, edge_map = induced_subhypergraph(h, list(bits_of(union)))
        fam_sub = sorted(edge_map[s] for s in fam)
        witness_sub = sorted(edge_map[s] for s in witness)
        lead = [s for s in fam_sub if s not in witness_sub]
        middle = [s for s in range(sub.m) if s not in fam_sub]
        ordering = tuple(lead + middle + witness_sub)
        positions = tuple(sorted(ordering.index(s) for s in fam_sub))
        if not is_maximal_l_admissible(sub, ordering, positions):
            raise PremiseFails(
                f"symbol of family {fam} is not maximal admissible under the witness ordering",
                instance=h)
        detail += f", witness {tuple(witness)} checked maximal admissible"
    beta = (table if table is not None else betti_table(h, field)).get(i, j)
    if beta == 0:
        raise BettiVanishes(
            f"certificate {cert.kind} {fam}: table entry ({i},{j}) vanishes over {field}", instance=h)
    return CertificateVerdict(True, beta, detail)
