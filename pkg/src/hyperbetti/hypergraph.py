"""Simple hypergraphs with labelled vertices and incomparable edges.

A hypergraph here is a finite vertex set together with a family of
edges, each an unordered set of at least two vertices, no edge contained
in another. Vertices carry string labels but all computation runs on
dense integer ids packed into bitmasks. Edge order is preserved exactly
as given at construction; several downstream constructions (symbol
orderings, witness selection) depend on that order being stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import bits_of, is_subset, mask_of, tuple_of
from .errors import (
    ComparableEdges,
    DuplicateEdge,
    EdgeTooSmall,
    IndexOutOfRange,
    NotUniform,
    SizeCapExceeded,
    UnknownVertex,
    ValidationError,
)

TRIANGULATED_CAP = 16


@dataclass(frozen=True)
class Hypergraph:
    """Immutable simple hypergraph.

    Attributes
    ----------
    labels : tuple of str
        Vertex labels; the dense id of a vertex is its position here.
    edges : tuple of int
        Edge bitmasks over vertex ids, in input order.
    """

    labels: tuple[str, ...]
    edges: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_vertices(self, s: int) -> tuple[int, ...]:
        """Sorted vertex ids of edge ``s``."""
        return tuple_of(self.edge_mask(s))

    def edge_mask(self, s: int) -> int:
        if not 0 <= s < self.m:
            raise IndexOutOfRange(f"edge index {s} out of range for {self.m} edges")
        return self.edges[s]

    def edge_labels(self, s: int) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in self.edge_vertices(s))

    def check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"vertex id {x} out of range for {self.n} vertices")

    def __repr__(self) -> str:
        es = ", ".join("{" + ",".join(self.edge_labels(s)) + "}" for s in range(self.m))
        return f"Hypergraph(n={self.n}, edges=[{es}])"


def build(labels, edges) -> Hypergraph:
    """Validate and construct a hypergraph.

    Parameters
    ----------
    labels : iterable of str
        Distinct vertex labels. Position defines the dense id.
    edges : iterable of iterables of int
        Each edge as a collection of vertex ids; order of edges is kept.

    Raises
    ------
    UnknownVertex, EdgeTooSmall, DuplicateEdge, ComparableEdges
        When the input is not a simple hypergraph.
    """
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("vertex labels must be distinct")
    n = len(labels)
    masks: list[int] = []
    for pos, edge in enumerate(edges):
        ids = list(edge)
        for v in ids:
            if not isinstance(v, int) or not 0 <= v < n:
                raise UnknownVertex(f"edge {pos}: vertex id {v!r} not in 0..{n - 1}")
        mask = mask_of(ids)
        if mask.bit_count() < 2:
            raise EdgeTooSmall(f"edge {pos} has {mask.bit_count()} distinct vertices, need at least 2")
        if mask.bit_count() != len(ids):
            raise EdgeTooSmall(f"edge {pos} repeats a vertex")
        masks.append(mask)
    for a in range(len(masks)):
        for b in range(a + 1, len(masks)):
            if masks[a] == masks[b]:
                raise DuplicateEdge(f"edges {a} and {b} are equal")
            if is_subset(masks[a], masks[b]) or is_subset(masks[b], masks[a]):
                raise ComparableEdges(f"edges {a} and {b} are comparable under inclusion")
    return Hypergraph(labels, tuple(masks))


def from_edge_labels(edges: list[list[str]]) -> Hypergraph:
    """Build from label lists; vertices are numbered in order of first use."""
    labels: list[str] = []
    index: dict[str, int] = {}
    id_edges = []
    for edge in edges:
        ids = []
        for lab in edge:
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            ids.append(index[lab])
        id_edges.append(ids)
    return build(labels, id_edges)


def induced_subhypergraph(h: Hypergraph, vertices) -> tuple[Hypergraph, dict[int, int]]:
    """Restrict to the edges entirely inside ``vertices``.

    Returns the re-indexed hypergraph together with the map from old
    edge index to new edge index. Vertices keep their labels; ids are
    renumbered densely in increasing old-id order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        h.check_vertex(v)
    wmask = mask_of(keep)
    remap = {old: new for new, old in enumerate(keep)}
    labels = tuple(h.labels[v] for v in keep)
    new_edges = []
    edge_map: dict[int, int] = {}
    for s, mask in enumerate(h.edges):
        if is_subset(mask, wmask):
            edge_map[s] = len(new_edges)
            new_edges.append(mask_of(remap[v] for v in bits_of(mask)))
    return Hypergraph(labels, tuple(new_edges)), edge_map


def restrict_mask(h: Hypergraph, wmask: int) -> tuple[int, ...]:
    """Edge masks of the induced subhypergraph on ``wmask``, unrelabelled."""
    return tuple(mask for mask in h.edges if is_subset(mask, wmask))


def delete_edge(h: Hypergraph, s: int) -> Hypergraph:
    """Remove edge ``s``; vertex set unchanged, later edges shift down."""
    h.edge_mask(s)
    return Hypergraph(h.labels, h.edges[:s] + h.edges[s + 1 :])


def edge_neighborhood(h: Hypergraph, s: int) -> int:
    """Bitmask of vertices outside edge ``s`` lying in some edge that meets it.

    An edge meeting no other edge has empty neighborhood.
    """
    smask = h.edge_mask(s)
    out = 0
    for mask in h.edges:
        if mask & smask:
            out |= mask & ~smask
    return out


def vertex_neighborhood(h: Hypergraph, x: int, closed: bool = False) -> int:
    """Bitmask of vertices sharing an edge with ``x`` (open by default)."""
    h.check_vertex(x)
    out = 0
    xbit = 1 << x
    for mask in h.edges:
        if mask & xbit:
            out |= mask
    out &= ~xbit
    return out | xbit if closed else out


@dataclass(frozen=True)
class UniformityProfile:
    """Edge-size census with the two structural flags used downstream."""

    is_uniform: bool
    d: int | None
    sizes: tuple[int, ...]
    is_special_class: bool


def uniformity_profile(h: Hypergraph) -> UniformityProfile:
    """Classify edge sizes.

    ``is_special_class`` means: uniform of size d, and any two distinct
    edges that meet share exactly d - 1 vertices. Every graph qualifies.
    An edgeless hypergraph is vacuously uniform and special with d None.
    """
    sizes = tuple(sorted({mask.bit_count() for mask in h.edges}))
    if not sizes:
        return UniformityProfile(True, None, sizes, True)
    uniform = len(sizes) == 1
    d = sizes[0] if uniform else None
    special = uniform
    if uniform:
        for a in range(h.m):
            for b in range(a + 1, h.m):
                inter = h.edges[a] & h.edges[b]
                if inter and inter.bit_count() != d - 1:
                    special = False
                    break
            if not special:
                break
    return UniformityProfile(uniform, d, sizes, special)


def require_uniform(h: Hypergraph) -> int:
    """Common edge size, or NotUniform. Edgeless hypergraphs have no size."""
    prof = uniformity_profile(h)
    if not prof.is_uniform or prof.d is None:
        raise NotUniform(f"edge sizes {prof.sizes} are not a single common size")
    return prof.d


def _simplicial_in(h: Hypergraph, x: int, wmask: int, d: int) -> bool:
    # Closed neighborhood of x inside the induced subhypergraph on wmask.
    xbit = 1 << x
    closed = xbit
    edges_w = [mask for mask in h.edges if is_subset(mask, wmask)]
    for mask in edges_w:
        if mask & xbit:
            closed |= mask
    nb = tuple_of(closed)
    if len(nb) < d:
        return True
    edge_set = set(edges_w)
    from itertools import combinations

    for combo in combinations(nb, d):
        if mask_of(combo) not in edge_set:
            return False
    return True


def is_simplicial_vertex(h: Hypergraph, x: int) -> bool:
    """True when every d-subset of the closed neighborhood of ``x`` is an edge.

    Requires a uniform hypergraph. A vertex lying in no edge has a
    closed neighborhood of size one and is vacuously simplicial.
    """
    h.check_vertex(x)
    d = require_uniform(h)
    return _simplicial_in(h, x, h.vertex_mask, d)


def is_triangulated(h: Hypergraph, cap: int = TRIANGULATED_CAP) -> bool:
    """Whether every nonempty induced subhypergraph has a simplicial vertex.

    Decided by greedy elimination: repeatedly delete any simplicial
    vertex of the current induced subhypergraph until none is left.
    Simpliciality persists under induced restriction, and the defining
    property is hereditary, so if elimination ever succeeds from some
    state it succeeds from every state reachable by deleting simplicial
    vertices; greedy choice is therefore complete, not just sound.
    """
    if h.n > cap:
        raise SizeCapExceeded(f"{h.n} vertices exceeds triangulation cap {cap}")
    if h.m == 0:
        return True
    d = require_uniform(h)
    wmask = h.vertex_mask
    while wmask:
        found = None
        for x in bits_of(wmask):
            if _simplicial_in(h, x, wmask, d):
                found = x
                break
        if found is None:
            return False
        wmask &= ~(1 << found)
    return True
