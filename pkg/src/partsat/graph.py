"""The k-partite graph data model and its saturation predicates.

A :class:`PartiteGraph` carries a fixed assignment of vertices to ``k`` parts
(parts may be empty) and a symmetric, irreflexive adjacency that never joins
two vertices of the same part.  Instances are immutable; every operation that
"modifies" a graph returns a new value, so all predicates are safe to call
concurrently.

Vertex ids are arbitrary integers, stable across derived graphs.  Internally
vertices are indexed in ascending ``(part, id)`` order and adjacency is kept
as dense bitmasks, which is also the scan order used by
:func:`saturation_closure`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .cliques import find_clique, has_clique_masks
from .errors import InputError, WitnessError


class PartiteGraph:
    """A k-partite graph with explicit part assignment.

    Args:
        parts: iterable of iterables of vertex ids, one per part (may be empty).
        edges: iterable of (u, v) pairs joining vertices of different parts.
    """

    __slots__ = ("_parts", "_part_of", "_order", "_index", "_masks", "_part_masks")

    def __init__(self, parts: Iterable[Iterable[int]], edges: Iterable[tuple[int, int]] = ()):
        self._parts = tuple(tuple(sorted(p)) for p in parts)
        self._part_of: dict[int, int] = {}
        for pi, part in enumerate(self._parts):
            for v in part:
                if v in self._part_of:
                    raise InputError(f"vertex {v} appears in more than one part")
                self._part_of[v] = pi
        # vertex order: ascending (part index, vertex id)
        self._order = tuple(v for part in self._parts for v in part)
        self._index = {v: i for i, v in enumerate(self._order)}
        n = len(self._order)
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            iu, iv = self._index.get(u), self._index.get(v)
            if iu is None or iv is None:
                raise InputError(f"edge ({u}, {v}) references an unknown vertex")
            if self._part_of[u] == self._part_of[v]:
                raise InputError(f"edge ({u}, {v}) joins two vertices of part {self._part_of[u]}")
            masks[iu] |= 1 << iv
            masks[iv] |= 1 << iu
        self._masks = masks
        self._part_masks = []
        for part in self._parts:
            m = 0
            for v in part:
                m |= 1 << self._index[v]
            self._part_masks.append(m)

    # -- basic accessors ---------------------------------------------------

    @property
    def part_count(self) -> int:
        return len(self._parts)

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        return self._parts

    def part_of(self, v: int) -> int:
        try:
            return self._part_of[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def vertices(self) -> tuple[int, ...]:
        return self._order

    @property
    def n_vertices(self) -> int:
        return len(self._order)

    def adjacent(self, u: int, v: int) -> bool:
        iu, iv = self._require(u), self._require(v)
        return bool(self._masks[iu] >> iv & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = self._masks[self._require(v)]
        return tuple(self._order[i] for i in _bits(m))

    def degree(self, v: int) -> int:
        return self._masks[self._require(v)].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted lexicographically."""
        out = []
        for i, m in enumerate(self._masks):
            u = self._order[i]
            for j in _bits(m):
                v = self._order[j]
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    @property
    def n_edges(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "PartiteGraph":
        """A new graph with additional edges (validation re-runs)."""
        return PartiteGraph(self._parts, self.edges() + list(extra))

    def _require(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def _full_mask(self) -> int:
        return (1 << len(self._order)) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartiteGraph):
            return NotImplemented
        return self._parts == other._parts and self._masks == other._masks

    def __repr__(self) -> str:
        return (f"PartiteGraph(k={self.part_count}, n={self.n_vertices}, "
                f"m={self.n_edges})")


def plain_graph(n: int, edges: Iterable[tuple[int, int]]) -> PartiteGraph:
    """An ordinary graph on vertices 0..n-1, modelled with singleton parts."""
    return PartiteGraph(((v,) for v in range(n)), edges)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- transversals ----------------------------------------------------------


@dataclass(frozen=True)
class Transversal:
    """One distinguished vertex per part, in part order."""

    vertices: tuple[int, ...]

    def __init__(self, vertices: Sequence[int]):
        object.__setattr__(self, "vertices", tuple(vertices))

    def validate(self, g: PartiteGraph) -> None:
        if len(self.vertices) != g.part_count:
            raise InputError(
                f"transversal has {len(self.vertices)} vertices for {g.part_count} parts")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("transversal vertices are not distinct")
        for i, v in enumerate(self.vertices):
            if g.part_of(v) != i:
                raise InputError(f"transversal vertex {v} is not in part {i}")

    def is_independent(self, g: PartiteGraph) -> bool:
        return self.violating_edge(g) is None

    def violating_edge(self, g: PartiteGraph) -> tuple[int, int] | None:
        for u, v in combinations(self.vertices, 2):
            if g.adjacent(u, v):
                return (u, v)
        return None

    def mask(self, g: PartiteGraph) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << g._require(v)
        return m


# -- clique predicates -----------------------------------------------------


def has_clique(g: PartiteGraph, r: int) -> bool:
    """True iff g contains r pairwise-adjacent vertices (r >= 1)."""
    if r < 1:
        raise InputError("r must be positive")
    if r == 1:
        return g.n_vertices >= 1
    return has_clique_masks(g._masks, g._full_mask(), r)


def find_clique_vertices(g: PartiteGraph, r: int) -> list[int] | None:
    """A clique of r vertices as a list of ids, or None."""
    hit = find_clique(g._masks, g._full_mask(), r)
    if hit is None:
        return None
    return sorted(g._order[i] for i in hit)


def clique_number(g: PartiteGraph) -> int:
    hi = 0
    while has_clique_masks(g._masks, g._full_mask(), hi + 1):
        hi += 1
    return hi


# -- saturation predicates ---------------------------------------------------


def is_admissible_nonedge(g: PartiteGraph, u: int, v: int) -> bool:
    """True iff u, v lie in different parts and are not adjacent."""
    if u == v:
        raise InputError("u and v must be distinct")
    return g.part_of(u) != g.part_of(v) and not g.adjacent(u, v)


def nonedge_is_saturated(g: PartiteGraph, u: int, v: int, r: int) -> bool:
    """True iff adding the admissible non-edge uv would complete an r-clique.

    Equivalently: the common neighbourhood of u and v contains a clique on
    r-2 vertices.  The graph is assumed r-clique-free; this is not re-checked
    here for speed (the verify_* entry points do check).
    """
    if not is_admissible_nonedge(g, u, v):
        raise InputError(f"({u}, {v}) is not an admissible non-edge")
    common = g._masks[g._require(u)] & g._masks[g._require(v)]
    return has_clique_masks(g._masks, common, r - 2)


def _admissible_nonedge_indices(masks, part_masks, order_len):
    """Index pairs (i, j), i < j, cross-part and non-adjacent, in scan order."""
    part_at = [0] * order_len
    for p, pm in enumerate(part_masks):
        for i in _bits(pm):
            part_at[i] = p
    for i in range(order_len):
        for j in range(i + 1, order_len):
            if part_at[i] != part_at[j] and not masks[i] >> j & 1:
                yield i, j


def saturation_violation(g: PartiteGraph, r: int):
    """None if g is r-clique-saturated, else a machine-readable violation.

    Returns ``("clique", [ids])`` when g contains an r-clique, or
    ``("nonedge", (u, v))`` for the first admissible non-edge whose addition
    would not complete an r-clique.
    """
    if r < 3:
        raise InputError("saturation predicates need r >= 3")
    hit = find_clique(g._masks, g._full_mask(), r)
    if hit is not None:
        return ("clique", sorted(g._order[i] for i in hit))
    for i, j in _admissible_nonedge_indices(g._masks, g._part_masks, g.n_vertices):
        common = g._masks[i] & g._masks[j]
        if not has_clique_masks(g._masks, common, r - 2):
            return ("nonedge", (g._order[i], g._order[j]))
    return None


def is_partite_saturated(g: PartiteGraph, r: int) -> bool:
    """True iff g is r-clique-free and every admissible non-edge is saturated."""
    return saturation_violation(g, r) is None


def _closure_candidate_pairs(g: PartiteGraph,
                             allowed: Callable[[int, int], bool] | None) -> list[tuple[int, int]]:
    """Cross-part allowed index pairs in ascending (part, id) scan order."""
    part_at = [0] * g.n_vertices
    for p, pm in enumerate(g._part_masks):
        for i in _bits(pm):
            part_at[i] = p
    order = g._order
    return [(i, j) for i in range(g.n_vertices) for j in range(i + 1, g.n_vertices)
            if part_at[i] != part_at[j]
            and (allowed is None or allowed(order[i], order[j]))]


def _closure_core(masks: list[int], pairs: list[tuple[int, int]], r: int) -> None:
    """Repeat passes over ``pairs``, adding each non-edge whose addition
    creates no r-clique, until a full pass adds nothing.  Mutates ``masks``."""
    while True:
        added = False
        for i, j in pairs:
            if masks[i] >> j & 1:
                continue
            common = masks[i] & masks[j]
            if not has_clique_masks(masks, common, r - 2):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
                added = True
        if not added:
            break


def _rebuild(g: PartiteGraph, masks: list[int]) -> PartiteGraph:
    order = g._order
    edges = []
    for i in range(len(order)):
        for j in _bits(masks[i]):
            if i < j:
                edges.append((order[i], order[j]))
    return PartiteGraph(g._parts, edges)


def saturation_closure(g: PartiteGraph, r: int,
                       allowed: Callable[[int, int], bool] | None = None) -> PartiteGraph:
    """Maximal r-clique-free completion of g over the allowed vertex pairs.

    Admissible non-edges are scanned in ascending lexicographic order of
    their (part index, vertex id) endpoint pairs; an edge is added exactly
    when its addition creates no r-clique, and the scan repeats until a full
    pass adds nothing.  The result is a supergraph of g, still r-clique-free,
    in which every allowed admissible non-edge is saturated.  Deterministic
    by construction.
    """
    if has_clique(g, r):
        raise InputError("closure requires an r-clique-free input graph")
    masks = list(g._masks)
    _closure_core(masks, _closure_candidate_pairs(g, allowed), r)
    return _rebuild(g, masks)


def shuffled_closure(g: PartiteGraph, r: int, shuffle: Callable[[list], None],
                     allowed: Callable[[int, int], bool] | None = None) -> PartiteGraph:
    """Closure variant with a caller-shuffled scan order.

    Same fixpoint rule as :func:`saturation_closure`, so the result is still
    a maximal r-clique-free completion; with a seeded shuffle the whole run
    stays reproducible.  Used by the heuristic searches to sample different
    maximal completions.
    """
    if has_clique(g, r):
        raise InputError("closure requires an r-clique-free input graph")
    pairs = _closure_candidate_pairs(g, allowed)
    shuffle(pairs)
    masks = list(g._masks)
    _closure_core(masks, pairs, r)
    return _rebuild(g, masks)


# -- transversal-boundary counting and witnesses ------------------------------


def edges_between(g: PartiteGraph, x: Transversal) -> int:
    """Number of edges with exactly one endpoint on the transversal."""
    x.validate(g)
    xmask = x.mask(g)
    return sum((g._masks[g._require(v)] & ~xmask).bit_count() for v in x.vertices)


def verify_alpha_witness(g: PartiteGraph, x: Transversal, r: int) -> int:
    """Certify (g, x) as a saturated host with independent transversal.

    Checks that ``x`` is an independent transversal and that g is
    r-clique-partite-saturated; returns the number of edges between the
    transversal and the rest.  Raises WitnessError with a concrete violation
    otherwise.
    """
    x.validate(g)
    bad = x.violating_edge(g)
    if bad is not None:
        raise WitnessError(f"transversal is not independent: edge {bad}",
                           violation=("edge", bad))
    vio = saturation_violation(g, r)
    if vio is not None:
        kind, detail = vio
        raise WitnessError(f"graph is not saturated: {kind} {detail}", violation=vio)
    return edges_between(g, x)


def beta_violation(g: PartiteGraph, i: int, r: int):
    """None if g certifies the i-part-deletion property, else a violation.

    The property: g is r-clique-free and for every i-subset S of parts the
    graph restricted to the parts outside S still contains an (r-1)-clique.
    Returns ``("clique", [ids])`` or ``("parts", S)``.
    """
    k = g.part_count
    if not 1 <= i <= k - r + 1:
        raise InputError(f"need 1 <= i <= k - r + 1 (got i={i}, k={k}, r={r})")
    hit = find_clique(g._masks, g._full_mask(), r)
    if hit is not None:
        return ("clique", sorted(g._order[idx] for idx in hit))
    full = g._full_mask()
    supports: list[int] = []  # vertex masks of (r-1)-cliques already found
    for subset in combinations(range(k), i):
        deleted = 0
        for p in subset:
            deleted |= g._part_masks[p]
        if any(s & deleted == 0 for s in supports):
            continue
        found = find_clique(g._masks, full & ~deleted, r - 1)
        if found is None:
            return ("parts", subset)
        m = 0
        for idx in found:
            m |= 1 << idx
        supports.append(m)
    return None


def verify_beta_witness(g: PartiteGraph, i: int, r: int) -> bool:
    """Boolean form of :func:`beta_violation`."""
    return beta_violation(g, i, r) is None


# -- neighbourhood diagnostics -------------------------------------------------


def neighborhood_restriction(g: PartiteGraph, v: int) -> PartiteGraph:
    """Induced subgraph on N(v), re-partitioned into the other k-1 parts.

    Parts with empty intersection are kept as empty parts, so the result
    always has part_count k-1.
    """
    pv = g.part_of(v)
    nb = set(g.neighbors(v))
    parts = [tuple(w for w in part if w in nb)
             for pi, part in enumerate(g.parts) if pi != pv]
    edges = [(a, b) for a, b in g.edges() if a in nb and b in nb]
    return PartiteGraph(parts, edges)


@dataclass(frozen=True)
class SpecialDegreeReport:
    """Per-vertex record of special adjacency w.r.t. a transversal.

    A vertex y outside the transversal, lying in part j, is i-special when
    i != j and y is the unique neighbour of the transversal vertex x_i inside
    part j.  ``indices[y]`` lists all such i; the special degree of y is its
    length.
    """

    indices: dict[int, tuple[int, ...]]

    def degree(self, v: int) -> int:
        return len(self.indices[v])

    def special_vertices(self) -> list[int]:
        return sorted(v for v, idx in self.indices.items() if idx)

    def vertices_with_degree_at_least(self, d: int) -> list[int]:
        return sorted(v for v, idx in self.indices.items() if len(idx) >= d)


def special_degrees(g: PartiteGraph, x: Transversal) -> SpecialDegreeReport:
    """Special degrees of every vertex outside the transversal."""
    x.validate(g)
    xset = set(x.vertices)
    report: dict[int, list[int]] = {v: [] for v in g.vertices() if v not in xset}
    for i, xi in enumerate(x.vertices):
        nb = set(g.neighbors(xi))
        for j, part in enumerate(g.parts):
            if j == i:
                continue
            inside = [w for w in part if w in nb]
            if len(inside) == 1 and inside[0] not in xset:
                report[inside[0]].append(i)
    return SpecialDegreeReport({v: tuple(sorted(ix)) for v, ix in report.items()})
