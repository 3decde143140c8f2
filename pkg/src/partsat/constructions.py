"""Generators for every explicit witness family, certified on construction.

Two kinds of objects come out of this module:

* :class:`BetaWitness` -- an r-clique-free k-partite graph in which deleting
  any i parts leaves an (r-1)-clique; certifies the upper bound
  ``beta_i(k, r) <= |graph|``.
* :class:`AlphaWitness` -- a saturated k-partite host with an independent
  transversal X; certifies ``alpha(k, r) <= e(X, X^c)``.

Every generator re-runs the corresponding verifier before returning, so a
returned witness is always certified; generator bugs surface as
:class:`~partsat.errors.WitnessError` instead of silently wrong objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, UnsupportedParametersError, WitnessError
from .graph import (PartiteGraph, Transversal, beta_violation, edges_between,
                    saturation_closure, verify_alpha_witness)


@dataclass(frozen=True)
class BetaWitness:
    graph: PartiteGraph
    i: int
    k: int
    r: int
    provenance: dict = field(compare=False)

    @property
    def size(self) -> int:
        return self.graph.n_vertices

    def verify(self) -> None:
        if self.graph.part_count != self.k:
            raise WitnessError(
                f"witness has {self.graph.part_count} parts, expected {self.k}")
        vio = beta_violation(self.graph, self.i, self.r)
        if vio is not None:
            raise WitnessError(f"beta witness check failed: {vio}", violation=vio)


@dataclass(frozen=True)
class AlphaWitness:
    graph: PartiteGraph
    transversal: Transversal
    r: int
    value: int
    provenance: dict = field(compare=False)

    @property
    def k(self) -> int:
        return self.graph.part_count

    def verify(self) -> int:
        got = verify_alpha_witness(self.graph, self.transversal, self.r)
        if got != self.value:
            raise WitnessError(f"boundary edge count {got} != recorded value {self.value}")
        return got


def _certify_beta(graph, i, k, r, provenance) -> BetaWitness:
    w = BetaWitness(graph, i, k, r, provenance)
    w.verify()
    return w


def _certify_alpha(graph, x, r, value, provenance) -> AlphaWitness:
    w = AlphaWitness(graph, x, r, value, provenance)
    w.verify()
    return w


# -- beta witnesses ----------------------------------------------------------


def beta_empty_base(i: int, k: int) -> BetaWitness:
    """i+1 isolated vertices in distinct parts: the r=2 base witness.

    Deleting any i parts leaves an occupied part, i.e. a 1-clique.
    """
    if i < 1 or k <= i:
        raise InputError(f"need k >= i + 1 (got i={i}, k={k})")
    parts = [(v,) for v in range(i + 1)] + [()] * (k - i - 1)
    g = PartiteGraph(parts)
    return _certify_beta(g, i, k, 2, {"name": "beta-empty-base", "params": {"i": i, "k": k}})


def cycle_power_witness(i: int, r: int, k: int) -> BetaWitness:
    """The (r-2)th power of a cycle on i(r-1)+1 vertices, one per part.

    Vertices are the residues mod m = i(r-1)+1 and u ~ v iff their circular
    distance is at most r-2.  Deleting any i vertices leaves r-1 consecutive
    residues, which form an (r-1)-clique; the graph has no r-clique for
    i >= 2.  Remaining k - m parts stay empty.
    """
    if i < 2 or r < 2:
        raise InputError(f"need i >= 2 and r >= 2 (got i={i}, r={r})")
    m = i * (r - 1) + 1
    if k < m:
        raise InputError(f"need k >= i(r-1)+1 = {m} (got k={k})")
    # m > 2(r-2) always holds, so each circular-distance-d pair appears once
    edges = [(u, (u + d) % m) for u in range(m) for d in range(1, r - 1)]
    parts = [(v,) for v in range(m)] + [()] * (k - m)
    g = PartiteGraph(parts, edges)
    return _certify_beta(g, i, k, r,
                         {"name": "beta-cycle-power", "params": {"i": i, "r": r, "k": k}})


def disjoint_cliques_witness(i: int, r: int, k: int) -> BetaWitness:
    """i+1 disjoint (r-1)-cliques, every vertex in its own part.

    Deleting any i parts destroys at most i of the cliques.
    """
    if i < 1 or r < 2:
        raise InputError(f"need i >= 1 and r >= 2 (got i={i}, r={r})")
    m = (i + 1) * (r - 1)
    if k < m:
        raise InputError(f"need k >= (i+1)(r-1) = {m} (got k={k})")
    edges = []
    for c in range(i + 1):
        block = range(c * (r - 1), (c + 1) * (r - 1))
        edges.extend((u, v) for u in block for v in block if u < v)
    parts = [(v,) for v in range(m)] + [()] * (k - m)
    g = PartiteGraph(parts, edges)
    return _certify_beta(g, i, k, r,
                         {"name": "beta-disjoint-cliques", "params": {"i": i, "r": r, "k": k}})


def beta_inductive_step(h: BetaWitness) -> BetaWitness:
    """Lift an (i, k-1, r-1) witness to an (i, k, r) witness with i+1 new vertices.

    New vertices v_1..v_i go into the first i existing parts and v_{i+1} into
    a fresh part; v_{i+1} is joined to all of h, and each v_j to all of h
    except its own part.  The new vertices stay pairwise non-adjacent, so the
    clique number grows by exactly one.
    """
    h.verify()
    i = h.i
    if h.k < i + 1:
        raise InputError(f"need part count >= i + 1 (got k={h.k}, i={i})")
    old = h.graph
    base = max(old.vertices(), default=-1) + 1
    new_ids = [base + t for t in range(i + 1)]
    parts = []
    for j, part in enumerate(old.parts):
        parts.append(part + (new_ids[j],) if j < i else part)
    parts.append((new_ids[i],))
    edges = old.edges()
    for j in range(i):
        forbidden = set(old.parts[j])
        edges.extend((new_ids[j], w) for w in old.vertices() if w not in forbidden)
    edges.extend((new_ids[i], w) for w in old.vertices())
    g = PartiteGraph(parts, edges)
    prov = {"name": "beta-inductive-step", "params": {"i": i, "k": h.k + 1, "r": h.r + 1},
            "base": h.provenance}
    return _certify_beta(g, i, h.k + 1, h.r + 1, prov)


def beta2_small_witness(k: int, r: int) -> BetaWitness:
    """Witness of size 4r-k-2 for the i=2 deletion property, r < k <= 2r-1.

    Built from the cycle-power base at parameters (k-d, r-d), d = 2r-k-1,
    by d inductive steps (each adds 3 vertices).  For k = 2r-1 this is the
    cycle-power witness itself.
    """
    if not (2 <= r < k <= 2 * r - 1):
        raise InputError(f"need 2 <= r < k <= 2r-1 (got k={k}, r={r})")
    d = 2 * r - k - 1
    w = cycle_power_witness(2, r - d, k - d)
    for _ in range(d):
        w = beta_inductive_step(w)
    assert w.size == 4 * r - k - 2 and (w.i, w.k, w.r) == (2, k, r)
    return w


def best_beta2_witness(k: int, r: int) -> BetaWitness:
    """Smallest constructive i=2 witness available for the given (k, r)."""
    if k >= 2 * r - 1:
        return cycle_power_witness(2, r, k)
    if k > r:
        return beta2_small_witness(k, r)
    raise UnsupportedParametersError(
        f"no i=2 witness construction for k={k}, r={r} (need k > r)")


def beta2_combine(g1: BetaWitness, g2: BetaWitness) -> BetaWitness:
    """Merge i=2 witnesses for (r1, r1-1) and (r2, r2-1) into one for the sum.

    The two graphs are fully joined across their admissible pairs, then six
    new vertices x1, x2, y1, y2, z1, z2 are added: x_t, y_t into the first
    part of side t and z_t into the second; each new vertex is joined to
    every old vertex outside its own part, and inside the six only the edges
    x1z1, x2z2, y1y2, z1z2, y1z2, z1y2 are present (a triangle-free set, which
    caps the clique number at (r1-2) + (r2-2) + 2).
    """
    for w, tag in ((g1, "first"), (g2, "second")):
        if w.i != 2 or w.r != w.k - 1:
            raise InputError(f"{tag} input must certify (2, r, r-1) parameters")
        if w.r < 2 or w.k < 3:
            raise InputError(f"{tag} input needs at least 3 parts")
        w.verify()
    r1, r2 = g1.k, g2.k

    off = max(g1.graph.vertices(), default=-1) + 1
    relabel = {v: off + t for t, v in enumerate(g2.graph.vertices())}
    side1 = list(g1.graph.parts)
    side2 = [tuple(relabel[v] for v in part) for part in g2.graph.parts]
    old1 = list(g1.graph.vertices())
    old2 = [relabel[v] for v in g2.graph.vertices()]

    base = off + len(old2)
    x1, x2, y1, y2, z1, z2 = (base + t for t in range(6))
    parts = list(side1) + list(side2)
    parts[0] = parts[0] + (x1, y1)
    parts[1] = parts[1] + (z1,)
    parts[r1] = parts[r1] + (x2, y2)
    parts[r1 + 1] = parts[r1 + 1] + (z2,)

    edges = g1.graph.edges()
    edges.extend((relabel[a], relabel[b]) for a, b in g2.graph.edges())
    edges.extend((a, b) for a in old1 for b in old2)  # cross join, all admissible
    part_of_new = {x1: 0, y1: 0, z1: 1, x2: r1, y2: r1, z2: r1 + 1}
    old_part = {v: p for p, part in enumerate(side1 + side2) for v in part}
    for u, p in part_of_new.items():
        edges.extend((u, w) for w in old1 + old2 if old_part[w] != p)
    edges.extend([(x1, z1), (x2, z2), (y1, y2), (z1, z2), (y1, z2), (z1, y2)])

    g = PartiteGraph(parts, edges)
    prov = {"name": "beta2-combine", "params": {"r1": r1, "r2": r2},
            "inputs": [g1.provenance, g2.provenance]}
    return _certify_beta(g, 2, r1 + r2, r1 + r2 - 1, prov)


# -- alpha witnesses -----------------------------------------------------------


def alpha_from_beta2(g1: BetaWitness, r: int) -> AlphaWitness:
    """Saturated host built around an i=2 witness for (k, r-1).

    One transversal vertex is added per part and joined to every witness
    vertex outside its part, then the closure completes the non-transversal
    side.  Deleting the two parts of any transversal pair leaves an
    (r-2)-clique in g1, so the transversal non-edges are saturated; the
    boundary edge count is (k-1)|g1|.
    """
    if r < 3:
        raise InputError(f"need r >= 3 (got r={r})")
    if g1.i != 2 or g1.r != r - 1:
        raise InputError(f"input witness must certify (2, k, {r - 1}) parameters")
    g1.verify()
    k = g1.k
    old = g1.graph
    base = max(old.vertices(), default=-1) + 1
    xs = [base + p for p in range(k)]
    parts = [part + (xs[p],) for p, part in enumerate(old.parts)]
    edges = old.edges()
    for p in range(k):
        own = set(old.parts[p])
        edges.extend((xs[p], w) for w in old.vertices() if w not in own)
    host = PartiteGraph(parts, edges)
    xset = set(xs)
    host = saturation_closure(host, r, allowed=lambda u, v: u not in xset and v not in xset)
    value = (k - 1) * old.n_vertices
    prov = {"name": "alpha-from-beta2", "params": {"k": k, "r": r}, "base": g1.provenance}
    return _certify_alpha(host, Transversal(xs), r, value, prov)


def alpha_base_gadget(r: int, p: int) -> tuple[PartiteGraph, Transversal]:
    """The 2r-4+p part gadget before closure: parts {x_i, y_i} on a circle.

    y_i ~ y_j iff i, j are non-consecutive residues mod k; x_i ~ y_j iff
    i and j differ mod k/p.  Every transversal vertex has degree k - p = 2r-4.
    """
    if p not in (2, 3):
        raise InputError(f"p must be 2 or 3 (got {p})")
    if r < 4:
        raise InputError(f"need r >= 4 (got r={r})")
    if (r - 2) % p != 0:
        raise InputError(f"p={p} must divide r-2={r - 2}")
    k = 2 * r - 4 + p
    step = k // p
    xs = list(range(k))
    ys = [k + j for j in range(k)]
    parts = [(xs[j], ys[j]) for j in range(k)]
    edges = [(ys[a], ys[b]) for a in range(k) for b in range(a + 1, k)
             if (b - a) % k not in (1, k - 1)]
    edges.extend((xs[a], ys[b]) for a in range(k) for b in range(k)
                 if (a - b) % step != 0)
    return PartiteGraph(parts, edges), Transversal(xs)


def alpha_base(r: int, p: int) -> AlphaWitness:
    """Closed and certified gadget host with boundary edge count k(2r-4)."""
    g, x = alpha_base_gadget(r, p)
    k = g.part_count
    xset = set(x.vertices)
    g = saturation_closure(g, r, allowed=lambda u, v: u not in xset and v not in xset)
    value = k * (2 * r - 4)
    if any(g.degree(v) != 2 * r - 4 for v in x.vertices):
        raise WitnessError("transversal degree law violated in base gadget")
    return _certify_alpha(g, x, r, value,
                          {"name": "alpha-base", "params": {"r": r, "p": p}})


def alpha_blowup(base: AlphaWitness, k: int) -> AlphaWitness:
    """Extend a base host to k parts by copying its first transversal vertex.

    Each copy gets a fresh singleton part and exactly the neighbourhood of
    the copied vertex, keeping the boundary edge count at k(2r-4).
    """
    k0 = base.graph.part_count
    if k <= k0:
        raise InputError(f"need k > {k0} (got k={k})")
    base.verify()
    g0 = base.graph
    x1 = base.transversal.vertices[0]
    nbrs = g0.neighbors(x1)
    first = max(g0.vertices()) + 1
    copies = [first + t for t in range(k - k0)]
    parts = list(g0.parts) + [(c,) for c in copies]
    edges = g0.edges()
    for c in copies:
        edges.extend((c, w) for w in nbrs)
    g = PartiteGraph(parts, edges)
    x = Transversal(tuple(base.transversal.vertices) + tuple(copies))
    r = base.r
    value = k * (2 * r - 4)
    prov = {"name": "alpha-blowup", "params": {"k": k, "r": r},
            "base": base.provenance, "origin": {c: x1 for c in copies}}
    return _certify_alpha(g, x, r, value, prov)


def _theorem_base_p(k: int, r: int) -> int | None:
    """The gadget parameter p applicable at (k, r), if any (smaller k first)."""
    if r % 2 == 0 and (r - 2) % 2 == 0 and k >= 2 * r - 2:
        return 2
    if (r - 2) % 3 == 0 and k >= 2 * r - 1:
        return 3
    return None


def sat_source(k: int, r: int) -> AlphaWitness:
    """Best certified host available for (k, r): gadget family when its
    parameters apply, otherwise the i=2 witness route."""
    if k < r or r < 3:
        raise UnsupportedParametersError(f"need k >= r >= 3 (got k={k}, r={r})")
    candidates: list[AlphaWitness] = []
    p = _theorem_base_p(k, r)
    if p is not None:
        base = alpha_base(r, p)
        candidates.append(base if base.graph.part_count == k else alpha_blowup(base, k))
    try:
        candidates.append(alpha_from_beta2(best_beta2_witness(k, r - 1), r))
    except UnsupportedParametersError:
        pass
    if not candidates:
        raise UnsupportedParametersError(f"no host construction for k={k}, r={r}")
    return min(candidates, key=lambda w: w.value)


def sat_witness(k: int, r: int, n: int, source: AlphaWitness | None = None) -> PartiteGraph:
    """A saturated k-partite graph with exactly n vertices in every part.

    Starting from a certified host: vertices outside the transversal with no
    transversal neighbour are pruned, the remainder is re-closed, and then
    each transversal vertex is blown up to an independent class that pads its
    part to exactly n vertices.  The edge count is at most a*n + a^2 where a
    is the host's boundary edge count; n must be at least a + 1.
    """
    if source is None:
        source = sat_source(k, r)
    a = source.value
    if n < a + 1:
        raise InputError(f"need n >= {a + 1} for the (k={k}, r={r}) host (got n={n})")

    g, x = source.graph, source.transversal
    xset = set(x.vertices)
    keep = [v for v in g.vertices()
            if v in xset or any(w in xset for w in g.neighbors(v))]
    keepset = set(keep)
    parts = [tuple(v for v in part if v in keepset) for part in g.parts]
    edges = [(u, v) for u, v in g.edges() if u in keepset and v in keepset]
    g = PartiteGraph(parts, edges)
    g = saturation_closure(g, r, allowed=lambda u, v: u not in xset and v not in xset)

    first = max(g.vertices()) + 1
    parts = []
    edges = g.edges()
    for p, part in enumerate(g.parts):
        xi = x.vertices[p]
        others = tuple(v for v in part if v != xi)
        want = n - len(others) - 1
        copies = tuple(range(first, first + want))
        first += want
        parts.append(others + (xi,) + copies)
        nbrs = g.neighbors(xi)
        for c in copies:
            edges.extend((c, w) for w in nbrs)
    out = PartiteGraph(parts, edges)
    if any(len(part) != n for part in out.parts):
        raise WitnessError("blow-up produced a part of the wrong size")
    if out.n_edges > a * n + a * a:
        raise WitnessError(f"edge count {out.n_edges} exceeds {a}*{n} + {a}^2")
    return out
