"""Exhaustive and heuristic searches: independent ground truth for the
construction modules.

``beta_exact`` answers "what is the smallest k-partite graph that stays
r-clique-free while surviving every i-part deletion with an (r-1)-clique" by
isomorph-free enumeration: increasing vertex count, then increasing edge
count, shapes in ascending order.  FOUND outcomes carry a minimum witness and
EXHAUSTED is a mathematical claim about the whole class up to ``max_n``.

``alpha_bounded_search`` looks for saturated hosts with bounded part sizes
around a distinguished independent transversal.  Below a size threshold the
search is a complete enumeration of the class; above it, a seeded heuristic
(random transversal-neighbourhood seeds, deterministic closure, saturation
check, restarts) whose outcomes are flagged and only ever claim upper bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import comb

import numpy as np

from .errors import InputError, ResourceExhaustedError
from .graph import (PartiteGraph, Transversal, is_partite_saturated,
                    shuffled_closure, verify_beta_witness)
from .enumeration import ShapeUniverse, contains_any, shapes_for

DEFAULT_NODE_BUDGET = 10 ** 8
DEFAULT_ALPHA_ATTEMPTS = 4000
COMPLETE_SPACE_CAP = 2_000_000

FOUND = "FOUND"
EXHAUSTED = "EXHAUSTED"
NOT_FOUND = "NOT_FOUND"


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search run.

    ``EXHAUSTED`` asserts that the entire class within the budget was
    enumerated and holds no witness; heuristic runs can never produce it and
    report ``NOT_FOUND`` instead.
    """

    status: str
    value: int | None
    witness: PartiteGraph | None
    nodes_explored: int
    budget: int
    heuristic: bool = False
    seed: int | None = None
    transversal: Transversal | None = None


def _deletion_covers(universe: ShapeUniverse, i: int, r: int) -> list[np.ndarray] | None:
    """Per i-subset of parts: masks of (r-1)-cliques avoiding the subset.

    Returns None when some subset admits no candidate clique at all (the
    shape can never host a witness).
    """
    t = len(universe.sizes)
    covers = []
    for subset in combinations(range(t), i):
        masks = universe.clique_masks(r - 1, excluded_parts=subset)
        if masks.size == 0:
            return None
        covers.append(masks)
    return covers


def beta_exact(i: int, k: int, r: int, max_n: int,
               node_budget: int = DEFAULT_NODE_BUDGET) -> SearchOutcome:
    """Smallest vertex count admitting an (i, k, r) deletion witness.

    Enumerates all k-partite graphs on n = 1..max_n vertices up to part
    permutation and vertex relabelling, in increasing edge count for fixed n,
    over shapes in ascending order.  Shapes with fewer than i + r - 1
    occupied parts are skipped (deleting i occupied parts must leave r - 1
    occupied parts for an (r-1)-clique), and supergraphs of an r-clique are
    generated but not extended; neither can host a witness.

    Raises ResourceExhaustedError once more than ``node_budget`` isomorphism
    classes have been generated; the error carries partial progress.
    """
    if r < 2:
        raise InputError(f"need r >= 2 (got r={r})")
    if k < r:
        raise InputError(f"need k >= r (got k={k}, r={r})")
    if not 1 <= i <= k - r + 1:
        raise InputError(f"need 1 <= i <= k - r + 1 (got i={i}, k={k}, r={r})")
    if max_n < 1:
        raise InputError("max_n must be positive")

    nodes = 0
    min_parts = i + r - 1
    for n in range(1, max_n + 1):
        shapes = shapes_for(n, k, min_parts)
        runs = []
        for shape in shapes:
            universe = ShapeUniverse(shape)
            covers = _deletion_covers(universe, i, r)
            if covers is None:
                continue
            kr = universe.clique_masks(r)
            runs.append({
                "universe": universe,
                "covers": covers,
                "kr": kr,
                "gen": universe.levels(prune_masks=kr),
                "done": False,
            })
        m = 0
        while any(not run["done"] for run in runs):
            hits: list[tuple[tuple[int, ...], int, ShapeUniverse]] = []
            for run in runs:
                if run["done"]:
                    continue
                try:
                    level_m, classes = next(run["gen"])
                except StopIteration:
                    run["done"] = True
                    continue
                assert level_m == m
                nodes += int(classes.size)
                if nodes > node_budget:
                    raise ResourceExhaustedError(
                        f"node budget {node_budget} exceeded at n={n}, m={m}",
                        partial={"nodes_explored": nodes, "completed_n": n - 1})
                universe = run["universe"]
                ok = ~contains_any(classes, run["kr"]) if run["kr"].size else \
                    np.ones(classes.shape, dtype=bool)
                for cover in run["covers"]:
                    if not ok.any():
                        break
                    ok &= contains_any(classes, cover)
                if ok.any():
                    best = int(classes[ok].min())
                    hits.append((universe.sizes, best, universe))
            if hits:
                # shapes are already scanned in ascending order; keep the first
                sizes, mask, universe = hits[0]
                g = PartiteGraph(universe.graph_parts(pad_to=k),
                                 universe.mask_to_edges(mask))
                assert verify_beta_witness(g, i, r)
                return SearchOutcome(FOUND, n, g, nodes, max_n)
            m += 1
    return SearchOutcome(EXHAUSTED, None, None, nodes, max_n)


# -- bounded search for saturated hosts ---------------------------------------


def _complete_space_size(k: int, mps: int) -> int:
    """Upper estimate of the raw configuration count for the complete search."""
    per_part = sum(comb(2 ** (k - 1) + s - 1, s) for s in range(mps + 1))
    total_y = k * mps
    cross_pairs = comb(total_y, 2) - k * comb(mps, 2)
    if cross_pairs >= 60:
        return COMPLETE_SPACE_CAP + 1
    return per_part ** k * 2 ** cross_pairs


def _build_host(k: int, y_nbrs: list[list[int]], y_parts: list[int],
                yy_edges: list[tuple[int, int]]):
    """Host graph from explicit transversal-neighbour lists.

    Transversal vertex of part p is ``p``; the remaining vertices get ids
    k, k+1, ... in list order.
    """
    parts: list[list[int]] = [[p] for p in range(k)]
    for t, p in enumerate(y_parts):
        parts[p].append(k + t)
    edges = [(k + t, x) for t, nbrs in enumerate(y_nbrs) for x in nbrs]
    edges.extend((k + a, k + b) for a, b in yy_edges)
    return PartiteGraph(parts, edges), Transversal(range(k))


def _alpha_complete(k: int, r: int, mps: int, node_budget: int) -> SearchOutcome:
    """Complete enumeration of bounded hosts; EXHAUSTED is a proof."""
    nodes = 0
    best: tuple[int, PartiteGraph, Transversal] | None = None
    xsubsets = [[x for x in range(k) if x != p] for p in range(k)]
    part_options = []
    for p in range(k):
        opts = []
        for s in range(mps + 1):
            nbr_choices = []
            for bits in range(1 << (k - 1)):
                nbr_choices.append([xsubsets[p][t] for t in range(k - 1) if bits >> t & 1])
            opts.extend(combinations_with_replacement(nbr_choices, s))
        part_options.append(opts)

    for assignment in product(*part_options):
        y_nbrs: list[list[int]] = []
        y_parts: list[int] = []
        for p, group in enumerate(assignment):
            for nbrs in group:
                y_nbrs.append(list(nbrs))
                y_parts.append(p)
        b_edges = sum(len(nb) for nb in y_nbrs)
        if best is not None and b_edges >= best[0]:
            continue
        # cheap necessary condition: every transversal pair needs common
        # neighbours spanning r-2 parts outside the pair
        feasible = True
        for xi, xj in combinations(range(k), 2):
            common_parts = {y_parts[t] for t in range(len(y_nbrs))
                            if xi in y_nbrs[t] and xj in y_nbrs[t]}
            if len(common_parts - {xi, xj}) < r - 2:
                feasible = False
                break
        if not feasible:
            continue
        cross = [(a, b) for a in range(len(y_nbrs)) for b in range(a + 1, len(y_nbrs))
                 if y_parts[a] != y_parts[b]]
        for bits in range(1 << len(cross)):
            yy = [cross[t] for t in range(len(cross)) if bits >> t & 1]
            g, x = _build_host(k, y_nbrs, y_parts, yy)
            nodes += 1
            if nodes > node_budget:
                raise ResourceExhaustedError(
                    f"node budget {node_budget} exceeded",
                    partial={"nodes_explored": nodes,
                             "best": None if best is None else best[0]})
            if is_partite_saturated(g, r):
                if best is None or b_edges < best[0]:
                    best = (b_edges, g, x)
                break  # any further yy-set has the same boundary count
    if best is None:
        return SearchOutcome(EXHAUSTED, None, None, nodes, node_budget)
    return SearchOutcome(FOUND, best[0], best[1], nodes, node_budget,
                         transversal=best[2])


def _occupancy_multisets(k: int, mps: int):
    """Part occupancies up to part permutation, ascending total size."""
    all_ms = combinations_with_replacement(range(mps, -1, -1), k)
    return sorted(all_ms, key=lambda ms: (sum(ms), ms))


def _alpha_heuristic(k: int, r: int, mps: int, budget: int, seed: int) -> SearchOutcome:
    """Seeded restarts: full and random transversal neighbourhoods, then the
    deterministic closure, then a saturation check.  Upper bounds only."""
    rng = random.Random(seed)
    nodes = 0
    best: tuple[int, PartiteGraph, Transversal] | None = None

    def attempt(sizes: tuple[int, ...], full_b: bool) -> tuple[int, PartiteGraph, Transversal] | None:
        total_y = sum(sizes)
        if total_y == 0:
            return None
        parts: list[list[int]] = [[p] for p in range(k)]
        y_of_part: list[list[int]] = [[] for _ in range(k)]
        nxt = k
        for p in range(k):
            for _ in range(sizes[p]):
                parts[p].append(nxt)
                y_of_part[p].append(nxt)
                nxt += 1
        edges = []
        for p in range(k):
            for y in y_of_part[p]:
                if full_b:
                    nbrs = [x for x in range(k) if x != p]
                else:
                    pool = [x for x in range(k) if x != p]
                    m = rng.randint(1, len(pool))
                    nbrs = rng.sample(pool, m)
                edges.extend((y, x) for x in nbrs)
        g = PartiteGraph(parts, edges)
        x = Transversal(range(k))
        xset = set(range(k))
        value = g.n_edges
        g = shuffled_closure(g, r, rng.shuffle,
                             allowed=lambda u, v: u not in xset and v not in xset)
        if is_partite_saturated(g, r):
            return (value, g, x)
        return None

    # ladder of full-neighbourhood hosts: ascending occupancy, so the first
    # success is the family minimum
    per_occupancy = max(10, budget // (8 * max(1, len(_occupancy_multisets(k, mps)))))
    for sizes in _occupancy_multisets(k, mps):
        if best is not None and (k - 1) * sum(sizes) >= best[0]:
            break
        hit = None
        for _ in range(per_occupancy):
            if nodes >= budget:
                break
            nodes += 1
            hit = attempt(sizes, full_b=True)
            if hit is not None:
                break
        if hit is not None and (best is None or hit[0] < best[0]):
            best = hit
        if nodes >= budget:
            break

    # random sparse neighbourhoods can beat the full-neighbourhood family
    while nodes < budget:
        sizes = tuple(rng.randint(0, mps) for _ in range(k))
        nodes += 1
        hit = attempt(sizes, full_b=False)
        if hit is not None and (best is None or hit[0] < best[0]):
            best = hit

    if best is None:
        return SearchOutcome(NOT_FOUND, None, None, nodes, budget,
                             heuristic=True, seed=seed)
    return SearchOutcome(FOUND, best[0], best[1], nodes, budget,
                         heuristic=True, seed=seed, transversal=best[2])


def alpha_bounded_search(k: int, r: int, max_part_size: int,
                         budget: int | None = None, seed: int = 0) -> SearchOutcome:
    """Minimum transversal boundary over saturated hosts with bounded parts.

    Hosts carry a distinguished independent transversal (one vertex per part)
    plus at most ``max_part_size`` further vertices per part.  Any FOUND value
    is a valid upper bound on the unbounded minimum; it is never claimed
    exact.  When the raw configuration space is small the search is complete
    and EXHAUSTED proves the class empty; otherwise a seeded heuristic runs
    and the outcome is flagged ``heuristic``.
    """
    if r < 3 or k < r:
        raise InputError(f"need k >= r >= 3 (got k={k}, r={r})")
    if max_part_size < 1:
        raise InputError("max_part_size must be positive")
    if _complete_space_size(k, max_part_size) <= COMPLETE_SPACE_CAP:
        return _alpha_complete(k, r, max_part_size,
                               DEFAULT_NODE_BUDGET if budget is None else budget)
    return _alpha_heuristic(k, r, max_part_size,
                            DEFAULT_ALPHA_ATTEMPTS if budget is None else budget, seed)
