"""Intersecting set families with prescribed membership counts, and the
common-vertex property of maximum cliques they imply.

For m >= 3 there are intersecting families C_1, ..., C_{m-2} of subsets of
{1..m} such that each nonempty proper subset I belongs to exactly |I| - 1 of
them, the full set to all m - 2, and the empty set to none.  Double counting
the vertices of the m maximum cliques of a graph on at most 2s-1 vertices
with clique number s against such families forces a vertex common to every
maximum clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import PartiteGraph
from .cliques import maximum_cliques

Family = frozenset  # of frozenset[int]


@dataclass(frozen=True)
class FamilyCollection:
    """m - 2 subset families over the ground set {1..m}."""

    m: int
    families: tuple[Family, ...]


def families_generate(m: int) -> FamilyCollection:
    """The recursive construction of the m - 2 families.

    Base: the single family {12, 23, 31, 123} on {1, 2, 3}.  Step m-1 -> m:
    every family C_j doubles into C_j plus its members extended by m, and one
    new family holds all subsets containing m of size at least two together
    with {1..m-1}.
    """
    if m < 3:
        raise InputError(f"need m >= 3 (got m={m})")
    families: list[set[frozenset[int]]] = [
        {frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 1}), frozenset({1, 2, 3})}
    ]
    for t in range(4, m + 1):
        families = [fam | {s | {t} for s in fam} for fam in families]
        last: set[frozenset[int]] = set()
        for size in range(2, t + 1):
            for combo in combinations(range(1, t + 1), size):
                if t in combo:
                    last.add(frozenset(combo))
        last.add(frozenset(range(1, t)))
        families.append(last)
    return FamilyCollection(m, tuple(frozenset(f) for f in families))


def _expected_count(i_size: int, m: int, is_full: bool, is_empty: bool) -> int:
    if is_empty:
        return 0
    if is_full:
        return m - 2
    return i_size - 1


def families_verify(fc: FamilyCollection,
                    counterexample: list | None = None) -> bool:
    """Check the intersecting property and the full membership-count table.

    Walks all 2^m subsets of the ground set.  On failure, appends the
    offending item to ``counterexample`` (if given) and returns False.
    """
    ground = frozenset(range(1, fc.m + 1))
    for j, fam in enumerate(fc.families):
        for a, b in combinations(fam, 2):
            if not a & b:
                if counterexample is not None:
                    counterexample.append(("disjoint", j, (sorted(a), sorted(b))))
                return False
    for size in range(fc.m + 1):
        for combo in combinations(sorted(ground), size):
            s = frozenset(combo)
            count = sum(1 for fam in fc.families if s in fam)
            want = _expected_count(len(s), fc.m, s == ground, not s)
            if count != want:
                if counterexample is not None:
                    counterexample.append(("count", sorted(s), count, want))
                return False
    return True


def common_vertex_check(g: PartiteGraph, s: int) -> bool:
    """True iff some vertex lies in every maximum clique of g.

    Preconditions (checked): g has at most 2s-1 vertices and clique number
    exactly s.  Under those hypotheses the answer is always true; a False
    return therefore signals an implementation bug somewhere upstream.
    """
    if s < 1:
        raise InputError("s must be positive")
    n = g.n_vertices
    if n > 2 * s - 1:
        raise InputError(f"graph has {n} > 2s-1 = {2 * s - 1} vertices")
    number, cliques = maximum_cliques(g._masks, n)
    if number != s:
        raise InputError(f"clique number is {number}, expected {s}")
    common = frozenset(range(n)).intersection(*cliques)
    return bool(common)
