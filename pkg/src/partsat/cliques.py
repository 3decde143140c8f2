"""Clique detection over adjacency bitmasks.

All routines work on a list ``masks`` where ``masks[v]`` is an integer whose
set bits are the neighbours of vertex ``v``; an optional candidate mask
restricts the search to an induced subgraph without copying anything.
"""

from __future__ import annotations

from itertools import combinations


def _greedy_color_count(masks: list[int], cand: int, cap: int) -> int:
    """Greedy colouring of the subgraph induced by ``cand``.

    Returns the number of colour classes used, stopping early once ``cap``
    classes exist (the caller only needs to know whether the bound reaches
    ``cap``).
    """
    classes: list[int] = []
    rest = cand
    while rest:
        v = rest & -rest
        rest ^= v
        idx = v.bit_length() - 1
        nb = masks[idx]
        for ci in range(len(classes)):
            if classes[ci] & nb == 0:
                classes[ci] |= v
                break
        else:
            classes.append(v)
            if len(classes) >= cap:
                return cap
    return len(classes)


def find_clique(masks: list[int], cand: int, size: int) -> list[int] | None:
    """Find any clique of ``size`` vertices inside ``cand``, or None.

    Branch and bound: branch on a highest-degree candidate vertex, prune by
    popcount and by a greedy colouring bound.
    """
    if size <= 0:
        return []
    if cand.bit_count() < size:
        return None

    def rec(cand: int, need: int, acc: list[int]) -> list[int] | None:
        if need == 0:
            return acc
        if cand.bit_count() < need:
            return None
        if need > 2 and _greedy_color_count(masks, cand, need) < need:
            return None
        # branch vertex: maximum degree within cand
        best_v, best_d = -1, -1
        rest = cand
        while rest:
            v = rest & -rest
            rest ^= v
            idx = v.bit_length() - 1
            d = (masks[idx] & cand).bit_count()
            if d > best_d:
                best_v, best_d = idx, d
        vbit = 1 << best_v
        hit = rec(cand & masks[best_v], need - 1, acc + [best_v])
        if hit is not None:
            return hit
        return rec(cand & ~vbit, need, acc)

    return rec(cand, size, [])


def has_clique_masks(masks: list[int], cand: int, size: int) -> bool:
    """True iff the subgraph induced by ``cand`` contains a clique of ``size``."""
    return find_clique(masks, cand, size) is not None


def has_clique_bruteforce(masks: list[int], cand: int, size: int) -> bool:
    """Exhaustive subset enumeration; the independence oracle for small graphs."""
    if size <= 0:
        return True
    verts = [i for i in range(len(masks)) if cand >> i & 1]
    if size > len(verts):
        return False
    for combo in combinations(verts, size):
        if all(masks[u] >> v & 1 for u, v in combinations(combo, 2)):
            return True
    return False


def maximum_cliques(masks: list[int], n: int) -> tuple[int, list[frozenset[int]]]:
    """Clique number plus every maximum clique, by exhaustive enumeration.

    Intended for tiny graphs only (the common-vertex checks run on at most
    2s-1 vertices).
    """
    best = 0
    found: list[frozenset[int]] = []
    verts = list(range(n))
    for size in range(n, 0, -1):
        for combo in combinations(verts, size):
            if all(masks[u] >> v & 1 for u, v in combinations(combo, 2)):
                found.append(frozenset(combo))
        if found:
            best = size
            break
    return best, found
