"""Isomorph-free exhaustive enumeration of small multipartite graphs.

Graphs over a fixed part-size shape are encoded as bitmasks over the list of
admissible vertex pairs.  Two graphs are considered the same when one maps to
the other under a part permutation (between equal-size parts) composed with
within-part vertex permutations; the canonical form of a graph is the minimal
mask over the whole group.

Enumeration is a breadth-first scan over edge counts: level m+1 consists of
the canonical forms of every one-edge extension of level m, de-duplicated.
Removing any edge of a canonical graph and canonicalizing lands in the
previous level, so every isomorphism class is reached.  All group images are
applied to whole numpy arrays via per-byte lookup tables, which keeps the
scan vectorized.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import numpy as np

from .errors import InputError, ResourceExhaustedError

GROUP_CAP = 200_000


def partitions(n: int, max_parts: int):
    """Partitions of n into at most max_parts positive parts, descending."""

    def rec(left: int, max_first: int, slots: int):
        if left == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(left, max_first), 0, -1):
            for rest in rec(left - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, n, max_parts)


def shapes_for(n: int, k: int, min_parts: int) -> list[tuple[int, ...]]:
    """Admissible shapes at n vertices, ascending lexicographic order."""
    return sorted(s for s in partitions(n, k) if len(s) >= min_parts)


class ShapeUniverse:
    """All graphs over one part-size shape, up to symmetry.

    Args:
        sizes: part sizes, descending, all positive.
    """

    def __init__(self, sizes: tuple[int, ...]):
        self.sizes = tuple(sizes)
        self.n = sum(sizes)
        starts = []
        acc = 0
        for s in sizes:
            starts.append(acc)
            acc += s
        self.part_of = [p for p, s in enumerate(sizes) for _ in range(s)]
        self.part_vertices = [list(range(starts[p], starts[p] + s))
                              for p, s in enumerate(sizes)]

        self.pairs = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                      if self.part_of[u] != self.part_of[v]]
        self.P = len(self.pairs)
        if self.P > 64:
            raise InputError(f"shape {sizes} needs {self.P} > 64 pair slots")
        self.dtype = np.uint32 if self.P <= 32 else np.uint64
        self.pair_index = {pr: b for b, pr in enumerate(self.pairs)}

        group = self._vertex_group(starts)
        if len(group) > GROUP_CAP:
            raise ResourceExhaustedError(
                f"symmetry group of shape {sizes} has {len(group)} elements")
        self._tables = self._byte_tables(group)

    def _vertex_group(self, starts: list[int]) -> list[tuple[int, ...]]:
        sizes = self.sizes
        t = len(sizes)
        block_perms = [sigma for sigma in permutations(range(t))
                       if all(sizes[sigma[p]] == sizes[p] for p in range(t))]
        within = [list(permutations(range(s))) for s in sizes]
        group = []
        for sigma in block_perms:
            for combo in product(*within):
                vmap = [0] * self.n
                for p in range(t):
                    for off in range(sizes[p]):
                        vmap[starts[p] + off] = starts[sigma[p]] + combo[p][off]
                group.append(tuple(vmap))
        return group

    def _byte_tables(self, group) -> list[np.ndarray]:
        """Per-element byte lookup tables; identity is dropped."""
        nbytes = (self.P + 7) // 8
        tables = []
        identity = tuple(range(self.n))
        for vmap in group:
            if vmap == identity:
                continue
            pperm = [self.pair_index[tuple(sorted((vmap[u], vmap[v])))]
                     for u, v in self.pairs]
            tab = np.zeros((nbytes, 256), dtype=self.dtype)
            for b in range(self.P):
                byte, off = divmod(b, 8)
                img = self.dtype(1) << self.dtype(pperm[b])
                vals = np.arange(256)
                tab[byte][(vals >> off) & 1 == 1] |= img
            tables.append(tab)
        return tables

    @property
    def group_order(self) -> int:
        return len(self._tables) + 1

    def canonical(self, masks: np.ndarray) -> np.ndarray:
        """Minimal group image of each mask, elementwise."""
        best = masks.copy()
        nbytes = (self.P + 7) // 8
        for tab in self._tables:
            img = tab[0][(masks & 0xFF).astype(np.int64)]
            for byte in range(1, nbytes):
                img |= tab[byte][((masks >> self.dtype(8 * byte)) & 0xFF).astype(np.int64)]
            np.minimum(best, img, out=best)
        return best

    def levels(self, prune_masks: np.ndarray | None = None, max_level: int | None = None):
        """Yield (m, classes) for m = 0, 1, ...; classes are canonical masks.

        ``prune_masks``: graphs containing any of these sub-masks are still
        yielded (they count as explored) but are not extended further; used to
        cut every supergraph of an unwanted clique.
        """
        level = np.zeros(1, dtype=self.dtype)
        m = 0
        yield 0, level
        while level.size and m < (self.P if max_level is None else min(max_level, self.P)):
            chunks = []
            for b in range(self.P):
                bit = self.dtype(1 << b)
                src = level[(level & bit) == 0]
                if src.size:
                    chunks.append(src | bit)
            if not chunks:
                break
            ch = np.unique(np.concatenate(chunks))
            ch = np.unique(self.canonical(ch))
            m += 1
            yield m, ch
            if prune_masks is not None and prune_masks.size:
                keep = np.ones(ch.shape, dtype=bool)
                for sub in prune_masks:
                    keep &= (ch & sub) != sub
                level = ch[keep]
            else:
                level = ch

    # -- predicate mask builders -------------------------------------------

    def clique_masks(self, size: int, excluded_parts: tuple[int, ...] = ()) -> np.ndarray:
        """Edge masks of every potential clique on ``size`` vertices that
        avoids the excluded parts (cliques use at most one vertex per part)."""
        t = len(self.sizes)
        avail = [p for p in range(t) if p not in excluded_parts]
        out = []
        for parts_sel in combinations(avail, size):
            for verts in product(*(self.part_vertices[p] for p in parts_sel)):
                mask = 0
                for u, v in combinations(verts, 2):
                    mask |= 1 << self.pair_index[(min(u, v), max(u, v))]
                out.append(mask)
        return np.array(sorted(set(out)), dtype=self.dtype)

    def graph_parts(self, pad_to: int) -> list[tuple[int, ...]]:
        parts = [tuple(vs) for vs in self.part_vertices]
        parts.extend(() for _ in range(pad_to - len(parts)))
        return parts

    def mask_to_edges(self, mask: int) -> list[tuple[int, int]]:
        return [self.pairs[b] for b in range(self.P) if mask >> b & 1]


def contains_any(masks: np.ndarray, subs: np.ndarray) -> np.ndarray:
    """Boolean array: does each mask contain at least one of the sub-masks."""
    hit = np.zeros(masks.shape, dtype=bool)
    for sub in subs:
        hit |= (masks & sub) == sub
    return hit


def count_classes(sizes: tuple[int, ...]) -> int:
    """Number of isomorphism classes over the shape, by levelled enumeration."""
    u = ShapeUniverse(sizes)
    return sum(int(classes.size) for _, classes in u.levels())


def count_classes_naive(sizes: tuple[int, ...]) -> int:
    """Same count by canonicalizing all 2^P edge sets directly (small shapes)."""
    u = ShapeUniverse(sizes)
    if u.P > 22:
        raise InputError("naive count is only for small shapes")
    all_masks = np.arange(1 << u.P, dtype=u.dtype)
    return int(np.unique(u.canonical(all_masks)).size)
