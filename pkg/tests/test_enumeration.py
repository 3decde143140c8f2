import numpy as np
import pytest

from partsat import InputError
from partsat.enumeration import (ShapeUniverse, contains_any, count_classes,
                                 count_classes_naive, partitions, shapes_for)


def test_partitions_of_five():
    got = sorted(partitions(5, 3))
    assert got == [(2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)]


def test_shapes_for_filters_by_occupied_parts():
    assert shapes_for(4, 4, 4) == [(1, 1, 1, 1)]
    assert shapes_for(5, 4, 4) == [(2, 1, 1, 1)]
    assert (2, 2, 1) in shapes_for(5, 3, 2)


def test_known_isomorphism_counts():
    # all-singleton shapes reduce to plain graph counting up to isomorphism
    assert count_classes((1, 1, 1, 1)) == 11
    assert count_classes((1, 1, 1, 1, 1)) == 34


def test_levelled_matches_naive_canonicalization():
    for shape in [(2, 1), (2, 2), (3, 2), (2, 2, 1), (2, 1, 1, 1), (3, 1, 1)]:
        assert count_classes(shape) == count_classes_naive(shape), shape


def test_group_order():
    assert ShapeUniverse((2, 2, 1)).group_order == 2 * 2 * 2  # swap parts, swap inside
    assert ShapeUniverse((1, 1, 1)).group_order == 6
    assert ShapeUniverse((4, 1, 1, 1, 1)).group_order == 24 * 24


def test_canonical_is_invariant_under_group():
    u = ShapeUniverse((2, 2, 1))
    rng = np.random.default_rng(7)
    masks = rng.integers(0, 1 << u.P, size=200, dtype=np.uint32)
    canon = u.canonical(masks)
    # canonicalizing twice changes nothing
    assert np.array_equal(u.canonical(canon), canon)
    # canonical form never exceeds the original
    assert (canon <= masks).all()


def test_levels_partition_all_masks():
    u = ShapeUniverse((2, 2))
    total = sum(cl.size for _, cl in u.levels())
    assert total == count_classes_naive((2, 2)) == total


def test_clique_masks():
    u = ShapeUniverse((2, 1, 1))
    tri = u.clique_masks(3)
    assert len(tri) == 2  # one triangle per choice of the part-0 vertex
    pairs_excl = u.clique_masks(2, excluded_parts=(0,))
    assert len(pairs_excl) == 1


def test_contains_any():
    masks = np.array([0b011, 0b101, 0b110], dtype=np.uint32)
    subs = np.array([0b011], dtype=np.uint32)
    assert contains_any(masks, subs).tolist() == [True, False, False]


def test_pair_budget_guard():
    with pytest.raises(InputError):
        ShapeUniverse((6, 6, 6))  # 108 pair slots is past the 64-bit budget
