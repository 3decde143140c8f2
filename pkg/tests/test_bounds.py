import pytest

from partsat import InputError
from partsat.bounds import BoundsRecord, bounds_table


def test_known_records():
    rec = bounds_table(6, 4)
    assert (rec.lower, rec.upper, rec.exact) == (24, 25, 24)
    rec = bounds_table(5, 5)
    assert (rec.lower, rec.upper, rec.exact) == (33, 36, None)
    rec = bounds_table(4, 4)
    assert (rec.lower, rec.upper, rec.exact) == (17, 18, 18)
    rec = bounds_table(3, 3)
    assert rec.exact == 6


def test_r3_exact_everywhere():
    for k in range(3, 12):
        assert bounds_table(k, 3).exact == 3 * (k - 1)


def test_r5_display():
    assert bounds_table(7, 5).exact == 42
    assert bounds_table(9, 5).exact == 54
    assert bounds_table(12, 5).exact == 72
    assert (bounds_table(6, 5).lower, bounds_table(6, 5).upper) == (36, 40)
    assert (bounds_table(8, 5).lower, bounds_table(8, 5).upper) == (48, 49)
    assert bounds_table(8, 5).exact is None


def test_near_diagonal_gap_of_one():
    # k = 2r-2 with r odd and 3 | r-2: one-unit bracket, no exact value
    rec = bounds_table(8, 5)
    assert rec.upper - rec.lower == 1 and rec.exact is None
    rec = bounds_table(20, 11)
    assert rec.upper - rec.lower == 1 and rec.exact is None


def test_sweep_consistency():
    for r in range(3, 11):
        for k in range(r, 3 * r + 1):
            rec = bounds_table(k, r)
            assert rec.lower <= rec.upper
            if rec.exact is not None:
                assert rec.lower <= rec.exact <= rec.upper
            # upper bound switches form at k = 2r-3
            if r <= k <= 2 * r - 3:
                assert rec.upper == (k - 1) * (4 * r - k - 6)
            else:
                assert rec.upper == (k - 1) * (2 * r - 3)


def test_rejects_out_of_range():
    with pytest.raises(InputError):
        bounds_table(3, 4)
    with pytest.raises(InputError):
        bounds_table(2, 2)


def test_record_invariant_enforced():
    with pytest.raises(ValueError):
        BoundsRecord(4, 4, 10, 5, None, ())
    with pytest.raises(ValueError):
        BoundsRecord(4, 4, 5, 10, 11, ())
