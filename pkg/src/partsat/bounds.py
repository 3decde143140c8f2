"""Closed-form bound calculator for the minimum transversal boundary.

Every record combines the general lower bound k(2r-4) (each transversal
vertex needs 2r-4 neighbours), its diagonal strengthening at k = r, the
case-analysis value 33 at (5, 5), the two constructive upper-bound regimes,
and the parameter families where upper and lower bounds meet.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class BoundsRecord:
    k: int
    r: int
    lower: int
    upper: int
    exact: int | None
    sources: tuple[str, ...]

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} > upper {self.upper} at ({self.k},{self.r})")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"exact {self.exact} outside [{self.lower}, {self.upper}]")


def _exact_value(k: int, r: int) -> tuple[int | None, str | None]:
    if r == 3:
        return 3 * (k - 1), "exact:small-r-case-analysis"
    if (k, r) == (4, 4):
        return 18, "exact:small-r-case-analysis"
    if k == 2 * r - 3:
        return k * (2 * r - 4), "exact:bounds-meet"
    if k >= 2 * r - 2 and r % 2 == 0:
        return k * (2 * r - 4), "exact:gadget-p2"
    if k >= 2 * r - 1 and r % 3 == 2:
        return k * (2 * r - 4), "exact:gadget-p3"
    return None, None


def bounds_table(k: int, r: int) -> BoundsRecord:
    """Lower/upper/exact values of the minimum transversal boundary at (k, r)."""
    if r < 3 or k < r:
        raise InputError(f"need k >= r >= 3 (got k={k}, r={r})")
    sources = []
    lower = k * (2 * r - 4)
    sources.append("lower:transversal-degrees")
    if k == r and r >= 4 and r * (2 * r - 4) + 1 > lower:
        lower = r * (2 * r - 4) + 1
        sources.append("lower:diagonal-strengthening")
    if (k, r) == (5, 5):
        lower = 33
        sources.append("lower:case-analysis-55")

    if r <= k <= 2 * r - 3:
        upper = (k - 1) * (4 * r - k - 6)
        sources.append("upper:small-witness-host")
    else:
        upper = (k - 1) * (2 * r - 3)
        sources.append("upper:cycle-witness-host")

    exact, tag = _exact_value(k, r)
    if tag is not None:
        sources.append(tag)
    return BoundsRecord(k, r, lower, upper, exact, tuple(sources))
