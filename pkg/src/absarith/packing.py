"""Packing numbers: largest subsets with all pairwise distances above a radius.

This is a maximum independent set in the graph whose edges join points at
distance <= radius.  Small instances are solved exactly by branch and bound
on bitmasks; larger ones fall back to a greedy maximal set, reported as a
lower bound rather than a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence


@dataclass(frozen=True)
class PackingResult:
    size: int
    exact: bool


def circle_distance(x, y, circumference=1):
    """Quotient metric on R modulo the circumference."""
    d = abs(x - y) % circumference
    return min(d, circumference - d)


def _default_metric(x, y):
    return abs(x - y)


def packing_number(
    points: Sequence,
    radius,
    metric: Callable | None = None,
    exact: bool | None = None,
    bnb_limit: int = 40,
) -> PackingResult:
    """Maximal number of points with pairwise distance strictly above radius.

    exact=None picks branch and bound up to bnb_limit points and greedy
    beyond; exact=True forces branch and bound, exact=False forces greedy.
    Comparisons against the radius are carried out in whatever arithmetic the
    metric returns (exact for rational inputs).
    """
    metric = metric or _default_metric
    n = len(points)
    if n == 0:
        return PackingResult(0, True)
    if exact is None:
        exact = n <= bnb_limit
    if not exact:
        chosen: list = []
        for p in points:
            if all(metric(p, q) > radius for q in chosen):
                chosen.append(p)
        return PackingResult(len(chosen), False)

    adjacency = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if metric(points[i], points[j]) <= radius:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i

    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        v = (candidates & -candidates).bit_length() - 1
        expand(candidates & ~adjacency[v] & ~(1 << v), size + 1)
        expand(candidates & ~(1 << v), size)

    expand((1 << n) - 1, 0)
    return PackingResult(best, True)
