"""Brute-force reference implementations, used by the test suite.

Everything here recomputes from first principles and deliberately shares
no enumeration code with the production modules, so agreement between the
two is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import EntrySpecifiedError, TooLargeError
from .matrices import PartialReciprocalMatrix

MAX_CYCLE_N = 8


@dataclass(frozen=True)
class GridSpec:
    """Log-uniform sampling grid with ``points`` values from lo to hi."""

    lo: float
    hi: float
    points: int

    def __post_init__(self) -> None:
        if not (0.0 < self.lo < self.hi):
            raise ValueError(f"need 0 < lo < hi, got {self.lo!r}, {self.hi!r}")
        if self.points < 2:
            raise ValueError("need at least 2 grid points")

    def values(self) -> np.ndarray:
        return np.geomspace(self.lo, self.hi, self.points)

    @property
    def step_factor(self) -> float:
        """Ratio between consecutive grid points."""
        return (self.hi / self.lo) ** (1.0 / (self.points - 1))


def brute_mt(m: PartialReciprocalMatrix) -> float:
    """Maximum oriented triad product by a direct triple loop."""
    e, mask = m.entries, m.mask
    best = 1.0
    for i, j, k in combinations(range(m.n), 3):
        if mask[i, j] and mask[j, k] and mask[i, k]:
            p = float(e[i, j]) * float(e[j, k]) * float(e[k, i])
            best = max(best, p, 1.0 / p)
    return best


def brute_cycle_products(m: PartialReciprocalMatrix) -> list[tuple[tuple[int, ...], float]]:
    """All fully specified simple cycles (length >= 3) and their products.

    Each cycle appears once, canonicalized to start at its smallest vertex
    and to traverse toward its smaller second endpoint.
    """
    if m.n > MAX_CYCLE_N:
        raise TooLargeError(f"cycle enumeration capped at n = {MAX_CYCLE_N}, got {m.n}")
    e, mask = m.entries, m.mask
    out = []
    for size in range(3, m.n + 1):
        for verts in combinations(range(m.n), size):
            first = verts[0]
            for rest in permutations(verts[1:]):
                if rest[0] > rest[-1]:
                    continue
                cycle = (first,) + rest
                closed = cycle + (first,)
                if all(mask[a, b] for a, b in zip(closed, closed[1:])):
                    product = 1.0
                    for a, b in zip(closed, closed[1:]):
                        product *= float(e[a, b])
                    out.append((cycle, product))
    return out


@dataclass(frozen=True)
class EmpiricalInterval:
    lo: float | None
    hi: float | None
    feasible_count: int
    grid: GridSpec


def grid_interval(
    m: PartialReciprocalMatrix,
    i: int,
    k: int,
    grid: GridSpec,
    tol_cmp: float = 1e-9,
) -> EmpiricalInterval:
    """Empirically locate the values of entry (i, k) that keep mt unchanged.

    For every grid value x the measure of the matrix with (i, k) <- x is
    enumerated directly: triads not through (i, k) are unaffected, and each
    common specified neighbor j contributes the oriented pair s/x and x/s
    with s = a[i, j] * a[j, k].  Grid points whose measure stays within
    ``tol_cmp`` of the reference are reported as [min, max].
    """
    if m.mask[i, k]:
        raise EntrySpecifiedError(i, k)
    reference = brute_mt(m)
    xs = grid.values()
    worst = np.ones_like(xs)
    e, mask = m.entries, m.mask
    for j in range(m.n):
        if j in (i, k) or not (mask[i, j] and mask[j, k]):
            continue
        s = float(e[i, j]) * float(e[j, k])
        np.maximum(worst, np.maximum(s / xs, xs / s), out=worst)
    mt_by_x = np.maximum(worst, reference)
    feasible = xs[mt_by_x <= reference * (1.0 + tol_cmp)]
    if feasible.size == 0:
        return EmpiricalInterval(None, None, 0, grid)
    return EmpiricalInterval(float(feasible.min()), float(feasible.max()), int(feasible.size), grid)
