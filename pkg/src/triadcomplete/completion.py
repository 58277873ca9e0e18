"""Completion engines for partial reciprocal matrices.

Three regimes are covered:

* consistent completion when the data allows it, either entry-by-entry
  along a chordal ordering (requires every component chordal and all
  specified triads consistent) or via spanning-tree weights (requires all
  specified cycle products equal to 1, any graph);
* completion that provably does not increase the maximum triad product,
  for chordal components, by confining each filled entry to its feasible
  interval ``[s_max / mt, mt * s_min]``;
* joining disjoint diagonal blocks with a scaled rank-one off-diagonal
  block, which keeps the measure at the maximum of the blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ComponentNotChordalError,
    NeighborDisagreementError,
    NoCommonNeighborError,
    NotPCMError,
    NotPCPlusError,
)
from .graphs import Edge, SpecGraph, chordal_ordering, connected_components, is_chordal
from .matrices import (
    DEFAULT_TOL,
    CompleteReciprocalMatrix,
    PartialReciprocalMatrix,
    Tolerances,
)
from .measures import is_pc_plus, is_pcm, mt, tree_weights, triad_sets_for_entry

SELECTIONS = ("minimax", "midpoint", "lo", "hi")


@dataclass(frozen=True)
class FeasibleInterval:
    """Values for one unspecified entry that leave the mt measure unchanged.

    ``lo = s_max / mt`` and ``hi = mt * s_min``; the minimax point
    ``sqrt(s_max * s_min)`` minimizes the largest new oriented triad
    product, achieving ``sqrt(s_max / s_min)``.  With no constraining
    neighbor the interval is the sentinel (0, inf) with minimax 1.
    """

    lo: float
    hi: float
    minimax: float
    mt_context: float

    @property
    def unconstrained(self) -> bool:
        return self.lo == 0.0

    @property
    def minimax_value(self) -> float:
        """Largest new oriented triad product at the minimax point."""
        if self.unconstrained:
            return 1.0
        return self.mt_context * math.sqrt(self.lo / self.hi)


@dataclass(frozen=True)
class CompletionStep:
    edge: Edge
    interval: FeasibleInterval
    value: float
    mt_before: float
    mt_after: float


@dataclass(frozen=True)
class BlockJoin:
    """Record of one cross-component fill: C = scale * u * (1/v)^T."""

    block_a: tuple[int, ...]
    block_b: tuple[int, ...]
    u_vertex: int
    v_vertex: int
    scale: float


@dataclass(frozen=True)
class CompletionReport:
    steps: tuple[CompletionStep, ...]
    joins: tuple[BlockJoin, ...]
    result: CompleteReciprocalMatrix


def feasible_interval(
    m: PartialReciprocalMatrix, i: int, k: int, tol: Tolerances = DEFAULT_TOL
) -> FeasibleInterval:
    """Interval of values for entry (i, k) that keep mt at its current value.

    Meaningful when adding {i, k} is a chordal-ordering step (or the entry
    is the only missing one); non-emptiness is then guaranteed because any
    two constraining products differ by at most mt**2.
    """
    ts = triad_sets_for_entry(m, i, k)
    context = mt(m)
    if ts.is_unconstrained:
        return FeasibleInterval(0.0, math.inf, 1.0, context)
    return FeasibleInterval(
        lo=ts.s_max / context,
        hi=context * ts.s_min,
        minimax=math.sqrt(ts.s_max * ts.s_min),
        mt_context=context,
    )


def select_value(interval: FeasibleInterval, selection: str) -> float:
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection rule {selection!r}; expected one of {SELECTIONS}")
    if interval.unconstrained:
        return 1.0
    if selection == "minimax":
        return interval.minimax
    if selection == "midpoint":
        return 0.5 * (interval.lo + interval.hi)
    return interval.lo if selection == "lo" else interval.hi


def complete_one_entry_consistent(
    m: PartialReciprocalMatrix, i: int, k: int, tol: Tolerances = DEFAULT_TOL
) -> float:
    """The unique value for (i, k) that keeps the data consistent.

    Requires at least one common specified neighbor j; the value is
    a[i, j] * a[j, k] for the smallest such j, and all neighbors must agree
    on it within ``tol.cons``.
    """
    i, k = (i, k) if i < k else (k, i)
    ts = triad_sets_for_entry(m, i, k)
    if not ts.s:
        raise NoCommonNeighborError(i, k)
    x = ts.s[0][1]
    for _, s in ts.s[1:]:
        if abs(s / x - 1.0) > tol.cons:
            raise NeighborDisagreementError(i, k, [s for _, s in ts.s])
    return x


def _fill(entries: np.ndarray, mask: np.ndarray, i: int, k: int, value: float) -> None:
    entries[i, k] = value
    entries[k, i] = 1.0 / value
    mask[i, k] = mask[k, i] = True


def _check_components_chordal(g: SpecGraph) -> list[tuple[int, ...]]:
    comps = connected_components(g)
    for comp in comps:
        ok, witness = is_chordal(g.induced(comp))
        if not ok:
            raise ComponentNotChordalError(comp, tuple(comp[v] for v in witness))
    return comps


def _component_orderings(
    g: SpecGraph, comps, lowest_first: bool
) -> list[tuple[tuple[int, ...], list[Edge]]]:
    out = []
    for comp in comps:
        ordering = chordal_ordering(g.induced(comp), lowest_first=lowest_first)
        out.append((comp, [(comp[a], comp[b]) for a, b in ordering]))
    return out


def _join_components(
    entries: np.ndarray,
    mask: np.ndarray,
    comps,
    scale: float = 1.0,
    u_index: int = 0,
    v_index: int = 0,
) -> list[BlockJoin]:
    """Fill all cross-component entries, merging components left to right.

    The off-diagonal block between the merged part and the next component
    is ``scale * u * (1/v)^T`` with u the merged block's column at its
    ``u_index``-th vertex and v the new block's column at its ``v_index``-th
    vertex.  Every mixed triad product then collapses onto a product from a
    single block, so the measure stays at the maximum over the blocks.
    """
    joins: list[BlockJoin] = []
    merged = list(comps[0])
    for comp in comps[1:]:
        if not (0 <= u_index < len(merged) and 0 <= v_index < len(comp)):
            raise IndexError("join column index out of range for a block")
        r = merged[u_index]
        s = comp[v_index]
        for i in merged:
            for j in comp:
                value = scale * float(entries[i, r]) * float(entries[s, j])
                _fill(entries, mask, i, j, value)
        joins.append(BlockJoin(tuple(merged), tuple(comp), r, s, scale))
        merged = sorted(merged + list(comp))
    return joins


def complete_consistent_chordal(
    m: PartialReciprocalMatrix,
    tol: Tolerances = DEFAULT_TOL,
    lowest_first: bool = False,
    join_scale: float = 1.0,
    join_u: int = 0,
    join_v: int = 0,
) -> CompleteReciprocalMatrix:
    """Consistent completion along chordal orderings, one entry at a time.

    Requires all specified triads consistent and every component chordal.
    The completion is unique per connected component (it does not depend on
    the ordering); across components there is a free scale per join, unit
    by default.
    """
    if not is_pcm(m, tol):
        raise NotPCMError(f"specified triads are inconsistent (mt = {mt(m)!r})")
    g = SpecGraph.from_matrix(m)
    comps = _check_components_chordal(g)
    entries = np.array(m.entries)
    mask = np.array(m.mask)
    for comp, edges in _component_orderings(g, comps, lowest_first):
        for i, k in edges:
            current = PartialReciprocalMatrix(entries, mask)
            _fill(entries, mask, i, k, complete_one_entry_consistent(current, i, k, tol))
    _join_components(entries, mask, comps, join_scale, join_u, join_v)
    return PartialReciprocalMatrix(entries, mask).to_complete()


def complete_consistent_pc_plus(
    m: PartialReciprocalMatrix,
    tol: Tolerances = DEFAULT_TOL,
    join_scale: float = 1.0,
    join_u: int = 0,
    join_v: int = 0,
) -> CompleteReciprocalMatrix:
    """Consistent completion from spanning-tree weights, for any graph.

    Requires every fully specified cycle product to equal 1.  Within each
    component the completion w[i] / w[j] is unique and agrees with all
    specified entries; across components there is a free scale per join,
    unit by default.
    """
    ok, witness = is_pc_plus(m, tol)
    if not ok:
        raise NotPCPlusError(witness)
    entries = np.array(m.entries)
    mask = np.array(m.mask)
    g = SpecGraph.from_matrix(m)
    comps = connected_components(g)
    for comp in comps:
        w = tree_weights(m, comp)
        for i in comp:
            for j in comp:
                if j > i and not mask[i, j]:
                    _fill(entries, mask, i, j, w[i] / w[j])
    _join_components(entries, mask, comps, join_scale, join_u, join_v)
    return PartialReciprocalMatrix(entries, mask).to_complete()


def join_blocks(
    a: CompleteReciprocalMatrix,
    b: CompleteReciprocalMatrix,
    u_col: int = 0,
    v_col: int = 0,
    k: float = 1.0,
) -> CompleteReciprocalMatrix:
    """Stack two complete blocks with off-diagonal block k * u * (1/v)^T.

    ``u`` is column ``u_col`` of ``a`` and ``v`` column ``v_col`` of ``b``.
    The result's measure equals the larger of the blocks' measures, and the
    result is consistent whenever both blocks are.
    """
    if not k > 0.0:
        raise ValueError(f"scale k must be positive, got {k!r}")
    if not 0 <= u_col < a.n:
        raise IndexError(f"u_col {u_col} out of range for a {a.n}x{a.n} block")
    if not 0 <= v_col < b.n:
        raise IndexError(f"v_col {v_col} out of range for a {b.n}x{b.n} block")
    n1, n2 = a.n, b.n
    entries = np.empty((n1 + n2, n1 + n2))
    entries[:n1, :n1] = a.entries
    entries[n1:, n1:] = b.entries
    cross = k * np.outer(a.entries[:, u_col], 1.0 / b.entries[:, v_col])
    entries[:n1, n1:] = cross
    entries[n1:, :n1] = (1.0 / cross).T
    return PartialReciprocalMatrix(entries, np.ones_like(entries, dtype=bool)).to_complete()


def complete_mt_preserving(
    m: PartialReciprocalMatrix,
    selection: str = "minimax",
    tol: Tolerances = DEFAULT_TOL,
    lowest_first: bool = False,
    join_scale: float = 1.0,
    join_u: int = 0,
    join_v: int = 0,
) -> CompletionReport:
    """Complete so the maximum triad product does not increase.

    Requires every component chordal.  Entries are filled along a chordal
    ordering; each step draws its value from the feasible interval computed
    against the evolving partial matrix's current measure, so the measure
    is preserved step by step.  Disconnected components are joined with a
    rank-one block (defaults: first columns, unit scale).
    """
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection rule {selection!r}; expected one of {SELECTIONS}")
    g = SpecGraph.from_matrix(m)
    comps = _check_components_chordal(g)
    entries = np.array(m.entries)
    mask = np.array(m.mask)
    steps: list[CompletionStep] = []
    for _, edges in _component_orderings(g, comps, lowest_first):
        for i, k in edges:
            current = PartialReciprocalMatrix(entries, mask)
            # Chord-forcing sanity check: common neighbors of a chordal-step
            # edge must be pairwise adjacent, which is what bounds the
            # spread of the constraining products.
            neighbors = [j for j in range(m.n) if mask[i, j] and mask[j, k] and j not in (i, k)]
            assert all(
                mask[j1, j2] for a_, j1 in enumerate(neighbors) for j2 in neighbors[a_ + 1 :]
            ), f"common neighbors of {(i, k)} are not pairwise adjacent"
            interval = feasible_interval(current, i, k, tol)
            assert interval.lo <= interval.hi * (1.0 + tol.cmp), (
                f"empty feasible interval at {(i, k)}: {interval}"
            )
            value = select_value(interval, selection)
            _fill(entries, mask, i, k, value)
            after = mt(PartialReciprocalMatrix(entries, mask))
            assert after <= interval.mt_context * (1.0 + tol.cmp), (
                f"measure increased at {(i, k)}: {interval.mt_context} -> {after}"
            )
            steps.append(CompletionStep((i, k), interval, value, interval.mt_context, after))
    joins = _join_components(entries, mask, comps, join_scale, join_u, join_v)
    result = PartialReciprocalMatrix(entries, mask).to_complete()
    return CompletionReport(tuple(steps), tuple(joins), result)
