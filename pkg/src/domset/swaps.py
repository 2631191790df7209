"""Budgeted 1-swap local improvement and the final greedy repair."""

from __future__ import annotations

import random
import threading
import time
from dataclasses import dataclass

from .graph import Graph, Solution
from .pruning import CoverCounts, backward_prune, compute_cover_counts

__all__ = ["SwapBudget", "SwapMove", "uniquely_covered", "try_one_swap", "swap_phase", "safety_patch"]

# Wall clock is polled once per this many candidate checks to keep timer
# overhead negligible relative to the work it bounds.
_TIME_CHECK_BATCH = 64


@dataclass(frozen=True)
class SwapBudget:
    """Stops the swap phase at whichever of the two limits is hit first.

    ``time_budget_ms=None`` disables the wall clock entirely (attempt-counted
    mode, used for reproducible runs).
    """

    attempt_cap: int
    time_budget_ms: float | None = None

    def __post_init__(self) -> None:
        if self.attempt_cap < 1:
            raise ValueError(f"attempt_cap must be strictly positive, got {self.attempt_cap}")
        if self.time_budget_ms is not None and self.time_budget_ms <= 0:
            raise ValueError(f"time_budget_ms must be strictly positive, got {self.time_budget_ms}")


@dataclass(frozen=True)
class SwapMove:
    """An applied move: ``added is None`` means ``removed`` came out for free."""

    removed: int
    added: int | None


def uniquely_covered(g: Graph, counts: CoverCounts, w: int) -> list[int]:
    """Vertices in N[w] that ``w`` is the only dominator of."""
    off = g.off
    out = [w] if counts[w] == 1 else []
    for x in g.nbr[off[w] : off[w + 1]]:
        if counts[x] == 1:
            out.append(x)
    return out


def _drop_member(g: Graph, sol: Solution, counts: CoverCounts, w: int) -> None:
    off = g.off
    counts[w] -= 1
    for x in g.nbr[off[w] : off[w + 1]]:
        counts[x] -= 1
    sol.remove(w)


def try_one_swap(g: Graph, sol: Solution, counts: CoverCounts, w: int) -> SwapMove | None:
    """Attempt to shrink or exchange member ``w``.

    If nothing is uniquely covered by ``w`` it is simply removed. Otherwise
    the candidates t in N(w) outside the set are scanned in adjacency order
    for those whose closed neighborhood contains everything uniquely
    covered; among them the one absorbing the most uniquely covered
    vertices overall wins (first in adjacency order on ties), since every
    uniqueness it erases is a future pruning opportunity. Returns the
    applied move, or None with the state untouched.
    """
    unique = uniquely_covered(g, counts, w)
    if not unique:
        _drop_member(g, sol, counts, w)
        return SwapMove(w, None)
    off = g.off
    nbr = g.nbr
    in_set = sol.in_set
    uset = set(unique)
    need = len(uset)
    best_t = -1
    best_absorbed = -1
    for t in nbr[off[w] : off[w + 1]]:
        if in_set[t]:
            continue
        hits = 1 if t in uset else 0
        absorbed = 1 if counts[t] == 1 else 0
        for y in nbr[off[t] : off[t + 1]]:
            if counts[y] == 1:
                absorbed += 1
                if y in uset:
                    hits += 1
        if hits == need and absorbed > best_absorbed:
            best_t = t
            best_absorbed = absorbed
    if best_t < 0:
        return None
    _drop_member(g, sol, counts, w)
    counts[best_t] += 1
    for y in nbr[off[best_t] : off[best_t + 1]]:
        counts[y] += 1
    sol.add(best_t)
    return SwapMove(w, best_t)


def swap_phase(
    g: Graph,
    sol: Solution,
    counts: CoverCounts,
    budget: SwapBudget,
    rng: random.Random | None = None,
    stop: threading.Event | None = None,
    debug: bool = False,
) -> None:
    """Sweep the members in insertion order attempting one swap each, for at
    most ``attempt_cap`` sweeps or until the time budget runs out.

    After every applied swap a backward prune pass harvests follow-on
    removals, so the set size never increases. Each sweep visits the members
    in an order shuffled by ``rng`` (insertion order when no rng is given),
    which keeps the equal-size exchanges walking new plateaus instead of
    oscillating; a seeded rng makes the phase reproducible. A sweep that
    applies nothing visited every member against an unchanged state, so it
    proves a fixpoint for any order and ends the phase early. ``debug``
    revalidates the incremental counts against a fresh recomputation after
    every applied swap.
    """
    deadline = None
    if budget.time_budget_ms is not None:
        deadline = time.perf_counter() + budget.time_budget_ms / 1000.0
    in_set = sol.in_set
    degree = g.degree
    checks = 0
    for _ in range(budget.attempt_cap):
        if deadline is not None and time.perf_counter() >= deadline:
            return
        if stop is not None and stop.is_set():
            return
        order = list(sol.members)
        if rng is not None:
            rng.shuffle(order)
        changed = False
        for w in order:
            if not in_set[w]:
                continue
            checks += degree[w] + 1
            if checks >= _TIME_CHECK_BATCH:
                checks = 0
                if deadline is not None and time.perf_counter() >= deadline:
                    return
                if stop is not None and stop.is_set():
                    return
            if try_one_swap(g, sol, counts, w) is not None:
                changed = True
                backward_prune(g, sol, counts)
                if debug:
                    assert counts == compute_cover_counts(g, sol), "incremental cover counts drifted"
        if not changed:
            return


def safety_patch(g: Graph, sol: Solution) -> int:
    """Recompute domination from scratch and greedily repair any gaps.

    While uncovered vertices remain, adds the vertex covering the most of
    them among the closed neighborhoods of the uncovered ones (ties toward
    the smaller ID). Returns how many vertices were added; 0 on an already
    valid solution.
    """
    n = g.n
    off = g.off
    nbr = g.nbr
    dominated = [False] * n
    for d in sol.members:
        dominated[d] = True
        for x in nbr[off[d] : off[d + 1]]:
            dominated[x] = True
    uncovered = {v for v in range(n) if not dominated[v]}
    added = 0
    while uncovered:
        best_v = -1
        best_gain = 0
        seen: set[int] = set()
        for u in uncovered:
            for c in (u, *nbr[off[u] : off[u + 1]]):
                if c in seen:
                    continue
                seen.add(c)
                gain = 1 if c in uncovered else 0
                for y in nbr[off[c] : off[c + 1]]:
                    if y in uncovered:
                        gain += 1
                if gain > best_gain or (gain == best_gain and c < best_v):
                    best_gain = gain
                    best_v = c
        sol.add(best_v)
        added += 1
        uncovered.discard(best_v)
        uncovered.difference_update(nbr[off[best_v] : off[best_v + 1]])
    return added
