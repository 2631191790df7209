"""Redundancy removal: cover counting and the reverse-insertion prune pass."""

from __future__ import annotations

from .graph import Graph, Solution

__all__ = ["CoverCounts", "compute_cover_counts", "backward_prune"]

# cover_count[x] = number of chosen dominators whose closed neighborhood
# contains x; domination holds iff every entry is >= 1.
CoverCounts = list[int]


def compute_cover_counts(g: Graph, sol: Solution) -> CoverCounts:
    counts = [0] * g.n
    off = g.off
    nbr = g.nbr
    for d in sol.members:
        counts[d] += 1
        for x in nbr[off[d] : off[d + 1]]:
            counts[x] += 1
    return counts


def backward_prune(g: Graph, sol: Solution, counts: CoverCounts) -> Solution:
    """Single newest-first pass removing every member whose closed
    neighborhood is still covered at least twice.

    Counts are maintained live, so members that only become redundant
    through removals later in the scan are still caught. Survivors keep
    their relative insertion order; the pass mutates ``sol`` and ``counts``
    in place and returns ``sol``.
    """
    members = sol.members
    in_set = sol.in_set
    off = g.off
    nbr = g.nbr
    removed = False
    for i in range(len(members) - 1, -1, -1):
        v = members[i]
        if counts[v] < 2:
            continue
        redundant = True
        for x in nbr[off[v] : off[v + 1]]:
            if counts[x] < 2:
                redundant = False
                break
        if redundant:
            in_set[v] = False
            counts[v] -= 1
            for x in nbr[off[v] : off[v + 1]]:
                counts[x] -= 1
            members[i] = -1
            removed = True
    if removed:
        members[:] = [v for v in members if v >= 0]
    return sol
