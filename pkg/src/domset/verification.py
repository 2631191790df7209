"""Domination checking and the exact small-instance oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, Solution

__all__ = ["VerifyReport", "verify", "brute_force_optimum", "ORACLE_MAX_N"]

ORACLE_MAX_N = 24


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    first_uncovered: int | None
    size: int


def verify(g: Graph, sol: Solution) -> VerifyReport:
    """Check that every vertex is dominated; reports the smallest uncovered
    vertex (0-indexed) otherwise. Raises ValueError on out-of-range members."""
    n = g.n
    dominated = [False] * n
    off = g.off
    nbr = g.nbr
    for d in sol.members:
        if not 0 <= d < n:
            raise ValueError(f"solution member {d} out of range 0..{n - 1}")
        dominated[d] = True
        for x in nbr[off[d] : off[d + 1]]:
            dominated[x] = True
    first = next((v for v in range(n) if not dominated[v]), None)
    return VerifyReport(valid=first is None, first_uncovered=first, size=len(sol.members))


def brute_force_optimum(g: Graph) -> tuple[int, list[int]]:
    """Exact domination number with one witness, for graphs up to 24 vertices.

    Iterative-deepening search over closed-neighborhood bitmasks: at each
    node the lowest uncovered vertex is picked and only its possible
    dominators are branched on, with an admissible coverage bound for
    pruning. Exponential in the worst case, instant at oracle scale.
    """
    n = g.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    if n == 0:
        return 0, []
    off = g.off
    nbr = g.nbr
    masks = []
    for v in range(n):
        mask = 1 << v
        for x in nbr[off[v] : off[v + 1]]:
            mask |= 1 << x
        masks.append(mask)
    full = (1 << n) - 1
    max_cover = max(mask.bit_count() for mask in masks)
    chosen: list[int] = []

    def dfs(uncovered: int, depth: int) -> bool:
        if uncovered == 0:
            return True
        if depth == 0 or uncovered.bit_count() > depth * max_cover:
            return False
        x = (uncovered & -uncovered).bit_length() - 1
        for v in (x, *nbr[off[x] : off[x + 1]]):
            chosen.append(v)
            if dfs(uncovered & ~masks[v], depth - 1):
                return True
            chosen.pop()
        return False

    for k in range(n + 1):
        if dfs(full, k):
            return k, list(chosen)
    raise AssertionError("unreachable: the full vertex set always dominates")
