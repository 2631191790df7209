"""Greedy-seeded simulated annealing over feasible dominating sets.

Moves are vertex removals (always accepted), size-neutral exchanges
(always accepted), and additions (accepted with probability exp(-1/T));
every accepted state keeps full domination, and the best state seen is
what comes back.
"""

from __future__ import annotations

import math
import random
import threading
import time
from dataclasses import dataclass

from .graph import Graph, Solution
from .pruning import compute_cover_counts
from .verification import verify

__all__ = ["AnnealConfig", "decay", "sa_solve", "TEMPERATURE_FLOOR"]

TEMPERATURE_FLOOR = 1e-6

# removal : exchange : addition proposal mix.
_P_REMOVAL = 0.4
_P_EXCHANGE = 0.8


@dataclass
class AnnealConfig:
    """Schedule and budget for one annealing run.

    ``moves_per_epoch=None`` resolves to max(100, n) at solve time. At least
    one of ``time_budget_ms`` / ``max_epochs`` must bound the run;
    ``time_budget_ms=0`` is allowed and means "no moves at all".
    """

    initial_temperature: float = 1.0
    cooling_factor: float = 0.995
    moves_per_epoch: int | None = None
    seed: int = 0
    time_budget_ms: float | None = None
    max_epochs: int | None = None

    def __post_init__(self) -> None:
        if self.initial_temperature <= 0:
            raise ValueError("initial_temperature must be positive")
        if not 0.0 < self.cooling_factor < 1.0:
            raise ValueError("cooling_factor must lie in (0, 1)")
        if self.moves_per_epoch is not None and self.moves_per_epoch < 1:
            raise ValueError("moves_per_epoch must be positive")
        if self.time_budget_ms is not None and self.time_budget_ms < 0:
            raise ValueError("time_budget_ms must be non-negative")
        if self.max_epochs is not None and self.max_epochs < 0:
            raise ValueError("max_epochs must be non-negative")
        if self.time_budget_ms is None and self.max_epochs is None:
            raise ValueError("set time_budget_ms or max_epochs so the run terminates")


def decay(temperature: float, cfg: AnnealConfig) -> float:
    """Geometric cooling applied after each epoch, clamped at the floor."""
    return max(temperature * cfg.cooling_factor, TEMPERATURE_FLOOR)


def sa_solve(
    g: Graph,
    seed_solution: Solution,
    cfg: AnnealConfig,
    stop: threading.Event | None = None,
    validate_each_move: bool = False,
) -> Solution:
    """Anneal from a feasible seed; returns the smallest dominating set seen.

    Raises ValueError if the seed does not dominate. ``validate_each_move``
    re-verifies feasibility after every accepted move (tests only; the
    normal path relies on the incremental cover counts).
    """
    report = verify(g, seed_solution)
    if not report.valid:
        raise ValueError(f"seed solution is not dominating (vertex {report.first_uncovered} uncovered)")
    n = g.n
    if n == 0:
        return seed_solution.copy()

    counts = compute_cover_counts(g, seed_solution)
    cur = list(seed_solution.members)
    pos = {v: i for i, v in enumerate(cur)}
    in_set = list(seed_solution.in_set)
    best = list(cur)
    off = g.off
    nbr = g.nbr
    rng = random.Random(cfg.seed)
    moves_per_epoch = cfg.moves_per_epoch if cfg.moves_per_epoch is not None else max(100, n)
    temperature = cfg.initial_temperature

    deadline = None
    if cfg.time_budget_ms is not None:
        deadline = time.perf_counter() + cfg.time_budget_ms / 1000.0

    def feasible() -> bool:
        return all(c >= 1 for c in counts)

    def drop(d: int) -> None:
        counts[d] -= 1
        for x in nbr[off[d] : off[d + 1]]:
            counts[x] -= 1
        in_set[d] = False
        i = pos.pop(d)
        last = cur.pop()
        if last != d:
            cur[i] = last
            pos[last] = i

    def put(t: int) -> None:
        counts[t] += 1
        for x in nbr[off[t] : off[t + 1]]:
            counts[x] += 1
        in_set[t] = True
        pos[t] = len(cur)
        cur.append(t)

    epoch = 0
    out_of_time = deadline is not None and time.perf_counter() >= deadline
    while not out_of_time:
        if cfg.max_epochs is not None and epoch >= cfg.max_epochs:
            break
        if stop is not None and stop.is_set():
            break
        for step in range(moves_per_epoch):
            if deadline is not None and (step & 255) == 0 and time.perf_counter() >= deadline:
                out_of_time = True
                break
            r = rng.random()
            if r < _P_REMOVAL:
                if not cur:
                    continue
                d = cur[rng.randrange(len(cur))]
                removable = counts[d] >= 2
                if removable:
                    for x in nbr[off[d] : off[d + 1]]:
                        if counts[x] < 2:
                            removable = False
                            break
                if not removable:
                    continue
                drop(d)
            elif r < _P_EXCHANGE:
                if not cur:
                    continue
                d = cur[rng.randrange(len(cur))]
                cands = [t for t in nbr[off[d] : off[d + 1]] if not in_set[t]]
                if not cands:
                    continue
                t = cands[rng.randrange(len(cands))]
                unique = [d] if counts[d] == 1 else []
                for x in nbr[off[d] : off[d + 1]]:
                    if counts[x] == 1:
                        unique.append(x)
                if unique:
                    uset = set(unique)
                    hits = 1 if t in uset else 0
                    for y in nbr[off[t] : off[t + 1]]:
                        if y in uset:
                            hits += 1
                    if hits != len(uset):
                        continue
                drop(d)
                put(t)
            else:
                if len(cur) == n:
                    continue
                t = -1
                for _ in range(8):
                    c = rng.randrange(n)
                    if not in_set[c]:
                        t = c
                        break
                if t < 0:
                    continue
                if rng.random() >= math.exp(-1.0 / temperature):
                    continue
                put(t)
            if validate_each_move:
                assert feasible(), "annealing move broke domination"
            if len(cur) < len(best):
                best = list(cur)
        if not feasible():
            raise RuntimeError("internal error: annealing state lost domination")
        temperature = decay(temperature, cfg)
        epoch += 1
    return Solution.from_members(n, best)
