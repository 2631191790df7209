import random

import pytest

from domset import (
    Graph,
    Solution,
    SwapBudget,
    SwapMove,
    backward_prune,
    compute_cover_counts,
    gnp,
    greedy_ln,
    safety_patch,
    swap_phase,
    try_one_swap,
    uniquely_covered,
    verify,
)

from conftest import cycle_graph, path_graph, star_graph


def test_swap_budget_validation():
    with pytest.raises(ValueError):
        SwapBudget(attempt_cap=0)
    with pytest.raises(ValueError):
        SwapBudget(attempt_cap=1, time_budget_ms=0)
    SwapBudget(attempt_cap=1, time_budget_ms=None)  # attempt-counted mode


def test_uniquely_covered_sole_dominator():
    g = star_graph(3)
    counts = compute_cover_counts(g, Solution.from_members(4, [0]))
    assert sorted(uniquely_covered(g, counts, 0)) == [0, 1, 2, 3]


def test_uniquely_covered_fully_shadowed():
    g = path_graph(3)
    counts = compute_cover_counts(g, Solution.from_members(3, [0, 1]))
    assert uniquely_covered(g, counts, 0) == []


def test_try_one_swap_free_removal():
    # P4 with D = {0, 2, 3}: member 3 covers nothing uniquely, so it just goes.
    g = path_graph(4)
    sol = Solution.from_members(4, [0, 2, 3])
    counts = compute_cover_counts(g, sol)
    assert uniquely_covered(g, counts, 3) == []
    move = try_one_swap(g, sol, counts, 3)
    assert move == SwapMove(removed=3, added=None)
    assert sorted(sol.members) == [0, 2]
    assert verify(g, sol).valid
    assert counts == compute_cover_counts(g, sol)


def test_try_one_swap_no_candidate_leaves_state_alone():
    g = star_graph(3)
    sol = Solution.from_members(4, [0])
    counts = compute_cover_counts(g, sol)
    before_members = list(sol.members)
    before_counts = list(counts)
    assert try_one_swap(g, sol, counts, 0) is None
    assert sol.members == before_members
    assert counts == before_counts


def test_try_one_swap_exchange_on_cycle():
    # C4 with D = {0, 2}: vertex 0 uniquely covers itself; neighbor 1 covers
    # {0, 1, 2} which includes it, so 0 is exchanged for 1.
    g = cycle_graph(4)
    sol = Solution.from_members(4, [0, 2])
    counts = compute_cover_counts(g, sol)
    assert uniquely_covered(g, counts, 0) == [0]
    move = try_one_swap(g, sol, counts, 0)
    assert move == SwapMove(removed=0, added=1)
    assert sorted(sol.members) == [1, 2]
    assert len(sol) == 2
    assert verify(g, sol).valid
    assert counts == compute_cover_counts(g, sol)


def test_swap_phase_expired_budget_changes_nothing():
    g = cycle_graph(8)
    sol = greedy_ln(g)
    counts = compute_cover_counts(g, sol)
    before = list(sol.members)
    swap_phase(g, sol, counts, SwapBudget(attempt_cap=10, time_budget_ms=1e-9))
    assert sol.members == before


def test_swap_phase_fixpoint_stops_early():
    g = star_graph(5)
    sol = Solution.from_members(6, [0])
    counts = compute_cover_counts(g, sol)
    swap_phase(g, sol, counts, SwapBudget(attempt_cap=50, time_budget_ms=None))
    assert sol.members == [0]


def test_swap_phase_never_grows_and_stays_valid():
    rng = random.Random(808)
    for _ in range(30):
        g = gnp(rng.randint(1, 40), rng.uniform(0.05, 0.4), rng.randrange(10**6))
        sol = greedy_ln(g)
        counts = compute_cover_counts(g, sol)
        backward_prune(g, sol, counts)
        size_after_prune = len(sol)
        swap_phase(g, sol, counts, SwapBudget(attempt_cap=8, time_budget_ms=None), debug=True)
        assert len(sol) <= size_after_prune
        assert verify(g, sol).valid
        assert counts == compute_cover_counts(g, sol)


def test_swap_phase_deterministic():
    g = gnp(12, 0.3, seed=9)
    runs = []
    for _ in range(2):
        sol = greedy_ln(g)
        counts = compute_cover_counts(g, sol)
        backward_prune(g, sol, counts)
        swap_phase(g, sol, counts, SwapBudget(attempt_cap=20, time_budget_ms=None), rng=random.Random(7))
        runs.append(list(sol.members))
    assert runs[0] == runs[1]


def test_safety_patch_valid_solution_untouched():
    g = path_graph(5)
    sol = greedy_ln(g)
    before = list(sol.members)
    assert safety_patch(g, sol) == 0
    assert sol.members == before


def test_safety_patch_repairs_empty_solution():
    g = star_graph(3)
    sol = Solution(4)
    assert safety_patch(g, sol) == 1
    assert sol.members == [0]  # the center covers all four vertices


def test_safety_patch_isolates():
    g = Graph.from_edges(2, [])
    sol = Solution(2)
    assert safety_patch(g, sol) == 2
    assert verify(g, sol).valid


def test_safety_patch_always_terminates_valid():
    rng = random.Random(55)
    for _ in range(30):
        g = gnp(rng.randint(1, 40), rng.uniform(0, 0.3), rng.randrange(10**6))
        sol = Solution(g.n)
        # random partial garbage
        for v in range(g.n):
            if rng.random() < 0.2:
                sol.add(v)
        added = safety_patch(g, sol)
        assert added <= g.n
        assert verify(g, sol).valid
