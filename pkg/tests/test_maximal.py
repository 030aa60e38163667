"""Maximal factorization via odd cycle transversals."""
import itertools
import logging

import pytest

import ordfactor as of
from ordfactor.context import IncidencePair
from ordfactor.incompat import IncompatibilityGraph
from ordfactor.maximal import max_bipartite_subset
from ordfactor.oracle import GeneratorSpec, random_context

from conftest import induced_bipartite


def _graph(n, edges):
    vertices = tuple(IncidencePair(0, i) for i in range(n))
    adjacency = [0] * n
    for i, j in edges:
        adjacency[i] |= 1 << j
        adjacency[j] |= 1 << i
    return IncompatibilityGraph(vertices, tuple(adjacency))


def _brute_min_oct(graph, limit):
    """Smallest deleted vertex count that leaves a bipartite induced
    subgraph, trying sizes 0..limit; the lexicographically smallest
    witness set of that size is returned alongside."""
    for size in range(limit + 1):
        for combo in itertools.combinations(range(graph.n), size):
            if induced_bipartite(graph, set(combo)):
                return size, combo
    return None


def test_bipartite_graph_needs_no_deletion(contranominal3):
    graph = of.build_incompatibility_graph(contranominal3)
    solution = max_bipartite_subset(graph, mode="exact")
    assert solution.deleted == frozenset()
    assert solution.kept == frozenset(graph.vertices)
    assert solution.optimal


def test_triangle_deletes_lexicographically_smallest_vertex():
    graph = _graph(3, [(0, 1), (1, 2), (0, 2)])
    solution = max_bipartite_subset(graph, mode="exact")
    assert solution.deleted == {IncidencePair(0, 0)}


def test_five_cycle_deletes_one_vertex():
    graph = _graph(5, [(i, (i + 1) % 5) for i in range(5)])
    solution = max_bipartite_subset(graph, mode="exact")
    assert len(solution.deleted) == 1
    assert solution.deleted == {IncidencePair(0, 0)}


def test_two_disjoint_triangles():
    graph = _graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    solution = max_bipartite_subset(graph, mode="exact")
    assert solution.deleted == {IncidencePair(0, 0), IncidencePair(0, 3)}


def test_exact_matches_brute_force_on_random_graphs():
    checked = 0
    for seed in range(60):
        ctx = random_context(
            GeneratorSpec(
                objects=3 + seed % 3,
                attributes=4 + seed % 2,
                density=0.35 + 0.08 * (seed % 4),
                seed=1000 + seed,
            )
        )
        graph = of.build_incompatibility_graph(ctx)
        if graph.n > 20:
            continue
        solution = max_bipartite_subset(graph, mode="exact")
        deleted_idx = {graph.vertex_index(p) for p in solution.deleted}
        assert induced_bipartite(graph, deleted_idx)
        if len(solution.deleted) <= 3:
            brute = _brute_min_oct(graph, len(solution.deleted))
            assert brute is not None
            size, witness = brute
            assert size == len(solution.deleted)
            # both tie-break lexicographically, so the sets agree
            assert tuple(sorted(deleted_idx)) == witness
            checked += 1
    assert checked >= 25


def test_heuristic_never_beats_exact():
    for seed in range(25):
        ctx = random_context(
            GeneratorSpec(objects=4, attributes=5, density=0.4, seed=seed)
        )
        graph = of.build_incompatibility_graph(ctx)
        exact = max_bipartite_subset(graph, mode="exact")
        heur = max_bipartite_subset(graph, mode="heuristic", seed=3)
        deleted_idx = {graph.vertex_index(p) for p in heur.deleted}
        assert induced_bipartite(graph, deleted_idx)
        assert not heur.optimal
        assert len(heur.deleted) >= len(exact.deleted)


def test_heuristic_deterministic_per_seed(monuments):
    graph = of.build_incompatibility_graph(monuments)
    first = max_bipartite_subset(graph, mode="heuristic", seed=5)
    second = max_bipartite_subset(graph, mode="heuristic", seed=5)
    assert first.deleted == second.deleted


def test_unknown_mode_rejected(contranominal3):
    graph = of.build_incompatibility_graph(contranominal3)
    with pytest.raises(ValueError):
        max_bipartite_subset(graph, mode="quantum")


def test_monuments_exact_removal(monuments):
    result = of.maximal_two_factorization(monuments, mode="exact")
    removed = {
        (monuments.objects[g], monuments.attributes[m])
        for g, m in result.removed
    }
    assert removed == {
        ("Temple of Romulus", "GB1"),
        ("Basilica of Maxentius", "B"),
    }
    assert result.rounds == 1
    assert result.certificate
    assert of.validate_factorization(monuments, result) == []
    assert len(result.covered) == 42


def test_monuments_exact_deterministic(monuments):
    first = of.maximal_two_factorization(monuments, mode="exact")
    second = of.maximal_two_factorization(monuments, mode="exact")
    assert first == second


def test_factorizable_context_passes_through(forced_overlap):
    direct = of.two_factorize(forced_overlap)
    looped = of.maximal_two_factorization(forced_overlap, mode="exact")
    assert looped == direct
    assert looped.removed == frozenset()
    assert looped.rounds == 0
    assert looped.certificate


def test_certify_global_optimality(monuments, forced_overlap):
    exact = of.maximal_two_factorization(monuments, mode="exact")
    assert of.certify_global_optimality(monuments, exact)
    clean = of.maximal_two_factorization(forced_overlap, mode="exact")
    assert of.certify_global_optimality(forced_overlap, clean)


def test_certify_rejects_oversized_heuristic_removals(monuments):
    for seed in range(6):
        heur = of.maximal_two_factorization(
            monuments, mode="heuristic", seed=seed
        )
        assert of.validate_factorization(monuments, heur) == []
        assert not heur.certificate
        claim = of.certify_global_optimality(monuments, heur)
        assert claim == (len(heur.removed) == 2)


def test_persistent_fixture_heuristic_pinned(persistent_odd_cycle):
    """Regression pin for the 18x18 counterexample: the seed-0 heuristic
    run removes 74 incidences over 3 transversal rounds."""
    result = of.maximal_two_factorization(
        persistent_odd_cycle, mode="heuristic", seed=0
    )
    assert of.validate_factorization(persistent_odd_cycle, result) == []
    assert len(result.removed) == 74
    assert result.rounds == 3
    assert not result.certificate


def test_persistent_fixture_logs_multi_round_event(
    persistent_odd_cycle, caplog
):
    with caplog.at_level(logging.INFO, logger="ordfactor.maximal"):
        of.maximal_two_factorization(
            persistent_odd_cycle, mode="heuristic", seed=0
        )
    assert any("transversal rounds" in message for message in caplog.messages)


def test_persistent_fixture_exact_budget_runs_out(persistent_odd_cycle):
    with pytest.raises(of.BudgetExceeded):
        of.maximal_two_factorization(
            persistent_odd_cycle, mode="exact", budget=0.3
        )


def test_heuristic_mode_never_certifies(monuments):
    result = of.maximal_two_factorization(monuments, mode="heuristic", seed=0)
    assert not result.certificate
    assert len(result.removed) >= 2
