"""End-to-end acceptance checks.

Each test covers one release criterion and reports one PASS or FAIL
line in the terminal summary, so the whole gate can be read at a
glance.  Tolerances are pinned inside the tests: counts match exactly,
timed suites must finish inside their stated wall-clock limits.
"""
import math
import time

import pytest

from conftest import random_poset

import ordfactor as of
from ordfactor import GeneratorSpec, Poset
from ordfactor.lattice import cocomparability_graph, enumerate_concepts


def _named(ctx, pairs):
    return {
        (ctx.objects[g], ctx.attributes[m]) for g, m in pairs
    }


def test_criterion_1_minimum_removal_on_monuments(
    monuments, record_acceptance
):
    ok = False
    try:
        started = time.perf_counter()
        result = of.maximal_two_factorization(monuments, mode="exact")
        assert len(result.removed) == 2
        assert result.certificate
        assert _named(monuments, result.removed) == {
            ("Temple of Romulus", "GB1"),
            ("Basilica of Maxentius", "B"),
        }
        assert of.validate_factorization(monuments, result) == []
        with pytest.raises(of.NotFound):
            of.brute_force_min_removal(monuments, k_max=1)
        assert of.brute_force_min_removal(monuments, k_max=2) == 2
        elapsed = time.perf_counter() - started
        assert elapsed < 10.0
        ok = True
    finally:
        record_acceptance(
            1,
            ok,
            "monuments: certified exact removal of exactly the 2 pinned "
            "incidences, brute force agrees, under 10 s",
        )


def test_criterion_2_forced_overlap_core_and_classes(
    forced_overlap, record_acceptance
):
    ok = False
    try:
        result = of.two_factorize(forced_overlap)
        assert result.removed == frozenset()
        canonical = of.canonical_partition(forced_overlap, result)
        assert _named(forced_overlap, canonical.shared) == {("6", "f")}
        first = _named(
            forced_overlap, canonical.f1.pairs - canonical.shared
        )
        second = _named(
            forced_overlap, canonical.f2.pairs - canonical.shared
        )
        class_one = {
            ("1", "d"), ("1", "e"), ("1", "f"), ("1", "g"), ("2", "f"),
            ("2", "g"), ("3", "g"), ("6", "e"), ("6", "g"),
        }
        class_two = {
            ("4", "a"), ("5", "a"), ("5", "f"), ("6", "a"), ("6", "b"),
            ("7", "a"), ("7", "b"), ("7", "c"), ("7", "f"),
        }
        assert {frozenset(first), frozenset(second)} == {
            frozenset(class_one), frozenset(class_two),
        }
        assert of.validate_factorization(forced_overlap, canonical) == []
        ok = True
    finally:
        record_acceptance(
            2,
            ok,
            "forced overlap: shared core is exactly {(6,f)} and the two "
            "disjoint classes match the pinned sets",
        )


def test_criterion_3_contranominal_rejects_naive_class(
    contranominal3, record_acceptance
):
    ok = False
    try:
        graph = of.build_incompatibility_graph(contranominal3)
        assert of.bipartition(graph).is_bipartite
        naive = {
            (contranominal3.objects.index(o), contranominal3.attributes.index(a))
            for o, a in [("1", "c"), ("2", "a"), ("3", "b")]
        }
        assert not of.is_ferrers(contranominal3, naive)
        result = of.two_factorize(contranominal3)
        assert of.validate_factorization(contranominal3, result) == []
        ok = True
    finally:
        record_acceptance(
            3,
            ok,
            "contranominal scale: factorizable, but the class "
            "{(1,c),(2,a),(3,b)} is rejected as no staircase",
        )


def test_criterion_4_odd_cycle_survives_known_removal(
    persistent_odd_cycle, published_transversal, record_acceptance
):
    ok = False
    try:
        graph = of.build_incompatibility_graph(persistent_odd_cycle)
        witness = of.bipartition(graph)
        assert witness.odd_cycle is not None
        assert len(witness.odd_cycle) % 2 == 1
        kept = of.remove_incidences(
            persistent_odd_cycle, published_transversal
        )
        rebuilt = of.bipartition(of.build_incompatibility_graph(kept))
        assert not rebuilt.is_bipartite
        assert rebuilt.odd_cycle is not None
        ok = True
    finally:
        record_acceptance(
            4,
            ok,
            "18x18 context: odd cycle before and after removing the known "
            "17-incidence set",
        )


def test_criterion_5_certified_removals_match_brute_force(record_acceptance):
    ok = False
    try:
        started = time.perf_counter()
        shapes = ((5, 5), (4, 5), (5, 4), (4, 4), (3, 5))
        densities = (0.3, 0.4, 0.5)
        checked = certified = 0
        seed = 0
        while checked < 200 and seed < 2000:
            g, m = shapes[seed % len(shapes)]
            density = densities[seed % len(densities)]
            ctx = of.random_context(GeneratorSpec(g, m, density, seed))
            seed += 1
            if ctx.incidence_count > 14:
                continue
            checked += 1
            result = of.maximal_two_factorization(ctx, mode="exact")
            assert of.validate_factorization(ctx, result) == []
            if result.certificate:
                certified += 1
                assert of.brute_force_min_removal(
                    ctx, k_max=len(result.removed)
                ) == len(result.removed)
        elapsed = time.perf_counter() - started
        assert checked >= 200
        assert certified >= 50
        assert elapsed < 120.0
        ok = True
    finally:
        record_acceptance(
            5,
            ok,
            "200 random contexts up to 5x5 with at most 14 incidences: "
            "certified removal sizes equal the brute-force minimum, "
            "under 2 min",
        )


def test_criterion_6_staircase_unions_always_factorize(record_acceptance):
    ok = False
    try:
        shapes = ((5, 5, 0.35), (6, 5, 0.5), (4, 6, 0.65), (6, 6, 0.4),
                  (5, 4, 0.55))
        for seed in range(500):
            g, m, density = shapes[seed % len(shapes)]
            ctx = of.random_two_factorizable_context(
                GeneratorSpec(g, m, density, seed)
            )
            graph = of.build_incompatibility_graph(ctx)
            assert of.bipartition(graph).is_bipartite
            result = of.two_factorize(ctx)
            assert result.f1.pairs | result.f2.pairs == frozenset(ctx.pairs())
            assert of.is_ferrers(ctx, result.f1.pairs)
            assert of.is_ferrers(ctx, result.f2.pairs)
            isolated = frozenset(of.isolated_pairs(graph))
            assert result.f1.pairs & result.f2.pairs <= isolated
        ok = True
    finally:
        record_acceptance(
            6,
            ok,
            "500 random staircase unions: bipartite graph, both factors "
            "staircases, union covers, overlap inside the core; "
            "zero failures",
        )


def test_criterion_7_complement_concept_counts_stay_bounded(
    contranominal3, forced_overlap, record_acceptance
):
    ok = False
    try:
        instances = [contranominal3, forced_overlap]
        for seed in range(60):
            instances.append(
                of.random_two_factorizable_context(
                    GeneratorSpec(6, 6, 0.45, seed)
                )
            )
        for ctx in instances:
            mn = min(ctx.n_objects, ctx.n_attributes)
            count = len(enumerate_concepts(of.complement(ctx), cap=math.inf))
            assert count <= 1.5 * mn * mn + 2
        ok = True
    finally:
        record_acceptance(
            7,
            ok,
            "complement concept counts never exceed 1.5*min(|G|,|M|)^2 + 2 "
            "on factorizable fixtures and 60 generated instances",
        )


def _orientable(adj, n):
    """Whether some orientation of the undirected graph is transitive,
    by brute force over all edge directions."""
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1
    ]
    for bits in range(1 << len(edges)):
        out = [0] * n
        for idx, (i, j) in enumerate(edges):
            if bits >> idx & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        transitive = True
        for a in range(n):
            mask = out[a]
            while mask and transitive:
                low = mask & -mask
                mask ^= low
                if out[low.bit_length() - 1] & ~out[a]:
                    transitive = False
            if not transitive:
                break
        if transitive:
            return True
    return False


def _brute_min_extension(poset):
    """Smallest number of added comparabilities reaching order dimension
    at most two; brute force for 0 then 1 added pairs."""
    if _orientable(cocomparability_graph(poset.leq), poset.n):
        return 0
    for i in range(poset.n):
        for j in range(poset.n):
            if i == j or poset.leq[i] >> j & 1 or poset.leq[j] >> i & 1:
                continue
            leq = list(poset.leq)
            leq[i] |= leq[j]
            for k in range(poset.n):
                if leq[k] >> i & 1:
                    leq[k] |= leq[i]
            try:
                extended = Poset(poset.elements, tuple(leq))
            except of.NotAPartialOrder:
                continue
            if _orientable(
                cocomparability_graph(extended.leq), extended.n
            ):
                return 1
    raise AssertionError("no extension with at most one added pair found")


def _realizer_intersection(ext, n):
    pos1 = {v: p for p, v in enumerate(ext.realizer[0])}
    pos2 = {v: p for p, v in enumerate(ext.realizer[1])}
    return {
        (i, j)
        for i in range(n)
        for j in range(n)
        if pos1[i] <= pos1[j] and pos2[i] <= pos2[j]
    }


def test_criterion_8_extension_size_equals_removal_size(
    s3_poset, record_acceptance
):
    ok = False
    try:
        started = time.perf_counter()
        chain = Poset.from_relations(
            ("a", "b", "c", "d"), [("a", "b"), ("b", "c"), ("c", "d")]
        )
        antichain = Poset(("a", "b", "c", "d"), (1, 2, 4, 8))
        grid = Poset.from_relations(
            ("00", "01", "10", "11"),
            [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")],
        )
        for poset in (chain, antichain, grid):
            assert of.two_dimension_extension(poset).k == 0
        ext = of.two_dimension_extension(s3_poset)
        assert ext.k == 1
        assert _brute_min_extension(s3_poset) == 1
        assert _realizer_intersection(ext, s3_poset.n) == ext.extension
        for seed in range(50):
            poset = random_poset(4 + seed % 3, seed)
            ext = of.two_dimension_extension(poset)
            result = of.maximal_two_factorization(
                of.poset_to_context(poset), mode="exact"
            )
            assert ext.k == len(result.removed)
            assert _realizer_intersection(ext, poset.n) == ext.extension
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0
        ok = True
    finally:
        record_acceptance(
            8,
            ok,
            "50 random posets up to 6 elements: extension size equals "
            "removal size with verified realizers; 6-element standard "
            "example needs exactly 1 added pair by brute force; under 1 min",
        )


def test_criterion_9_biplots_reconstruct_losslessly(
    monuments, contranominal3, forced_overlap, persistent_odd_cycle,
    record_acceptance,
):
    ok = False
    try:
        for ctx in (contranominal3, forced_overlap):
            result = of.two_factorize(ctx)
            axes = of.biplot_axes(ctx, result)
            assert of.reconstruct(axes) == frozenset(ctx.pairs())
        exact = of.maximal_two_factorization(monuments, mode="exact")
        axes = of.biplot_axes(monuments, exact)
        assert of.reconstruct(axes) == exact.covered
        heur = of.maximal_two_factorization(
            persistent_odd_cycle, mode="heuristic", seed=0
        )
        heur_axes = of.biplot_axes(persistent_odd_cycle, heur)
        assert of.reconstruct(heur_axes) == heur.covered
        g = monuments.objects.index("Portico of Twelve Gods")
        assert axes[0].positions[g] == 3
        assert set(axes[0].labels[:2]) == {"M1", "P"}
        assert axes[0].labels[2] == "GB1"
        assert axes[1].positions[g] == 1
        assert axes[1].labels[0] == "M1"
        ok = True
    finally:
        record_acceptance(
            9,
            ok,
            "biplots reconstruct the covered relation on every fixture; "
            "Portico sits after {M1, P} at GB1 on one axis and at M1 on "
            "the other",
        )
