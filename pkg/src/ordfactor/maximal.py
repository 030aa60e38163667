"""Maximal ordinal two-factorizations via odd cycle transversals.

When the incompatibility graph is not bipartite, no two-factorization
exists; the best possible is to drop a minimum set of incidences whose
removal makes the rebuilt graph bipartite.  Removal can create fresh
incompatibilities, so the transversal step may have to repeat; a single
exact round certifies that the number of dropped incidences is globally
minimum.
"""
from __future__ import annotations

import logging
import random
import time
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .context import FormalContext, IncidencePair, remove_incidences
from .errors import BudgetExceeded
from .incompat import IncompatibilityGraph, bipartition, build_incompatibility_graph
from .twofactor import FactorizationResult, two_factorize

logger = logging.getLogger(__name__)

HEURISTIC_RESTARTS = 32


@dataclass(frozen=True)
class OctSolution:
    """A vertex set whose induced subgraph is bipartite.

    ``optimal`` is asserted only in exact mode, where ``deleted`` is the
    lexicographically smallest minimum odd cycle transversal.
    """

    kept: frozenset[IncidencePair]
    deleted: frozenset[IncidencePair]
    optimal: bool


def max_bipartite_subset(
    graph: IncompatibilityGraph,
    mode: str = "exact",
    budget: float | None = None,
    seed: int = 0,
) -> OctSolution:
    """Delete as few vertices as possible to make the graph bipartite.

    ``mode`` is ``"exact"`` (branch and bound, may raise
    :class:`BudgetExceeded` past the time budget) or ``"heuristic"``
    (randomized coloring with local search, always returns).  Both are
    deterministic for a fixed mode and seed.
    """
    deadline = time.monotonic() + budget if budget is not None else None
    if mode == "exact":
        deleted = _ExactOct(graph.adjacency, deadline).run()
    elif mode == "heuristic":
        deleted = _heuristic_oct(graph.adjacency, seed, deadline)
    else:
        raise ValueError(f"mode must be 'exact' or 'heuristic', got {mode!r}")
    deleted_pairs = frozenset(graph.vertices[v] for v in deleted)
    kept_pairs = frozenset(graph.vertices) - deleted_pairs
    return OctSolution(kept_pairs, deleted_pairs, optimal=(mode == "exact"))


def maximal_two_factorization(
    ctx: FormalContext,
    mode: str = "exact",
    budget: float | None = None,
    seed: int = 0,
) -> FactorizationResult:
    """Factorize after removing a transversal, repeating if needed.

    The loop drops a bipartite-inducing vertex set and rebuilds the
    graph until it is bipartite, then factorizes what is left.
    ``certificate`` is true when nothing was removed or exactly one
    exact round sufficed, in which case the removal is globally minimum.
    """
    deadline = time.monotonic() + budget if budget is not None else None
    current = ctx
    removed: set[IncidencePair] = set()
    rounds = 0
    graph = build_incompatibility_graph(current)
    while not bipartition(graph).is_bipartite:
        if rounds >= ctx.incidence_count:
            raise AssertionError("transversal loop failed to terminate")
        remaining = None
        if deadline is not None:
            remaining = deadline - time.monotonic()
            if remaining <= 0 and mode == "exact":
                raise BudgetExceeded("time budget exhausted before a round")
        solution = max_bipartite_subset(graph, mode, remaining, seed)
        removed |= solution.deleted
        current = remove_incidences(current, solution.deleted)
        graph = build_incompatibility_graph(current)
        rounds += 1
    if rounds >= 2:
        logger.info(
            "input needed %d transversal rounds; single-round optimality "
            "does not apply",
            rounds,
        )
    result = two_factorize(current)
    certificate = rounds == 0 or (rounds == 1 and mode == "exact")
    return FactorizationResult(
        result.f1,
        result.f2,
        shared=result.shared,
        removed=frozenset(removed),
        certificate=certificate,
        rounds=rounds,
    )


def certify_global_optimality(
    ctx: FormalContext, result: FactorizationResult
) -> bool:
    """Whether the removal size of ``result`` is provably minimum.

    Recomputes one exact transversal round on the original graph.  The
    result is certified when that round already leaves a
    two-factorizable incidence and its transversal has the same size as
    ``result.removed``: the round size is a lower bound on any removal,
    so matching it proves minimality even for heuristic results.
    """
    if not result.removed:
        return True
    graph = build_incompatibility_graph(ctx)
    if bipartition(graph).is_bipartite:
        # the graph needed no removal at all, so any removal is excess
        return False
    solution = max_bipartite_subset(graph, mode="exact")
    if len(solution.deleted) != len(result.removed):
        return False
    kept_ctx = remove_incidences(ctx, solution.deleted)
    return bipartition(build_incompatibility_graph(kept_ctx)).is_bipartite


# -- exact solver ------------------------------------------------------


class _ExactOct:
    """Branch and bound for minimum odd cycle transversals.

    Branches on the vertices of a shortest odd cycle, prunes with a
    greedy packing of vertex-disjoint odd cycles, memoizes solved
    subgraphs, and breaks size ties toward the lexicographically
    smallest deleted set.
    """

    def __init__(self, adjacency: Sequence[int], deadline: float | None):
        self.adj = adjacency
        self.n = len(adjacency)
        self.deadline = deadline
        self.exact: dict[int, tuple[int, tuple[int, ...]]] = {}
        self.too_big: dict[int, int] = {}

    def run(self) -> tuple[int, ...]:
        active = 0
        for v in range(self.n):
            if self.adj[v]:
                active |= 1 << v
        result = self.solve(active, self.n)
        assert result is not None
        return result[1]

    def solve(
        self, active: int, ub: int
    ) -> tuple[int, tuple[int, ...]] | None:
        """Exact lex-smallest minimum transversal if its size <= ub."""
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("exact transversal search out of time")
        if ub < 0:
            return None
        cached = self.exact.get(active)
        if cached is not None:
            return cached if cached[0] <= ub else None
        if self.too_big.get(active, 0) > ub:
            return None
        parts = _component_masks(self.adj, active)
        if len(parts) > 1:
            return self._solve_split(active, ub, parts)
        result = self._solve_connected(active, ub)
        if result is None:
            self.too_big[active] = max(self.too_big.get(active, 0), ub + 1)
        else:
            self.exact[active] = result
        return result

    def _solve_split(
        self, active: int, ub: int, parts: list[int]
    ) -> tuple[int, tuple[int, ...]] | None:
        bounds = [self._packing_bound(part) for part in parts]
        total = 0
        merged: list[int] = []
        for i, part in enumerate(parts):
            slack = ub - total - sum(bounds[i + 1 :])
            sub = self.solve(part, slack)
            if sub is None:
                self.too_big[active] = max(self.too_big.get(active, 0), ub + 1)
                return None
            total += sub[0]
            merged.extend(sub[1])
        result = (total, tuple(sorted(merged)))
        self.exact[active] = result
        return result

    def _solve_connected(
        self, active: int, ub: int
    ) -> tuple[int, tuple[int, ...]] | None:
        cycle = _shortest_odd_cycle(self.adj, active)
        if cycle is None:
            return (0, ())
        if self._packing_bound(active) > ub:
            return None
        best: tuple[int, tuple[int, ...]] | None = None
        for v in sorted(cycle):
            # limit keeps equal-size candidates reachable for the
            # lexicographic tie-break
            limit = (best[0] if best is not None else ub) - 1
            sub = self.solve(active & ~(1 << v), limit)
            if sub is None:
                continue
            candidate = (sub[0] + 1, tuple(sorted(sub[1] + (v,))))
            if best is None or candidate < best:
                best = candidate
        return best

    def _packing_bound(self, active: int) -> int:
        """Greedy count of vertex-disjoint odd cycles; each needs a
        deletion of its own."""
        count = 0
        work = active
        while True:
            cycle = _first_odd_cycle(self.adj, work)
            if cycle is None:
                return count
            count += 1
            for v in cycle:
                work &= ~(1 << v)


def _component_masks(adj: Sequence[int], active: int) -> list[int]:
    parts = []
    left = active
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            grown = 0
            scan = frontier
            while scan:
                low = scan & -scan
                grown |= adj[low.bit_length() - 1]
                scan ^= low
            frontier = grown & active & ~comp
            comp |= frontier
        parts.append(comp)
        left &= ~comp
    return parts


def _first_odd_cycle(
    adj: Sequence[int], active: int
) -> tuple[int, ...] | None:
    """Some odd cycle of the induced subgraph, via one BFS coloring."""
    color = {}
    left = active
    while left:
        root = (left & -left).bit_length() - 1
        color[root] = 0
        parent = {root: -1}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            mask = adj[v] & active
            while mask:
                low = mask & -mask
                w = low.bit_length() - 1
                mask ^= low
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return _trimmed_cycle(v, w, parent, depth)
        for v in color:
            left &= ~(1 << v)
        left &= active
    return None


def _shortest_odd_cycle(
    adj: Sequence[int], active: int
) -> tuple[int, ...] | None:
    """A shortest odd cycle of the induced subgraph, or None.

    Breadth-first search from every vertex; any edge inside one layer
    closes an odd cycle, trimmed at the branches' meeting point.
    """
    best: tuple[int, ...] | None = None
    scan_all = active
    while scan_all:
        low = scan_all & -scan_all
        root = low.bit_length() - 1
        scan_all ^= low
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and depth[v] * 2 + 1 >= len(best):
                break
            mask = adj[v] & active
            while mask:
                nlow = mask & -mask
                w = nlow.bit_length() - 1
                mask ^= nlow
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif depth[w] == depth[v]:
                    cycle = _trimmed_cycle(v, w, parent, depth)
                    if best is None or len(cycle) < len(best):
                        best = cycle
                        if len(best) == 3:
                            return best
    return best


def _trimmed_cycle(
    v: int, w: int, parent: dict[int, int], depth: dict[int, int]
) -> tuple[int, ...]:
    left = [v]
    right = [w]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left[:-1] + list(reversed(right)))


# -- heuristic solver --------------------------------------------------


def _heuristic_oct(
    adj: Sequence[int], seed: int, deadline: float | None
) -> tuple[int, ...]:
    """Randomized 2-coloring plus local search, best of several
    restarts.  The vertex with the most conflicting edges is recolored
    when that strictly helps and evicted otherwise; evicted vertices
    that fit again afterwards are re-added."""
    n = len(adj)
    rng = random.Random(seed)
    best: tuple[int, tuple[int, ...]] | None = None
    for _ in range(HEURISTIC_RESTARTS):
        color = [rng.randrange(2) for _ in range(n)]
        active = (1 << n) - 1 if n else 0
        while True:
            worst_v = -1
            worst_c = 0
            for v in range(n):
                if not active >> v & 1:
                    continue
                same = sum(
                    1
                    for w in _bits(adj[v] & active)
                    if color[w] == color[v]
                )
                if same > worst_c:
                    worst_c = same
                    worst_v = v
            if worst_v < 0:
                break
            other = adj[worst_v] & active
            flipped = sum(
                1 for w in _bits(other) if color[w] != color[worst_v]
            )
            if flipped < worst_c:
                color[worst_v] ^= 1
            else:
                active &= ~(1 << worst_v)
        for v in range(n):
            if active >> v & 1:
                continue
            seen = {color[w] for w in _bits(adj[v] & active)}
            if len(seen) <= 1:
                color[v] = 1 - seen.pop() if seen else 0
                active |= 1 << v
        evicted = tuple(v for v in range(n) if not active >> v & 1)
        candidate = (len(evicted), evicted)
        if best is None or candidate < best:
            best = candidate
        if deadline is not None and time.monotonic() > deadline:
            break
    assert best is not None or n == 0
    return best[1] if best else ()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
