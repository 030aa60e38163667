"""The incompatibility graph of a formal context.

Two incidences (g, m) and (h, n) are incompatible when neither (g, n)
nor (h, m) is an incidence: no Ferrers relation inside the incidence can
contain both.  The context is a union of two Ferrers relations exactly
when this graph is bipartite, which is what everything downstream leans
on.
"""
from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass

from .context import FormalContext, IncidencePair
from .errors import IndexOutOfRange


@dataclass(frozen=True)
class IncompatibilityGraph:
    """Undirected graph on the incidences of a context.

    ``vertices`` holds the incidence pairs in lexicographic order and
    ``adjacency`` one bitmask per vertex over vertex indices.
    """

    vertices: tuple[IncidencePair, ...]
    adjacency: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.adjacency[i]))

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, mask in enumerate(self.adjacency):
            for j in _bits(mask):
                if i < j:
                    out.append((i, j))
        return out

    def vertex_index(self, pair: IncidencePair) -> int:
        i = bisect_left(self.vertices, tuple(pair))
        if i == len(self.vertices) or self.vertices[i] != tuple(pair):
            raise IndexOutOfRange(f"{pair} is not a vertex")
        return i


@dataclass(frozen=True)
class BipartitionWitness:
    """Either a 2-coloring or an odd cycle, never both.

    ``coloring`` maps vertex index to color 1 or 2; ``odd_cycle`` is a
    vertex index sequence of odd length whose consecutive members (and
    last-to-first pair) are adjacent.
    """

    coloring: dict[int, int] | None
    odd_cycle: tuple[int, ...] | None

    @property
    def is_bipartite(self) -> bool:
        return self.coloring is not None


def build_incompatibility_graph(ctx: FormalContext) -> IncompatibilityGraph:
    """Construct the graph by the quadratic pairwise rule."""
    vertices = tuple(ctx.pairs())
    adjacency = [0] * len(vertices)
    for i in range(len(vertices)):
        g, m = vertices[i]
        for j in range(i + 1, len(vertices)):
            h, n = vertices[j]
            if not ctx.rows[g] >> n & 1 and not ctx.rows[h] >> m & 1:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return IncompatibilityGraph(vertices, tuple(adjacency))


def components(graph: IncompatibilityGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted tuples, ordered by smallest member."""
    seen = [False] * graph.n
    out = []
    for start in range(graph.n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        members = [start]
        while queue:
            v = queue.popleft()
            for w in _bits(graph.adjacency[v]):
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        out.append(tuple(sorted(members)))
    return out


def isolated_pairs(graph: IncompatibilityGraph) -> frozenset[IncidencePair]:
    """Incidences compatible with every other incidence."""
    return frozenset(
        graph.vertices[i] for i in range(graph.n) if not graph.adjacency[i]
    )


def bipartition(graph: IncompatibilityGraph) -> BipartitionWitness:
    """2-color the graph or extract an odd cycle.

    Colors are assigned by breadth-first search; the smallest vertex of
    each component gets color 1, so the witness is deterministic.
    """
    color = [0] * graph.n
    parent = [-1] * graph.n
    depth = [0] * graph.n
    for start in range(graph.n):
        if color[start]:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.neighbors(v):
                if not color[w]:
                    color[w] = 3 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    cycle = _close_cycle(v, w, parent, depth)
                    _verify_cycle(graph, cycle)
                    return BipartitionWitness(None, cycle)
    witness = BipartitionWitness({i: color[i] for i in range(graph.n)}, None)
    for i, j in graph.edges():
        assert witness.coloring is not None
        if witness.coloring[i] == witness.coloring[j]:
            raise AssertionError("coloring violates an edge")
    return witness


def _close_cycle(
    v: int, w: int, parent: list[int], depth: list[int]
) -> tuple[int, ...]:
    # Same color in breadth-first search means same depth; walk both
    # branches up to the common ancestor.
    left = [v]
    right = [w]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left[:-1] + list(reversed(right)))


def _verify_cycle(graph: IncompatibilityGraph, cycle: tuple[int, ...]) -> None:
    if len(cycle) % 2 == 0 or len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise AssertionError(f"not a simple odd cycle: {cycle}")
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not graph.adjacency[a] >> b & 1:
            raise AssertionError(f"cycle edge {a}-{b} missing")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
