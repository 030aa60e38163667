"""Shared fixtures and helpers for the test suite."""
from collections import deque
import random

import pytest

import ordfactor as of
from ordfactor.dimension import Poset


@pytest.fixture(scope="session")
def monuments():
    return of.load_dataset("monuments")


@pytest.fixture(scope="session")
def contranominal3():
    return of.load_dataset("contranominal3")


@pytest.fixture(scope="session")
def forced_overlap():
    return of.load_dataset("forced_overlap")


@pytest.fixture(scope="session")
def persistent_odd_cycle():
    return of.load_dataset("persistent_odd_cycle")


@pytest.fixture(scope="session")
def s3_poset():
    """The standard example S3: a_i below b_j exactly when i differs from j."""
    names = ("a1", "a2", "a3", "b1", "b2", "b3")
    relations = [
        (f"a{i}", f"b{j}") for i in (1, 2, 3) for j in (1, 2, 3) if i != j
    ]
    return Poset.from_relations(names, relations)


@pytest.fixture(scope="session")
def published_transversal(persistent_odd_cycle):
    """The 17 incidences known to induce a bipartite subgraph of the
    18x18 fixture's incompatibility graph."""
    ctx = persistent_odd_cycle
    raw = [
        (6, "j"), (4, "n"), (7, "p"), (18, "p"), (6, "p"), (6, "n"),
        (12, "k"), (10, "g"), (6, "g"), (5, "p"), (2, "i"), (4, "p"),
        (12, "m"), (3, "i"), (12, "h"), (1, "p"), (2, "q"),
    ]
    return tuple(
        of.IncidencePair(g - 1, ctx.attributes.index(a)) for g, a in raw
    )


def induced_bipartite(graph, deleted):
    """Whether the subgraph induced by the non-deleted vertices is
    2-colorable.  ``deleted`` holds vertex indices."""
    keep = 0
    for i in range(graph.n):
        if i not in deleted:
            keep |= 1 << i
    color = {}
    for start in range(graph.n):
        if not keep >> start & 1 or start in color:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            mask = graph.adjacency[v] & keep
            while mask:
                low = mask & -mask
                mask ^= low
                w = low.bit_length() - 1
                if w not in color:
                    color[w] = 3 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def random_poset(n, seed):
    """A random poset built from arcs along a shuffled linear order."""
    rng = random.Random(seed)
    names = tuple(chr(97 + i) for i in range(n))
    order = list(range(n))
    rng.shuffle(order)
    density = rng.choice((0.2, 0.4, 0.6))
    relations = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                relations.append((names[order[a]], names[order[b]]))
    return Poset.from_relations(names, relations)


_ACCEPTANCE_LINES = []


@pytest.fixture
def record_acceptance():
    def _record(number, ok, text):
        verdict = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"ACCEPTANCE {number} {verdict}: {text}")

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
