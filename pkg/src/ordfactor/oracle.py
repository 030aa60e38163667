"""Ground-truth oracles and seeded context generators.

The brute-force searcher answers "how many incidences must go" by sheer
enumeration, which keeps the clever solvers honest on small inputs.  The
generators produce deterministic random contexts, either unconstrained
or two-factorizable by construction.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .context import FormalContext, remove_incidences
from .errors import NotFound
from .incompat import bipartition, build_incompatibility_graph


@dataclass(frozen=True)
class GeneratorSpec:
    """Shape and seed of a generated context."""

    objects: int
    attributes: int
    density: float
    seed: int


def random_context(spec: GeneratorSpec) -> FormalContext:
    """Independent Bernoulli cells at the requested density."""
    rng = random.Random(spec.seed)
    rows = []
    for _ in range(spec.objects):
        mask = 0
        for m in range(spec.attributes):
            if rng.random() < spec.density:
                mask |= 1 << m
        rows.append(mask)
    return FormalContext(_names("g", spec.objects), _names("m", spec.attributes), tuple(rows))


def random_two_factorizable_context(spec: GeneratorSpec) -> FormalContext:
    """Union of two random staircases, hence two-factorizable.

    Each staircase fixes a random attribute order and gives every
    object a random-length prefix of it, so its rows are nested by
    construction; the incidence is the union of the two.
    """
    rng = random.Random(spec.seed)
    rows = [0] * spec.objects
    for _ in range(2):
        order = list(range(spec.attributes))
        rng.shuffle(order)
        for g in range(spec.objects):
            length = sum(
                1 for _ in range(spec.attributes) if rng.random() < spec.density
            )
            for m in order[:length]:
                rows[g] |= 1 << m
    return FormalContext(_names("g", spec.objects), _names("m", spec.attributes), tuple(rows))


def colex_combinations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, n):
        for rest in colex_combinations(last, k - 1):
            yield rest + (last,)


def brute_force_min_removal(ctx: FormalContext, k_max: int) -> int:
    """Smallest removal count that leaves a bipartite graph.

    Tries every subset of the incidence of size 0, 1, ... up to
    ``k_max`` in colexicographic order, rebuilding the incompatibility
    graph each time.  Raises :class:`NotFound` when no subset within the
    bound works.
    """
    pairs = ctx.pairs()
    for k in range(min(k_max, len(pairs)) + 1):
        for subset in colex_combinations(len(pairs), k):
            candidate = remove_incidences(ctx, [pairs[i] for i in subset])
            if bipartition(build_incompatibility_graph(candidate)).is_bipartite:
                return k
    raise NotFound(f"no removal of at most {k_max} incidences suffices")


def _names(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))
