"""Concept lattices, cocomparability graphs and transitive orientations.

Concepts are enumerated with NextClosure in lectic order of intents.
The order on concepts (extent inclusion) is kept as bitmask rows, and a
conjugate order is found, when one exists, by orienting the
cocomparability graph transitively: implication classes are forced one
at a time and the result is verified explicitly, so a wrong orientation
can never leak out.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .context import FormalContext
from .errors import ConceptBudgetExceeded, NotTwoDimensional


class Concept(NamedTuple):
    extent: frozenset[int]
    intent: frozenset[int]


def concept_cap(ctx: FormalContext) -> int:
    """Default enumeration cap: 3/2 * min(|G|, |M|)**2 + 2.

    Contexts whose complement admits an ordinal two-factorization stay
    under this bound, so exceeding it while factorizing is itself a
    certificate of failure.
    """
    k = min(ctx.n_objects, ctx.n_attributes)
    return 3 * k * k // 2 + 2


def enumerate_concepts(
    ctx: FormalContext, cap: int | float | None = None
) -> list[Concept]:
    """All formal concepts, in lectic order of intents.

    ``cap`` limits how many concepts may be produced; ``None`` selects
    the default from :func:`concept_cap`, ``math.inf`` disables the
    limit.  Raises :class:`ConceptBudgetExceeded` past the cap.
    """
    if cap is None:
        cap = concept_cap(ctx)
    m = ctx.n_attributes
    full_attrs = (1 << m) - 1
    rows = ctx.rows

    def close(amask: int) -> tuple[int, int]:
        # extent of the attribute set, then intent of that extent
        extent = 0
        intent = full_attrs
        for g, row in enumerate(rows):
            if row & amask == amask:
                extent |= 1 << g
                intent &= row
        return extent, intent

    concepts: list[Concept] = []

    def emit(extent: int, intent: int) -> None:
        if len(concepts) + 1 > cap:
            raise ConceptBudgetExceeded(
                f"more than {cap} concepts for a context of size "
                f"{ctx.n_objects}x{ctx.n_attributes}"
            )
        concepts.append(
            Concept(frozenset(_bits(extent)), frozenset(_bits(intent)))
        )

    extent, intent = close(0)
    emit(extent, intent)
    current = intent
    while current != full_attrs:
        for i in range(m - 1, -1, -1):
            if current >> i & 1:
                continue
            below = (1 << i) - 1
            candidate = (current & below) | (1 << i)
            extent, closed = close(candidate)
            # lectic successor test: no new attribute below i
            if closed & below & ~current:
                continue
            emit(extent, closed)
            current = closed
            break
        else:
            raise AssertionError("NextClosure failed to advance")
    return concepts


@dataclass(frozen=True)
class ConceptOrder:
    """Concepts plus their order by extent inclusion.

    ``leq`` has one bitmask per concept: bit j of ``leq[i]`` means
    concept i is below (or equal to) concept j.
    """

    concepts: tuple[Concept, ...]
    leq: tuple[int, ...]


def concept_order(concepts: Sequence[Concept]) -> ConceptOrder:
    n = len(concepts)
    leq = [0] * n
    for i in range(n):
        for j in range(n):
            if concepts[i].extent <= concepts[j].extent:
                leq[i] |= 1 << j
    return ConceptOrder(tuple(concepts), tuple(leq))


def cocomparability_graph(leq: Sequence[int]) -> tuple[int, ...]:
    """Adjacency bitmasks of the incomparability relation of an order.

    Accepts any reflexive order given as below-or-equal bitmask rows
    (:class:`ConceptOrder` ``.leq`` or a poset's ``leq``).
    """
    n = len(leq)
    adjacency = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if not leq[i] >> j & 1 and not leq[j] >> i & 1:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return tuple(adjacency)


@dataclass(frozen=True)
class ConjugateOrder:
    """A strict transitive orientation of a cocomparability graph.

    Bit j of ``leq_c[i]`` means i is oriented toward j.  Each graph edge
    is oriented exactly once and the relation is transitive.
    """

    leq_c: tuple[int, ...]


def transitive_orientation(adjacency: Sequence[int]) -> ConjugateOrder:
    """Orient every edge so the result is transitive.

    Edges are processed in lexicographic order; each choice is closed
    under the forcing rule (two edges sharing an endpoint whose other
    endpoints are nonadjacent must agree), working in the shrinking
    graph as classes are removed.  A forcing conflict, or a failed final
    transitivity check, raises :class:`NotTwoDimensional`.
    """
    n = len(adjacency)
    remaining = list(adjacency)
    out = [0] * n

    def orient(a: int, b: int) -> bool:
        # returns False if already present, raises on conflict
        if out[b] >> a & 1:
            raise NotTwoDimensional(f"edge {a}-{b} forced in both directions")
        if out[a] >> b & 1:
            return False
        out[a] |= 1 << b
        return True

    for i in range(n):
        for j in _bits(remaining[i]):
            if j < i or out[i] >> j & 1 or out[j] >> i & 1:
                continue
            orient(i, j)
            queue = deque([(i, j)])
            klass = [(i, j)]
            while queue:
                a, b = queue.popleft()
                # edges a-c with b,c nonadjacent must point a -> c
                for c in _bits(remaining[a] & ~remaining[b] & ~(1 << b)):
                    if orient(a, c):
                        queue.append((a, c))
                        klass.append((a, c))
                # edges c-b with a,c nonadjacent must point c -> b
                for c in _bits(remaining[b] & ~remaining[a] & ~(1 << a)):
                    if orient(c, b):
                        queue.append((c, b))
                        klass.append((c, b))
            for a, b in klass:
                remaining[a] &= ~(1 << b)
                remaining[b] &= ~(1 << a)
    for a in range(n):
        covered = out[a] | _column(out, a, n)
        if covered != adjacency[a]:
            raise NotTwoDimensional(f"vertex {a} has unoriented or extra edges")
    for a in range(n):
        for b in _bits(out[a]):
            if out[b] & ~out[a]:
                raise NotTwoDimensional(
                    f"orientation not transitive at {a} -> {b}"
                )
    return ConjugateOrder(tuple(out))


def realizer_sequences(
    order: ConceptOrder | Sequence[int], conjugate: ConjugateOrder
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two linear orders combining an order with its conjugate.

    Returns index sequences sorted by leq union leq_c and by leq union
    the reverse of leq_c.  Verifies both unions really are total orders
    whose intersection is the original order; a failure raises
    :class:`NotTwoDimensional`.
    """
    leq = order.leq if isinstance(order, ConceptOrder) else tuple(order)
    n = len(leq)
    if len(conjugate.leq_c) != n:
        raise NotTwoDimensional("conjugate order has wrong size")
    geq_c = [0] * n
    for i in range(n):
        for j in _bits(conjugate.leq_c[i]):
            geq_c[j] |= 1 << i
    strict_leq = [leq[i] & ~(1 << i) for i in range(n)]
    first = [strict_leq[i] | conjugate.leq_c[i] for i in range(n)]
    second = [strict_leq[i] | geq_c[i] for i in range(n)]
    sequences = []
    for strict in (first, second):
        for i in range(n):
            for j in _bits(strict[i]):
                if strict[j] >> i & 1:
                    raise NotTwoDimensional(f"{i} and {j} ordered both ways")
                if strict[j] & ~strict[i] & ~(1 << i):
                    raise NotTwoDimensional(f"union order not transitive at {i}")
            below = sum(1 for j in range(n) if j != i and strict[j] >> i & 1)
            if below + strict[i].bit_count() != n - 1:
                raise NotTwoDimensional(f"union order not total at {i}")
        ranks = sorted(range(n), key=lambda i: n - 1 - strict[i].bit_count())
        sequences.append(tuple(ranks))
    for i in range(n):
        both = (first[i] & second[i]) | (1 << i)
        if both != leq[i]:
            raise NotTwoDimensional(f"realizer intersection differs at {i}")
    return sequences[0], sequences[1]


def _column(masks: list[int], j: int, n: int) -> int:
    col = 0
    for i in range(n):
        if masks[i] >> j & 1:
            col |= 1 << i
    return col


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
