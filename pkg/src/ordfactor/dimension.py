"""Posets, their non-order contexts, and two-dimension extensions.

A partial order can be extended to one of order dimension at most two
by adding comparabilities; the smallest number of added pairs equals
the smallest number of incidences whose removal two-factorizes the
context of the complement relation.  This module carries the
translation in both directions and builds an explicit realizer.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .context import FormalContext
from .errors import MalformedHeader, NotAPartialOrder
from .maximal import maximal_two_factorization


@dataclass(frozen=True)
class Poset:
    """A finite partial order.

    ``leq`` holds one bitmask per element: bit j of ``leq[i]`` means
    element i is below or equal to element j.  The relation must be
    reflexive, antisymmetric and transitive.
    """

    elements: tuple[str, ...]
    leq: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise NotAPartialOrder("element names must be distinct")
        n = len(self.elements)
        if len(self.leq) != n:
            raise NotAPartialOrder("one relation row per element required")
        for i, row in enumerate(self.leq):
            if row >> n:
                raise NotAPartialOrder(f"row {i} relates unknown elements")
            if not row >> i & 1:
                raise NotAPartialOrder(f"relation not reflexive at {i}")
        for i in range(n):
            for j in range(n):
                if i != j and self.leq[i] >> j & 1 and self.leq[j] >> i & 1:
                    raise NotAPartialOrder(
                        f"{self.elements[i]} and {self.elements[j]} "
                        "are ordered both ways"
                    )
                if self.leq[i] >> j & 1 and self.leq[j] & ~self.leq[i]:
                    raise NotAPartialOrder(f"relation not transitive at {i}")

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def pair_count(self) -> int:
        return sum(row.bit_count() for row in self.leq)

    def index(self, name: str) -> int:
        return self.elements.index(name)

    @classmethod
    def from_relations(
        cls, elements: tuple[str, ...] | list[str], relations
    ) -> "Poset":
        """Build from generating pairs of names; the reflexive and
        transitive closure is applied before validation."""
        elements = tuple(elements)
        pos = {name: i for i, name in enumerate(elements)}
        n = len(elements)
        leq = [1 << i for i in range(n)]
        for a, b in relations:
            if a not in pos or b not in pos:
                raise NotAPartialOrder(f"relation over unknown element: {a!r}/{b!r}")
            leq[pos[a]] |= 1 << pos[b]
        for k in range(n):
            for i in range(n):
                if leq[i] >> k & 1:
                    leq[i] |= leq[k]
        return cls(elements, tuple(leq))


def poset_from_json(text: str) -> Poset:
    """Load ``{"elements": [...], "relations": [[a, b], ...]}``."""
    try:
        payload = json.loads(text)
        elements = payload["elements"]
        relations = payload["relations"]
    except (json.JSONDecodeError, TypeError, KeyError) as exc:
        raise MalformedHeader(f"invalid poset JSON: {exc}") from exc
    return Poset.from_relations(elements, relations)


def poset_to_json(poset: Poset) -> str:
    relations = [
        [poset.elements[i], poset.elements[j]]
        for i in range(poset.n)
        for j in range(poset.n)
        if i != j and poset.leq[i] >> j & 1
    ]
    return json.dumps(
        {"elements": list(poset.elements), "relations": relations},
        sort_keys=True,
        indent=2,
    ) + "\n"


def poset_to_context(poset: Poset) -> FormalContext:
    """The context on the elements whose incidence is "not below".

    Cell (a, b) is incident iff a is not less than or equal to b, so
    the complement context is the order itself.
    """
    full = (1 << poset.n) - 1
    return FormalContext(
        poset.elements,
        poset.elements,
        tuple(row ^ full for row in poset.leq),
    )


@dataclass(frozen=True)
class DimensionExtension:
    """An order extension of dimension at most two with its realizer.

    ``k`` counts the added comparabilities, ``extension`` is the full
    extended relation as index pairs (reflexive pairs included), and
    ``realizer`` holds two element sequences whose linear orders
    intersect in exactly the extension.
    """

    k: int
    extension: frozenset[tuple[int, int]]
    realizer: tuple[tuple[int, ...], tuple[int, ...]]


def two_dimension_extension(
    poset: Poset,
    mode: str = "exact",
    budget: float | None = None,
    seed: int = 0,
) -> DimensionExtension:
    """Extend the order to dimension at most two with few added pairs.

    Runs the maximal factorization on the "not below" context; the
    complements of the two factors, with ties broken by ascending
    element index, become linear extensions whose intersection is the
    returned extension.  With an exact single-round-certified
    factorization, ``k`` is minimum.
    """
    n = poset.n
    full = (1 << n) - 1
    ctx = poset_to_context(poset)
    result = maximal_two_factorization(ctx, mode=mode, budget=budget, seed=seed)
    linears = []
    for factor in (result.f1, result.f2):
        rows = [full] * n
        for g, m in factor.pairs:
            rows[g] &= ~(1 << m)
        # break mutual ties by ascending element index
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i] >> j & 1 and rows[j] >> i & 1:
                    rows[j] &= ~(1 << i)
        _check_linear(rows, poset)
        linears.append(rows)
    extension = tuple(a & b for a, b in zip(*linears))
    for i in range(n):
        if poset.leq[i] & ~extension[i]:
            raise AssertionError("extension lost an original comparability")
    Poset(poset.elements, extension)  # validates the extension is an order
    k = sum(row.bit_count() for row in extension) - poset.pair_count
    realizer = tuple(_sequence(rows) for rows in linears)
    _check_realizer(realizer, extension, n)
    return DimensionExtension(
        k,
        frozenset(
            (i, j) for i in range(n) for j in range(n) if extension[i] >> j & 1
        ),
        (realizer[0], realizer[1]),
    )


def _check_linear(rows: list[int], poset: Poset) -> None:
    n = poset.n
    for i in range(n):
        if not rows[i] >> i & 1:
            raise AssertionError("linear extension lost reflexivity")
        for j in range(n):
            if i == j:
                continue
            forward = rows[i] >> j & 1
            backward = rows[j] >> i & 1
            if forward and backward:
                raise AssertionError("tie survived antisymmetrization")
            if not forward and not backward:
                raise AssertionError("factor complement is not total")
            if forward and rows[j] & ~rows[i]:
                raise AssertionError("factor complement is not transitive")
    for i in range(n):
        if poset.leq[i] & ~rows[i]:
            raise AssertionError("linear order does not extend the input")


def _sequence(rows: list[int]) -> tuple[int, ...]:
    n = len(rows)
    return tuple(sorted(range(n), key=lambda i: n - rows[i].bit_count()))


def _check_realizer(
    realizer: list[tuple[int, ...]],
    extension: tuple[int, ...],
    n: int,
) -> None:
    pos1 = {v: p for p, v in enumerate(realizer[0])}
    pos2 = {v: p for p, v in enumerate(realizer[1])}
    for i in range(n):
        for j in range(n):
            meet = pos1[i] <= pos1[j] and pos2[i] <= pos2[j]
            if meet != bool(extension[i] >> j & 1):
                raise AssertionError("realizer intersection differs from extension")
