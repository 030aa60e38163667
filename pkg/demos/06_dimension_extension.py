"""Extend a partial order to one realizable by two linear orders.

An order has dimension at most two when it is the intersection of two
linear orders.  The smallest three-dimensional example pairs three
bottom elements a1..a3 with three top elements b1..b3 so that ai lies
below every bj except bi.  Adding a single comparability fixes it, and
the solver finds that pair by factorizing the context of the
complement relation.
"""
import ordfactor as of
from ordfactor import Poset


def main() -> None:
    names = ("a1", "a2", "a3", "b1", "b2", "b3")
    relations = [
        (f"a{i}", f"b{j}") for i in (1, 2, 3) for j in (1, 2, 3) if i != j
    ]
    s3 = Poset.from_relations(names, relations)
    print(f"input order: {len(relations)} strict comparabilities "
          f"on {s3.n} elements")

    ext = of.two_dimension_extension(s3)
    added = [
        (s3.elements[i], s3.elements[j])
        for i, j in sorted(ext.extension)
        if not s3.leq[i] >> j & 1
    ]
    print(f"added comparabilities: {added} (k = {ext.k})")

    seq1 = [s3.elements[i] for i in ext.realizer[0]]
    seq2 = [s3.elements[i] for i in ext.realizer[1]]
    print(f"linear order 1: {' < '.join(seq1)}")
    print(f"linear order 2: {' < '.join(seq2)}")

    # the two linear orders intersect in exactly the extension
    pos1 = {v: p for p, v in enumerate(ext.realizer[0])}
    pos2 = {v: p for p, v in enumerate(ext.realizer[1])}
    meet = {
        (i, j)
        for i in range(s3.n)
        for j in range(s3.n)
        if pos1[i] <= pos1[j] and pos2[i] <= pos2[j]
    }
    assert meet == ext.extension
    print("realizer check passed: intersection equals the extension\n")

    # orders that already have dimension two need nothing
    grid = Poset.from_relations(
        ("00", "01", "10", "11"),
        [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")],
    )
    print(f"2x2 grid needs k = {of.two_dimension_extension(grid).k}")
    chain = Poset.from_relations(("a", "b", "c"), [("a", "b"), ("b", "c")])
    print(f"3-chain needs k = {of.two_dimension_extension(chain).k}")

    # the link to factorization: the context of "not below" pairs
    ctx = of.poset_to_context(s3)
    removal = of.maximal_two_factorization(ctx, mode="exact")
    print(f"\ncomplement context has {ctx.incidence_count} incidences; "
          f"minimum removal is {len(removal.removed)} = k")


if __name__ == "__main__":
    main()
