"""Split a context into two staircase relations and validate the split.

The seven-by-seven fixture used here factorizes without removing
anything, but every valid split must place the incidence (6,f) in both
factors.  The canonical partition separates the rest into two disjoint
classes, which this script prints as cross tables.
"""
import ordfactor as of


def show_factor(ctx, pairs, label: str) -> None:
    covered = {(g, m) for g, m in pairs}
    print(label)
    print("   " + " ".join(ctx.attributes))
    for g, name in enumerate(ctx.objects):
        row = "  ".join(
            "X" if (g, m) in covered else "."
            for m in range(ctx.n_attributes)
        )
        print(f"{name}: {row}")
    print()


def main() -> None:
    ctx = of.load_dataset("forced_overlap")
    result = of.two_factorize(ctx)
    problems = of.validate_factorization(ctx, result)
    assert problems == [], problems
    print(f"{ctx.title}: factorized, union covers all "
          f"{ctx.incidence_count} incidences\n")

    show_factor(ctx, result.f1.pairs, "factor 1 (a staircase)")
    show_factor(ctx, result.f2.pairs, "factor 2 (a staircase)")

    canonical = of.canonical_partition(ctx, result)
    shared = [
        (ctx.objects[g], ctx.attributes[m]) for g, m in sorted(canonical.shared)
    ]
    print(f"incidences every factorization shares: {shared}")
    only1 = sorted(canonical.f1.pairs - canonical.shared)
    only2 = sorted(canonical.f2.pairs - canonical.shared)
    print(f"class sizes after removing the shared part: "
          f"{len(only1)} and {len(only2)}")

    # the contranominal scale shows why single staircases are not enough
    scale = of.load_dataset("contranominal3")
    print(f"\n{scale.title}: whole incidence a staircase? "
          f"{of.is_ferrers(scale, frozenset(scale.pairs()))}")
    result = of.two_factorize(scale)

    def named(pairs):
        return sorted(
            (scale.objects[g], scale.attributes[m]) for g, m in pairs
        )

    print("but two staircases cover it:",
          named(result.f1.pairs), "+", named(result.f2.pairs))


if __name__ == "__main__":
    main()
