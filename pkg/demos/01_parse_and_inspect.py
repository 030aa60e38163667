"""Load a context from the bundled data, inspect it, and round-trip it.

A formal context is a cross table: objects in rows, attributes in
columns, an X where an object has an attribute.  This script loads the
Roman monuments table, prints it, applies the two derivation
operators, and shows the lossless .cxt and JSON serializations.
"""
import ordfactor as of


def main() -> None:
    ctx = of.load_dataset("monuments")
    print(f"title:      {ctx.title}")
    print(f"objects:    {ctx.n_objects}")
    print(f"attributes: {ctx.n_attributes}")
    print(f"incidences: {ctx.incidence_count}")
    print()

    width = max(len(name) for name in ctx.objects)
    print(" " * width, " ".join(ctx.attributes))
    for g, name in enumerate(ctx.objects):
        cells = "  ".join(
            "X" if ctx.has(g, m) else "." for m in range(ctx.n_attributes)
        )
        print(name.ljust(width), cells)
    print()

    # derivation: attributes shared by a set of objects, and back
    some = {ctx.objects.index("Curia"), ctx.objects.index("Portico of Twelve Gods")}
    shared_attrs = of.derive(ctx, "objects", some)
    print("attributes common to Curia and the Portico:",
          sorted(ctx.attributes[m] for m in shared_attrs))
    closure = of.derive(ctx, "attributes", shared_attrs)
    print("objects with all of those attributes:",
          sorted(ctx.objects[g] for g in closure))
    print()

    # both serializations reproduce the context exactly
    assert of.parse_cxt(of.serialize_cxt(ctx)) == ctx
    assert of.context_from_json(of.context_to_json(ctx)) == ctx
    print("round trips through .cxt and JSON are lossless")


if __name__ == "__main__":
    main()
