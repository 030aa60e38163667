"""Draw a two-factorization as a biplot and read data back off it.

Each staircase factor orders its attribute groups from largest to
smallest extent, giving one axis.  An object's coordinate on an axis
is the number of leading groups whose attributes it all has, so the
covered incidence relation can be reconstructed from the drawing
alone.  The script writes an SVG next to itself and prints the CSV
table of coordinates.
"""
from pathlib import Path

import ordfactor as of


def main() -> None:
    ctx = of.load_dataset("monuments")
    result = of.maximal_two_factorization(ctx, mode="exact")
    axes = of.biplot_axes(ctx, result)

    print("x axis groups:", " < ".join(axes[0].labels))
    print("y axis groups:", " < ".join(axes[1].labels))
    print()

    g = ctx.objects.index("Portico of Twelve Gods")
    x, y = axes[0].positions[g], axes[1].positions[g]
    print(f"Portico of Twelve Gods sits at ({x}, {y}):")
    print(f"  it has the attributes of the first {x} x-groups: "
          f"{list(axes[0].labels[:x])}")
    print(f"  and of the first {y} y-group(s): {list(axes[1].labels[:y])}")
    print()

    # nothing is lost: the plot encodes the covered incidences exactly
    assert of.reconstruct(axes) == result.covered
    print(f"reconstruction from the two axes returns all "
          f"{len(result.covered)} covered incidences\n")

    out = Path(__file__).with_name("monuments_biplot.svg")
    out.write_text(of.render(axes, fmt="svg", title=ctx.title),
                   encoding="utf-8")
    print(f"wrote {out}")
    print()
    print(of.render(axes, fmt="csv"))


if __name__ == "__main__":
    main()
