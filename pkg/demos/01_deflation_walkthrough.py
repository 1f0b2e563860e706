"""Walk one half-kite through deflation and watch the census grow.

Every coordinate stays in the ring Z[zeta5], so the censuses printed here
are exact integers and the edge lengths are exact golden-field numbers.
The script finishes by rendering a five-round patch to SVG.
"""

from pathlib import Path

from penrosenet import (
    HALF_DART,
    HALF_KITE,
    Patch,
    TileCensus,
    census,
    deflate_patch,
    deflate_tile,
    render_svg,
    squared_length,
    substitution_counts,
)

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

KIND_NAME = {HALF_KITE: "half-kite", HALF_DART: "half-dart"}
CHIRALITY_NAME = {+1: "right", -1: "left"}


def show_children() -> None:
    """One deflation round, spelled out tile by tile."""
    for kind in (HALF_KITE, HALF_DART):
        parent = Patch.single_tile(kind).tile(0)
        print(f"\n{KIND_NAME[kind]} splits into:")
        for child in deflate_tile(parent):
            a, b, c = child.vertices
            sides = sorted(
                float(squared_length(q - p)) ** 0.5
                for p, q in ((a, b), (b, c), (c, a))
            )
            print(
                f"  {KIND_NAME[child.kind]:9s} ({CHIRALITY_NAME[child.chirality]:5s})"
                f"  side lengths {sides[0]:.6f} / {sides[1]:.6f} / {sides[2]:.6f}"
            )


def census_table(rounds: int = 8) -> None:
    """Geometric counts next to the two-term recursion, round by round."""
    print(f"\n{'n':>2}  {'half-kites':>10}  {'half-darts':>10}  {'K/D':>10}  recursion")
    patch = Patch.single_tile(HALF_KITE, scale_exp=-rounds)
    for n in range(rounds + 1):
        stepped = deflate_patch(patch, n)
        k, d = census(stepped)
        predicted = substitution_counts(TileCensus(1, 0), n)
        ratio = f"{k / d:.6f}" if d else "-"
        mark = "match" if (k, d) == tuple(predicted) else "MISMATCH"
        print(f"{n:>2}  {k:>10}  {d:>10}  {ratio:>10}  {mark}")


def render_gallery() -> None:
    patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-5), 5)
    svg = render_svg(patch)
    path = OUT / "deflation_rounds5.svg"
    path.write_text(svg)
    print(f"\nwrote {len(patch)}-tile patch to {path}")


if __name__ == "__main__":
    print("== one deflation round ==")
    show_children()
    print("\n== census vs recursion ==")
    census_table()
    render_gallery()
