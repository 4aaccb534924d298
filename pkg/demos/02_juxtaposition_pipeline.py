"""Juxtapose a class with monotone classes, iterate, and build row grids.

Run:  python demos/02_juxtaposition_pipeline.py
"""

from juxtaspec import (
    build_grid,
    builtin_spec,
    classify,
    complement,
    count_series,
    expand,
    format_series,
    inline_seq,
    juxtapose,
    render_spec,
    reverse,
)

av321 = builtin_spec("av321")

# The core construction: a specification for the permutations that split
# into a 321-avoiding prefix and an increasing suffix.  The insertion
# operators do the work; 'expand' shows their effect on single classes.
print("one insertion into the 321-avoiders (rightmost-marked):")
print(render_spec(expand(av321, [("C.R", "i")])))

jux = juxtapose(av321, "right", "inc", "right")
print("av321 | increasing:", format_series(count_series(jux, 10)))
print("equations:", len(jux.equations), " classification:", classify(jux).label)
print()

# Symmetries give the other three sides; each preserves the sequence of the
# underlying class and is an involution on specifications.
assert complement(complement(av321)) == av321
assert reverse(reverse(av321)) == av321
for side in ("right", "left"):
    for direction in ("inc", "dec"):
        out = juxtapose(av321, side, direction, "none")
        label = f"{side}/{direction}"
        print(f"av321 {label:10s}", format_series(count_series(out, 8)))
print()

# Keeping both markers makes the output juxtaposable again:
once = juxtapose(av321, "right", "inc", "both")
twice = juxtapose(once, "left", "dec", "none")
print("dec | av321 | inc:", format_series(count_series(twice, 8)))
print()

# Row grids fold the same step outward from a core cell:
grid = build_grid(builtin_spec("monotone"), "inc|core|inc")
print("inc|inc|inc grid :", format_series(count_series(grid, 12)))
print("regular after SZ inlining:", classify(inline_seq(grid)).regular)
