"""Watching the typesetting loop work.

The type starts as large as the row grid allows. While any line
overflows the page width, one of two operators is applied: the size
modifier shrinks the type by a growing decrement (never past the minimum
row height), the axis modifier steps one variable axis towards its
minimum (stretch by 16.6 down to 50, weight by 10 down to its floor).
Once every axis has bottomed out and the size has moved four times since
the last axis change, the axes spring back to their defaults and the
search continues in a new region. The full operator trace is kept on the
result, so here we replay one stubborn line and print it.

Run: python demos/04_typesetting_walk.py
"""
import random
from collections import Counter

from affiche.backgrounds import Solid
from affiche.colors import BLACK, WHITE
from affiche.config import load_config
from affiche.measure import SyntheticMeasurer
from affiche.styling import PosterStyle, poster_format
from affiche.typeset import typeset

cfg = load_config(None)
style = PosterStyle(format=poster_format("A4"),
                    background=Solid(bg=WHITE, fg=BLACK),
                    typeface_id="grotesk", text_align="center",
                    box_align="middle")

lines = ("Incomprehensibly magnificent developments materialized",)
comp = typeset(lines, style, cfg, random.Random(31), SyntheticMeasurer())

print(f"line: {lines[0]!r}")
print(f"{comp.operations_used} operations to fit; final size "
      f"{comp.state.size:.1f} pt, leading {comp.state.leading:.1f} pt, axes "
      f"{ {k: round(v, 1) for k, v in comp.state.axes.items()} }")
print()
print("operator trace:")
for i in range(0, len(comp.op_trace), 10):
    print("  " + " ".join(f"{op:12s}" for op in comp.op_trace[i:i + 10]))
print()
print("tally:", dict(Counter(comp.op_trace)))

grid = comp.grid
print()
print(f"grid: {grid.rows} row(s), top margin {grid.top_margin:.1f} pt, "
      f"side margins {grid.left_margin:.1f} pt")
placed = comp.lines[0]
print(f"placed at x={placed.x:.1f}, baseline={placed.baseline:.1f}, "
      f"width={placed.width:.1f} pt "
      f"(page is {style.format.width_pt:.0f} pt wide)")

# more lines mean smaller initial type and usually a faster fit
print()
for n, text in ((1, lines), (3, ("Incomprehensibly", "magnificent",
                                 "developments"))):
    comp_n = typeset(text, style, cfg, random.Random(31), SyntheticMeasurer())
    print(f"{n} line(s): {comp_n.operations_used:3d} operations, "
          f"final size {comp_n.state.size:6.1f} pt")
