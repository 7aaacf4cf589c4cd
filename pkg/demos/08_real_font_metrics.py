"""Measuring with a real font file.

The engine measures text through a pluggable interface. The default
synthetic measurer uses a fixed per-glyph advance table, which keeps the
library dependency-free and fully deterministic. When a TTF/OTF file is
available, the Pillow-backed measurer reads real glyph metrics instead,
and the same composition can also be rasterized to PNG. Both measurers
plug into the same typesetting loop.

Run: python demos/08_real_font_metrics.py
"""
import random
from pathlib import Path

from affiche.backgrounds import Solid
from affiche.colors import BLACK, WHITE
from affiche.config import load_config
from affiche.measure import FontFileMeasurer, SyntheticMeasurer
from affiche.render import rasterize, render
from affiche.styling import PosterStyle, poster_format
from affiche.typeset import FontState, typeset

OUT = Path(__file__).parent / "out"
OUT.mkdir(parents=True, exist_ok=True)

FONT_CANDIDATES = [
    Path("/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf"),
    Path("/usr/share/fonts/truetype/dejavu/DejaVuSerif.ttf"),
]
font = next((p for p in FONT_CANDIDATES if p.is_file()), None)

state = FontState(size=24.0, leading=28.8,
                  axes={"stretch": 100.0, "weight": 400.0})
sample = "Hamburgefonstiv"

synthetic = SyntheticMeasurer()
print(f"synthetic width of {sample!r} at 24 pt: "
      f"{synthetic.width(sample, state):.1f} pt")

if font is None:
    print("no TTF font found on this system; skipping the real-font part")
    raise SystemExit(0)

real = FontFileMeasurer(font)
print(f"{font.name} width of the same text:    "
      f"{real.width(sample, state):.1f} pt")

cfg = load_config(None)
style = PosterStyle(format=poster_format("A5"),
                    background=Solid(bg="#1c3c6e", fg=WHITE),
                    typeface_id="grotesk", text_align="center",
                    box_align="middle")
lines = ("Real metrics", "real pixels")
comp = typeset(lines, style, cfg, random.Random(8), real)
print(f"typeset with real metrics: {comp.operations_used} operations, "
      f"final size {comp.state.size:.1f} pt")

svg_path = OUT / "real_font.svg"
svg_path.write_bytes(render(style, comp).svg)
image = rasterize(style, comp, font, dpi=150)
png_path = OUT / "real_font.png"
image.save(png_path)
print(f"wrote {svg_path} and {png_path} ({image.size[0]}x{image.size[1]} px)")
