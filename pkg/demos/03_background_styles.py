"""The four background styles and their gating rules.

Solid draws a colour from the top emotion's palette (white wins 10% of
the time); diagonally halved splits the page along a diagonal; solid
divided stacks one band per predominant emotion, heights proportional to
scores, so it needs at least two; gradient fades each band to white, and
with a single emotion the fade's endpoint moves with the score. Every
builder guarantees a foreground that stays legible on all of its
surfaces. This script builds each style from a fitting profile and
renders one poster per style.

Run: python demos/03_background_styles.py
"""
import random
from pathlib import Path

from affiche.config import load_config
from affiche.emotions import EmotionProfile
from affiche.measure import SyntheticMeasurer
from affiche.render import render
from affiche.styling import PosterStyle, build_background, poster_format
from affiche.typeset import typeset

OUT = Path(__file__).parent / "out"
OUT.mkdir(parents=True, exist_ok=True)

cfg = load_config(None)
rng = random.Random(2024)

single = EmotionProfile.from_scores({"joy": 0.8})
double = EmotionProfile.from_scores({"anger": 0.7, "fear": 0.45})

SHOWCASE = [
    ("solid", single, ("A solid page", "one emotion")),
    ("diagonally_halved", double, ("Two moods", "split on a diagonal")),
    ("solid_divided", double, ("Bands stack", "score by score")),
    ("gradient", single, ("Colour fades", "towards white")),
]

for style_name, profile, lines in SHOWCASE:
    background = build_background(style_name, profile, rng, cfg)
    style = PosterStyle(format=poster_format("A4"), background=background,
                        typeface_id="grotesk", text_align="center",
                        box_align="middle")
    comp = typeset(lines, style, cfg, random.Random(5), SyntheticMeasurer())
    doc = render(style, comp)
    path = OUT / f"style_{style_name}.svg"
    path.write_bytes(doc.svg)
    print(f"{style_name:18s} fg={background.fg:8s} -> {path}")

# gating: neutral profiles and single emotions restrict the choice
neutral = EmotionProfile.from_scores({})
print()
print("neutral solid:", build_background("solid", neutral, rng, cfg))
try:
    build_background("solid_divided", single, rng, cfg)
except Exception as exc:
    print(f"solid_divided with one emotion -> {type(exc).__name__}: {exc}")

# the single-emotion gradient endpoint follows the score: 0.75 + 0.25 * s
for score in (0.4, 0.7, 1.0):
    profile = EmotionProfile.from_scores({"trust": score})
    spec = build_background("gradient", profile, rng, cfg)
    print(f"gradient endpoint at score {score}: "
          f"{spec.bands[0].end_point_fraction:.3f}")
