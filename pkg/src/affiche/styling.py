"""Poster style selection driven by an emotion profile.

Every visual attribute (format, background, typeface, alignments) is
drawn with the shared roulette-wheel primitive over configured weights,
so the whole look of a poster is reproducible from one seeded RNG.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import backgrounds
from .backgrounds import BackgroundSpec, StyleProfileMismatch
from .colors import check_legibility as _contrast_check
from .config import BACKGROUND_STYLES, StyleConfig
from .emotions import NEUTRAL, EmotionProfile
from .formats import PosterFormat, poster_format
from .rws import roulette_choice, roulette_select

TEXT_ALIGNMENTS = ("left", "centre", "right")
BOX_ALIGNMENTS = ("top", "middle", "bottom")


class EmptyFormatList(ValueError):
    """No poster formats configured."""


@dataclass(frozen=True)
class PosterStyle:
    format: PosterFormat
    background: BackgroundSpec
    typeface_id: str
    text_align: str
    box_align: str


def check_legibility(fg: str, bg: str, cfg: StyleConfig) -> tuple[float, bool]:
    """Contrast ratio plus pass/fail against the configured threshold."""
    return _contrast_check(fg, bg, min_contrast=cfg.legibility)


def select_format(rng: random.Random, cfg: StyleConfig) -> PosterFormat:
    names = cfg.formats.names
    if not names:
        raise EmptyFormatList("config lists no poster formats")
    return poster_format(names[rng.randrange(len(names))])


def select_background_style(profile: EmotionProfile, rng: random.Random,
                            cfg: StyleConfig) -> str:
    """Pick a background style name for the profile.

    Neutral profiles always read as solid (rendered black on white later).
    The divided style needs two emotions to divide between, so its weight
    drops to zero for single-emotion profiles.
    """
    if profile.neutral:
        return "solid"
    row = cfg.background_weights[profile.top]
    styles = list(BACKGROUND_STYLES)
    weights = [row.get(s, 0.0) for s in styles]
    if len(profile.predominant) < 2:
        weights[styles.index("solid_divided")] = 0.0
    return roulette_choice(styles, weights, rng)


def build_background(style: str, profile: EmotionProfile, rng: random.Random,
                     cfg: StyleConfig) -> BackgroundSpec:
    """Materialize a style name into concrete colours and geometry."""
    try:
        builder = backgrounds.REGISTRY[style]
    except KeyError:
        raise KeyError(f"unknown background style: {style!r}") from None
    return builder(profile, rng, cfg)


def select_typeface(profile: EmotionProfile, rng: random.Random,
                    cfg: StyleConfig) -> str:
    emotion = NEUTRAL if profile.neutral else profile.top
    pool = cfg.typeface_map[emotion]
    idx = roulette_select([t.weight for t in pool], rng)
    return pool[idx].typeface_id


def select_alignments(rng: random.Random) -> tuple[str, str]:
    text_align = TEXT_ALIGNMENTS[rng.randrange(3)]
    box_align = BOX_ALIGNMENTS[rng.randrange(3)]
    return text_align, box_align


def compose_style(profile: EmotionProfile, rng: random.Random,
                  cfg: StyleConfig) -> PosterStyle:
    """Draw every style attribute in a fixed order (reproducible)."""
    fmt = select_format(rng, cfg)
    style = select_background_style(profile, rng, cfg)
    background = build_background(style, profile, rng, cfg)
    typeface_id = select_typeface(profile, rng, cfg)
    text_align, box_align = select_alignments(rng)
    return PosterStyle(format=fmt, background=background,
                       typeface_id=typeface_id, text_align=text_align,
                       box_align=box_align)


__all__ = [
    "PosterStyle",
    "EmptyFormatList",
    "StyleProfileMismatch",
    "TEXT_ALIGNMENTS",
    "BOX_ALIGNMENTS",
    "check_legibility",
    "select_format",
    "select_background_style",
    "build_background",
    "select_typeface",
    "select_alignments",
    "compose_style",
]
