"""Background styles and their builders.

Each style lives in a registry keyed by its config name so new styles can
be added without touching the selection code: register a builder and give
it a weight in the per-emotion style weight rows.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .colors import BLACK, WHITE, contrast_ratio
from .config import StyleConfig, WeightedColour
from .emotions import EmotionProfile
from .rws import roulette_choice

# colour draws retried this many times before forcing a neutral foreground
REDRAW_CAP = 8


class StyleProfileMismatch(ValueError):
    """A background style was requested that the profile cannot support."""


@dataclass(frozen=True)
class Solid:
    bg: str
    fg: str


@dataclass(frozen=True)
class DiagonallyHalved:
    triangle_a: str
    triangle_b: str
    split_orientation: str  # "down" = NW-SE diagonal, "up" = SW-NE
    fg: str


@dataclass(frozen=True)
class Band:
    colour: str
    height_fraction: float
    end_point_fraction: float | None = None


@dataclass(frozen=True)
class SolidDivided:
    bands: tuple[Band, ...]
    fg: str


@dataclass(frozen=True)
class Gradient:
    bands: tuple[Band, ...]
    fg: str


BackgroundSpec = Union[Solid, DiagonallyHalved, SolidDivided, Gradient]

Builder = Callable[[EmotionProfile, random.Random, StyleConfig], BackgroundSpec]

REGISTRY: dict[str, Builder] = {}


def register(name: str) -> Callable[[Builder], Builder]:
    def deco(fn: Builder) -> Builder:
        REGISTRY[name] = fn
        return fn
    return deco


# ---------------------------------------------------------------------------
# shared colour helpers


def _pool(cfg: StyleConfig, emotion: str) -> tuple[WeightedColour, ...]:
    return cfg.colour_map[emotion]


def _draw_colour(pool: tuple[WeightedColour, ...], rng: random.Random) -> str:
    return roulette_choice([c.colour for c in pool],
                           [c.weight for c in pool], rng)


def _secondary_probability(profile: EmotionProfile) -> float:
    """score2/score1: equal scores give certainty, no second emotion gives 0."""
    if len(profile.predominant) < 2:
        return 0.0
    s1 = profile.scores[profile.predominant[0]]
    s2 = profile.scores[profile.predominant[1]]
    if s1 <= 0.0:
        return 1.0
    return s2 / s1


def _legible(fg: str, backgrounds: tuple[str, ...], threshold: float) -> bool:
    return all(contrast_ratio(fg, bg) >= threshold for bg in backgrounds)


def _forced_neutral(backgrounds: tuple[str, ...]) -> str:
    """Black or white, whichever clears every background colour better."""
    black_worst = min(contrast_ratio(BLACK, bg) for bg in backgrounds)
    white_worst = min(contrast_ratio(WHITE, bg) for bg in backgrounds)
    return BLACK if black_worst >= white_worst else WHITE


def _neutral_fg(backgrounds: tuple[str, ...], rng: random.Random,
                threshold: float) -> str:
    """Uniform black/white draw with retries, then the forced fallback."""
    for _ in range(REDRAW_CAP):
        fg = BLACK if rng.random() < 0.5 else WHITE
        if _legible(fg, backgrounds, threshold):
            return fg
    return _forced_neutral(backgrounds)


def _normalized_fractions(profile: EmotionProfile) -> list[tuple[str, float]]:
    total = sum(profile.scores[e] for e in profile.predominant)
    if total <= 0.0:
        share = 1.0 / len(profile.predominant)
        return [(e, share) for e in profile.predominant]
    return [(e, profile.scores[e] / total) for e in profile.predominant]


# ---------------------------------------------------------------------------
# builders


@register("solid")
def build_solid(profile: EmotionProfile, rng: random.Random,
                cfg: StyleConfig) -> Solid:
    if profile.neutral:
        return Solid(bg=WHITE, fg=BLACK)

    pool = _pool(cfg, profile.top)
    colours = [c.colour for c in pool]
    weights = [c.weight for c in pool]
    # white joins the wheel with the weight that lands it at exactly
    # white_probability of the total mass
    p_white = cfg.white_probability
    if p_white >= 1.0:
        bg = WHITE
    else:
        white_weight = p_white * sum(weights) / (1.0 - p_white)
        bg = roulette_choice(colours + [WHITE], weights + [white_weight], rng)

    p2 = _secondary_probability(profile)
    for _ in range(REDRAW_CAP):
        if bg == WHITE:
            fg = _draw_colour(pool, rng)
        elif p2 > 0.0 and rng.random() < p2:
            fg = _draw_colour(_pool(cfg, profile.second), rng)
        else:
            fg = BLACK if rng.random() < 0.5 else WHITE
        if _legible(fg, (bg,), cfg.legibility):
            return Solid(bg=bg, fg=fg)
    return Solid(bg=bg, fg=_forced_neutral((bg,)))


@register("diagonally_halved")
def build_diagonally_halved(profile: EmotionProfile, rng: random.Random,
                            cfg: StyleConfig) -> DiagonallyHalved:
    if profile.neutral:
        raise StyleProfileMismatch("diagonally_halved needs a predominant emotion")
    triangle_a = _draw_colour(_pool(cfg, profile.top), rng)
    p2 = _secondary_probability(profile)
    if p2 > 0.0 and rng.random() < p2:
        triangle_b = _draw_colour(_pool(cfg, profile.second), rng)
    else:
        triangle_b = WHITE
    orientation = "down" if rng.random() < 0.5 else "up"
    fg = _neutral_fg((triangle_a, triangle_b), rng, cfg.legibility)
    return DiagonallyHalved(triangle_a=triangle_a, triangle_b=triangle_b,
                            split_orientation=orientation, fg=fg)


@register("solid_divided")
def build_solid_divided(profile: EmotionProfile, rng: random.Random,
                        cfg: StyleConfig) -> SolidDivided:
    if len(profile.predominant) < 2:
        raise StyleProfileMismatch(
            "solid_divided needs at least two predominant emotions")
    bands = tuple(
        Band(colour=_draw_colour(_pool(cfg, emotion), rng),
             height_fraction=fraction)
        for emotion, fraction in _normalized_fractions(profile)
    )
    fg = _neutral_fg(tuple(b.colour for b in bands), rng, cfg.legibility)
    return SolidDivided(bands=bands, fg=fg)


@register("gradient")
def build_gradient(profile: EmotionProfile, rng: random.Random,
                   cfg: StyleConfig) -> Gradient:
    if profile.neutral:
        raise StyleProfileMismatch("gradient needs a predominant emotion")
    if len(profile.predominant) == 1:
        emotion = profile.top
        score = profile.scores[emotion]
        bands = (Band(colour=_draw_colour(_pool(cfg, emotion), rng),
                      height_fraction=1.0,
                      # higher score pushes the white end toward the bottom edge
                      end_point_fraction=0.75 + 0.25 * score),)
    else:
        bands = tuple(
            Band(colour=_draw_colour(_pool(cfg, emotion), rng),
                 height_fraction=fraction)
            for emotion, fraction in _normalized_fractions(profile)
        )
    # every band fades to white, so white must stay legible too
    surfaces = tuple(b.colour for b in bands) + (WHITE,)
    fg = _neutral_fg(surfaces, rng, cfg.legibility)
    return Gradient(bands=bands, fg=fg)
