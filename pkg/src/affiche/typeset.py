"""Greedy typesetting of text lines into a poster grid.

The poster is divided into one column of equal rows, one per line. The
type starts as large as the grid allows; while any line overflows, one of
two operators is applied: the size modifier shrinks the type (and the
grid with it, freeing space into margins), the axis modifier narrows or
lightens the type along one variable axis. Axes spring back to their
defaults once they bottom out and the size has moved often enough, so
later attempts explore different regions of the design space.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from typing import Mapping

from .config import StyleConfig, TypefaceDef
from .formats import PosterFormat
from .measure import TextMeasurer
from .styling import PosterStyle

_FIT_EPSILON = 1e-6

# reset precondition: this many size changes since the last axis move
_RESET_AFTER_SIZE_CHANGES = 4

DEFAULT_H_MARGIN_FRACTION = 0.05


class AttemptCapExceeded(Exception):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"no fit within {cap} operator applications")


class MinRowHeight(Exception):
    """Size modifier inapplicable: the next decrement would undercut the
    minimum row height."""


class NoMovableAxis(Exception):
    """Axis modifier inapplicable: every axis sits at its minimum."""


class MinRowHeightUnreachable(Exception):
    """Neither operator can move: the text cannot be made to fit."""


@dataclass(frozen=True)
class FontState:
    size: float
    leading: float
    axes: Mapping[str, float]
    attempts: int = 0
    size_changes_since_axis_mod: int = 0


@dataclass(frozen=True)
class Grid:
    rows: int
    leading: float
    top_margin: float
    bottom_margin: float
    left_margin: float
    right_margin: float


@dataclass(frozen=True)
class PlacedLine:
    text: str
    x: float
    baseline: float
    width: float


@dataclass(frozen=True)
class Composition:
    lines: tuple[PlacedLine, ...]
    grid: Grid
    state: FontState
    operations_used: int
    elapsed: float
    op_trace: tuple[str, ...] = field(default_factory=tuple)


def initial_state(line_count: int, fmt: PosterFormat,
                  typeface: TypefaceDef) -> FontState:
    """Full-height grid: leading is one row, size follows the leading."""
    leading = fmt.height_pt / line_count
    return FontState(
        size=leading * typeface.leading_to_size_factor,
        leading=leading,
        axes={name: axis.default for name, axis in typeface.axes.items()},
    )


def _size_decrement(state: FontState, typeface: TypefaceDef) -> float:
    d = typeface.size_decrement
    return d.base + d.per_attempt_slope * state.attempts


def size_modifier_applicable(state: FontState, typeface: TypefaceDef) -> bool:
    return state.leading > typeface.min_row_height


def apply_size_modifier(state: FontState, typeface: TypefaceDef) -> FontState:
    """Shrink the type by the attempt-dependent decrement.

    The decrement grows linearly with the number of attempts so far, so a
    stubborn text converges instead of crawling. The row height floor
    clamps the step: the operator can be employed until the minimum row
    height is reached, never past it.
    """
    if state.leading <= typeface.min_row_height:
        raise MinRowHeight(
            f"leading is already at the minimum row height "
            f"({typeface.min_row_height} pt)")
    decrement = _size_decrement(state, typeface)
    new_leading = (state.size - decrement) / typeface.leading_to_size_factor
    if new_leading < typeface.min_row_height:
        new_leading = typeface.min_row_height
    return replace(
        state,
        size=new_leading * typeface.leading_to_size_factor,
        leading=new_leading,
        attempts=state.attempts + 1,
        size_changes_since_axis_mod=state.size_changes_since_axis_mod + 1,
    )


def movable_axes(state: FontState, typeface: TypefaceDef) -> list[str]:
    return [name for name in sorted(typeface.axes)
            if state.axes[name] > typeface.axes[name].minimum]


def apply_axis_modifier(state: FontState, typeface: TypefaceDef,
                        rng: random.Random) -> FontState:
    """Step one randomly chosen axis toward its minimum, clamped there."""
    movable = movable_axes(state, typeface)
    if not movable:
        raise NoMovableAxis("every axis is at its minimum")
    name = movable[rng.randrange(len(movable))]
    axis = typeface.axes[name]
    new_value = max(axis.minimum, state.axes[name] - axis.step)
    axes = dict(state.axes)
    axes[name] = new_value
    return replace(state, axes=axes, attempts=state.attempts + 1,
                   size_changes_since_axis_mod=0)


def maybe_reset_axes(state: FontState, typeface: TypefaceDef) -> FontState:
    """Spring every axis back to its default when all have bottomed out
    and the size has changed at least four times since any axis moved."""
    if not typeface.axes:
        return state
    all_at_min = all(state.axes[name] <= axis.minimum
                     for name, axis in typeface.axes.items())
    if not all_at_min or state.size_changes_since_axis_mod < _RESET_AFTER_SIZE_CHANGES:
        return state
    defaults = {name: axis.default for name, axis in typeface.axes.items()}
    return replace(state, axes=defaults, size_changes_since_axis_mod=0)


def grid_for(state: FontState, fmt: PosterFormat, rows: int, box_align: str,
             h_margin_fraction: float = DEFAULT_H_MARGIN_FRACTION) -> Grid:
    """Distribute the vertical space freed by shrunken rows into margins."""
    free = fmt.height_pt - rows * state.leading
    if free < 0:
        free = 0.0
    if box_align == "top":
        top, bottom = 0.0, free
    elif box_align == "bottom":
        top, bottom = free, 0.0
    else:
        top = bottom = free / 2.0
    side = fmt.width_pt * h_margin_fraction
    return Grid(rows=rows, leading=state.leading, top_margin=top,
                bottom_margin=bottom, left_margin=side, right_margin=side)


def fits(lines: tuple[str, ...], state: FontState, fmt: PosterFormat,
         measurer: TextMeasurer,
         h_margin_fraction: float = DEFAULT_H_MARGIN_FRACTION) -> bool:
    """True when every line fits the width and the rows fit the height."""
    available_w = fmt.width_pt * (1.0 - 2.0 * h_margin_fraction)
    if len(lines) * state.leading > fmt.height_pt + _FIT_EPSILON:
        return False
    return all(measurer.width(line, state) <= available_w + _FIT_EPSILON
               for line in lines)


def _place_lines(lines: tuple[str, ...], state: FontState, grid: Grid,
                 fmt: PosterFormat, text_align: str,
                 measurer: TextMeasurer) -> tuple[PlacedLine, ...]:
    placed = []
    for i, text in enumerate(lines):
        width = measurer.width(text, state)
        if text_align == "left":
            x = grid.left_margin
        elif text_align == "right":
            x = fmt.width_pt - grid.right_margin - width
        else:
            x = (fmt.width_pt - width) / 2.0
        row_top = grid.top_margin + i * grid.leading
        placed.append(PlacedLine(text=text, x=x, baseline=row_top + state.size,
                                 width=width))
    return tuple(placed)


def typeset(lines: tuple[str, ...], style: PosterStyle, cfg: StyleConfig,
            rng: random.Random, measurer: TextMeasurer,
            h_margin_fraction: float = DEFAULT_H_MARGIN_FRACTION) -> Composition:
    """Fit all lines inside the poster, shrinking and narrowing as needed.

    Operator choice is uniform between the two when both apply; a typeface
    without variable axes only ever sees the size modifier. Deterministic
    for a seeded rng.
    """
    if not lines:
        raise ValueError("nothing to typeset: empty line list")
    typeface = cfg.typeface(style.typeface_id)
    fmt = style.format
    state = initial_state(len(lines), fmt, typeface)

    started = time.perf_counter()
    trace: list[str] = []
    operations = 0
    while not fits(lines, state, fmt, measurer, h_margin_fraction):
        if operations >= cfg.attempt_cap:
            raise AttemptCapExceeded(cfg.attempt_cap)
        size_ok = size_modifier_applicable(state, typeface)
        movable = movable_axes(state, typeface)
        if size_ok and movable:
            use_size = rng.random() < 0.5
        elif size_ok:
            use_size = True
        elif movable:
            use_size = False
        else:
            raise MinRowHeightUnreachable(
                "size modifier exhausted and no axis can move")
        if use_size:
            state = apply_size_modifier(state, typeface)
            operations += 1
            trace.append("size")
            after_reset = maybe_reset_axes(state, typeface)
            if after_reset is not state:
                trace.append("reset")
                state = after_reset
        else:
            before = state.axes
            state = apply_axis_modifier(state, typeface, rng)
            operations += 1
            moved = next(n for n in state.axes if state.axes[n] != before[n])
            trace.append(f"axis:{moved}")

    elapsed = time.perf_counter() - started
    grid = grid_for(state, fmt, len(lines), style.box_align, h_margin_fraction)
    placed = _place_lines(lines, state, grid, fmt, style.text_align, measurer)
    return Composition(lines=placed, grid=grid, state=state,
                       operations_used=operations, elapsed=elapsed,
                       op_trace=tuple(trace))
