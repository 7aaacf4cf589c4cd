"""Text width measurement behind a small interface.

Two implementations: a synthetic measurer with a fixed per-character
advance table (deterministic, no font files needed) and a real-metrics
measurer reading advance widths from a variable font via Pillow. Both are
read-only after construction and safe to share across threads.
"""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:
    from .typeset import FontState


class FontResourceMissing(Exception):
    """A font file required for real-metrics measurement is absent."""


@runtime_checkable
class TextMeasurer(Protocol):
    """Advance width of ``text`` at the given font state, in points.

    Implementations must be monotone non-decreasing in size and stretch,
    return 0 for the empty string, and never shrink when text is appended.
    """

    def width(self, text: str, state: "FontState") -> float: ...


# per-character advance width in em units at stretch 100 / weight 400
_UNIT_ADVANCES: dict[str, float] = {
    " ": 0.26, "!": 0.28, '"': 0.36, "#": 0.60, "$": 0.55, "%": 0.82,
    "&": 0.68, "'": 0.20, "(": 0.32, ")": 0.32, "*": 0.42, "+": 0.58,
    ",": 0.26, "-": 0.34, ".": 0.26, "/": 0.30, ":": 0.28, ";": 0.28,
    "?": 0.46, "@": 0.90, "[": 0.32, "]": 0.32, "_": 0.50,
    "0": 0.55, "1": 0.55, "2": 0.55, "3": 0.55, "4": 0.55,
    "5": 0.55, "6": 0.55, "7": 0.55, "8": 0.55, "9": 0.55,
    "a": 0.52, "b": 0.55, "c": 0.48, "d": 0.55, "e": 0.52, "f": 0.32,
    "g": 0.55, "h": 0.55, "i": 0.24, "j": 0.24, "k": 0.50, "l": 0.24,
    "m": 0.84, "n": 0.55, "o": 0.54, "p": 0.55, "q": 0.55, "r": 0.36,
    "s": 0.46, "t": 0.34, "u": 0.55, "v": 0.50, "w": 0.74, "x": 0.50,
    "y": 0.50, "z": 0.46,
    "A": 0.66, "B": 0.66, "C": 0.70, "D": 0.72, "E": 0.62, "F": 0.58,
    "G": 0.74, "H": 0.72, "I": 0.28, "J": 0.50, "K": 0.66, "L": 0.56,
    "M": 0.86, "N": 0.72, "O": 0.76, "P": 0.62, "Q": 0.76, "R": 0.66,
    "S": 0.62, "T": 0.62, "U": 0.72, "V": 0.66, "W": 0.96, "X": 0.66,
    "Y": 0.62, "Z": 0.62,
}
_DEFAULT_ADVANCE = 0.58


@lru_cache(maxsize=65536)
def _unit_width(text: str) -> float:
    return sum(_UNIT_ADVANCES.get(ch, _DEFAULT_ADVANCE) for ch in text)


class SyntheticMeasurer:
    """Font-free measurer with affine responses to the variable axes.

    width = size x (stretch/100) x sum(per-char unit advances)
                 x (1 + 0.0005 x (weight - 400))

    The same table serves every typeface id, so results depend only on
    the font state and the text.
    """

    def width(self, text: str, state: "FontState") -> float:
        if not text:
            return 0.0
        stretch = state.axes.get("stretch", 100.0)
        weight = state.axes.get("weight", 400.0)
        return (state.size * (stretch / 100.0) * _unit_width(text)
                * (1.0 + 0.0005 * (weight - 400.0)))


class FontFileMeasurer:
    """Reads advance widths from a real (optionally variable) font file.

    Needs Pillow with FreeType. Axis values from the font state are pushed
    into the font's variation axes by name before measuring; axes the font
    does not expose are ignored.
    """

    def __init__(self, font_path: str | Path):
        try:
            from PIL import ImageFont
        except ImportError as exc:
            raise FontResourceMissing(
                "real-metrics measurement needs Pillow (install the "
                "'fonts' extra)") from exc
        self._path = Path(font_path)
        if not self._path.is_file():
            raise FontResourceMissing(f"font file not found: {self._path}")
        self._ImageFont = ImageFont
        # probe once so a broken file fails at construction
        probe = ImageFont.truetype(str(self._path), 32)
        try:
            axes = probe.get_variation_axes()
            self._axis_tags = [a["name"] if isinstance(a["name"], str)
                               else a["name"].decode("latin-1")
                               for a in axes]
            self._axis_defaults = [a["default"] for a in axes]
        except OSError:
            self._axis_tags = []
            self._axis_defaults = []

    # state axis names -> conventional variation axis tags
    _TAG_BY_NAME = {"weight": "wght", "stretch": "wdth"}

    def _axis_values(self, state: "FontState") -> list[float]:
        values = list(self._axis_defaults)
        for name, value in state.axes.items():
            tag = self._TAG_BY_NAME.get(name, name)
            for i, axis_tag in enumerate(self._axis_tags):
                if axis_tag.strip().lower() in (tag, name):
                    values[i] = value
        return values

    def width(self, text: str, state: "FontState") -> float:
        if not text:
            return 0.0
        # FreeType wants integer sizes; scale up for sub-point precision
        scale = 64
        font = self._ImageFont.truetype(str(self._path),
                                        max(1, round(state.size * scale)))
        if self._axis_tags:
            try:
                font.set_variation_by_axes(self._axis_values(state))
            except OSError:
                pass
        return font.getlength(text) / scale
