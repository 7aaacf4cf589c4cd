"""ISO 216 paper formats (A/B/C series), portrait orientation."""
from __future__ import annotations

from dataclasses import dataclass

MM_TO_PT = 72.0 / 25.4

# width x height in millimetres, portrait
ISO_216: dict[str, tuple[int, int]] = {
    "A0": (841, 1189), "A1": (594, 841), "A2": (420, 594), "A3": (297, 420),
    "A4": (210, 297), "A5": (148, 210), "A6": (105, 148), "A7": (74, 105),
    "A8": (52, 74),
    "B0": (1000, 1414), "B1": (707, 1000), "B2": (500, 707), "B3": (353, 500),
    "B4": (250, 353), "B5": (176, 250), "B6": (125, 176), "B7": (88, 125),
    "B8": (62, 88),
    "C0": (917, 1297), "C1": (648, 917), "C2": (458, 648), "C3": (324, 458),
    "C4": (229, 324), "C5": (162, 229), "C6": (114, 162), "C7": (81, 114),
    "C8": (57, 81),
}


@dataclass(frozen=True)
class PosterFormat:
    """One ISO 216 sheet, portrait (height/width ~ sqrt(2))."""

    name: str
    width_mm: float
    height_mm: float

    @property
    def width_pt(self) -> float:
        return self.width_mm * MM_TO_PT

    @property
    def height_pt(self) -> float:
        return self.height_mm * MM_TO_PT


def poster_format(name: str) -> PosterFormat:
    try:
        w, h = ISO_216[name]
    except KeyError:
        raise KeyError(f"unknown ISO 216 format: {name!r}") from None
    return PosterFormat(name=name, width_mm=float(w), height_mm=float(h))
