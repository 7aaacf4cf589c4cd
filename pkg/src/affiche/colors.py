"""sRGB hex colours, relative luminance and the contrast legibility check."""
from __future__ import annotations

import re

BLACK = "#000000"
WHITE = "#ffffff"

_HEX_RE = re.compile(r"^#[0-9a-fA-F]{6}$")


def parse_hex(colour: str) -> tuple[int, int, int]:
    """'#rrggbb' -> (r, g, b) with components in 0..255."""
    if not _HEX_RE.match(colour):
        raise ValueError(f"not an sRGB hex colour: {colour!r}")
    return (int(colour[1:3], 16), int(colour[3:5], 16), int(colour[5:7], 16))


def to_hex(rgb: tuple[int, int, int]) -> str:
    return "#%02x%02x%02x" % rgb


def _linear(channel: int) -> float:
    s = channel / 255.0
    return s / 12.92 if s <= 0.04045 else ((s + 0.055) / 1.055) ** 2.4


def relative_luminance(colour: str) -> float:
    r, g, b = parse_hex(colour)
    return 0.2126 * _linear(r) + 0.7152 * _linear(g) + 0.0722 * _linear(b)


def contrast_ratio(a: str, b: str) -> float:
    """WCAG contrast ratio, (lighter + 0.05) / (darker + 0.05), in [1, 21]."""
    la = relative_luminance(a)
    lb = relative_luminance(b)
    lighter, darker = max(la, lb), min(la, lb)
    return (lighter + 0.05) / (darker + 0.05)


def check_legibility(fg: str, bg: str, min_contrast: float) -> tuple[float, bool]:
    """Contrast ratio plus whether the pair meets ``min_contrast``."""
    ratio = contrast_ratio(fg, bg)
    return ratio, ratio >= min_contrast
