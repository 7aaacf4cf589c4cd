"""Serialize a styled composition into a standalone SVG 1.1 document.

The emitted bytes are a pure function of the inputs: attribute order,
float formatting and element order are all pinned, so identical inputs
produce byte-identical files. Optional PNG rasterization (Pillow) repaints
the same geometry; it needs a real font file for the text.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from .backgrounds import Band, DiagonallyHalved, Gradient, Solid, SolidDivided
from .colors import WHITE
from .measure import FontResourceMissing
from .styling import PosterStyle
from .typeset import Composition

_SVG_NS = 'xmlns="http://www.w3.org/2000/svg"'


@dataclass(frozen=True)
class PosterDocument:
    svg: bytes
    width_mm: float
    height_mm: float
    dpi: int = 300

    @property
    def pixel_size(self) -> tuple[int, int]:
        return (round(self.width_mm / 25.4 * self.dpi),
                round(self.height_mm / 25.4 * self.dpi))


def _f(value: float) -> str:
    """Fixed-precision float for stable output; integers stay bare."""
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _gradient_defs(bands: tuple[Band, ...]) -> list[str]:
    parts = ["<defs>"]
    for i, band in enumerate(bands):
        end = band.end_point_fraction if band.end_point_fraction is not None else 1.0
        parts.append(f'<linearGradient id="band{i}" x1="0" y1="0" x2="0" y2="1">')
        parts.append(f'<stop offset="0" stop-color="{band.colour}"/>')
        parts.append(f'<stop offset="{_f(end)}" stop-color="{WHITE}"/>')
        if end < 1.0:
            parts.append(f'<stop offset="1" stop-color="{WHITE}"/>')
        parts.append("</linearGradient>")
    parts.append("</defs>")
    return parts


def _band_rects(bands: tuple[Band, ...], w: float, h: float,
                fill_for: "callable") -> list[str]:
    parts = []
    y = 0.0
    for i, band in enumerate(bands):
        height = band.height_fraction * h
        if i == len(bands) - 1:
            height = h - y  # absorb float residue so bands tile exactly
        parts.append(f'<rect x="0" y="{_f(y)}" width="{_f(w)}" '
                     f'height="{_f(height)}" fill="{fill_for(i, band)}"/>')
        y += height
    return parts


def _background_elements(spec, w: float, h: float) -> list[str]:
    if isinstance(spec, Solid):
        return [f'<rect x="0" y="0" width="{_f(w)}" height="{_f(h)}" '
                f'fill="{spec.bg}"/>']
    if isinstance(spec, DiagonallyHalved):
        if spec.split_orientation == "down":
            # diagonal from top-left to bottom-right
            tri_a = f"0,0 {_f(w)},0 {_f(w)},{_f(h)}"
            tri_b = f"0,0 {_f(w)},{_f(h)} 0,{_f(h)}"
        else:
            # diagonal from bottom-left to top-right
            tri_a = f"0,0 {_f(w)},0 0,{_f(h)}"
            tri_b = f"{_f(w)},0 {_f(w)},{_f(h)} 0,{_f(h)}"
        return [f'<polygon points="{tri_a}" fill="{spec.triangle_a}"/>',
                f'<polygon points="{tri_b}" fill="{spec.triangle_b}"/>']
    if isinstance(spec, SolidDivided):
        return _band_rects(spec.bands, w, h, lambda i, b: b.colour)
    if isinstance(spec, Gradient):
        return (_gradient_defs(spec.bands)
                + _band_rects(spec.bands, w, h, lambda i, b: f"url(#band{i})"))
    raise TypeError(f"unknown background spec: {type(spec).__name__}")


def _variation_style(axes) -> str:
    settings = []
    extras = []
    for name in sorted(axes):
        value = axes[name]
        if name == "weight":
            settings.append(f"'wght' {_f(value)}")
        elif name == "stretch":
            settings.append(f"'wdth' {_f(value)}")
            extras.append(f"font-stretch: {_f(value)}%")
        else:
            tag = (name[:4] if len(name) >= 4 else name.ljust(4))
            settings.append(f"'{tag}' {_f(value)}")
    parts = []
    if settings:
        parts.append("font-variation-settings: " + ", ".join(settings))
    parts.extend(extras)
    return "; ".join(parts)


def render(style: PosterStyle, composition: Composition,
           dpi: int = 300) -> PosterDocument:
    """Paint the background and place the composed lines; returns the
    finished document with deterministic bytes."""
    fmt = style.format
    w, h = fmt.width_pt, fmt.height_pt
    spec = style.background
    state = composition.state

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg {_SVG_NS} version="1.1" width="{_f(fmt.width_mm)}mm" '
        f'height="{_f(fmt.height_mm)}mm" viewBox="0 0 {_f(w)} {_f(h)}">',
    ]
    parts.extend(_background_elements(spec, w, h))

    variation = _variation_style(state.axes)
    style_attr = f' style="{variation}"' if variation else ""
    for line in composition.lines:
        parts.append(
            f'<text x="{_f(line.x)}" y="{_f(line.baseline)}" '
            f'font-family="{escape(style.typeface_id)}" '
            f'font-size="{_f(state.size)}" fill="{spec.fg}"{style_attr}>'
            f'{escape(line.text)}</text>'
        )
    parts.append("</svg>")
    svg = "\n".join(parts).encode("utf-8")
    return PosterDocument(svg=svg, width_mm=fmt.width_mm,
                          height_mm=fmt.height_mm, dpi=dpi)


# ---------------------------------------------------------------------------
# optional raster export


def _lerp_channel(a: int, b: int, t: float) -> int:
    return round(a + (b - a) * t)


def rasterize(style: PosterStyle, composition: Composition,
              font_path: str | Path, dpi: int = 300) -> "object":
    """Repaint the poster as a PIL image. Needs Pillow and a font file."""
    try:
        from PIL import Image, ImageDraw, ImageFont
    except ImportError as exc:
        raise FontResourceMissing(
            "PNG export needs Pillow (install the 'raster' extra)") from exc
    font_path = Path(font_path)
    if not font_path.is_file():
        raise FontResourceMissing(f"font file not found: {font_path}")

    from .colors import parse_hex
    fmt = style.format
    scale = dpi / 72.0
    px_w = round(fmt.width_pt * scale)
    px_h = round(fmt.height_pt * scale)
    img = Image.new("RGB", (px_w, px_h), "#ffffff")
    draw = ImageDraw.Draw(img)
    spec = style.background

    if isinstance(spec, Solid):
        draw.rectangle([0, 0, px_w, px_h], fill=spec.bg)
    elif isinstance(spec, DiagonallyHalved):
        if spec.split_orientation == "down":
            draw.polygon([(0, 0), (px_w, 0), (px_w, px_h)], fill=spec.triangle_a)
            draw.polygon([(0, 0), (px_w, px_h), (0, px_h)], fill=spec.triangle_b)
        else:
            draw.polygon([(0, 0), (px_w, 0), (0, px_h)], fill=spec.triangle_a)
            draw.polygon([(px_w, 0), (px_w, px_h), (0, px_h)], fill=spec.triangle_b)
    elif isinstance(spec, SolidDivided):
        y = 0
        for i, band in enumerate(spec.bands):
            bottom = px_h if i == len(spec.bands) - 1 \
                else y + round(band.height_fraction * px_h)
            draw.rectangle([0, y, px_w, bottom], fill=band.colour)
            y = bottom
    elif isinstance(spec, Gradient):
        y = 0
        for i, band in enumerate(spec.bands):
            bottom = px_h if i == len(spec.bands) - 1 \
                else y + round(band.height_fraction * px_h)
            band_h = max(1, bottom - y)
            end = band.end_point_fraction if band.end_point_fraction is not None else 1.0
            end_row = max(1, round(end * band_h))
            c = parse_hex(band.colour)
            for row in range(band_h):
                t = min(1.0, row / end_row)
                colour = tuple(_lerp_channel(c[k], 255, t) for k in range(3))
                draw.line([(0, y + row), (px_w, y + row)], fill=colour)
            y = bottom

    font = ImageFont.truetype(str(font_path),
                              max(1, round(composition.state.size * scale)))
    try:
        axes = font.get_variation_axes()
        if axes:
            values = []
            by_tag = {"wght": "weight", "wdth": "stretch"}
            for axis in axes:
                tag = axis["name"]
                if isinstance(tag, bytes):
                    tag = tag.decode("latin-1")
                tag = tag.strip().lower()
                name = by_tag.get(tag, tag)
                values.append(composition.state.axes.get(name, axis["default"]))
            font.set_variation_by_axes(values)
    except OSError:
        pass
    for line in composition.lines:
        draw.text((line.x * scale, (line.baseline - composition.state.size) * scale),
                  line.text, fill=spec.fg, font=font)
    return img
