"""Rule-based ambient music generation, one emotion at a time.

The harmony voice lays down the configured chord progression, one chord
per bar as a whole note, cycling for as many bars as requested. The
melody voice fills each bar note by note: duration, note kind and melodic
leap are each drawn from the emotion's probability tables, then the pitch
is resolved against the active chord and scale. Bars never split notes:
a drawn duration that overflows the bar is truncated to the largest
configured duration that still fits.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .config import MusicRow, StyleConfig
from .rws import roulette_select
from .theory import CHORD_QUALITIES, DERIVED_MODE, SCALE_MODES, pitch_class

MELODY = "melody"
HARMONY = "harmony"

BEATS_PER_BAR = 4.0

# canonical draw orders, so equal configs consume the rng identically
_KIND_ORDER = ("scale_note", "chord_note", "chromatism")
_DURATION_ORDER = (4.0, 2.0, 1.0, 0.5)

# melody register: scale degree window around the starting tonic
_POSITION_MIN = -10
_POSITION_MAX = 11

_MELODY_BASE = 60  # tonic anchor, middle C region
_HARMONY_BASE = 48  # chords one octave below


class InvalidBarCount(ValueError):
    pass


@dataclass(frozen=True)
class NoteEvent:
    onset: float  # beats from the start
    duration: float  # beats
    pitch: int
    velocity: int
    voice: str
    kind: str


@dataclass(frozen=True)
class _Scale:
    root_pc: int
    offsets: tuple[int, ...]

    def pitch_at(self, position: int) -> int:
        octave, degree = divmod(position, len(self.offsets))
        return _MELODY_BASE + self.root_pc + 12 * octave + self.offsets[degree]

    def contains(self, pitch: int) -> bool:
        return (pitch - self.root_pc) % 12 in {o % 12 for o in self.offsets}


def _resolve_scale(row: MusicRow) -> _Scale:
    if row.scale.derive:
        first = row.progression[0]
        mode = DERIVED_MODE[first.quality]
        return _Scale(pitch_class(first.root), SCALE_MODES[mode])
    return _Scale(pitch_class(row.scale.root), SCALE_MODES[row.scale.mode])


def _chord_pitch_classes(root: str, quality: str) -> frozenset[int]:
    root_pc = pitch_class(root)
    return frozenset((root_pc + o) % 12 for o in CHORD_QUALITIES[quality])


def _draw(table_items: list[tuple[object, float]], rng: random.Random):
    idx = roulette_select([p for _, p in table_items], rng)
    return table_items[idx][0]


def _nearest_chord_tone(target: int, chord_pcs: frozenset[int]) -> int:
    # closest pitch whose class is in the chord; ties resolve downward
    for distance in range(12):
        below = target - distance
        if below % 12 in chord_pcs:
            return below
        above = target + distance
        if above % 12 in chord_pcs:
            return above
    raise AssertionError("chord has no pitch classes")


def _chromatic_neighbor(scale_tone: int, scale: _Scale,
                        rng: random.Random) -> int:
    """One semitone off a scale tone, preferring the out-of-scale side."""
    candidates = [scale_tone - 1, scale_tone + 1]
    outside = [p for p in candidates if not scale.contains(p)]
    pool = outside or candidates
    if len(pool) == 1:
        return pool[0]
    return pool[rng.randrange(len(pool))]


def generate(emotion: str, bars: int, rng: random.Random, cfg: StyleConfig,
             trace: list | None = None) -> list[NoteEvent]:
    """Compose ``bars`` bars of melody over the cycled progression.

    Deterministic for a seeded rng. When a list is passed as ``trace``,
    every melody draw is appended as (kind, drawn_duration) before any
    bar-end truncation, for distribution checks.
    """
    if not isinstance(bars, int) or isinstance(bars, bool) or bars <= 0:
        raise InvalidBarCount(f"bars must be a positive integer, got {bars!r}")
    row = cfg.music.row(emotion)
    scale = _resolve_scale(row)

    kind_table = [(k, row.note_kind_probs.get(k, 0.0)) for k in _KIND_ORDER]
    duration_table = [(d, row.duration_probs.get(d, 0.0))
                      for d in _DURATION_ORDER]
    interval_table = [(step, row.interval_probs[step])
                      for step in sorted(row.interval_probs)]

    events: list[NoteEvent] = []
    position = 0  # scale degrees relative to the melody anchor
    for bar in range(bars):
        chord = row.progression[bar % len(row.progression)]
        chord_pcs = _chord_pitch_classes(chord.root, chord.quality)
        bar_start = bar * BEATS_PER_BAR

        root_pc = pitch_class(chord.root)
        for offset in CHORD_QUALITIES[chord.quality]:
            events.append(NoteEvent(
                onset=bar_start, duration=BEATS_PER_BAR,
                pitch=_HARMONY_BASE + root_pc + offset,
                velocity=row.velocities[HARMONY], voice=HARMONY,
                kind="chord_note"))

        remaining = BEATS_PER_BAR
        while remaining > 0.0:
            drawn_duration = _draw(duration_table, rng)
            kind = _draw(kind_table, rng)
            step = _draw(interval_table, rng)
            if trace is not None:
                trace.append((kind, drawn_duration))
            duration = drawn_duration
            if duration > remaining:
                # largest configured duration that still fits the bar
                duration = max(d for d, _ in duration_table if d <= remaining)

            position = min(max(position + step, _POSITION_MIN), _POSITION_MAX)
            scale_tone = scale.pitch_at(position)
            if kind == "scale_note":
                pitch = scale_tone
            elif kind == "chord_note":
                pitch = _nearest_chord_tone(scale_tone, chord_pcs)
            else:
                pitch = _chromatic_neighbor(scale_tone, scale, rng)

            events.append(NoteEvent(
                onset=bar_start + (BEATS_PER_BAR - remaining),
                duration=duration, pitch=pitch,
                velocity=row.velocities[MELODY], voice=MELODY, kind=kind))
            remaining -= duration

    events.sort(key=lambda e: (e.onset, e.voice != HARMONY, e.pitch))
    return events
