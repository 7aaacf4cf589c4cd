"""Pitch, chord and scale tables shared by the music generator and config validation."""
from __future__ import annotations

# note name -> pitch class
NOTE_NAMES: dict[str, int] = {
    "C": 0, "C#": 1, "Db": 1, "D": 2, "D#": 3, "Eb": 3, "E": 4, "F": 5,
    "F#": 6, "Gb": 6, "G": 7, "G#": 8, "Ab": 8, "A": 9, "A#": 10, "Bb": 10,
    "B": 11,
}

# chord quality -> semitone offsets from the root
CHORD_QUALITIES: dict[str, tuple[int, ...]] = {
    "maj": (0, 4, 7),
    "min": (0, 3, 7),
    "dim": (0, 3, 6),
    "aug": (0, 4, 8),
    "sus2": (0, 2, 7),
    "sus4": (0, 5, 7),
    "maj7": (0, 4, 7, 11),
    "min7": (0, 3, 7, 10),
    "dom7": (0, 4, 7, 10),
}

# mode -> semitone offsets from the tonic, one octave
SCALE_MODES: dict[str, tuple[int, ...]] = {
    "major": (0, 2, 4, 5, 7, 9, 11),
    "natural_minor": (0, 2, 3, 5, 7, 8, 10),
    "harmonic_minor": (0, 2, 3, 5, 7, 8, 11),
    "dorian": (0, 2, 3, 5, 7, 9, 10),
    "phrygian": (0, 1, 3, 5, 7, 8, 10),
    "lydian": (0, 2, 4, 6, 7, 9, 11),
    "mixolydian": (0, 2, 4, 5, 7, 9, 10),
    "locrian": (0, 1, 3, 5, 6, 8, 10),
}

# chord quality -> mode used when a scale is derived from the first chord
DERIVED_MODE: dict[str, str] = {
    "maj": "major",
    "min": "natural_minor",
    "dim": "locrian",
    "aug": "major",
    "sus2": "major",
    "sus4": "mixolydian",
    "maj7": "major",
    "min7": "dorian",
    "dom7": "mixolydian",
}


def pitch_class(name: str) -> int:
    try:
        return NOTE_NAMES[name]
    except KeyError:
        raise KeyError(f"unknown note name: {name!r}") from None
