"""Standard MIDI File (format 1) emission.

One tempo track plus one track per voice, 480 ticks per quarter note.
The writer uses plain struct packing; identical event lists produce
byte-identical files.
"""
from __future__ import annotations

import struct
from typing import Iterable, Sequence

from .config import MusicRow
from .music import HARMONY, MELODY, NoteEvent

TICKS_PER_QUARTER = 480

_CHANNELS = {MELODY: 0, HARMONY: 1}


def encode_vlq(value: int) -> bytes:
    """Variable-length quantity: 7 bits per byte, high bit chains."""
    if value < 0:
        raise ValueError(f"delta time must be non-negative, got {value}")
    out = bytearray([value & 0x7F])
    value >>= 7
    while value:
        out.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(out))


def _track_chunk(payload: bytes) -> bytes:
    return b"MTrk" + struct.pack(">I", len(payload)) + payload


def _tempo_track(bpm: float) -> bytes:
    microseconds = round(60_000_000 / bpm)
    payload = (encode_vlq(0) + b"\xff\x51\x03"
               + struct.pack(">I", microseconds)[1:]
               + encode_vlq(0) + b"\xff\x2f\x00")
    return _track_chunk(payload)


def _voice_track(voice: str, events: Sequence[NoteEvent],
                 program: int) -> bytes:
    channel = _CHANNELS[voice]
    # (tick, order, message): note-offs sort before note-ons at equal ticks
    messages: list[tuple[int, int, bytes]] = [
        (0, 0, bytes([0xC0 | channel, program & 0x7F])),
    ]
    for e in events:
        on_tick = round(e.onset * TICKS_PER_QUARTER)
        off_tick = on_tick + round(e.duration * TICKS_PER_QUARTER)
        pitch = e.pitch & 0x7F
        velocity = max(1, min(127, e.velocity))
        messages.append((on_tick, 2, bytes([0x90 | channel, pitch, velocity])))
        messages.append((off_tick, 1, bytes([0x80 | channel, pitch, 0x40])))
    messages.sort(key=lambda m: (m[0], m[1]))

    payload = bytearray()
    clock = 0
    for tick, _, message in messages:
        payload += encode_vlq(tick - clock)
        payload += message
        clock = tick
    payload += encode_vlq(0) + b"\xff\x2f\x00"
    return _track_chunk(bytes(payload))


def emit_midi(events: Iterable[NoteEvent], row: MusicRow) -> bytes:
    """Serialize events to SMF format 1 bytes with the row's tempo and
    per-voice programs."""
    events = sorted(events, key=lambda e: (e.onset, e.voice, e.pitch))
    header = b"MThd" + struct.pack(">IHHH", 6, 1, 3, TICKS_PER_QUARTER)
    melody = [e for e in events if e.voice == MELODY]
    harmony = [e for e in events if e.voice == HARMONY]
    return (header
            + _tempo_track(row.tempo_bpm)
            + _voice_track(MELODY, melody, row.programs[MELODY])
            + _voice_track(HARMONY, harmony, row.programs[HARMONY]))
