"""The parser here is written from the SMF byte layout alone, independent
of the writer, so a round trip genuinely checks the emitted bytes."""
import random
import struct

import pytest

from affiche.config import load_config
from affiche.midi import TICKS_PER_QUARTER, emit_midi, encode_vlq
from affiche.music import HARMONY, MELODY, NoteEvent, generate


# --- independent reference parser ------------------------------------------


def decode_vlq(data: bytes, pos: int) -> tuple[int, int]:
    value = 0
    while True:
        byte = data[pos]
        pos += 1
        value = (value << 7) | (byte & 0x7F)
        if not byte & 0x80:
            return value, pos


def parse_smf(data: bytes):
    assert data[:4] == b"MThd"
    length, fmt, ntracks, division = struct.unpack(">IHHH", data[4:14])
    assert length == 6
    pos = 14
    tracks = []
    for _ in range(ntracks):
        assert data[pos:pos + 4] == b"MTrk"
        size = struct.unpack(">I", data[pos + 4:pos + 8])[0]
        body = data[pos + 8:pos + 8 + size]
        pos += 8 + size
        tracks.append(_parse_track(body))
    assert pos == len(data), "trailing bytes after the last track"
    return {"format": fmt, "division": division, "tracks": tracks}


def _parse_track(body: bytes):
    events = []
    pos = 0
    tick = 0
    running = None
    while pos < len(body):
        delta, pos = decode_vlq(body, pos)
        tick += delta
        status = body[pos]
        if status & 0x80:
            pos += 1
            running = status
        else:
            status = running
        if status == 0xFF:
            meta = body[pos]
            length, pos = decode_vlq(body, pos + 1)
            payload = body[pos:pos + length]
            pos += length
            events.append((tick, "meta", meta, payload))
            if meta == 0x2F:
                break
        elif status & 0xF0 in (0x80, 0x90):
            pitch, velocity = body[pos], body[pos + 1]
            pos += 2
            on = status & 0xF0 == 0x90 and velocity > 0
            events.append((tick, "on" if on else "off", status & 0x0F, pitch,
                           velocity))
        elif status & 0xF0 == 0xC0:
            events.append((tick, "program", status & 0x0F, body[pos]))
            pos += 1
        else:
            raise AssertionError(f"unexpected status byte {status:#x}")
    return events


def paired_notes(track_events):
    """Match ons with offs into (tick, channel, pitch, duration, velocity)."""
    notes = []
    open_notes = {}
    for ev in track_events:
        if ev[1] == "on":
            tick, _, channel, pitch, velocity = ev
            assert (channel, pitch) not in open_notes, "overlapping same pitch"
            open_notes[(channel, pitch)] = (tick, velocity)
        elif ev[1] == "off":
            tick, _, channel, pitch, _ = ev
            start, velocity = open_notes.pop((channel, pitch))
            notes.append((start, channel, pitch, tick - start, velocity))
    assert not open_notes, "note without a matching off"
    return sorted(notes)


# --- vlq and header oracles -------------------------------------------------


@pytest.mark.parametrize("value,expected", [
    (0, "00"),
    (64, "40"),
    (127, "7f"),
    (128, "8100"),
    (8192, "c000"),
    (16383, "ff7f"),
    (16384, "818000"),
    (100000, "868d20"),
    (0x0FFFFFFF, "ffffff7f"),
])
def test_vlq_known_encodings(value, expected):
    assert encode_vlq(value).hex() == expected


def test_vlq_rejects_negative():
    with pytest.raises(ValueError):
        encode_vlq(-1)


@pytest.mark.parametrize("value", [0, 1, 127, 128, 300, 8191, 16384, 2**21])
def test_vlq_round_trip(value):
    decoded, pos = decode_vlq(encode_vlq(value), 0)
    assert decoded == value
    assert pos == len(encode_vlq(value))


@pytest.fixture(scope="module")
def cfg():
    return load_config(None)


def test_header_fields(cfg):
    data = emit_midi(generate("joy", 2, random.Random(0), cfg),
                     cfg.music.row("joy"))
    parsed = parse_smf(data)
    assert parsed["format"] == 1
    assert parsed["division"] == 480
    assert len(parsed["tracks"]) == 3


@pytest.mark.parametrize("bpm,expected_us", [
    (112.0, 535714),
    (70.0, 857143),
    (80.0, 750000),
    (120.0, 500000),
])
def test_tempo_meta(cfg, bpm, expected_us):
    from dataclasses import replace
    row = replace(cfg.music.row("joy"), tempo_bpm=bpm)
    data = emit_midi(generate("joy", 1, random.Random(0), cfg), row)
    tempo_track = parse_smf(data)["tracks"][0]
    tempos = [e for e in tempo_track if e[1] == "meta" and e[2] == 0x51]
    assert len(tempos) == 1
    tick, _, _, payload = tempos[0]
    assert tick == 0
    assert len(payload) == 3
    assert int.from_bytes(payload, "big") == expected_us


def test_program_changes(cfg):
    row = cfg.music.row("sadness")
    data = emit_midi(generate("sadness", 2, random.Random(1), cfg), row)
    tracks = parse_smf(data)["tracks"]
    melody_programs = [e for e in tracks[1] if e[1] == "program"]
    harmony_programs = [e for e in tracks[2] if e[1] == "program"]
    assert melody_programs == [(0, "program", 0, row.programs[MELODY])]
    assert harmony_programs == [(0, "program", 1, row.programs[HARMONY])]


def test_channels_by_voice(cfg):
    data = emit_midi(generate("trust", 4, random.Random(2), cfg),
                     cfg.music.row("trust"))
    tracks = parse_smf(data)["tracks"]
    assert {e[2] for e in tracks[1] if e[1] in ("on", "off")} == {0}
    assert {e[2] for e in tracks[2] if e[1] in ("on", "off")} == {1}


def test_round_trip_matches_events(cfg):
    events = generate("fear", 16, random.Random(3), cfg)
    row = cfg.music.row("fear")
    tracks = parse_smf(emit_midi(events, row))["tracks"]

    def expected(voice):
        out = []
        for e in events:
            if e.voice != voice:
                continue
            on = round(e.onset * TICKS_PER_QUARTER)
            dur = round(e.duration * TICKS_PER_QUARTER)
            velocity = max(1, min(127, e.velocity))
            out.append((on, 0 if voice == MELODY else 1, e.pitch, dur,
                        velocity))
        return sorted(out)

    assert paired_notes(tracks[1]) == expected(MELODY)
    assert paired_notes(tracks[2]) == expected(HARMONY)


def test_note_off_precedes_on_at_equal_tick(cfg):
    # back-to-back melody notes share a tick: the off must come first
    events = [
        NoteEvent(onset=0.0, duration=1.0, pitch=60, velocity=90,
                  voice=MELODY, kind="scale_note"),
        NoteEvent(onset=1.0, duration=1.0, pitch=60, velocity=90,
                  voice=MELODY, kind="scale_note"),
    ]
    row = load_config(None).music.row("joy")
    track = parse_smf(emit_midi(events, row))["tracks"][1]
    at_boundary = [e for e in track if e[0] == 480 and e[1] in ("on", "off")]
    assert [e[1] for e in at_boundary] == ["off", "on"]
    # same-pitch reattack parses into two clean notes
    notes = paired_notes(track)
    assert [(n[0], n[3]) for n in notes] == [(0, 480), (480, 480)]


def test_bytes_deterministic(cfg):
    events = generate("anger", 8, random.Random(9), cfg)
    row = cfg.music.row("anger")
    assert emit_midi(events, row) == emit_midi(events, row)


def test_velocity_clamped_into_midi_range(cfg):
    events = [NoteEvent(onset=0.0, duration=1.0, pitch=60, velocity=200,
                        voice=MELODY, kind="scale_note"),
              NoteEvent(onset=1.0, duration=1.0, pitch=62, velocity=0,
                        voice=MELODY, kind="scale_note")]
    row = cfg.music.row("joy")
    notes = paired_notes(parse_smf(emit_midi(events, row))["tracks"][1])
    assert [n[4] for n in notes] == [127, 1]


def test_end_of_track_markers(cfg):
    data = emit_midi(generate("joy", 1, random.Random(0), cfg),
                     cfg.music.row("joy"))
    for track in parse_smf(data)["tracks"]:
        assert track[-1][1] == "meta" and track[-1][2] == 0x2F
