"""Configuration loading, validation and serialization.

Three JSON files drive the engine:

* ``colours.json``    per-emotion colour pools, background style weights,
                      white-background probability, legibility threshold.
* ``typefaces.json``  typeface definitions with variable axes, per-emotion
                      typeface weights, line division bounds, poster formats.
* ``music.json``      per-emotion harmonic progressions and melody
                      probability tables.

Loading is strict: unknown keys, malformed values and dangling references
are reported as :class:`ValidationError` with the offending key path.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .emotions import EMOTIONS, NEUTRAL
from .colors import parse_hex
from .formats import ISO_216
from .theory import CHORD_QUALITIES, NOTE_NAMES, SCALE_MODES

BACKGROUND_STYLES = ("solid", "diagonally_halved", "solid_divided", "gradient")
NOTE_KINDS = ("scale_note", "chord_note", "chromatism")

# duration name -> length in beats
DURATIONS: dict[str, float] = {"whole": 4.0, "half": 2.0, "quarter": 1.0, "eighth": 0.5}
_BEATS_TO_NAME = {v: k for k, v in DURATIONS.items()}

_PROB_SUM_TOL = 1e-9


class ConfigError(Exception):
    """Base class for configuration problems."""


class MissingFile(ConfigError):
    def __init__(self, path: str | Path):
        self.path = str(path)
        super().__init__(f"config file not found: {self.path}")


class ParseError(ConfigError):
    def __init__(self, path: str | Path, reason: str):
        self.path = str(path)
        super().__init__(f"{self.path}: invalid JSON: {reason}")


class ValidationError(ConfigError):
    def __init__(self, where: str, reason: str):
        self.where = where
        super().__init__(f"{where}: {reason}")


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class WeightedColour:
    colour: str
    weight: float


@dataclass(frozen=True)
class WeightedTypeface:
    typeface_id: str
    weight: float


@dataclass(frozen=True)
class AxisDef:
    """One variable font axis with its traversal step."""

    default: float
    minimum: float
    maximum: float
    step: float


@dataclass(frozen=True)
class SizeDecrement:
    """Font size drop per failed attempt: base + slope * attempts."""

    base: float
    per_attempt_slope: float


@dataclass(frozen=True)
class TypefaceDef:
    typeface_id: str
    axes: Mapping[str, AxisDef]
    source: str | None = None
    leading_to_size_factor: float = 0.833
    size_decrement: SizeDecrement = SizeDecrement(1.0, 0.25)
    min_row_height: float = 9.0

    @property
    def synthetic(self) -> bool:
        return self.source is None


@dataclass(frozen=True)
class LineDivision:
    min_words: int = 3
    max_words: int = 7
    small_word_max_chars: int = 2


@dataclass(frozen=True)
class FormatChoices:
    names: tuple[str, ...] = ("A3", "A4", "A5")
    dpi: int = 300


@dataclass(frozen=True)
class ChordSpec:
    root: str
    quality: str


@dataclass(frozen=True)
class ScaleSpec:
    """Explicit tonic and mode, or derived from the progression's first chord."""

    root: str | None = None
    mode: str | None = None
    derive: bool = False


@dataclass(frozen=True)
class MusicRow:
    progression: tuple[ChordSpec, ...]
    scale: ScaleSpec
    note_kind_probs: Mapping[str, float]
    duration_probs: Mapping[float, float]
    interval_probs: Mapping[int, float]
    tempo_bpm: float
    programs: Mapping[str, int] = field(
        default_factory=lambda: {"melody": 4, "harmony": 89}
    )
    velocities: Mapping[str, int] = field(
        default_factory=lambda: {"melody": 84, "harmony": 56}
    )


@dataclass(frozen=True)
class MusicConfig:
    rows: Mapping[str, MusicRow]

    def row(self, emotion: str) -> MusicRow:
        try:
            return self.rows[emotion]
        except KeyError:
            raise KeyError(f"no music row for emotion {emotion!r}") from None


@dataclass(frozen=True)
class StyleConfig:
    """Everything the styling, typesetting and music stages read."""

    colour_map: Mapping[str, tuple[WeightedColour, ...]]
    typefaces: tuple[TypefaceDef, ...]
    typeface_map: Mapping[str, tuple[WeightedTypeface, ...]]
    background_weights: Mapping[str, Mapping[str, float]]
    music: MusicConfig
    white_probability: float = 0.10
    predominance_threshold: float = 0.30
    legibility: float = 3.0
    line_division: LineDivision = LineDivision()
    formats: FormatChoices = FormatChoices()
    attempt_cap: int = 1000

    def typeface(self, typeface_id: str) -> TypefaceDef:
        for tf in self.typefaces:
            if tf.typeface_id == typeface_id:
                return tf
        raise KeyError(f"unknown typeface: {typeface_id!r}")


@dataclass(frozen=True)
class ConfigPaths:
    colours: Path
    typefaces: Path
    music: Path

    @classmethod
    def in_dir(cls, directory: str | Path) -> "ConfigPaths":
        d = Path(directory)
        return cls(d / "colours.json", d / "typefaces.json", d / "music.json")


def default_config_dir() -> Path:
    """Directory with the configuration shipped inside the package."""
    return Path(str(resources.files("affiche") / "data" / "config"))


# ---------------------------------------------------------------------------
# validation helpers


def _check_keys(obj: Mapping[str, Any], where: str, required: tuple[str, ...],
                optional: tuple[str, ...] = ()) -> None:
    if not isinstance(obj, dict):
        raise ValidationError(where, f"expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise ValidationError(where, f"unknown keys: {', '.join(unknown)}")
    missing = sorted(set(required) - set(obj))
    if missing:
        raise ValidationError(where, f"missing keys: {', '.join(missing)}")


def _num(value: Any, where: str, lo: float | None = None,
         hi: float | None = None) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(where, f"expected a number, got {type(value).__name__}")
    v = float(value)
    if lo is not None and v < lo:
        raise ValidationError(where, f"must be >= {lo}, got {v}")
    if hi is not None and v > hi:
        raise ValidationError(where, f"must be <= {hi}, got {v}")
    return v


def _int(value: Any, where: str, lo: int | None = None,
         hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(where, f"expected an integer, got {type(value).__name__}")
    if lo is not None and value < lo:
        raise ValidationError(where, f"must be >= {lo}, got {value}")
    if hi is not None and value > hi:
        raise ValidationError(where, f"must be <= {hi}, got {value}")
    return value


def _str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise ValidationError(where, f"expected a string, got {type(value).__name__}")
    return value


def _colour(value: Any, where: str) -> str:
    s = _str(value, where)
    try:
        parse_hex(s)
    except ValueError as exc:
        raise ValidationError(where, str(exc)) from None
    return s


def _emotion_keys(obj: Mapping[str, Any], where: str, *, with_neutral: bool,
                  require_all: bool) -> None:
    allowed = set(EMOTIONS) | ({NEUTRAL} if with_neutral else set())
    if not isinstance(obj, dict):
        raise ValidationError(where, f"expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ValidationError(where, f"unknown emotions: {', '.join(unknown)}")
    if require_all:
        missing = sorted(allowed - set(obj))
        if missing:
            raise ValidationError(where, f"missing emotions: {', '.join(missing)}")


def _positive_somewhere(weights: list[float], where: str) -> None:
    if not any(w > 0.0 for w in weights):
        raise ValidationError(where, "needs at least one strictly positive weight")


def _prob_table(obj: Any, where: str, allowed: tuple[str, ...],
                require_all: bool = False) -> dict[str, float]:
    if not isinstance(obj, dict):
        raise ValidationError(where, f"expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        raise ValidationError(where, f"unknown keys: {', '.join(unknown)}")
    if require_all:
        missing = sorted(set(allowed) - set(obj))
        if missing:
            raise ValidationError(where, f"missing keys: {', '.join(missing)}")
    out = {k: _num(v, f"{where}.{k}", lo=0.0, hi=1.0) for k, v in obj.items()}
    total = sum(out.values())
    if abs(total - 1.0) > _PROB_SUM_TOL:
        raise ValidationError(where, f"probabilities must sum to 1, got {total!r}")
    return out


# ---------------------------------------------------------------------------
# per-file builders


def _build_colours(raw: Any, fname: str) -> dict[str, Any]:
    where = fname
    _check_keys(raw, where, ("colours",),
                ("background_weights", "white_probability",
                 "predominance_threshold", "legibility"))

    colour_map: dict[str, tuple[WeightedColour, ...]] = {}
    _emotion_keys(raw["colours"], f"{where}.colours", with_neutral=False,
                  require_all=True)
    for emotion, entries in raw["colours"].items():
        ewhere = f"{where}.colours.{emotion}"
        if not isinstance(entries, list) or not entries:
            raise ValidationError(ewhere, "expected a non-empty array")
        pool = []
        for i, entry in enumerate(entries):
            iwhere = f"{ewhere}[{i}]"
            _check_keys(entry, iwhere, ("colour", "weight"))
            pool.append(WeightedColour(
                colour=_colour(entry["colour"], f"{iwhere}.colour"),
                weight=_num(entry["weight"], f"{iwhere}.weight", lo=0.0),
            ))
        _positive_somewhere([c.weight for c in pool], ewhere)
        colour_map[emotion] = tuple(pool)

    background_weights: dict[str, dict[str, float]] = {}
    raw_bw = raw.get("background_weights", {})
    _emotion_keys(raw_bw, f"{where}.background_weights", with_neutral=False,
                  require_all=False)
    for emotion in EMOTIONS:
        ewhere = f"{where}.background_weights.{emotion}"
        row_raw = raw_bw.get(emotion, {})
        _check_keys(row_raw, ewhere, (), BACKGROUND_STYLES)
        row = {s: _num(row_raw.get(s, 1.0), f"{ewhere}.{s}", lo=0.0)
               for s in BACKGROUND_STYLES}
        _positive_somewhere(list(row.values()), ewhere)
        background_weights[emotion] = row

    legibility = 3.0
    if "legibility" in raw:
        lwhere = f"{where}.legibility"
        _check_keys(raw["legibility"], lwhere, ("min_contrast",))
        legibility = _num(raw["legibility"]["min_contrast"], f"{lwhere}.min_contrast",
                          lo=1.0, hi=21.0)

    return {
        "colour_map": colour_map,
        "background_weights": background_weights,
        "white_probability": _num(raw.get("white_probability", 0.10),
                                  f"{where}.white_probability", lo=0.0, hi=1.0),
        "predominance_threshold": _num(raw.get("predominance_threshold", 0.30),
                                       f"{where}.predominance_threshold",
                                       lo=0.0, hi=1.0),
        "legibility": legibility,
    }


_AXIS_DEFAULTS = {
    "weight": AxisDef(default=400.0, minimum=100.0, maximum=900.0, step=10.0),
    "stretch": AxisDef(default=100.0, minimum=50.0, maximum=200.0, step=16.6),
}


def _build_axis(name: str, entry: Any, where: str) -> AxisDef:
    base = _AXIS_DEFAULTS.get(name)
    _check_keys(entry, where, (), ("default", "min", "max", "step"))
    if base is None and not {"default", "min", "max", "step"} <= set(entry):
        raise ValidationError(where, "custom axes must spell out default, min, max and step")
    default = _num(entry.get("default", base.default if base else None), f"{where}.default")
    minimum = _num(entry.get("min", base.minimum if base else None), f"{where}.min")
    maximum = _num(entry.get("max", base.maximum if base else None), f"{where}.max")
    step = _num(entry.get("step", base.step if base else None), f"{where}.step")
    if not minimum <= default <= maximum:
        raise ValidationError(where, f"need min <= default <= max, "
                                     f"got {minimum} / {default} / {maximum}")
    if step <= 0:
        raise ValidationError(f"{where}.step", f"must be > 0, got {step}")
    return AxisDef(default=default, minimum=minimum, maximum=maximum, step=step)


def _build_typefaces(raw: Any, fname: str) -> dict[str, Any]:
    where = fname
    _check_keys(raw, where, ("typefaces",),
                ("typeface_weights", "line_division", "formats", "attempt_cap"))

    if not isinstance(raw["typefaces"], list) or not raw["typefaces"]:
        raise ValidationError(f"{where}.typefaces", "expected a non-empty array")
    typefaces: list[TypefaceDef] = []
    seen: set[str] = set()
    for i, entry in enumerate(raw["typefaces"]):
        twhere = f"{where}.typefaces[{i}]"
        _check_keys(entry, twhere, ("typeface_id",),
                    ("axes", "source", "leading_to_size_factor",
                     "size_decrement", "min_row_height"))
        tf_id = _str(entry["typeface_id"], f"{twhere}.typeface_id")
        if tf_id in seen:
            raise ValidationError(f"{twhere}.typeface_id", f"duplicate id {tf_id!r}")
        seen.add(tf_id)

        axes_raw = entry.get("axes", {"weight": {}, "stretch": {}})
        if not isinstance(axes_raw, dict):
            raise ValidationError(f"{twhere}.axes", "expected an object")
        axes = {name: _build_axis(name, axis_entry, f"{twhere}.axes.{name}")
                for name, axis_entry in axes_raw.items()}

        decrement = SizeDecrement(1.0, 0.25)
        if "size_decrement" in entry:
            dwhere = f"{twhere}.size_decrement"
            _check_keys(entry["size_decrement"], dwhere, (),
                        ("base", "per_attempt_slope"))
            decrement = SizeDecrement(
                base=_num(entry["size_decrement"].get("base", 1.0),
                          f"{dwhere}.base", lo=0.0),
                per_attempt_slope=_num(
                    entry["size_decrement"].get("per_attempt_slope", 0.25),
                    f"{dwhere}.per_attempt_slope", lo=0.0),
            )
        source = entry.get("source")
        if source is not None:
            source = _str(source, f"{twhere}.source")
        typefaces.append(TypefaceDef(
            typeface_id=tf_id,
            axes=axes,
            source=source,
            leading_to_size_factor=_num(
                entry.get("leading_to_size_factor", 0.833),
                f"{twhere}.leading_to_size_factor", lo=0.1, hi=2.0),
            size_decrement=decrement,
            min_row_height=_num(entry.get("min_row_height", 9.0),
                                f"{twhere}.min_row_height", lo=1.0),
        ))
    known_ids = {tf.typeface_id for tf in typefaces}

    typeface_map: dict[str, tuple[WeightedTypeface, ...]] = {}
    raw_tw = raw.get("typeface_weights")
    if raw_tw is None:
        everyone = tuple(WeightedTypeface(tf.typeface_id, 1.0) for tf in typefaces)
        typeface_map = {e: everyone for e in (*EMOTIONS, NEUTRAL)}
    else:
        _emotion_keys(raw_tw, f"{where}.typeface_weights", with_neutral=True,
                      require_all=True)
        for emotion, entries in raw_tw.items():
            ewhere = f"{where}.typeface_weights.{emotion}"
            if not isinstance(entries, list) or not entries:
                raise ValidationError(ewhere, "expected a non-empty array")
            pool = []
            for i, entry in enumerate(entries):
                iwhere = f"{ewhere}[{i}]"
                _check_keys(entry, iwhere, ("typeface", "weight"))
                tf_id = _str(entry["typeface"], f"{iwhere}.typeface")
                if tf_id not in known_ids:
                    raise ValidationError(f"{iwhere}.typeface",
                                          f"unknown typeface {tf_id!r}")
                pool.append(WeightedTypeface(
                    typeface_id=tf_id,
                    weight=_num(entry["weight"], f"{iwhere}.weight", lo=0.0),
                ))
            _positive_somewhere([t.weight for t in pool], ewhere)
            typeface_map[emotion] = tuple(pool)

    line_division = LineDivision()
    if "line_division" in raw:
        lwhere = f"{where}.line_division"
        _check_keys(raw["line_division"], lwhere, (),
                    ("min_words", "max_words", "small_word_max_chars"))
        lo = _int(raw["line_division"].get("min_words", 3), f"{lwhere}.min_words", lo=1)
        hi = _int(raw["line_division"].get("max_words", 7), f"{lwhere}.max_words", lo=1)
        if hi < lo:
            raise ValidationError(lwhere, f"max_words < min_words ({hi} < {lo})")
        line_division = LineDivision(
            min_words=lo, max_words=hi,
            small_word_max_chars=_int(
                raw["line_division"].get("small_word_max_chars", 2),
                f"{lwhere}.small_word_max_chars", lo=0),
        )

    formats = FormatChoices()
    if "formats" in raw:
        fwhere = f"{where}.formats"
        _check_keys(raw["formats"], fwhere, (), ("names", "dpi"))
        names_raw = raw["formats"].get("names", list(FormatChoices().names))
        if not isinstance(names_raw, list) or not names_raw:
            raise ValidationError(f"{fwhere}.names", "expected a non-empty array")
        names = []
        for i, n in enumerate(names_raw):
            n = _str(n, f"{fwhere}.names[{i}]")
            if n not in ISO_216:
                raise ValidationError(f"{fwhere}.names[{i}]",
                                      f"unknown ISO 216 format {n!r}")
            names.append(n)
        formats = FormatChoices(
            names=tuple(names),
            dpi=_int(raw["formats"].get("dpi", 300), f"{fwhere}.dpi", lo=36),
        )

    return {
        "typefaces": tuple(typefaces),
        "typeface_map": typeface_map,
        "line_division": line_division,
        "formats": formats,
        "attempt_cap": _int(raw.get("attempt_cap", 1000), f"{where}.attempt_cap", lo=1),
    }


def _build_music(raw: Any, fname: str) -> MusicConfig:
    where = fname
    _check_keys(raw, where, ("emotions",))
    _emotion_keys(raw["emotions"], f"{where}.emotions", with_neutral=True,
                  require_all=True)

    rows: dict[str, MusicRow] = {}
    for emotion, entry in raw["emotions"].items():
        ewhere = f"{where}.emotions.{emotion}"
        _check_keys(entry, ewhere,
                    ("progression", "note_kind_probabilities",
                     "duration_probabilities", "interval_probabilities",
                     "tempo_bpm"),
                    ("scale", "programs", "velocities"))

        if not isinstance(entry["progression"], list) or not entry["progression"]:
            raise ValidationError(f"{ewhere}.progression", "expected a non-empty array")
        progression = []
        for i, chord in enumerate(entry["progression"]):
            cwhere = f"{ewhere}.progression[{i}]"
            _check_keys(chord, cwhere, ("root", "quality"))
            root = _str(chord["root"], f"{cwhere}.root")
            if root not in NOTE_NAMES:
                raise ValidationError(f"{cwhere}.root", f"unknown note {root!r}")
            quality = _str(chord["quality"], f"{cwhere}.quality")
            if quality not in CHORD_QUALITIES:
                raise ValidationError(f"{cwhere}.quality",
                                      f"unknown chord quality {quality!r}")
            progression.append(ChordSpec(root=root, quality=quality))

        scale = ScaleSpec(derive=True)
        if "scale" in entry:
            swhere = f"{ewhere}.scale"
            _check_keys(entry["scale"], swhere, ("root", "mode"))
            root = _str(entry["scale"]["root"], f"{swhere}.root")
            if root not in NOTE_NAMES:
                raise ValidationError(f"{swhere}.root", f"unknown note {root!r}")
            mode = _str(entry["scale"]["mode"], f"{swhere}.mode")
            if mode not in SCALE_MODES:
                raise ValidationError(f"{swhere}.mode", f"unknown mode {mode!r}")
            scale = ScaleSpec(root=root, mode=mode, derive=False)

        kind_probs = _prob_table(entry["note_kind_probabilities"],
                                 f"{ewhere}.note_kind_probabilities",
                                 NOTE_KINDS, require_all=True)

        dur_raw = _prob_table(entry["duration_probabilities"],
                              f"{ewhere}.duration_probabilities",
                              tuple(DURATIONS), require_all=True)
        duration_probs = {DURATIONS[name]: p for name, p in dur_raw.items()}

        iwhere = f"{ewhere}.interval_probabilities"
        if not isinstance(entry["interval_probabilities"], dict) \
                or not entry["interval_probabilities"]:
            raise ValidationError(iwhere, "expected a non-empty object")
        interval_probs: dict[int, float] = {}
        for key, p in entry["interval_probabilities"].items():
            try:
                step = int(key)
            except ValueError:
                raise ValidationError(f"{iwhere}.{key}",
                                      "keys must be signed integers") from None
            interval_probs[step] = _num(p, f"{iwhere}.{key}", lo=0.0, hi=1.0)
        total = sum(interval_probs.values())
        if abs(total - 1.0) > _PROB_SUM_TOL:
            raise ValidationError(iwhere, f"probabilities must sum to 1, got {total!r}")

        programs = {"melody": 4, "harmony": 89}
        if "programs" in entry:
            pwhere = f"{ewhere}.programs"
            _check_keys(entry["programs"], pwhere, ("melody", "harmony"))
            programs = {v: _int(entry["programs"][v], f"{pwhere}.{v}", lo=0, hi=127)
                        for v in ("melody", "harmony")}
        velocities = {"melody": 84, "harmony": 56}
        if "velocities" in entry:
            vwhere = f"{ewhere}.velocities"
            _check_keys(entry["velocities"], vwhere, ("melody", "harmony"))
            velocities = {v: _int(entry["velocities"][v], f"{vwhere}.{v}", lo=1, hi=127)
                          for v in ("melody", "harmony")}

        rows[emotion] = MusicRow(
            progression=tuple(progression),
            scale=scale,
            note_kind_probs=kind_probs,
            duration_probs=duration_probs,
            interval_probs=interval_probs,
            tempo_bpm=_num(entry["tempo_bpm"], f"{ewhere}.tempo_bpm", lo=10.0, hi=400.0),
            programs=programs,
            velocities=velocities,
        )
    return MusicConfig(rows=rows)


# ---------------------------------------------------------------------------
# loading


def _read_json(path: Path) -> Any:
    if not path.is_file():
        raise MissingFile(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(path, str(exc)) from None


def load_config(source: str | Path | ConfigPaths | None = None) -> StyleConfig:
    """Load and validate the three config files.

    ``source`` may be a directory containing colours.json, typefaces.json and
    music.json, an explicit :class:`ConfigPaths`, or None for the packaged
    defaults.
    """
    if source is None:
        source = default_config_dir()
    paths = source if isinstance(source, ConfigPaths) else ConfigPaths.in_dir(source)

    colours = _build_colours(_read_json(paths.colours), paths.colours.name)
    typefaces = _build_typefaces(_read_json(paths.typefaces), paths.typefaces.name)
    music = _build_music(_read_json(paths.music), paths.music.name)

    return StyleConfig(music=music, **colours, **typefaces)


# ---------------------------------------------------------------------------
# serialization (inverse of load_config, resolved defaults written out)


def colours_payload(cfg: StyleConfig) -> dict[str, Any]:
    return {
        "colours": {
            e: [{"colour": c.colour, "weight": c.weight} for c in pool]
            for e, pool in cfg.colour_map.items()
        },
        "background_weights": {
            e: dict(row) for e, row in cfg.background_weights.items()
        },
        "white_probability": cfg.white_probability,
        "predominance_threshold": cfg.predominance_threshold,
        "legibility": {"min_contrast": cfg.legibility},
    }


def typefaces_payload(cfg: StyleConfig) -> dict[str, Any]:
    tf_entries = []
    for tf in cfg.typefaces:
        entry: dict[str, Any] = {
            "typeface_id": tf.typeface_id,
            "axes": {
                name: {"default": a.default, "min": a.minimum,
                       "max": a.maximum, "step": a.step}
                for name, a in tf.axes.items()
            },
            "leading_to_size_factor": tf.leading_to_size_factor,
            "size_decrement": {
                "base": tf.size_decrement.base,
                "per_attempt_slope": tf.size_decrement.per_attempt_slope,
            },
            "min_row_height": tf.min_row_height,
        }
        if tf.source is not None:
            entry["source"] = tf.source
        tf_entries.append(entry)
    return {
        "typefaces": tf_entries,
        "typeface_weights": {
            e: [{"typeface": t.typeface_id, "weight": t.weight} for t in pool]
            for e, pool in cfg.typeface_map.items()
        },
        "line_division": {
            "min_words": cfg.line_division.min_words,
            "max_words": cfg.line_division.max_words,
            "small_word_max_chars": cfg.line_division.small_word_max_chars,
        },
        "formats": {"names": list(cfg.formats.names), "dpi": cfg.formats.dpi},
        "attempt_cap": cfg.attempt_cap,
    }


def music_payload(cfg: StyleConfig) -> dict[str, Any]:
    emotions: dict[str, Any] = {}
    for e, row in cfg.music.rows.items():
        entry: dict[str, Any] = {
            "progression": [{"root": c.root, "quality": c.quality}
                            for c in row.progression],
            "note_kind_probabilities": dict(row.note_kind_probs),
            "duration_probabilities": {
                _BEATS_TO_NAME[beats]: p for beats, p in row.duration_probs.items()
            },
            "interval_probabilities": {str(k): p
                                       for k, p in row.interval_probs.items()},
            "tempo_bpm": row.tempo_bpm,
            "programs": dict(row.programs),
            "velocities": dict(row.velocities),
        }
        if not row.scale.derive:
            entry["scale"] = {"root": row.scale.root, "mode": row.scale.mode}
        emotions[e] = entry
    return {"emotions": emotions}


def save_config(cfg: StyleConfig, directory: str | Path) -> ConfigPaths:
    """Write the three config files; returns the paths written."""
    paths = ConfigPaths.in_dir(directory)
    Path(directory).mkdir(parents=True, exist_ok=True)
    for path, payload in ((paths.colours, colours_payload(cfg)),
                          (paths.typefaces, typefaces_payload(cfg)),
                          (paths.music, music_payload(cfg))):
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
    return paths
