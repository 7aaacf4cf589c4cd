"""Emotion-driven poster and ambient music engine.

Turns short texts into typographic posters (SVG) and rule-based ambient
music (Standard MIDI Files). Every stage is deterministic under a seed:
the same text, configuration and seed reproduce byte-identical outputs.
"""
from .emotions import EMOTIONS, NEUTRAL, EmotionProfile, predominant
from .config import StyleConfig, load_config, save_config, default_config_dir

__version__ = "0.1.0"


def __getattr__(name):
    # deferred so that `import affiche` stays light
    if name in ("PosterResult", "run_pipeline"):
        from . import pipeline
        return getattr(pipeline, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "EMOTIONS",
    "NEUTRAL",
    "EmotionProfile",
    "predominant",
    "StyleConfig",
    "load_config",
    "save_config",
    "default_config_dir",
    "PosterResult",
    "run_pipeline",
    "__version__",
]
