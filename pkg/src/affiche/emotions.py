"""Plutchik emotion set, intensity profiles and predominance ordering."""
from __future__ import annotations

from dataclasses import dataclass, field

# Canonical closed set, also the tie-break order everywhere.
EMOTIONS: tuple[str, ...] = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
)

NEUTRAL = "neutral"

DEFAULT_PREDOMINANCE_THRESHOLD = 0.30


def predominant(scores: dict[str, float], threshold: float) -> list[str]:
    """Emotions scoring at or above ``threshold``, strongest first.

    Ties are broken by the canonical order in ``EMOTIONS`` so the result is
    stable for equal scores.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    ranked = sorted(
        (e for e in EMOTIONS if scores.get(e, 0.0) >= threshold),
        key=lambda e: (-scores.get(e, 0.0), EMOTIONS.index(e)),
    )
    return ranked


@dataclass(frozen=True)
class EmotionProfile:
    """Intensity in [0, 1] for each emotion plus the derived predominance."""

    scores: dict[str, float]
    predominant: list[str] = field(default_factory=list)
    neutral: bool = True

    @classmethod
    def from_scores(
        cls,
        scores: dict[str, float],
        threshold: float = DEFAULT_PREDOMINANCE_THRESHOLD,
    ) -> "EmotionProfile":
        clamped = {e: min(1.0, max(0.0, float(scores.get(e, 0.0)))) for e in EMOTIONS}
        order = predominant(clamped, threshold)
        return cls(scores=clamped, predominant=order, neutral=not order)

    @property
    def top(self) -> str | None:
        return self.predominant[0] if self.predominant else None

    @property
    def second(self) -> str | None:
        return self.predominant[1] if len(self.predominant) > 1 else None

    def score(self, emotion: str) -> float:
        return self.scores.get(emotion, 0.0)
