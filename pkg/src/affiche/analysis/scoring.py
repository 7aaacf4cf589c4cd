"""Emotion scoring behind a pluggable scorer interface.

The default scorer is a deterministic lexicon lookup: each token may carry
associations to one or more emotions, and a text's score per emotion is
the mean association over all tokens that hit the lexicon at all. An HTTP
adapter allows dropping in an external model with the same contract.
"""
from __future__ import annotations

import csv
import re
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping, Protocol, runtime_checkable

import requests

from ..emotions import (
    DEFAULT_PREDOMINANCE_THRESHOLD,
    EMOTIONS,
    EmotionProfile,
)
from .features import _is_emoji, emoji_name

_WORD_RE = re.compile(r"[\w']+")


class ScorerFailure(Exception):
    """An external scorer could not produce scores."""


@runtime_checkable
class EmotionScorer(Protocol):
    def score(self, text: str) -> Mapping[str, float]: ...


@runtime_checkable
class Translator(Protocol):
    def translate(self, text: str, target_lang: str = "en") -> str: ...


class IdentityTranslator:
    """Pass-through stand-in for a real translation service."""

    def translate(self, text: str, target_lang: str = "en") -> str:
        return text


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens plus one name token per emoji character."""
    tokens = [m.group(0).lower() for m in _WORD_RE.finditer(text)]
    tokens.extend(emoji_name(ch) for ch in text if _is_emoji(ch))
    return tokens


class LexiconScorer:
    """Deterministic bag-of-words scorer over a token -> emotion lexicon."""

    def __init__(self, associations: Mapping[str, Mapping[str, float]]):
        for token, assoc in associations.items():
            for emotion, value in assoc.items():
                if emotion not in EMOTIONS:
                    raise ValueError(f"lexicon token {token!r}: "
                                     f"unknown emotion {emotion!r}")
                if not 0.0 <= value <= 1.0:
                    raise ValueError(f"lexicon token {token!r}: score {value!r} "
                                     f"outside [0, 1]")
        self._associations = {t: dict(a) for t, a in associations.items()}

    @property
    def associations(self) -> dict[str, dict[str, float]]:
        return {t: dict(a) for t, a in self._associations.items()}

    @classmethod
    def from_tsv(cls, path: str | Path) -> "LexiconScorer":
        """Load `token<TAB>emotion<TAB>score` rows; tokens may repeat."""
        associations: dict[str, dict[str, float]] = {}
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh, delimiter="\t")
            for lineno, row in enumerate(reader, start=1):
                if not row or (len(row) == 1 and not row[0].strip()):
                    continue
                if row[0].lstrip().startswith("#"):
                    continue
                if len(row) != 3:
                    raise ValueError(f"{path}:{lineno}: expected 3 columns, "
                                     f"got {len(row)}")
                token, emotion, score = row[0].strip().lower(), row[1].strip(), row[2]
                try:
                    value = float(score)
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: bad score {score!r}") from None
                associations.setdefault(token, {})[emotion] = value
        return cls(associations)

    @classmethod
    def bundled(cls) -> "LexiconScorer":
        return _bundled_lexicon()

    def score(self, text: str) -> dict[str, float]:
        sums = dict.fromkeys(EMOTIONS, 0.0)
        hits = 0
        for token in tokenize(text):
            assoc = self._associations.get(token)
            if assoc is None:
                continue
            hits += 1
            for emotion, value in assoc.items():
                sums[emotion] += value
        if hits == 0:
            return sums
        return {e: sums[e] / hits for e in EMOTIONS}


@lru_cache(maxsize=1)
def _bundled_lexicon() -> LexiconScorer:
    src = resources.files("affiche") / "data" / "lexicon.tsv"
    with resources.as_file(src) as path:
        return LexiconScorer.from_tsv(path)


class HttpScorer:
    """Adapter for an external scoring service.

    POSTs {"text": ...} and expects {"scores": {emotion: value}}. Any
    transport or contract problem surfaces as ScorerFailure.
    """

    def __init__(self, url: str, timeout: float = 5.0,
                 session: requests.Session | None = None):
        self.url = url
        self.timeout = timeout
        self._session = session or requests.Session()

    def score(self, text: str) -> dict[str, float]:
        try:
            response = self._session.post(self.url, json={"text": text},
                                          timeout=self.timeout)
            response.raise_for_status()
            payload = response.json()
        except Exception as exc:
            raise ScorerFailure(f"scorer at {self.url} failed: {exc}") from exc
        scores = payload.get("scores")
        if not isinstance(scores, dict):
            raise ScorerFailure(f"scorer at {self.url} returned no scores object")
        unknown = sorted(set(scores) - set(EMOTIONS))
        if unknown:
            raise ScorerFailure(f"scorer at {self.url} returned unknown "
                                f"emotions: {', '.join(unknown)}")
        out = {}
        for emotion, value in scores.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ScorerFailure(f"scorer at {self.url}: score for "
                                    f"{emotion} is not a number")
            out[emotion] = float(value)
        return out


def classify(text: str, scorer: EmotionScorer,
             threshold: float = DEFAULT_PREDOMINANCE_THRESHOLD) -> EmotionProfile:
    """Score ``text`` and derive the predominant emotion set."""
    raw = scorer.score(text)
    scores = {e: float(raw.get(e, 0.0)) for e in EMOTIONS}
    return EmotionProfile.from_scores(scores, threshold=threshold)
