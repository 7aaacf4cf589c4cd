"""Stochastic division of sentences into typographic lines.

Sentences inside the configured word range pass through untouched. Longer
ones are cut into chunks whose sizes stay in range wherever the arithmetic
allows, avoiding breaks right after very short words (widow control).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ..config import LineDivision


@dataclass(frozen=True)
class LinePlan:
    lines: tuple[str, ...]
    word_counts: tuple[int, ...]

    def __post_init__(self):
        assert len(self.lines) == len(self.word_counts)

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(w for line in self.lines for w in line.split())


@lru_cache(maxsize=4096)
def _feasible(n: int, lo: int, hi: int) -> bool:
    """Can n words be partitioned into chunks of lo..hi words each?"""
    if n == 0:
        return True
    if n < lo:
        return False
    if n <= hi:
        return True
    return any(_feasible(n - k, lo, hi) for k in range(lo, hi + 1))


def _chunk_sentence(words: list[str], rng: random.Random,
                    division: LineDivision) -> list[list[str]]:
    lo, hi = division.min_words, division.max_words
    if len(words) <= hi:
        return [words]

    chunks: list[list[str]] = []
    idx = 0
    remaining = len(words)
    while remaining > hi:
        candidates = [k for k in range(lo, min(hi, remaining - 1) + 1)
                      if _feasible(remaining - k, lo, hi)]
        # widow control: prefer not to break right after a short word
        preferred = [k for k in candidates
                     if len(words[idx + k - 1]) > division.small_word_max_chars]
        pool = preferred or candidates
        if not pool:
            # degenerate config: any cut that leaves a finishable tail
            pool = [k for k in range(1, remaining + 1)
                    if _feasible(remaining - k, lo, hi)] or [remaining]
        k = pool[rng.randrange(len(pool))]
        chunks.append(words[idx:idx + k])
        idx += k
        remaining -= k
    if remaining:
        chunks.append(words[idx:])
    return chunks


def divide_lines(sentences: Iterable[str], rng: random.Random,
                 division: LineDivision = LineDivision()) -> LinePlan:
    """Divide sentences into lines; deterministic for a seeded rng."""
    lines: list[str] = []
    counts: list[int] = []
    for sentence in sentences:
        words = sentence.split()
        if not words:
            continue
        for chunk in _chunk_sentence(words, rng, division):
            lines.append(" ".join(chunk))
            counts.append(len(chunk))
    return LinePlan(lines=tuple(lines), word_counts=tuple(counts))
