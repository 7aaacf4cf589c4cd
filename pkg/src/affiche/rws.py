"""Roulette-wheel selection, the shared sampling primitive."""
from __future__ import annotations

import random
from typing import Sequence, TypeVar

T = TypeVar("T")


class AllZeroWeights(ValueError):
    """Every weight is zero (or the list is empty): nothing is selectable."""


def roulette_select(weights: Sequence[float], rng: random.Random) -> int:
    """Index i with probability weights[i] / sum(weights).

    Weights must be non-negative with at least one strictly positive entry.
    Scaling every weight by a positive constant leaves the distribution
    unchanged.
    """
    total = 0.0
    for i, w in enumerate(weights):
        if w < 0:
            raise ValueError(f"negative weight at index {i}: {w}")
        total += w
    if total <= 0.0:
        raise AllZeroWeights(f"no positive weight among {len(weights)} entries")
    point = rng.random()
    acc = 0.0
    last_positive = 0
    for i, w in enumerate(weights):
        if w <= 0.0:
            continue
        last_positive = i
        acc += w / total
        if point < acc:
            return i
    return last_positive  # float round-off at the top of the wheel


def roulette_choice(items: Sequence[T], weights: Sequence[float], rng: random.Random) -> T:
    if len(items) != len(weights):
        raise ValueError("items and weights differ in length")
    return items[roulette_select(weights, rng)]
