"""Feed ingestion and the gallery selection loop.

Items move through exactly one life: stored, then selected, then expired.
Each tick expires overdue posters first; a new item is drawn only when the
wall was below capacity at the start of the tick, so a full wall pauses
selection until a slot has been free for a whole tick.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .analysis import LinePlan, Tweet, load_corpus
from .emotions import EmotionProfile
from .rws import AllZeroWeights, roulette_select

STORED = "stored"
SELECTED = "selected"
EXPIRED = "expired"

DEFAULT_HALF_LIFE = 3600.0
DEFAULT_CAP = 5
DEFAULT_WINDOW = 20
DEFAULT_LIFESPAN = (60.0, 180.0)


class StoreUnavailable(Exception):
    """The feed store cannot be read."""


@dataclass
class FeedItem:
    tweet: Tweet
    state: str = STORED
    selected_at: float | None = None
    lifespan: float | None = None
    profile: EmotionProfile | None = None
    plan: LinePlan | None = None

    @property
    def created_epoch(self) -> float:
        return self.tweet.created_at.timestamp()


class JsonlStore:
    """In-memory item index fed from a JSONL corpus file."""

    def __init__(self, items: Sequence[FeedItem] = ()):
        self.items: list[FeedItem] = list(items)

    @classmethod
    def from_corpus(cls, path: str | Path) -> "JsonlStore":
        try:
            tweets = load_corpus(path)
        except (OSError, ValueError) as exc:
            raise StoreUnavailable(f"cannot read corpus {path}: {exc}") from exc
        return cls([FeedItem(tweet=t) for t in tweets])

    def add(self, tweet: Tweet) -> FeedItem:
        item = FeedItem(tweet=tweet)
        self.items.append(item)
        return item

    def newest_stored(self, limit: int) -> list[FeedItem]:
        stored = [i for i in self.items if i.state == STORED]
        stored.sort(key=lambda i: (i.created_epoch, i.tweet.id), reverse=True)
        return stored[:limit]

    def by_id(self, item_id: str) -> FeedItem | None:
        for item in self.items:
            if item.tweet.id == item_id:
                return item
        return None


def recency_weights(items: Sequence[FeedItem], now: float,
                    half_life: float = DEFAULT_HALF_LIFE) -> list[float]:
    """Halving weight per half_life seconds of age: 2 ** (-age / half_life)."""
    if half_life <= 0:
        raise ValueError(f"half_life must be positive, got {half_life}")
    weights = []
    for item in items:
        age = max(0.0, now - item.created_epoch)
        weights.append(2.0 ** (-age / half_life))
    return weights


@dataclass
class SelectionState:
    clock: float
    rng: random.Random
    cap: int = DEFAULT_CAP
    window: int = DEFAULT_WINDOW
    half_life: float = DEFAULT_HALF_LIFE
    lifespan_range: tuple[float, float] = DEFAULT_LIFESPAN
    active: list[FeedItem] = field(default_factory=list)
    ticks: int = 0
    selections: int = 0


def tick(state: SelectionState, store: JsonlStore) -> FeedItem | None:
    """Advance the loop one step; returns the newly selected item, if any.

    Expiry always runs. Selection is skipped when the wall was already at
    capacity when the tick began, even if this very tick freed a slot.
    """
    at_cap = len(state.active) >= state.cap

    survivors = []
    for item in state.active:
        if state.clock >= item.selected_at + item.lifespan:
            item.state = EXPIRED
        else:
            survivors.append(item)
    state.active = survivors

    chosen = None
    if not at_cap and len(state.active) < state.cap:
        candidates = store.newest_stored(state.window)
        if candidates:
            weights = recency_weights(candidates, state.clock, state.half_life)
            try:
                idx = roulette_select(weights, state.rng)
            except AllZeroWeights:
                # ages so extreme every weight underflowed; any pick is fair
                idx = state.rng.randrange(len(candidates))
            chosen = candidates[idx]
            chosen.state = SELECTED
            chosen.selected_at = state.clock
            lo, hi = state.lifespan_range
            chosen.lifespan = state.rng.uniform(lo, hi)
            state.active.append(chosen)
            state.selections += 1

    state.ticks += 1
    return chosen


@dataclass(frozen=True)
class SimulationReport:
    ticks: int
    tick_hz: float
    active_counts: tuple[int, ...]
    selections: tuple[tuple[int, str], ...]
    state: SelectionState


def run_simulation(store: JsonlStore, ticks: int, tick_hz: float, seed: int,
                   cap: int = DEFAULT_CAP,
                   window: int = DEFAULT_WINDOW,
                   half_life: float = DEFAULT_HALF_LIFE,
                   lifespan_range: tuple[float, float] = DEFAULT_LIFESPAN,
                   start_clock: float | None = None,
                   on_select: Callable[[SelectionState, FeedItem], None] | None = None,
                   on_change: Callable[[SelectionState], None] | None = None,
                   ) -> SimulationReport:
    """Drive ``ticks`` steps of the selection loop at ``tick_hz``.

    The clock starts at the newest corpus timestamp unless given, so every
    age is non-negative from the first tick.
    """
    if ticks < 0:
        raise ValueError(f"ticks must be >= 0, got {ticks}")
    if tick_hz <= 0:
        raise ValueError(f"tick_hz must be positive, got {tick_hz}")

    from .pipeline import derive_rng

    if start_clock is None:
        epochs = [i.created_epoch for i in store.items]
        start_clock = max(epochs) if epochs else 0.0

    state = SelectionState(clock=start_clock, rng=derive_rng(seed, "feed"),
                           cap=cap, window=window, half_life=half_life,
                           lifespan_range=lifespan_range)
    counts = []
    picks = []
    for i in range(ticks):
        state.clock = start_clock + i / tick_hz
        before = len(state.active)
        chosen = tick(state, store)
        counts.append(len(state.active))
        if chosen is not None:
            picks.append((i, chosen.tweet.id))
            if on_select is not None:
                on_select(state, chosen)
        if on_change is not None and (chosen is not None
                                      or len(state.active) != before):
            on_change(state)
    return SimulationReport(ticks=ticks, tick_hz=tick_hz,
                           active_counts=tuple(counts),
                           selections=tuple(picks), state=state)


def write_manifest(state: SelectionState, out_dir: str | Path,
                   seed: int) -> Path:
    """Dump the active wall as current.json next to the poster files."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    items = []
    for item in state.active:
        entry = {
            "id": item.tweet.id,
            "text": item.tweet.text,
            "predominant": list(item.profile.predominant) if item.profile else [],
            "poster": f"{item.tweet.id}_{seed}.svg",
            "audio": f"{item.tweet.id}_{seed}.mid",
        }
        items.append(entry)
    path = out / "current.json"
    payload = {"count": len(items), "items": items}
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path
