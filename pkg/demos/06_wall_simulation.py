"""The gallery wall: selection, lifespans, expiry.

A store of incoming items feeds a wall that shows at most five posters at
a time. Every tick expires overdue posters (each selection gets a random
lifespan of 60 to 180 seconds), and, if the wall was below capacity when
the tick began, draws one new item from the twenty newest by
recency-weighted roulette (weight halves per hour of age). This script
runs the loop offline over the bundled demo corpus, generates a poster
and music file per selection, and writes the manifest the HTTP view
serves.

Run: python demos/06_wall_simulation.py
Then: affiche serve --addr 127.0.0.1:8000 --dir demos/out/wall
"""
from importlib.resources import as_file, files
from pathlib import Path

from affiche.config import load_config
from affiche.feed import JsonlStore, run_simulation, write_manifest
from affiche.pipeline import run_pipeline, write_outputs

OUT = Path(__file__).parent / "out" / "wall"
SEED = 5

cfg = load_config(None)
with as_file(files("affiche.data") / "demo_corpus.jsonl") as corpus:
    store = JsonlStore.from_corpus(corpus)
print(f"{len(store.items)} items in the store")


def on_select(state, item):
    result = run_pipeline(item.tweet, cfg, SEED)
    item.profile = result.profile
    write_outputs(result, OUT, SEED, midi=True)
    mood = "+".join(result.profile.predominant) or "neutral"
    age_min = (state.clock - item.created_epoch) / 60
    print(f"  t={state.ticks / 10:7.1f}s select {item.tweet.id} "
          f"({mood}, {age_min:.0f} min old, "
          f"lifespan {item.lifespan:.0f}s)")


report = run_simulation(store, ticks=6000, tick_hz=10.0, seed=SEED,
                        on_select=on_select,
                        on_change=lambda st: write_manifest(st, OUT, SEED))

print(f"\n{report.ticks} ticks at {report.tick_hz:g} Hz "
      f"({report.ticks / report.tick_hz:.0f} simulated seconds)")
print(f"{len(report.selections)} selections, "
      f"{len(report.state.active)} active at the end, "
      f"peak wall size {max(report.active_counts)}")
print(f"wall directory: {OUT}")
print("manifest:", (OUT / "current.json").read_text(encoding="utf-8")[:200],
      "...")
