"""End-to-end generation: text in, poster document and music out.

Randomness is partitioned per stage: every stage derives its own RNG from
(seed, item id, stage name) through SHA-256, so the same inputs always
reproduce the same artifacts byte for byte, and a change in one stage's
draw count never disturbs the others.
"""
from __future__ import annotations

import csv
import hashlib
import random
import statistics
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Sequence

from .analysis import (
    LexiconScorer,
    LinePlan,
    Tweet,
    classify,
    divide_lines,
    extract_features,
    split_sentences,
)
from .analysis.scoring import EmotionScorer
from .config import StyleConfig
from .emotions import NEUTRAL, EmotionProfile
from .measure import SyntheticMeasurer, TextMeasurer
from .midi import emit_midi
from .music import NoteEvent, generate
from .render import PosterDocument, render
from .styling import PosterStyle, compose_style
from .typeset import Composition, typeset

DEFAULT_BARS = 16


class PipelineError(Exception):
    """A stage failed; carries the item id for context."""

    def __init__(self, item_id: str, stage: str, cause: Exception):
        self.item_id = item_id
        self.stage = stage
        super().__init__(f"item {item_id}: {stage} failed: {cause}")


def derive_rng(*parts: object) -> random.Random:
    """Independent RNG stream named by the given parts."""
    key = "|".join(str(p) for p in parts).encode("utf-8")
    digest = hashlib.sha256(key).digest()
    return random.Random(int.from_bytes(digest, "big"))


@dataclass(frozen=True)
class RunStats:
    text_id: str
    chars: int
    lines: int
    operations: int
    elapsed: float
    final_axes: dict[str, float]


@dataclass(frozen=True)
class PosterResult:
    tweet_id: str
    profile: EmotionProfile
    plan: LinePlan
    style: PosterStyle
    composition: Composition
    document: PosterDocument
    events: tuple[NoteEvent, ...]
    midi: bytes
    stats: RunStats


def run_pipeline(item: Tweet, cfg: StyleConfig, seed: int,
                 scorer: EmotionScorer | None = None,
                 measurer: TextMeasurer | None = None,
                 bars: int = DEFAULT_BARS) -> PosterResult:
    """Classify, divide, style, typeset, render and compose one item."""
    scorer = scorer if scorer is not None else LexiconScorer.bundled()
    measurer = measurer if measurer is not None else SyntheticMeasurer()

    def stage(name: str, fn: Callable):
        try:
            return fn()
        except Exception as exc:
            raise PipelineError(item.id, name, exc) from exc

    _, cleaned = stage("features", lambda: extract_features(item.text))
    profile = stage("classify", lambda: classify(
        cleaned, scorer, threshold=cfg.predominance_threshold))
    plan = stage("lines", lambda: divide_lines(
        split_sentences(cleaned), derive_rng(seed, item.id, "lines"),
        cfg.line_division))
    style = stage("style", lambda: compose_style(
        profile, derive_rng(seed, item.id, "style"), cfg))
    composition = stage("typeset", lambda: typeset(
        plan.lines, style, cfg, derive_rng(seed, item.id, "typeset"), measurer))
    document = stage("render", lambda: render(style, composition))
    emotion = NEUTRAL if profile.neutral else profile.top
    events = stage("music", lambda: generate(
        emotion, bars, derive_rng(seed, item.id, "music"), cfg))
    midi = stage("midi", lambda: emit_midi(events, cfg.music.row(emotion)))

    stats = RunStats(
        text_id=item.id,
        chars=len(cleaned),
        lines=len(plan.lines),
        operations=composition.operations_used,
        elapsed=composition.elapsed,
        final_axes=dict(composition.state.axes),
    )
    return PosterResult(tweet_id=item.id, profile=profile, plan=plan,
                        style=style, composition=composition,
                        document=document, events=tuple(events), midi=midi,
                        stats=stats)


def text_item(text: str, item_id: str = "text") -> Tweet:
    """Wrap a bare string as a pipeline input."""
    meta, _ = extract_features(text)
    return Tweet(id=item_id, text=text,
                 created_at=datetime.now(tz=timezone.utc), meta=meta)


def write_outputs(result: PosterResult, out_dir: str | Path, seed: int,
                  midi: bool = False) -> list[Path]:
    """Write {id}_{seed}.svg (and .mid when asked); returns written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    svg_path = out / f"{result.tweet_id}_{seed}.svg"
    svg_path.write_bytes(result.document.svg)
    written.append(svg_path)
    if midi:
        mid_path = out / f"{result.tweet_id}_{seed}.mid"
        mid_path.write_bytes(result.midi)
        written.append(mid_path)
    return written


# ---------------------------------------------------------------------------
# bench harness


def load_bench_texts(path: str | Path) -> list[tuple[str, str]]:
    """(id, text) pairs from a JSONL file ({id, text}) or plain lines."""
    import json
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                obj = None
            if isinstance(obj, dict) and "text" in obj:
                pairs.append((str(obj.get("id", f"t{lineno:02d}")), obj["text"]))
            else:
                pairs.append((f"t{lineno:02d}", line))
    return pairs


def run_bench(texts: Sequence[tuple[str, str]], runs: int, cfg: StyleConfig,
              seed: int,
              measurer: TextMeasurer | None = None,
              scorer: EmotionScorer | None = None,
              report_path: str | Path | None = None,
              on_result: Callable[[str, int, PosterResult], None] | None = None,
              ) -> list[dict]:
    """Generate ``runs`` posters per text; returns per-run rows.

    Rows have kind "run"; aggregate rows ("summary", "by_lines") follow.
    When ``report_path`` is given the same rows land in a CSV file.
    """
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    measurer = measurer if measurer is not None else SyntheticMeasurer()
    scorer = scorer if scorer is not None else LexiconScorer.bundled()

    rows: list[dict] = []
    for text_id, text in texts:
        item = text_item(text, item_id=text_id)
        for run in range(runs):
            run_seed = int.from_bytes(
                hashlib.sha256(f"{seed}|{text_id}|run{run}".encode()).digest()[:8],
                "big")
            result = run_pipeline(item, cfg, run_seed, scorer=scorer,
                                  measurer=measurer)
            s = result.stats
            rows.append({
                "kind": "run", "text_id": text_id, "run": run,
                "chars": s.chars, "lines": s.lines,
                "operations": s.operations,
                "elapsed_s": round(s.elapsed, 6),
                "stretch": s.final_axes.get("stretch", ""),
                "weight": s.final_axes.get("weight", ""),
            })
            if on_result is not None:
                on_result(text_id, run, result)

    ops = [r["operations"] for r in rows]
    times = [r["elapsed_s"] for r in rows]
    summary = {
        "kind": "summary", "text_id": "", "run": "",
        "chars": "", "lines": "",
        "operations": "", "elapsed_s": "",
        "stretch": "", "weight": "",
        "mean_operations": round(statistics.mean(ops), 3),
        "median_operations": statistics.median(ops),
        "mean_elapsed_s": round(statistics.mean(times), 6),
        "median_elapsed_s": round(statistics.median(times), 6),
    }
    by_lines = []
    for n in sorted({r["lines"] for r in rows}):
        group = [r["operations"] for r in rows if r["lines"] == n]
        by_lines.append({
            "kind": "by_lines", "text_id": "", "run": "",
            "chars": "", "lines": n,
            "operations": "", "elapsed_s": "",
            "stretch": "", "weight": "",
            "count": len(group),
            "mean_operations": round(statistics.mean(group), 3),
            "median_operations": statistics.median(group),
            "min_operations": min(group),
            "max_operations": max(group),
        })

    all_rows = rows + [summary] + by_lines
    if report_path is not None:
        fields = ["kind", "text_id", "run", "chars", "lines", "operations",
                  "elapsed_s", "stretch", "weight", "count",
                  "mean_operations", "median_operations", "min_operations",
                  "max_operations", "mean_elapsed_s", "median_elapsed_s"]
        with open(report_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields, restval="")
            writer.writeheader()
            writer.writerows(all_rows)
    return all_rows


def bundled_bench_texts() -> list[tuple[str, str]]:
    from importlib import resources
    src = resources.files("affiche") / "data" / "bench_texts.jsonl"
    with resources.as_file(src) as path:
        return load_bench_texts(path)
