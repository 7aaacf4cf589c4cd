"""Typesetting workload statistics.

The bundled bench corpus holds sixteen texts from 22 to 219 characters.
Running each text many times with fresh seeds shows how the operator
count behaves: texts divided into more lines start with smaller type and
converge in fewer operations, and texts with long lines end with
narrower fonts. This is a small-scale version of the `bench` subcommand
(which defaults to 300 runs per text).

Run: python demos/07_bench_statistics.py
"""
import statistics
from pathlib import Path

from affiche.config import load_config
from affiche.pipeline import bundled_bench_texts, run_bench

OUT = Path(__file__).parent / "out"
OUT.mkdir(parents=True, exist_ok=True)
RUNS = 30

cfg = load_config(None)
texts = bundled_bench_texts()
print(f"{len(texts)} texts, {RUNS} runs each")

report = OUT / "bench_report.csv"
rows = run_bench(texts, runs=RUNS, cfg=cfg, seed=11, report_path=report)
run_rows = [r for r in rows if r["kind"] == "run"]

print("\noperations by realized line count:")
print(f"{'lines':>5s} {'runs':>5s} {'median':>7s} {'mean':>7s} "
      f"{'min':>5s} {'max':>5s}")
for row in rows:
    if row["kind"] != "by_lines":
        continue
    print(f"{row['lines']:5d} {row['count']:5d} "
          f"{row['median_operations']:7g} {row['mean_operations']:7.1f} "
          f"{row['min_operations']:5d} {row['max_operations']:5d}")

summary = next(r for r in rows if r["kind"] == "summary")
print(f"\ngrand median {summary['median_operations']:g} operations, "
      f"mean {summary['mean_operations']:g}")

# narrower fonts on longer lines: compare final stretch by line length
short = [r["stretch"] for r in run_rows if r["chars"] / r["lines"] <= 20]
long_ = [r["stretch"] for r in run_rows if r["chars"] / r["lines"] >= 40]
print(f"mean final stretch, short lines: {statistics.mean(short):.1f}  "
      f"long lines: {statistics.mean(long_):.1f}")
print(f"full report: {report}")
