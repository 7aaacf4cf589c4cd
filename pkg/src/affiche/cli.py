"""Command line front end: generate, simulate, bench, serve."""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import ConfigError, StyleConfig, load_config

CONFIG_ENV = "AFFICHE_CONFIG_DIR"


def _resolve_config(arg: str | None) -> StyleConfig:
    source = arg if arg is not None else os.environ.get(CONFIG_ENV)
    return load_config(source)


def _cmd_generate(args: argparse.Namespace) -> int:
    from .analysis import load_corpus
    from .pipeline import run_pipeline, text_item, write_outputs

    cfg = _resolve_config(args.config)
    if args.text is not None:
        items = [text_item(args.text)]
    else:
        items = load_corpus(args.corpus)

    for item in items:
        result = run_pipeline(item, cfg, args.seed, bars=args.bars)
        written = write_outputs(result, args.out, args.seed, midi=args.midi)
        if args.png:
            if args.font is None:
                print("generate: --png needs --font <file.ttf>",
                      file=sys.stderr)
                return 2
            from .render import rasterize
            image = rasterize(result.style, result.composition, args.font)
            png_path = Path(args.out) / f"{result.tweet_id}_{args.seed}.png"
            image.save(png_path)
            written.append(png_path)
        mood = "neutral" if result.profile.neutral else \
            "+".join(result.profile.predominant)
        print(f"{item.id}: {mood} -> " +
              ", ".join(str(p) for p in written))
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    from .feed import JsonlStore, run_simulation, write_manifest
    from .pipeline import run_pipeline, write_outputs

    cfg = _resolve_config(args.config)
    store = JsonlStore.from_corpus(args.corpus)
    out = Path(args.out)

    def on_select(state, item):
        result = run_pipeline(item.tweet, cfg, args.seed)
        item.profile = result.profile
        item.plan = result.plan
        write_outputs(result, out, args.seed, midi=True)

    def on_change(state):
        write_manifest(state, out, args.seed)

    report = run_simulation(store, args.ticks, args.tick_hz, args.seed,
                            on_select=on_select, on_change=on_change)
    print(f"{report.ticks} ticks at {report.tick_hz} Hz: "
          f"{len(report.selections)} selections, "
          f"{len(report.state.active)} active at end; wall in {out}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    from .pipeline import bundled_bench_texts, load_bench_texts, run_bench

    cfg = _resolve_config(args.config)
    texts = (load_bench_texts(args.texts) if args.texts is not None
             else bundled_bench_texts())
    rows = run_bench(texts, args.runs, cfg, args.seed,
                     report_path=args.report)
    summary = next(r for r in rows if r["kind"] == "summary")
    runs = sum(1 for r in rows if r["kind"] == "run")
    print(f"{runs} runs over {len(texts)} texts: "
          f"median {summary['median_operations']} operations, "
          f"mean {summary['mean_operations']}; report in {args.report}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .server import make_server

    server = make_server(args.addr, args.dir)
    host, port = server.server_address[:2]
    print(f"serving {args.dir} on http://{host}:{port} "
          "(/current, /poster/{id}.svg, /audio/{id}.mid)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affiche",
        description="Emotion-driven posters and ambient music from short texts.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="render posters for given texts")
    src = gen.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", help="one text to render")
    src.add_argument("--corpus", help="JSONL corpus to render")
    gen.add_argument("--config", help=f"config directory (default ${CONFIG_ENV} "
                                      "or the packaged defaults)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default="out")
    gen.add_argument("--midi", action="store_true",
                     help="also write a MIDI file per item")
    gen.add_argument("--png", action="store_true",
                     help="also rasterize to PNG (needs --font)")
    gen.add_argument("--font", help="variable font file for --png")
    gen.add_argument("--bars", type=int, default=16,
                     help="music length in bars")
    gen.set_defaults(func=_cmd_generate)

    sim = sub.add_parser("simulate", help="run the selection loop offline")
    sim.add_argument("--corpus", required=True)
    sim.add_argument("--ticks", type=int, required=True)
    sim.add_argument("--tick-hz", type=float, default=10.0)
    sim.add_argument("--config")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", default="out")
    sim.set_defaults(func=_cmd_simulate)

    bench = sub.add_parser("bench", help="typesetting workload statistics")
    bench.add_argument("--texts", help="JSONL or plain text file "
                                       "(default: bundled workload)")
    bench.add_argument("--runs", type=int, default=300)
    bench.add_argument("--config")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--report", default="bench_report.csv")
    bench.set_defaults(func=_cmd_bench)

    srv = sub.add_parser("serve", help="read-only HTTP view of a wall")
    srv.add_argument("--addr", required=True, help="host:port to bind")
    srv.add_argument("--dir", default="out",
                     help="gallery directory written by simulate/generate")
    srv.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
