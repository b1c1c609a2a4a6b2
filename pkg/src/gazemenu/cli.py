"""Command-line entry points.

  gazemenu scenario --name N --seed S --out F     synthesize a trace
  gazemenu replay --trace F [--config F] --out F [--expect-goal NAME]
  gazemenu validate --trace F                     check trace well-formedness
  gazemenu serve --port P                         run the session service

Exit codes: 0 success, 2 parse/usage error, 3 goal failure under
--expect-goal.
"""

from __future__ import annotations

import argparse
import sys

from .config import DEFAULT_CONFIG, load_config
from .replay import replay, score_replay
from .scenarios import SCENARIO_NAMES, generate_scenario, task_for
from .serialize import dumps
from .trace import TraceParseError, read_trace, write_trace

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GOAL = 3


def _cmd_scenario(args: argparse.Namespace) -> int:
    if args.name not in SCENARIO_NAMES:
        print(f"error: unknown scenario {args.name!r}; choose from "
              f"{', '.join(SCENARIO_NAMES)}", file=sys.stderr)
        return EXIT_PARSE
    config = load_config(args.config) if args.config else DEFAULT_CONFIG
    trace = generate_scenario(args.name, args.seed, config)
    write_trace(trace, args.out)
    print(f"wrote {len(trace.frames)} frames to {args.out}")
    return EXIT_OK


def _cmd_replay(args: argparse.Namespace) -> int:
    config = load_config(args.config) if args.config else DEFAULT_CONFIG
    try:
        trace = read_trace(args.trace)
    except TraceParseError as exc:
        print(f"error: {args.trace}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if trace.header.config_digest != config.digest():
        print("warning: config digest differs from the trace header",
              file=sys.stderr)
    task = task_for(args.expect_goal, trace.header.seed) if args.expect_goal else None
    result = replay(trace, config, task)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(result.log_text())
    metrics = score_replay(result, task)
    print(dumps({"events": len(result.events), "metrics": metrics.to_dict()}))
    if args.expect_goal and not metrics.completion:
        print(f"error: goal {args.expect_goal!r} not reached", file=sys.stderr)
        return EXIT_GOAL
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        trace = read_trace(args.trace)
    except TraceParseError as exc:
        print(f"error: {args.trace}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"ok: {len(trace.frames)} frames, "
          f"{trace.duration():.3f} s at {trace.header.frame_rate:g} Hz")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gazemenu")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scenario", help="synthesize a scenario trace")
    p.add_argument("--name", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--config")
    p.set_defaults(func=_cmd_scenario)

    p = sub.add_parser("replay", help="replay a trace to an event log")
    p.add_argument("--trace", required=True)
    p.add_argument("--config")
    p.add_argument("--out", required=True)
    p.add_argument("--expect-goal", choices=[n for n in SCENARIO_NAMES if n != "fuzz-random"])
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("validate", help="check a trace file")
    p.add_argument("--trace", required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("serve", help="run the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
