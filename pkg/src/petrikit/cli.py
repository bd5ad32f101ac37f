"""Command-line entry point: petrikit <command> [flags].

Commands: validate, analyze, invariants, reach, deadlock, simulate, serve.
The PETRIKIT_MAX_STATES environment variable overrides the default state
cap for every command that explores the state space.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from .errors import PetrikitError, StateLimitExceededError
from .formats import (
    analyze,
    graph_to_dot,
    net_to_dot,
    report_to_dict,
    write_report,
)
from .invariants import coverage, invariant_equations, t_invariants
from .net import PetriNet
from .server import parse_net_text, serve
from .session import Session
from .statespace import DEFAULT_MAX_STATES, find_deadlock, reachability_graph

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 3


def _default_max_states() -> int:
    value = os.environ.get("PETRIKIT_MAX_STATES")
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            print(f"warning: ignoring bad PETRIKIT_MAX_STATES={value!r}", file=sys.stderr)
    return DEFAULT_MAX_STATES


def _diag(err: Exception, path: str) -> str:
    line = getattr(err, "line", None)
    if line is not None:
        column = getattr(err, "column", 1)
        return f"{path}:{line}:{column}: {type(err).__name__}: {err}"
    return f"{path}: {type(err).__name__}: {err}"


def _load(path: str) -> tuple[PetriNet, float]:
    """Parse and build a net file; returns (net, build time in ms)."""
    file = Path(path)
    if not file.is_file():
        raise FileNotFoundError(f"file not found: {path}")
    text = file.read_text(encoding="utf-8")
    start = time.perf_counter()
    net = parse_net_text(text).build()
    return net, (time.perf_counter() - start) * 1000.0


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    try:
        net, _ = _load(args.file)
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    except PetrikitError as err:
        print(f"error: {_diag(err, args.file)}", file=sys.stderr)
        return EXIT_ERROR
    print(
        f"{args.file}: ok ({len(net.places)} places, {len(net.transitions)} transitions, "
        f"{len(net.arcs)} arcs)"
    )
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        net, build_ms = _load(args.file)
    except (FileNotFoundError, PetrikitError) as err:
        print(f"error: {_diag(err, args.file) if isinstance(err, PetrikitError) else err}",
              file=sys.stderr)
        return EXIT_ERROR
    report = analyze(net, args.max_states, net_build_ms=build_ms)
    mode = "json" if args.json else "text"
    _emit(write_report(report, mode), args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    try:
        net, _ = _load(args.file)
    except (FileNotFoundError, PetrikitError) as err:
        print(f"error: {_diag(err, args.file) if isinstance(err, PetrikitError) else err}",
              file=sys.stderr)
        return EXIT_ERROR
    equations = invariant_equations(net)
    if args.json:
        import json

        payload = {
            "equations": [
                {"text": eq.text(), "coeffs": list(eq.coeffs), "constant": eq.constant}
                for eq in equations
            ],
            "tInvariants": [list(flow.coeffs) for flow in t_invariants(net)],
            "covered": coverage(net).covered,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [f"P-invariants ({len(equations)}, minimal support):"]
    lines += [eq.text() for eq in equations] or ["(none)"]
    tflows = t_invariants(net)
    lines.append(f"T-invariants: {len(tflows) or 'none'}")
    for flow in tflows:
        lines.append(" ".join(f"{t}:{c}" for t, c in zip(net.transitions, flow.coeffs) if c))
    cover = coverage(net)
    lines.append(cover.verdict)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_reach(args) -> int:
    try:
        net, _ = _load(args.file)
    except (FileNotFoundError, PetrikitError) as err:
        print(f"error: {_diag(err, args.file) if isinstance(err, PetrikitError) else err}",
              file=sys.stderr)
        return EXIT_ERROR
    try:
        graph = reachability_graph(net, args.max_states)
    except StateLimitExceededError as err:
        print(f"state limit exceeded after {err.count} states", file=sys.stderr)
        return EXIT_UNKNOWN
    if args.dot:
        _emit(graph_to_dot(graph, net), args.out)
    else:
        _emit(
            f"states: {len(graph.states)}, edges: {len(graph.edges)}, "
            f"deadlock states: {len(graph.deadlocks)}\n",
            args.out,
        )
    return EXIT_OK


def cmd_deadlock(args) -> int:
    try:
        net, _ = _load(args.file)
    except (FileNotFoundError, PetrikitError) as err:
        print(f"error: {_diag(err, args.file) if isinstance(err, PetrikitError) else err}",
              file=sys.stderr)
        return EXIT_ERROR
    try:
        path = find_deadlock(net, args.max_states)
    except StateLimitExceededError as err:
        print(f"deadlock status unknown: state limit exceeded after {err.count} states",
              file=sys.stderr)
        return EXIT_UNKNOWN
    if path is None:
        print("no reachable deadlock")
    elif not path:
        print("shortest path to deadlock: (empty, the initial marking is dead)")
    else:
        print("shortest path to deadlock: " + " ".join(path))
    return EXIT_OK


def _print_session(session: Session, out) -> None:
    net = session.net
    marking = " ".join(f"{p}={m}" for p, m in zip(net.places, session.marking) if m)
    print(f"marking: {marking or '(empty)'}", file=out)
    if net.transitions:
        enabled = set(session.enabled())
        cells = [(t, "yes" if t in enabled else "no") for t in net.transitions]
        widths = [max(len(t), 3) for t, _ in cells]
        print(" ".join(t.ljust(w) for (t, _), w in zip(cells, widths)), file=out)
        print(" ".join(v.ljust(w) for (_, v), w in zip(cells, widths)), file=out)
    if session.deadlocked():
        print("DEADLOCK after " + " ".join(session.history), file=out)


def cmd_simulate(args, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        net, _ = _load(args.file)
    except (FileNotFoundError, PetrikitError) as err:
        print(f"error: {_diag(err, args.file) if isinstance(err, PetrikitError) else err}",
              file=sys.stderr)
        return EXIT_ERROR
    session = Session(net)
    equations = invariant_equations(net)
    interactive = stdin.isatty()
    print(f"token game on {net.name} "
          f"(commands: fire <T>, auto, undo, reset, invariants, quit)", file=stdout)
    _print_session(session, stdout)
    while True:
        if interactive:
            stdout.write("petrikit> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        words = line.split()
        if not words:
            continue
        command, rest = words[0], words[1:]
        if command == "quit":
            break
        if command == "fire":
            if len(rest) != 1:
                print("usage: fire <transition>", file=stdout)
                continue
            try:
                session.fire(rest[0])
            except PetrikitError as err:
                print(f"error: {err}", file=stdout)
                continue
            _print_session(session, stdout)
        elif command == "auto":
            fired = session.auto()
            if fired is None:
                print("no enabled transition", file=stdout)
            else:
                print(f"fired {fired}", file=stdout)
                _print_session(session, stdout)
        elif command == "undo":
            undone = session.undo()
            print(f"undid {undone}" if undone else "nothing to undo", file=stdout)
            _print_session(session, stdout)
        elif command == "reset":
            session.reset()
            _print_session(session, stdout)
        elif command == "invariants":
            for eq in equations:
                value = eq.value_at(session.marking)
                status = "ok" if value == eq.constant else "VIOLATED"
                print(f"{eq.text()}  [current {value}, {status}]", file=stdout)
            if not equations:
                print("(no P-invariants)", file=stdout)
        else:
            print(f"unknown command {command!r}", file=stdout)
    return EXIT_OK


def cmd_serve(args) -> int:
    net = None
    if args.file:
        try:
            net, _ = _load(args.file)
        except (FileNotFoundError, PetrikitError) as err:
            print(f"error: {_diag(err, args.file) if isinstance(err, PetrikitError) else err}",
                  file=sys.stderr)
            return EXIT_ERROR
    serve(host=args.host, port=args.port, net=net, static_dir=args.static,
          max_states=args.max_states)
    return EXIT_OK


def _add_max_states(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-states",
        type=int,
        default=_default_max_states(),
        help="state cap for exploration (default 1000000, env PETRIKIT_MAX_STATES)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petrikit", description="Place/transition net analysis toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a net file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="run the full analysis and write a report")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON report")
    group.add_argument("--text", action="store_true", help="text report (default)")
    p.add_argument("--out", help="write the report to a file instead of stdout")
    _add_max_states(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("invariants", help="P/T-invariants and coverage")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("reach", help="build the reachability graph")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit Graphviz instead of a summary")
    p.add_argument("--out")
    _add_max_states(p)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("deadlock", help="shortest firing sequence to a dead marking")
    p.add_argument("file")
    _add_max_states(p)
    p.set_defaults(func=cmd_deadlock)

    p = sub.add_parser("simulate", help="interactive token game in the terminal")
    p.add_argument("file")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("serve", help="HTTP API plus web UI")
    p.add_argument("file", nargs="?")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8345)
    p.add_argument("--static", help="directory of web UI assets (default: bundled)")
    _add_max_states(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
