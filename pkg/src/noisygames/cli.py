"""Command-line entry point.

Subcommands: solve | sweep | verify-appendix | conjecture-scan | simulate |
serve.  Exit code 0 on success, 1 on validation or verification failure,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .gamespec import ResolvedGame, SpecError, load_spec_file, resolve_game_spec
from .montecarlo import estimate_win_probability
from .solver import solve
from .tables import (
    conjecture_scan,
    grid_decimals,
    sweep_chomp,
    sweep_nim1,
    verify_appendix,
    write_sweep_csv,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _fmt(x: float) -> str:
    return f"{x:.15f}"


def _add_game_flags(parser: argparse.ArgumentParser, with_spec: bool = True) -> None:
    if with_spec:
        parser.add_argument("--spec", metavar="FILE", help="JSON game spec file")
    parser.add_argument("--game", choices=["nim1", "nim", "chomp"], help="builtin family")
    parser.add_argument("--chips", type=int, help="nim1: heap size")
    parser.add_argument("--piles", help="nim: comma-separated pile sizes, e.g. 2,2")
    parser.add_argument("--rows", type=int, help="chomp: bar rows")
    parser.add_argument("--cols", type=int, help="chomp: bar columns")
    parser.add_argument(
        "--variant",
        choices=["n8", "n4", "lower_left", "uniform"],
        default="n8",
        help="chomp: error distribution variant",
    )
    parser.add_argument("--p", type=float, help="digit/accuracy error probability")


def _spec_from_flags(args, parser: argparse.ArgumentParser) -> dict:
    if getattr(args, "spec", None):
        if args.game:
            parser.error("give either --spec or --game, not both")
        return load_spec_file(args.spec)
    if not args.game:
        parser.error("a game is required: --spec FILE or --game {nim1,nim,chomp}")
    if args.game == "nim1":
        if args.chips is None or args.p is None:
            parser.error("nim1 needs --chips and --p")
        return {"family": "nim1", "chips": args.chips, "p": args.p}
    if args.game == "nim":
        if not args.piles:
            parser.error("nim needs --piles a,b,c")
        try:
            piles = [int(x) for x in args.piles.split(",") if x.strip() != ""]
        except ValueError:
            parser.error(f"cannot parse --piles {args.piles!r}")
        return {"family": "nim", "piles": piles}
    if args.rows is None or args.cols is None:
        parser.error("chomp needs --rows and --cols")
    spec = {"family": "chomp", "rows": args.rows, "cols": args.cols, "variant": args.variant}
    if args.variant != "uniform":
        if args.p is None:
            parser.error(f"chomp variant {args.variant} needs --p")
        spec["p"] = args.p
    return spec


def _print_solution(game: ResolvedGame, out) -> None:
    solved = solve(game.graph, game.model)
    graph = game.graph
    start = graph.start
    print(f"game: {game.family}  positions: {graph.position_count}", file=out)
    start_line = (
        f"start [{start}] {graph.labels[start]}: N = {_fmt(solved.values[start])}"
        f"  class {solved.classes[start]}"
    )
    if solved.optimal_moves[start]:
        labels = ", ".join(
            game.move_labels[start][w] for w in solved.optimal_moves[start]
        )
        start_line += f"  optimal: {labels}"
    print(start_line, file=out)
    print(file=out)
    for v in range(graph.position_count):
        print(
            f"[{v}] {graph.labels[v]}: N = {_fmt(solved.values[v])}  "
            f"class {solved.classes[v]}",
            file=out,
        )
        for w in range(len(graph.followers[v])):
            marker = "*" if w in solved.optimal_moves[v] else " "
            print(
                f"    {marker} {w}: {game.move_labels[v][w]}  "
                f"N(w) = {_fmt(solved.move_values[v][w])}",
                file=out,
            )


def _cmd_solve(args, parser) -> int:
    spec = _spec_from_flags(args, parser)
    game = resolve_game_spec(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _print_solution(game, fh)
    else:
        _print_solution(game, sys.stdout)
    return EXIT_OK


def _cmd_sweep(args, parser) -> int:
    if args.points < 2:
        parser.error("--points must be >= 2")
    if args.game == "nim1":
        if args.chips is None:
            parser.error("nim1 sweep needs --chips")
        rows = sweep_nim1(args.chips, args.points)
    elif args.game == "chomp":
        if args.rows is None or args.cols is None:
            parser.error("chomp sweep needs --rows and --cols")
        rows = sweep_chomp(args.rows, args.cols, args.variant, args.points)
    else:
        parser.error("sweep supports --game nim1 or --game chomp")
    decimals = grid_decimals(args.points)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_sweep_csv(rows, fh, decimals)
    else:
        write_sweep_csv(rows, sys.stdout, decimals)
    return EXIT_OK


def _cmd_verify_appendix(args, parser) -> int:
    rows = verify_appendix()
    failures = 0
    for row in rows:
        status = "ok" if row.ok else "FAIL"
        print(
            f"N_{row.k}({row.p:.2f}): expected {_fmt(row.expected_value)} "
            f"got {_fmt(row.actual_value)} |err| = {row.abs_error:.3e} "
            f"optimal {list(row.actual_optimal)} vs {list(row.expected_optimal)} [{status}]"
        )
        if not row.ok:
            failures += 1
    print(f"{len(rows) - failures}/{len(rows)} spot values verified")
    return EXIT_OK if failures == 0 else EXIT_FAILURE


def _cmd_conjecture_scan(args, parser) -> int:
    if args.max_chips < 1:
        parser.error("--max-chips must be >= 1")
    scan = conjecture_scan(args.max_chips, args.points)
    if scan.consistent:
        print(
            f"no counterexample candidates for k <= {scan.max_chips} "
            f"on the {scan.points}-point grid"
        )
    else:
        for f in scan.findings:
            print(f"conjecture {f.conjecture}: k={f.k} p={f.p:.2f}: {f.detail}")
        print(f"{len(scan.findings)} counterexample candidate(s) found")
    return EXIT_OK


def _cmd_simulate(args, parser) -> int:
    if args.games < 1:
        parser.error("--games must be >= 1")
    spec = _spec_from_flags(args, parser)
    game = resolve_game_spec(spec)
    solved = solve(game.graph, game.model)
    report = estimate_win_probability(
        game.graph, game.model, games=args.games, seed=args.seed, solved=solved
    )
    print(f"games:          {report.games_played}")
    print(f"player I wins:  {report.first_player_wins}")
    print(f"estimate:       {_fmt(report.estimate)}")
    print(f"standard error: {_fmt(report.standard_error)}")
    print(f"solver value:   {_fmt(solved.values[game.graph.start])}")
    return EXIT_OK


def _cmd_serve(args, parser) -> int:
    import uvicorn

    from .server import create_app, default_static_dir

    static_dir = args.static_dir or default_static_dir()
    app = create_app(static_dir=static_dir)
    if static_dir:
        print(f"serving static assets from {static_dir}")
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"server failed to start: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noisygames",
        description="Solve, tabulate, simulate and play combinatorial games "
        "transmitted through noisy channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a game and print all values")
    _add_game_flags(p_solve)
    p_solve.add_argument("--out", metavar="FILE", help="write the listing to a file")
    p_solve.set_defaults(func=_cmd_solve)

    p_sweep = sub.add_parser("sweep", help="tabulate start value vs p as CSV")
    _add_game_flags(p_sweep, with_spec=False)
    p_sweep.add_argument("--points", type=int, default=101, help="grid size (default 101)")
    p_sweep.add_argument("--out", metavar="FILE", help="CSV output path (default stdout)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser(
        "verify-appendix", help="recompute the bundled published spot values"
    )
    p_verify.set_defaults(func=_cmd_verify_appendix)

    p_scan = sub.add_parser(
        "conjecture-scan", help="scan the optimal-play conjectures on a p grid"
    )
    p_scan.add_argument("--max-chips", type=int, default=10)
    p_scan.add_argument("--points", type=int, default=101)
    p_scan.set_defaults(func=_cmd_conjecture_scan)

    p_sim = sub.add_parser("simulate", help="Monte-Carlo estimate of the start value")
    _add_game_flags(p_sim)
    p_sim.add_argument("--games", type=int, default=100_000)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.set_defaults(func=_cmd_simulate)

    p_serve = sub.add_parser("serve", help="run the HTTP play service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static-dir", help="directory of built web assets")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except SpecError as exc:
        print(f"invalid game spec: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
