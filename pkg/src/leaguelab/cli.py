"""Command line interface.

Exit codes: 0 success, 2 usage or input error, 3 report verification
mismatch.  All output is plain text on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import challenge as chal
from . import fixtures, ingest, report, simlab
from .errors import LeagueError, ParseError
from .metrics import l1_distance, rank_deltas
from .model import Ranking, ScoreMatrix
from .schemes import SchemeKind, rank_matrix


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise LeagueError(f"cannot read {path}: {exc.strerror}") from exc


def _load_matrix(source: str) -> ScoreMatrix:
    """Resolve a matrix source: @fixture, matrix JSON, or game-log CSV."""
    if source.startswith("@"):
        return fixtures.matrix_fixture(source[1:])
    text = _read_source(source)
    if text.lstrip().startswith("{"):
        return ingest.load_matrix(text)
    return ingest.aggregate(ingest.parse_results(text))


def _load_ranking(source: str, scheme: SchemeKind) -> Ranking:
    if source.startswith("@") and source[1:] in fixtures.RANKING_FIXTURES:
        return fixtures.ranking_fixture(source[1:])
    _, ranking = rank_matrix(_load_matrix(source), scheme)
    return ranking


def _scheme_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--scheme",
        choices=("discrete", "continuous"),
        default="discrete",
        help="points scheme (default: discrete)",
    )


def _write_out(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_rank(args: argparse.Namespace) -> int:
    scheme = SchemeKind(args.scheme)
    table, ranking = rank_matrix(_load_matrix(args.source), scheme)
    if args.format == "csv":
        sys.stdout.write(report.ranking_table_csv(table, ranking))
    else:
        print(report.render_ranking_table(table, ranking, scheme))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    scheme = SchemeKind(args.scheme)
    ra = _load_ranking(args.source_a, scheme)
    rb = _load_ranking(args.source_b, scheme)
    print(f"L1 distance: {l1_distance(ra, rb)}")
    print()
    deltas = rank_deltas(ra, rb)
    rows = [
        [team, str(ra[team]), str(rb[team]), str(deltas[team])]
        for team in sorted(ra.teams(), key=lambda t: (ra[t], t))
    ]
    print(report.markdown_table(["Team", "Rank A", "Rank B", "Abs diff"], rows))
    return 0


def _parse_q_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise LeagueError(f"bad --q list {text!r}: {exc}") from exc
    if not values:
        raise LeagueError("--q list is empty")
    return values


def cmd_bias(args: argparse.Namespace) -> int:
    cfg = simlab.SimConfig(n_games=args.n, master_seed=args.seed, sigma=args.sigma)
    rows = simlab.bias_table(_parse_q_list(args.q), cfg)
    if args.format == "csv":
        sys.stdout.write(report.bias_rows_csv(rows))
    else:
        print(report.render_bias_report(rows, cfg))
    return 0


def _load_model_spec(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"model spec is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("model spec must be a JSON object")
    teams = doc.get("teams")
    if not isinstance(teams, list) or not all(isinstance(t, str) for t in teams):
        raise ParseError("model spec needs a 'teams' list of strings")
    sigma = doc.get("sigma", 1.0)
    if not isinstance(sigma, (int, float)) or isinstance(sigma, bool):
        raise ParseError("model spec 'sigma' must be a number")
    pairs = doc.get("pairs")
    if not isinstance(pairs, list):
        raise ParseError("model spec needs a 'pairs' list")
    models = {}
    for i, entry in enumerate(pairs):
        if not isinstance(entry, dict):
            raise ParseError(f"$.pairs[{i}]: expected an object")
        try:
            a, b = entry["a"], entry["b"]
            mean_a, mean_b = float(entry["mean_a"]), float(entry["mean_b"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"$.pairs[{i}]: {exc!s} (need a, b, mean_a, mean_b)") from exc
        models[(a, b)] = simlab.ScoreModel(mean_a, mean_b, float(entry.get("sigma", sigma)))
    return tuple(teams), models


def cmd_simulate(args: argparse.Namespace) -> int:
    teams, models = _load_model_spec(_read_source(args.spec))
    cfg = simlab.SimConfig(n_games=args.n, master_seed=args.seed)
    matrix = simlab.simulate_round_robin(teams, models, cfg, workers=args.workers)
    _write_out(args.out, ingest.dump_matrix(matrix))
    rankings = {}
    for scheme in (SchemeKind.DISCRETE, SchemeKind.CONTINUOUS):
        table, ranking = rank_matrix(matrix, scheme)
        rankings[scheme] = ranking
        print(f"## {scheme} ranking")
        print()
        print(report.render_ranking_table(table, ranking, scheme))
        print()
    distance = l1_distance(rankings[SchemeKind.DISCRETE], rankings[SchemeKind.CONTINUOUS])
    print(f"L1 distance between scheme rankings: {distance}")
    return 0


def _registry(args: argparse.Namespace) -> chal.ParamRegistry:
    if args.registry is None:
        return chal.ParamRegistry.default()
    return chal.ParamRegistry.from_json(_read_source(args.registry))


def _report_findings(result: chal.ValidationReport, strict: bool) -> int:
    for finding in result.findings:
        print(f"{finding.severity}: {finding.message}", file=sys.stderr)
    if strict and result.errors:
        return 2
    return 0


def cmd_challenge_parse(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.text == "-" else args.text
    overrides = chal.parse_change_command(text)
    result = chal.validate(overrides, _registry(args), strict=args.strict)
    status = _report_findings(result, args.strict)
    if status:
        return status
    for ov in overrides:
        print(f"{ov.name} = {chal.format_value(ov.value)}")
    return 0


def _collect_overrides(pairs: list[str]) -> list[chal.ParamOverride]:
    overrides = []
    for item in pairs:
        name, sep, value = item.partition("=")
        if not sep:
            raise LeagueError(f"bad --set {item!r}: expected name=value")
        try:
            overrides.append(chal.ParamOverride(name, float(value)))
        except ValueError as exc:
            raise LeagueError(f"bad --set {item!r}: {exc}") from exc
    return overrides


def cmd_challenge_emit(args: argparse.Namespace) -> int:
    overrides = _collect_overrides(args.set)
    result = chal.validate(overrides, _registry(args), strict=args.strict)
    status = _report_findings(result, args.strict)
    if status:
        return status
    print(chal.emit_change_command(overrides))
    return 0


def cmd_challenge_conf(args: argparse.Namespace) -> int:
    overrides = _collect_overrides(args.set)
    result = chal.validate(overrides, _registry(args), strict=args.strict)
    status = _report_findings(result, args.strict)
    if status:
        return status
    sys.stdout.write(chal.emit_server_conf(args.mode, overrides))
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    doc, mismatches = report.build_tables_report()
    _write_out(args.out, doc)
    if mismatches:
        for line in mismatches:
            print(f"mismatch: {line}", file=sys.stderr)
        return 3
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leaguelab",
        description="Round-robin ranking schemes, ranking distance, and score-model analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank a score matrix")
    p.add_argument("source", help="@table1|@table3|@table4, matrix JSON file, game log CSV, or -")
    _scheme_arg(p)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("compare", help="L1 distance between two rankings")
    p.add_argument("source_a", help="ranking fixture (@rank_*), matrix fixture, file, or -")
    p.add_argument("source_b")
    _scheme_arg(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bias", help="continuous-scheme bias analysis (sampled vs exact)")
    p.add_argument("--q", default="0,1,2,3", help="comma separated mean scores (default 0,1,2,3)")
    p.add_argument("--n", type=int, default=simlab.BIAS_GAMES, help="games per pairing")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_bias)

    p = sub.add_parser("simulate", help="simulate a round robin from a model spec")
    p.add_argument("spec", help="model spec JSON file or -")
    p.add_argument("--n", type=int, default=simlab.TOURNAMENT_GAMES, help="games per pairing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="matrix JSON output path, or - for stdout")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("challenge", help="challenge command protocol tools")
    csub = p.add_subparsers(dest="challenge_command", required=True)

    c = csub.add_parser("parse", help="parse a change_player_param command")
    c.add_argument("text", help="command text, or - for stdin")
    c.add_argument("--strict", action="store_true", help="unknown names become errors")
    c.add_argument("--registry", help="JSON file of known parameter names and ranges")
    c.set_defaults(func=cmd_challenge_parse)

    c = csub.add_parser("emit", help="emit a canonical change_player_param command")
    c.add_argument("--set", action="append", default=[], metavar="NAME=VALUE", required=True)
    c.add_argument("--strict", action="store_true")
    c.add_argument("--registry")
    c.set_defaults(func=cmd_challenge_emit)

    c = csub.add_parser("conf", help="emit a server configuration snippet")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--on", dest="mode", action="store_true", default=False)
    mode.add_argument("--off", dest="mode", action="store_false")
    c.add_argument("--set", action="append", default=[], metavar="NAME=VALUE")
    c.add_argument("--strict", action="store_true")
    c.add_argument("--registry", default=None)
    c.set_defaults(func=cmd_challenge_conf)

    p = sub.add_parser("report", help="regenerate the embedded tables and self-audit")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LeagueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
