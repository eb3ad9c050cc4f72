"""File formats and matrix assembly.

Game logs are UTF-8 CSV lines `left,right,goals_left,goals_right` with `#`
comments and blank lines skipped (LF or CRLF).  Matrices persist as a JSON
document with explicit counts: a pair either carries all of wins_a/draws/
wins_b or none of them (averages-only).  Dumps are byte-stable: canonical
key order, pairs in team-list order, shortest round-trip floats.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from typing import Mapping, Sequence

from .errors import IncompleteMatrixError, InvalidValueError, LeagueError, ParseError
from .model import GameRecord, PairAggregate, ScoreMatrix, TeamId, pair_key, valid_team_id


def parse_results(text: str) -> list[GameRecord]:
    """Parse a game log into records; errors carry 1-based line numbers."""
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 4:
            raise ParseError(
                f"expected 'left,right,goals_left,goals_right', got {len(fields)} fields",
                line=lineno,
            )
        left, right, gl_text, gr_text = fields
        goals = []
        for text_value in (gl_text, gr_text):
            try:
                goals.append(int(text_value))
            except ValueError:
                raise ParseError(f"goals must be integers, got {text_value!r}", line=lineno) from None
        try:
            records.append(
                GameRecord(left=left, right=right, goals_left=goals[0], goals_right=goals[1])
            )
        except InvalidValueError as exc:
            raise ParseError(str(exc), line=lineno) from exc
    return records


def aggregate(records: Sequence[GameRecord]) -> ScoreMatrix:
    """Build a counts-known matrix from raw games.

    Team order is first-appearance order.  Every pair of the implied team
    set must have played at least once.
    """
    if not records:
        raise LeagueError("no game records to aggregate")
    teams: list[TeamId] = []
    seen: set[TeamId] = set()
    outcomes: dict[tuple[TeamId, TeamId], Counter] = defaultdict(Counter)
    n_games: dict[tuple[TeamId, TeamId], int] = Counter()
    for rec in records:
        for t in (rec.left, rec.right):
            if t not in seen:
                seen.add(t)
                teams.append(t)
        key = pair_key(rec.left, rec.right)
        first, _ = key
        gl, gr = rec.goals_left, rec.goals_right
        if rec.left != first:
            gl, gr = gr, gl
        n_games[key] += 1
        outcomes[key]["goals_a"] += gl
        outcomes[key]["goals_b"] += gr
        if gl > gr:
            outcomes[key]["wins_a"] += 1
        elif gl < gr:
            outcomes[key]["wins_b"] += 1
        else:
            outcomes[key]["draws"] += 1
    missing = [
        f"{a}-{b}"
        for i, a in enumerate(teams)
        for b in teams[i + 1 :]
        if pair_key(a, b) not in n_games
    ]
    if missing:
        raise IncompleteMatrixError(f"pairs with no games: {', '.join(missing)}")
    pairs = []
    for key, n in n_games.items():
        tally = outcomes[key]
        pairs.append(
            PairAggregate(
                a=key[0],
                b=key[1],
                n_games=n,
                avg_goals_a=tally["goals_a"] / n,
                avg_goals_b=tally["goals_b"] / n,
                wins_a=tally["wins_a"],
                draws=tally["draws"],
                wins_b=tally["wins_b"],
                counts_known=True,
            )
        )
    return ScoreMatrix(teams=tuple(teams), pairs=tuple(pairs))


def merge_benchmark(
    base: ScoreMatrix,
    bench_team: TeamId,
    bench_row: Mapping[TeamId, tuple[float, float]],
    position: int | None = None,
) -> ScoreMatrix:
    """Add a benchmark team's averages-only row to an existing matrix.

    `bench_row` maps each base team to (benchmark goals, opponent goals)
    and must cover the base team set exactly.  Original aggregates are kept
    untouched; `position` places the new team in the team order (default:
    appended).
    """
    if bench_team in base.teams:
        raise InvalidValueError(f"benchmark team {bench_team!r} already in matrix")
    base_set = set(base.teams)
    row_set = set(bench_row)
    if base_set != row_set:
        missing = sorted(base_set - row_set)
        extra = sorted(row_set - base_set)
        raise LeagueError(
            f"benchmark row does not cover the team set; missing: {missing}, extra: {extra}"
        )
    teams = list(base.teams)
    teams.insert(len(teams) if position is None else position, bench_team)
    new_pairs = tuple(
        PairAggregate(
            a=bench_team,
            b=opponent,
            n_games=0,
            avg_goals_a=avg_bench,
            avg_goals_b=avg_opp,
            counts_known=False,
        )
        for opponent, (avg_bench, avg_opp) in bench_row.items()
    )
    return ScoreMatrix(teams=tuple(teams), pairs=base.pairs + new_pairs)


_COUNT_FIELDS = ("wins_a", "draws", "wins_b")


def dump_matrix(matrix: ScoreMatrix) -> str:
    """Serialize to the canonical JSON form (byte-stable)."""
    pairs = []
    for agg in matrix.iter_pairs():
        entry = {
            "a": agg.a,
            "b": agg.b,
            "n_games": agg.n_games,
            "avg_a": agg.avg_goals_a,
            "avg_b": agg.avg_goals_b,
        }
        if agg.counts_known:
            entry["wins_a"] = agg.wins_a
            entry["draws"] = agg.draws
            entry["wins_b"] = agg.wins_b
        pairs.append(entry)
    doc = {"teams": list(matrix.teams), "pairs": pairs}
    return json.dumps(doc, indent=2) + "\n"


def _require(doc: Mapping, field: str, kind, path: str):
    if field not in doc:
        raise ParseError(f"missing field {path}.{field}")
    value = doc[field]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(f"{path}.{field} must be a number, got {value!r}")
        return float(value)
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ParseError(f"{path}.{field} must be {kind.__name__}, got {value!r}")
    return value


def load_matrix(text: str) -> ScoreMatrix:
    """Parse the JSON matrix form; schema violations name the failing path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    teams = _require(doc, "teams", list, "$")
    for t in teams:
        if not isinstance(t, str) or not valid_team_id(t):
            raise ParseError(f"$.teams contains an invalid team id {t!r}")
    raw_pairs = _require(doc, "pairs", list, "$")
    pairs = []
    for i, entry in enumerate(raw_pairs):
        path = f"$.pairs[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{path} must be an object")
        a = _require(entry, "a", str, path)
        b = _require(entry, "b", str, path)
        n_games = _require(entry, "n_games", int, path)
        avg_a = _require(entry, "avg_a", float, path)
        avg_b = _require(entry, "avg_b", float, path)
        have_counts = [f for f in _COUNT_FIELDS if f in entry]
        if have_counts and len(have_counts) != len(_COUNT_FIELDS):
            raise ParseError(
                f"{path} has partial counts {have_counts}; expected all of"
                f" {list(_COUNT_FIELDS)} or none"
            )
        try:
            if have_counts:
                pairs.append(
                    PairAggregate(
                        a=a,
                        b=b,
                        n_games=n_games,
                        avg_goals_a=avg_a,
                        avg_goals_b=avg_b,
                        wins_a=_require(entry, "wins_a", int, path),
                        draws=_require(entry, "draws", int, path),
                        wins_b=_require(entry, "wins_b", int, path),
                        counts_known=True,
                    )
                )
            else:
                pairs.append(
                    PairAggregate(
                        a=a, b=b, n_games=n_games, avg_goals_a=avg_a, avg_goals_b=avg_b
                    )
                )
        except InvalidValueError as exc:
            raise ParseError(f"{path}: {exc}") from exc
    try:
        return ScoreMatrix(teams=tuple(teams), pairs=tuple(pairs))
    except (InvalidValueError, IncompleteMatrixError) as exc:
        raise ParseError(f"$: {exc}") from exc
