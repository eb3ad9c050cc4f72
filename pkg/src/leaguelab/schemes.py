"""The two round-robin point-allocation schemes.

Discrete: round each pair's average score to integers (halves away from
zero), then award 3/1/0 points on the rounded result.  Continuous: average
the per-game 3/1/0 points over all games of a pairing, which requires full
win/draw/loss counts.

Ranking applies a deterministic tie-break chain so the result is always a
total order:

* discrete:   points, rounded goal difference, raw goal difference,
              raw goals for, team id (ascending)
* continuous: points, raw goal difference, raw goals for, team id

Numeric comparisons in the chain are quantized at 1e-9.
"""

from __future__ import annotations

import enum
import math

from .errors import CountsRequiredError, EmptyPairError, InvalidValueError, LeagueError
from .model import (
    PairAggregate,
    PointsRow,
    PointsTable,
    Ranking,
    ScoreMatrix,
    round_half_away,
)

# Comparisons between accumulated float values (points, raw goal sums) treat
# differences below this as equality.
POINTS_TOLERANCE = 1e-9


class SchemeKind(enum.Enum):
    DISCRETE = "discrete"
    CONTINUOUS = "continuous"

    def __str__(self) -> str:
        return self.value


def discrete_pair_points(avg_a: float, avg_b: float) -> tuple[int, int, int, int]:
    """Points for one pairing under the discrete scheme.

    Returns (points_a, points_b, rounded_a, rounded_b).
    """
    for avg in (avg_a, avg_b):
        if not math.isfinite(avg) or avg < 0:
            raise InvalidValueError(f"average goals must be finite and >= 0, got {avg!r}")
    rounded_a = round_half_away(avg_a)
    rounded_b = round_half_away(avg_b)
    if rounded_a > rounded_b:
        points = (3, 0)
    elif rounded_a < rounded_b:
        points = (0, 3)
    else:
        points = (1, 1)
    return points[0], points[1], rounded_a, rounded_b


def continuous_pair_points(agg: PairAggregate) -> tuple[float, float]:
    """Average per-game points for one pairing under the continuous scheme."""
    if not agg.counts_known:
        raise CountsRequiredError(
            f"pair {agg.a}-{agg.b} has averages only; the continuous scheme needs"
            " win/draw/loss counts"
        )
    if agg.n_games == 0:
        raise EmptyPairError(f"pair {agg.a}-{agg.b} has no games")
    points_a = (3 * agg.wins_a + agg.draws) / agg.n_games
    points_b = (3 * agg.wins_b + agg.draws) / agg.n_games
    return points_a, points_b


def points_table(matrix: ScoreMatrix, scheme: SchemeKind) -> PointsTable:
    """Accumulate per-team points and goal tallies over the whole matrix."""
    totals = {
        t: {"points": 0.0, "gfr": 0, "gar": 0, "gf": 0.0, "ga": 0.0} for t in matrix.teams
    }
    for agg in matrix.iter_pairs():
        if scheme is SchemeKind.DISCRETE:
            pa, pb, ra, rb = discrete_pair_points(agg.avg_goals_a, agg.avg_goals_b)
        else:
            pa, pb = continuous_pair_points(agg)
            ra = round_half_away(agg.avg_goals_a)
            rb = round_half_away(agg.avg_goals_b)
        for team, pts, rf, rg in ((agg.a, pa, ra, rb), (agg.b, pb, rb, ra)):
            totals[team]["points"] += pts
            totals[team]["gfr"] += rf
            totals[team]["gar"] += rg
        totals[agg.a]["gf"] += agg.avg_goals_a
        totals[agg.a]["ga"] += agg.avg_goals_b
        totals[agg.b]["gf"] += agg.avg_goals_b
        totals[agg.b]["ga"] += agg.avg_goals_a
    rows = tuple(
        PointsRow(
            team=t,
            points=totals[t]["points"],
            goals_for_rounded=totals[t]["gfr"],
            goals_against_rounded=totals[t]["gar"],
            goals_for_raw=totals[t]["gf"],
            goals_against_raw=totals[t]["ga"],
        )
        for t in matrix.teams
    )
    return PointsTable(rows=rows)


def _quantize(x: float) -> float:
    return round(x, 9)


def _sort_key(row: PointsRow, scheme: SchemeKind):
    raw_gd = _quantize(row.goals_for_raw - row.goals_against_raw)
    raw_gf = _quantize(row.goals_for_raw)
    points = _quantize(row.points)
    if scheme is SchemeKind.DISCRETE:
        rounded_gd = row.goals_for_rounded - row.goals_against_rounded
        return (-points, -rounded_gd, -raw_gd, -raw_gf, row.team)
    return (-points, -raw_gd, -raw_gf, row.team)


def rank(table: PointsTable, scheme: SchemeKind) -> Ranking:
    """Total order over the table's teams via the scheme's tie-break chain."""
    if len(table) == 0:
        raise LeagueError("cannot rank an empty table")
    ordered = sorted(table.rows, key=lambda row: _sort_key(row, scheme))
    return Ranking.from_sequence([row.team for row in ordered])


def rank_matrix(matrix: ScoreMatrix, scheme: SchemeKind) -> tuple[PointsTable, Ranking]:
    """Convenience: points table and ranking in one call."""
    table = points_table(matrix, scheme)
    return table, rank(table, scheme)
