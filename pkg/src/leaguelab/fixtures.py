"""Embedded tournament fixtures.

Four published round-robin tables plus two reference rankings, transcribed
digit for digit and embedded so batch runs need no external files.  The
table matrices are averages-only (no win/draw/loss counts): the published
grids give mean goals per pairing but not outcome counts.

Fixture names accepted by the CLI's `@name` addressing:

* table1            -- 2016 top-8 round robin (ScoreMatrix)
* table2            -- champion-benchmark evaluation row (games + averages)
* table3            -- table1 with the WE2015 benchmark merged in third
* table4            -- champions league round robin, 2011-2016 (ScoreMatrix)
* rank_actual_2016  -- final competition ranking (Ranking)
* rank_chronological-- champions listed newest first (team list)
"""

from __future__ import annotations

from .errors import LeagueError
from .model import GameRecord, PairAggregate, Ranking, ScoreMatrix, TeamId

TABLE1_TEAMS = ("Gliders", "HELIOS", "Ri-one", "CSU_Yunlu", "Oxsy", "Shiraz", "MT2016", "FURY")

# Upper triangle of the 2016 top-8 grid, row team first: (row, col): (row goals, col goals).
_TABLE1_CELLS = {
    ("Gliders", "HELIOS"): (0.3, 0.4),
    ("Gliders", "Ri-one"): (2.8, 0.3),
    ("Gliders", "CSU_Yunlu"): (1.9, 0.3),
    ("Gliders", "Oxsy"): (0.7, 0.8),
    ("Gliders", "Shiraz"): (3.8, 0.4),
    ("Gliders", "MT2016"): (5.0, 0.0),
    ("Gliders", "FURY"): (2.5, 0.2),
    ("HELIOS", "Ri-one"): (1.8, 0.1),
    ("HELIOS", "CSU_Yunlu"): (3.0, 0.2),
    ("HELIOS", "Oxsy"): (1.2, 0.5),
    ("HELIOS", "Shiraz"): (4.3, 0.3),
    ("HELIOS", "MT2016"): (3.6, 0.0),
    ("HELIOS", "FURY"): (2.5, 0.0),
    ("Ri-one", "CSU_Yunlu"): (1.1, 1.1),
    ("Ri-one", "Oxsy"): (0.2, 1.8),
    ("Ri-one", "Shiraz"): (0.6, 0.5),
    ("Ri-one", "MT2016"): (0.4, 0.0),
    ("Ri-one", "FURY"): (0.6, 0.5),
    ("CSU_Yunlu", "Oxsy"): (0.5, 1.2),
    ("CSU_Yunlu", "Shiraz"): (2.0, 0.7),
    ("CSU_Yunlu", "MT2016"): (1.4, 0.0),
    ("CSU_Yunlu", "FURY"): (1.2, 0.4),
    ("Oxsy", "Shiraz"): (3.5, 0.5),
    ("Oxsy", "MT2016"): (4.4, 0.0),
    ("Oxsy", "FURY"): (3.0, 0.1),
    ("Shiraz", "MT2016"): (0.5, 0.1),
    ("Shiraz", "FURY"): (0.8, 1.0),
    ("MT2016", "FURY"): (0.0, 0.0),
}

BENCH_TEAM = "WE2015"

# Evaluation round: the benchmark champion against each 2016 top-8 team.
# Single games actually played at the venue (benchmark side first) ...
TABLE2_GAMES = (
    ("Gliders", 0, 1),
    ("HELIOS", 1, 2),
    ("Ri-one", 7, 1),
    ("CSU_Yunlu", 2, 0),
    ("Oxsy", 4, 1),
    ("Shiraz", 3, 2),
    ("MT2016", 4, 0),
    ("FURY", 11, 2),
)

# ... and average scores over the extended multi-game evaluation.
TABLE2_AVERAGES = {
    "Gliders": (1.4, 1.8),
    "HELIOS": (1.3, 1.7),
    "Ri-one": (5.0, 0.5),
    "CSU_Yunlu": (2.7, 0.5),
    "Oxsy": (3.5, 1.3),
    "Shiraz": (4.0, 0.8),
    "MT2016": (5.9, 0.0),
    "FURY": (4.8, 0.4),
}

# Position of the benchmark team in the merged (table3) layout.
BENCH_POSITION = 2

TABLE4_TEAMS = ("Gliders2016", "WE2015", "WE2014", "WE2013", "HELIOS2012", "WE2011")

_TABLE4_CELLS = {
    ("Gliders2016", "WE2015"): (1.8, 1.4),
    ("Gliders2016", "WE2014"): (1.8, 1.3),
    ("Gliders2016", "WE2013"): (1.7, 0.9),
    ("Gliders2016", "HELIOS2012"): (1.2, 0.1),
    ("Gliders2016", "WE2011"): (2.0, 1.0),
    ("WE2015", "WE2014"): (2.5, 2.5),
    ("WE2015", "WE2013"): (3.0, 2.5),
    ("WE2015", "HELIOS2012"): (2.2, 0.9),
    ("WE2015", "WE2011"): (4.0, 2.9),
    ("WE2014", "WE2013"): (2.8, 2.6),
    ("WE2014", "HELIOS2012"): (2.3, 0.8),
    ("WE2014", "WE2011"): (3.9, 3.0),
    ("WE2013", "HELIOS2012"): (1.9, 0.9),
    ("WE2013", "WE2011"): (2.9, 3.2),
    ("HELIOS2012", "WE2011"): (2.6, 1.8),
}

# Final competition placement of the 2016 top 8, best first.
ACTUAL_2016_ORDER = ("Gliders", "HELIOS", "Ri-one", "CSU_Yunlu", "Oxsy", "Shiraz", "MT2016", "FURY")

# Champions ordered by title year, newest first.
CHRONOLOGICAL_ORDER = ("Gliders2016", "WE2015", "WE2014", "WE2013", "HELIOS2012", "WE2011")


def _matrix_from_cells(teams, cells) -> ScoreMatrix:
    pairs = tuple(
        PairAggregate(a=a, b=b, n_games=0, avg_goals_a=ga, avg_goals_b=gb, counts_known=False)
        for (a, b), (ga, gb) in cells.items()
    )
    return ScoreMatrix(teams=teams, pairs=pairs)


def table1() -> ScoreMatrix:
    """2016 top-8 round-robin averages."""
    return _matrix_from_cells(TABLE1_TEAMS, _TABLE1_CELLS)


def table2_games() -> list[GameRecord]:
    """The single benchmark games actually played at the 2016 venue."""
    return [
        GameRecord(left=BENCH_TEAM, right=opp, goals_left=gl, goals_right=gr)
        for opp, gl, gr in TABLE2_GAMES
    ]


def table2_averages() -> dict[TeamId, tuple[float, float]]:
    """Benchmark-team average scores per opponent (benchmark goals first)."""
    return dict(TABLE2_AVERAGES)


def table3() -> ScoreMatrix:
    """Table 1 merged with the WE2015 benchmark row, benchmark placed third."""
    from .ingest import merge_benchmark

    return merge_benchmark(table1(), BENCH_TEAM, table2_averages(), position=BENCH_POSITION)


def table4() -> ScoreMatrix:
    """Champions-league round-robin averages, 2011-2016 winners."""
    return _matrix_from_cells(TABLE4_TEAMS, _TABLE4_CELLS)


def rank_actual_2016() -> Ranking:
    return Ranking.from_sequence(list(ACTUAL_2016_ORDER))


def rank_chronological() -> list[TeamId]:
    return list(CHRONOLOGICAL_ORDER)


MATRIX_FIXTURES = {
    "table1": table1,
    "table3": table3,
    "table4": table4,
}

RANKING_FIXTURES = {
    "rank_actual_2016": rank_actual_2016,
    "rank_chronological": lambda: Ranking.from_sequence(rank_chronological()),
}

FIXTURE_NAMES = sorted({*MATRIX_FIXTURES, *RANKING_FIXTURES, "table2"})


def matrix_fixture(name: str) -> ScoreMatrix:
    """Look up a matrix fixture by bare name (no `@`)."""
    try:
        return MATRIX_FIXTURES[name]()
    except KeyError:
        raise LeagueError(
            f"{name!r} is not a matrix fixture; available: {', '.join(sorted(MATRIX_FIXTURES))}"
        ) from None


def ranking_fixture(name: str) -> Ranking:
    """Look up a ranking fixture by bare name (no `@`)."""
    try:
        return RANKING_FIXTURES[name]()
    except KeyError:
        raise LeagueError(
            f"{name!r} is not a ranking fixture; available: {', '.join(sorted(RANKING_FIXTURES))}"
        ) from None
