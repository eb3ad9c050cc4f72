"""Rendered reports: the four published tables and the bias analysis.

`build_tables_report` re-derives every points/goals/rank column from the
embedded fixtures through the scheme engine and renders markdown.  Each
rendered cell is compared against expected values transcribed here,
independently of the fixture data; any mismatch is returned so the CLI can
exit non-zero.  The expected blocks double as a regression net for both
fixture corruption and engine drift.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from . import fixtures
from .model import GameRecord, Ranking, ScoreMatrix, TeamId
from .schemes import SchemeKind, points_table, rank
from .simlab import (
    REPORTED_EQUAL_MEANS,
    REPORTED_EQUAL_POINTS,
    REPORTED_LOSS_POINTS,
    REPORTED_WIN_POINTS,
    BiasRow,
    Scenario,
    SimConfig,
    scenario_bounds,
)

# Expected rendered rows, one string per team: cells joined by "|" in the
# order team, per-opponent score cells, rounded goals, points, rank.
_EXPECTED_TABLE1 = [
    "Gliders|-|0.3 : 0.4|2.8 : 0.3|1.9 : 0.3|0.7 : 0.8|3.8 : 0.4|5.0 : 0.0|2.5 : 0.2|18 : 1|17|1",
    "HELIOS|0.4 : 0.3|-|1.8 : 0.1|3.0 : 0.2|1.2 : 0.5|4.3 : 0.3|3.6 : 0.0|2.5 : 0.0|17 : 1|17|2",
    "Ri-one|0.3 : 2.8|0.1 : 1.8|-|1.1 : 1.1|0.2 : 1.8|0.6 : 0.5|0.4 : 0.0|0.6 : 0.5|3 : 10|4|6",
    "CSU_Yunlu|0.3 : 1.9|0.2 : 3.0|1.1 : 1.1|-|0.5 : 1.2|2.0 : 0.7|1.4 : 0.0|1.2 : 0.4|6 : 8|11|4",
    "Oxsy|0.8 : 0.7|0.5 : 1.2|1.8 : 0.2|1.2 : 0.5|-|3.5 : 0.5|4.4 : 0.0|3.0 : 0.1|16 : 4|15|3",
    "Shiraz|0.4 : 3.8|0.3 : 4.3|0.5 : 0.6|0.7 : 2.0|0.5 : 3.5|-|0.5 : 0.1|0.8 : 1.0|5 : 16|5|5",
    "MT2016|0.0 : 5.0|0.0 : 3.6|0.0 : 0.4|0.0 : 1.4|0.0 : 4.4|0.1 : 0.5|-|0.0 : 0.0|0 : 15|2|8",
    "FURY|0.2 : 2.5|0.0 : 2.5|0.5 : 0.6|0.4 : 1.2|0.1 : 3.0|1.0 : 0.8|0.0 : 0.0|-|2 : 12|3|7",
]

_EXPECTED_TABLE2_ACTUAL = ["0 : 1", "1 : 2", "7 : 1", "2 : 0", "4 : 1", "3 : 2", "4 : 0", "11 : 2"]
_EXPECTED_TABLE2_AVERAGES = [
    "1.4 : 1.8",
    "1.3 : 1.7",
    "5.0 : 0.5",
    "2.7 : 0.5",
    "3.5 : 1.3",
    "4.0 : 0.8",
    "5.9 : 0.0",
    "4.8 : 0.4",
]

_EXPECTED_TABLE3 = [
    "Gliders|-|0.3 : 0.4|1.8 : 1.4|2.8 : 0.3|1.9 : 0.3|0.7 : 0.8|3.8 : 0.4|5.0 : 0.0|2.5 : 0.2|20 : 2|20|1",
    "HELIOS|0.4 : 0.3|-|1.7 : 1.3|1.8 : 0.1|3.0 : 0.2|1.2 : 0.5|4.3 : 0.3|3.6 : 0.0|2.5 : 0.0|19 : 2|20|2",
    "WE2015|1.4 : 1.8|1.3 : 1.7|-|5.0 : 0.5|2.7 : 0.5|3.5 : 1.3|4.0 : 0.8|5.9 : 0.0|4.8 : 0.4|29 : 8|18|3",
    "Ri-one|0.3 : 2.8|0.1 : 1.8|0.5 : 5.0|-|1.1 : 1.1|0.2 : 1.8|0.6 : 0.5|0.4 : 0.0|0.6 : 0.5|4 : 15|4|7",
    "CSU_Yunlu|0.3 : 1.9|0.2 : 3.0|0.5 : 2.7|1.1 : 1.1|-|0.5 : 1.2|2.0 : 0.7|1.4 : 0.0|1.2 : 0.4|7 : 11|11|5",
    "Oxsy|0.8 : 0.7|0.5 : 1.2|1.3 : 3.5|1.8 : 0.2|1.2 : 0.5|-|3.5 : 0.5|4.4 : 0.0|3.0 : 0.1|17 : 8|15|4",
    "Shiraz|0.4 : 3.8|0.3 : 4.3|0.8 : 4.0|0.5 : 0.6|0.7 : 2.0|0.5 : 3.5|-|0.5 : 0.1|0.8 : 1.0|6 : 20|5|6",
    "MT2016|0.0 : 5.0|0.0 : 3.6|0.0 : 5.9|0.0 : 0.4|0.0 : 1.4|0.0 : 4.4|0.1 : 0.5|-|0.0 : 0.0|0 : 21|2|9",
    "FURY|0.2 : 2.5|0.0 : 2.5|0.4 : 4.8|0.5 : 0.6|0.4 : 1.2|0.1 : 3.0|1.0 : 0.8|0.0 : 0.0|-|2 : 17|3|8",
]

_EXPECTED_TABLE4 = [
    "Gliders2016|-|1.8 : 1.4|1.8 : 1.3|1.7 : 0.9|1.2 : 0.1|2.0 : 1.0|9 : 4|15|1",
    "WE2015|1.4 : 1.8|-|2.5 : 2.5|3.0 : 2.5|2.2 : 0.9|4.0 : 2.9|13 : 12|8|2",
    "WE2014|1.3 : 1.8|2.5 : 2.5|-|2.8 : 2.6|2.3 : 0.8|3.9 : 3.0|13 : 12|8|3",
    "WE2013|0.9 : 1.7|2.5 : 3.0|2.6 : 2.8|-|1.9 : 0.9|2.9 : 3.2|12 : 12|6|4",
    "HELIOS2012|0.1 : 1.2|0.9 : 2.2|0.8 : 2.3|0.9 : 1.9|-|2.6 : 1.8|6 : 9|3|5",
    "WE2011|1.0 : 2.0|2.9 : 4.0|3.0 : 3.9|3.2 : 2.9|1.8 : 2.6|-|12 : 16|1|6",
]


def _score_cell(a: float, b: float) -> str:
    return f"{a:.1f} : {b:.1f}"


def _matrix_rows(matrix: ScoreMatrix) -> list[list[str]]:
    """Rendered cells per team: grid, rounded goals, points, rank."""
    table = points_table(matrix, SchemeKind.DISCRETE)
    ranking = rank(table, SchemeKind.DISCRETE)
    rows = []
    for team in matrix.teams:
        cells = [team]
        for opponent in matrix.teams:
            if opponent == team:
                cells.append("-")
            else:
                agg = matrix.pair(team, opponent)
                cells.append(_score_cell(agg.avg_goals_a, agg.avg_goals_b))
        row = table.row(team)
        cells.append(f"{row.goals_for_rounded} : {row.goals_against_rounded}")
        cells.append(f"{round(row.points):d}")
        cells.append(str(ranking[team]))
        rows.append(cells)
    return rows


def markdown_table(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines.extend("| " + " | ".join(r) + " |" for r in rows)
    return "\n".join(lines)


def _audit_rows(name: str, rows: list[list[str]], expected: list[str]) -> list[str]:
    mismatches = []
    expected_rows = [e.split("|") for e in expected]
    if len(rows) != len(expected_rows):
        return [f"{name}: got {len(rows)} rows, expected {len(expected_rows)}"]
    for got, want in zip(rows, expected_rows):
        if len(got) != len(want):
            mismatches.append(f"{name} row {got[0]}: got {len(got)} cells, expected {len(want)}")
            continue
        for i, (g, w) in enumerate(zip(got, want)):
            if g != w:
                mismatches.append(f"{name} row {want[0]} cell {i}: got {g!r}, expected {w!r}")
    return mismatches


def _grid_section(title: str, matrix: ScoreMatrix, name: str, expected: list[str]):
    rows = _matrix_rows(matrix)
    header = ["Team", *matrix.teams, "Goals (rounded)", "Points", "Rank"]
    text = f"## {title}\n\n{markdown_table(header, rows)}"
    return text, _audit_rows(name, rows, expected)


def _evaluation_section(
    games: Sequence[GameRecord], averages: Mapping[TeamId, tuple[float, float]]
):
    opponents = [g.right for g in games]
    actual = [f"{g.goals_left} : {g.goals_right}" for g in games]
    avg = [_score_cell(*averages[o]) for o in opponents]
    bench = games[0].left if games else "?"
    header = ["", *opponents]
    rows = [[f"{bench} (single game)", *actual], [f"{bench} (multi-game average)", *avg]]
    text = "## Benchmark evaluation round\n\n" + markdown_table(header, rows)
    mismatches = _audit_rows("table2 actual", [actual], ["|".join(_EXPECTED_TABLE2_ACTUAL)])
    mismatches += _audit_rows("table2 averages", [avg], ["|".join(_EXPECTED_TABLE2_AVERAGES)])
    return text, mismatches


def build_tables_report(
    table1: ScoreMatrix | None = None,
    table2_games: Sequence[GameRecord] | None = None,
    table2_averages: Mapping[TeamId, tuple[float, float]] | None = None,
    table3: ScoreMatrix | None = None,
    table4: ScoreMatrix | None = None,
) -> tuple[str, list[str]]:
    """Render all four tables; returns (markdown, mismatch descriptions).

    The keyword arguments exist for fault injection in tests; they default
    to the embedded fixtures.
    """
    t1 = fixtures.table1() if table1 is None else table1
    games = fixtures.table2_games() if table2_games is None else table2_games
    averages = fixtures.table2_averages() if table2_averages is None else table2_averages
    t3 = fixtures.table3() if table3 is None else table3
    t4 = fixtures.table4() if table4 is None else table4

    sections = []
    mismatches: list[str] = []
    text, bad = _grid_section(
        "Estimated round robin, 2016 top 8 (discrete scheme)", t1, "table1", _EXPECTED_TABLE1
    )
    sections.append(text)
    mismatches += bad
    text, bad = _evaluation_section(games, averages)
    sections.append(text)
    mismatches += bad
    text, bad = _grid_section(
        "Round robin with the WE2015 benchmark merged in", t3, "table3", _EXPECTED_TABLE3
    )
    sections.append(text)
    mismatches += bad
    text, bad = _grid_section(
        "Champions league, 2011-2016 winners", t4, "table4", _EXPECTED_TABLE4
    )
    sections.append(text)
    mismatches += bad

    doc = "# Tournament tables\n\n" + "\n\n".join(sections) + "\n"
    return doc, mismatches


# ---------------------------------------------------------------------------
# bias report
# ---------------------------------------------------------------------------

_BOUND_SEQUENCES = (
    (Scenario.EQUAL,),
    (Scenario.STRONGER,),
    (Scenario.WEAKER,),
    (Scenario.EQUAL, Scenario.EQUAL),
    (Scenario.STRONGER, Scenario.WEAKER),
)


def _fmt(x: float, digits: int = 4) -> str:
    return f"{x:.{digits}f}"


def _reported(value: float | None, digits: int = 2) -> str:
    return "n/a" if value is None else f"{value:.{digits}f}"


def inconsistent_reported_pairs() -> list[tuple[float, float, float, float]]:
    """Reported (win, loss) pairs that violate the points identity.

    For one pairing, winner + loser points equal 3 minus the draw rate, and
    the loser's points (3 * losses + draws, averaged) can never fall below
    the draw rate.  Returns (q, win, loss, implied draw rate) rows.
    """
    bad = []
    for q, win in sorted(REPORTED_WIN_POINTS.items()):
        loss = REPORTED_LOSS_POINTS.get(q)
        if loss is None:
            continue
        implied_draw = 3.0 - (win + loss)
        if loss < implied_draw - 1e-9:
            bad.append((q, win, loss, implied_draw))
    return bad


def render_bias_report(rows: Sequence[BiasRow], cfg: SimConfig) -> str:
    """Deterministic markdown report for a bias table."""
    lines = ["# Continuous-scheme bias report", ""]
    lines.append(
        f"games per pair: {cfg.n_games} | sigma: {_fmt(cfg.sigma, 2)}"
        f" | master seed: {cfg.master_seed}"
    )
    lines.append("")
    lines.append("## Equal-strength pairings (means q : q)")
    lines.append("")
    header = [
        "q",
        "points (sampled)",
        "points (exact)",
        "draw rate (sampled)",
        "draw rate (exact)",
        "mean goals (sampled)",
        "mean goals (reported)",
        "points (reported)",
    ]
    body = []
    for row in rows:
        means = REPORTED_EQUAL_MEANS.get(row.q)
        body.append(
            [
                _fmt(row.q, 1),
                _fmt(row.equal_mc.points_a),
                _fmt(row.equal_exact.points_a),
                _fmt(row.equal_mc.draw_rate),
                _fmt(row.equal_exact.draw_rate),
                f"{row.equal_mc.mean_goals_a:.2f} : {row.equal_mc.mean_goals_b:.2f}",
                "n/a" if means is None else f"{means[0]:.2f} : {means[1]:.2f}",
                _reported(REPORTED_EQUAL_POINTS.get(row.q)),
            ]
        )
    lines.append(markdown_table(header, body))
    lines.append("")
    lines.append("## Asymmetric pairings (means q : 0)")
    lines.append("")
    header = [
        "q",
        "winner points (sampled)",
        "winner points (exact)",
        "loser points (sampled)",
        "loser points (exact)",
        "reported (win : loss)",
    ]
    body = []
    for row in rows:
        win = REPORTED_WIN_POINTS.get(row.q)
        loss = REPORTED_LOSS_POINTS.get(row.q)
        body.append(
            [
                _fmt(row.q, 1),
                _fmt(row.asym_mc.points_a),
                _fmt(row.asym_exact.points_a),
                _fmt(row.asym_mc.points_b),
                _fmt(row.asym_exact.points_b),
                f"{_reported(win)} : {_reported(loss)}",
            ]
        )
    lines.append(markdown_table(header, body))
    lines.append("")
    lines.append("## Combined-points bounds per contest sequence")
    lines.append("")
    bound_rows = []
    for seq in _BOUND_SEQUENCES:
        bound = scenario_bounds(seq)
        label = "".join(str(s) for s in seq)
        bound_rows.append([label, _fmt(bound.lower, 1), _fmt(bound.upper, 1)])
    lines.append(markdown_table(["sequence", "lower", "upper"], bound_rows))
    lines.append("")
    lines.append("## Notes")
    lines.append("")
    lines.append(
        "- Equal-strength points per side always lie in [1.0, 1.5]: the fair single"
        " point is the unreachable all-draws floor, and the exact values rise with q,"
        " so higher-scoring draws are credited more."
    )
    lines.append(
        "- For any pairing the two sides' points sum to 3 minus the draw rate;"
        " the losing side can never score below the draw rate itself."
    )
    for q, win, loss, implied in inconsistent_reported_pairs():
        lines.append(
            f"- Reported reference pair at q = {_fmt(q, 1)} (win {_fmt(win, 2)},"
            f" loss {_fmt(loss, 2)}) violates that identity: the sum implies a draw"
            f" rate of {_fmt(implied, 2)}, above the reported loser points"
            f" {_fmt(loss, 2)}. The exact oracle values are authoritative."
        )
    for row in rows:
        win = REPORTED_WIN_POINTS.get(row.q)
        if win is not None and abs(win - row.asym_exact.points_a) > 0.05:
            lines.append(
                f"- Reported winner points at q = {_fmt(row.q, 1)} ({_fmt(win, 2)})"
                f" diverge from the exact oracle ({_fmt(row.asym_exact.points_a)})"
                " beyond sampling noise for this score model."
            )
    lines.append("")
    return "\n".join(lines)


def bias_rows_csv(rows: Sequence[BiasRow]) -> str:
    """Delimited bias table, full precision."""
    header = (
        "q,eq_points_mc,eq_points_exact,eq_draw_rate_mc,eq_draw_rate_exact,"
        "eq_mean_goals_a_mc,eq_mean_goals_b_mc,win_points_mc,win_points_exact,"
        "loss_points_mc,loss_points_exact"
    )
    out = [header]
    for row in rows:
        out.append(
            ",".join(
                repr(v)
                for v in (
                    row.q,
                    row.equal_mc.points_a,
                    row.equal_exact.points_a,
                    row.equal_mc.draw_rate,
                    row.equal_exact.draw_rate,
                    row.equal_mc.mean_goals_a,
                    row.equal_mc.mean_goals_b,
                    row.asym_mc.points_a,
                    row.asym_exact.points_a,
                    row.asym_mc.points_b,
                    row.asym_exact.points_b,
                )
            )
        )
    return "\n".join(out) + "\n"


def render_ranking_table(
    table, ranking: Ranking, scheme: SchemeKind, float_points: bool | None = None
) -> str:
    """Markdown Team/Points/Goals/Rank table, best rank first."""
    if float_points is None:
        float_points = scheme is SchemeKind.CONTINUOUS
    header = ["Team", "Points", "Goals (rounded)", "Goals (raw)", "Rank"]
    rows = []
    for row in sorted(table, key=lambda r: ranking[r.team]):
        points = _fmt(row.points) if float_points else f"{round(row.points):d}"
        rows.append(
            [
                row.team,
                points,
                f"{row.goals_for_rounded} : {row.goals_against_rounded}",
                f"{row.goals_for_raw:.2f} : {row.goals_against_raw:.2f}",
                str(ranking[row.team]),
            ]
        )
    return markdown_table(header, rows)


def ranking_table_csv(table, ranking: Ranking) -> str:
    """Delimited points table, full precision, best rank first."""
    lines = ["team,points,goals_for_rounded,goals_against_rounded,goals_for_raw,goals_against_raw,rank"]
    for row in sorted(table, key=lambda r: ranking[r.team]):
        lines.append(
            f"{row.team},{row.points!r},{row.goals_for_rounded},{row.goals_against_rounded},"
            f"{row.goals_for_raw!r},{row.goals_against_raw!r},{ranking[row.team]}"
        )
    return "\n".join(lines) + "\n"
