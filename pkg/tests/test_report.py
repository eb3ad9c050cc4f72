import dataclasses

from leaguelab import SimConfig, bias_table, fixtures
from leaguelab.model import PairAggregate, ScoreMatrix
from leaguelab.report import (
    bias_rows_csv,
    build_tables_report,
    inconsistent_reported_pairs,
    render_bias_report,
)


def test_tables_report_is_clean_and_stable():
    doc, mismatches = build_tables_report()
    assert mismatches == []
    again, _ = build_tables_report()
    assert doc == again
    for heading in ("2016 top 8", "Benchmark evaluation", "WE2015 benchmark", "Champions league"):
        assert heading in doc
    # spot-check one rendered grid cell and one derived column
    assert "| 0.3 : 0.4 |" in doc
    assert "| 18 : 1 | 17 | 1 |" in doc


def _corrupt_table1() -> ScoreMatrix:
    base = fixtures.table1()
    pairs = []
    for agg in base.pairs:
        if (agg.a, agg.b) == ("Gliders", "HELIOS"):
            agg = dataclasses.replace(agg, avg_goals_a=9.9)
        pairs.append(agg)
    return ScoreMatrix(teams=base.teams, pairs=tuple(pairs))


def test_tables_report_flags_corrupted_cell():
    doc, mismatches = build_tables_report(table1=_corrupt_table1())
    assert mismatches
    assert any("table1" in m and "Gliders" in m for m in mismatches)
    # the corrupted average flips the pair to a win: points drift too
    assert any("cell" in m for m in mismatches)
    assert doc  # the report still renders


def test_tables_report_flags_wrong_averages_row():
    averages = dict(fixtures.table2_averages())
    averages["Oxsy"] = (9.9, 9.9)
    _, mismatches = build_tables_report(table2_averages=averages)
    assert any("table2 averages" in m for m in mismatches)


def test_bias_report_contains_inconsistency_flag():
    rows = bias_table([0.0, 1.0, 2.0, 3.0], SimConfig(n_games=200, master_seed=0))
    text = render_bias_report(rows, SimConfig(n_games=200, master_seed=0))
    assert "violates that identity" in text
    assert "2.31" in text and "0.32" in text and "0.37" in text
    assert "[1.0, 1.5]" in text


def test_bias_report_bounds_rows():
    rows = bias_table([1.0], SimConfig(n_games=100, master_seed=1))
    text = render_bias_report(rows, SimConfig(n_games=100, master_seed=1))
    assert "| ⇔ | 1.0 | 1.5 |" in text
    assert "| ⇔⇔ | 2.0 | 3.0 |" in text
    assert "| ⇒⇐ | 1.5 | 4.5 |" in text
    assert "| ⇐ | 0.0 | 1.5 |" in text


def test_inconsistent_reported_pairs_is_exactly_q1():
    rows = inconsistent_reported_pairs()
    assert len(rows) == 1
    q, win, loss, implied = rows[0]
    assert (q, win, loss) == (1.0, 2.31, 0.32)
    assert implied == 0.37 or abs(implied - 0.37) < 1e-12


def test_bias_csv_shape():
    rows = bias_table([0.0, 3.0], SimConfig(n_games=100, master_seed=5))
    text = bias_rows_csv(rows)
    lines = text.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("q,eq_points_mc")
    assert lines[1].split(",")[0] == "0.0"
