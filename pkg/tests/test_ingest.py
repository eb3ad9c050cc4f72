import pytest

from leaguelab import (
    GameRecord,
    IncompleteMatrixError,
    InvalidValueError,
    LeagueError,
    ParseError,
    aggregate,
    dump_matrix,
    load_matrix,
    merge_benchmark,
    parse_results,
)
from leaguelab import fixtures

LOG = """\
# comment line
A,B,2,1

B,C,0,0
A,C,1,3
A,B,1,1
"""


def test_parse_results_skips_comments_and_blanks():
    records = parse_results(LOG)
    assert len(records) == 4
    assert records[0] == GameRecord("A", "B", 2, 1)


def test_parse_results_line_numbers_in_errors():
    with pytest.raises(ParseError, match="line 2"):
        parse_results("A,B,1,0\nA,B,one,0\n")
    with pytest.raises(ParseError, match="line 1.*fields"):
        parse_results("A,B,1\n")
    with pytest.raises(ParseError, match="itself"):
        parse_results("A,A,1,0\n")


def test_aggregate_counts_and_averages():
    m = aggregate(parse_results(LOG))
    assert m.teams == ("A", "B", "C")  # first-appearance order
    ab = m.pair("A", "B")
    assert ab.n_games == 2
    assert (ab.wins_a, ab.draws, ab.wins_b) == (1, 1, 0)
    assert ab.avg_goals_a == pytest.approx(1.5)
    assert ab.avg_goals_b == pytest.approx(1.0)
    assert m.counts_known


def test_aggregate_normalizes_pair_orientation():
    # C,B in the log is stored under the canonical (B, C) key
    m = aggregate(parse_results("A,B,1,0\nC,B,4,1\nA,C,2,2\n"))
    bc = m.pair("B", "C")
    assert (bc.avg_goals_a, bc.avg_goals_b) == (1.0, 4.0)


def test_aggregate_requires_every_pair():
    with pytest.raises(IncompleteMatrixError, match="B-C"):
        aggregate(parse_results("A,B,1,0\nA,C,2,2\n"))
    with pytest.raises(LeagueError, match="no game records"):
        aggregate([])


def test_merge_benchmark_places_team():
    merged = merge_benchmark(
        fixtures.table1(), "WE2015", fixtures.table2_averages(), position=2
    )
    assert merged.teams[2] == "WE2015"
    assert len(merged.teams) == 9
    pair = merged.pair("WE2015", "Gliders")
    assert (pair.avg_goals_a, pair.avg_goals_b) == (1.4, 1.8)
    assert not pair.counts_known
    # original aggregates survive untouched
    assert merged.pair("Gliders", "HELIOS") == fixtures.table1().pair("Gliders", "HELIOS")


def test_merge_benchmark_appends_by_default():
    merged = merge_benchmark(fixtures.table1(), "WE2015", fixtures.table2_averages())
    assert merged.teams[-1] == "WE2015"


def test_merge_benchmark_coverage_errors():
    row = dict(fixtures.table2_averages())
    del row["Oxsy"]
    with pytest.raises(LeagueError, match="missing: \\['Oxsy'\\]"):
        merge_benchmark(fixtures.table1(), "WE2015", row)
    row["Oxsy"] = (1.0, 1.0)
    row["Ghost"] = (0.0, 0.0)
    with pytest.raises(LeagueError, match="extra: \\['Ghost'\\]"):
        merge_benchmark(fixtures.table1(), "WE2015", row)
    with pytest.raises(InvalidValueError, match="already in matrix"):
        merge_benchmark(fixtures.table1(), "Oxsy", fixtures.table2_averages())


def test_dump_load_round_trip_counts_known():
    m = aggregate(parse_results(LOG))
    text = dump_matrix(m)
    again = load_matrix(text)
    assert dump_matrix(again) == text
    assert again.pair("A", "B") == m.pair("A", "B")


def test_dump_load_round_trip_averages_only():
    text = dump_matrix(fixtures.table1())
    again = load_matrix(text)
    assert dump_matrix(again) == text
    assert not again.counts_known
    assert '"wins_a"' not in text


def test_dump_is_byte_stable():
    assert dump_matrix(fixtures.table1()) == dump_matrix(fixtures.table1())


def test_load_matrix_error_paths():
    with pytest.raises(ParseError, match="not valid JSON"):
        load_matrix("{nope")
    with pytest.raises(ParseError, match="top level"):
        load_matrix("[1, 2]")
    with pytest.raises(ParseError, match=r"\$\.teams"):
        load_matrix('{"teams": ["ok", "two words"], "pairs": []}')
    with pytest.raises(ParseError, match=r"\$\.pairs\[0\]\.avg_a"):
        load_matrix(
            '{"teams": ["A", "B"], "pairs": [{"a": "A", "b": "B", "n_games": 0, "avg_b": 1}]}'
        )
    with pytest.raises(ParseError, match="partial counts"):
        load_matrix(
            '{"teams": ["A", "B"], "pairs": [{"a": "A", "b": "B", "n_games": 2,'
            ' "avg_a": 1, "avg_b": 1, "wins_a": 2}]}'
        )
    with pytest.raises(ParseError, match="missing: A-B"):
        load_matrix('{"teams": ["A", "B"], "pairs": []}')


def test_load_matrix_rejects_bool_numbers():
    with pytest.raises(ParseError, match="must be a number"):
        load_matrix(
            '{"teams": ["A", "B"], "pairs": [{"a": "A", "b": "B", "n_games": 0,'
            ' "avg_a": true, "avg_b": 1}]}'
        )
