import pytest

from leaguelab import LeagueError, fixtures


def test_fixture_names_cover_all_tables():
    assert fixtures.FIXTURE_NAMES == [
        "rank_actual_2016",
        "rank_chronological",
        "table1",
        "table2",
        "table3",
        "table4",
    ]


def test_matrix_fixture_lookup():
    m = fixtures.matrix_fixture("table1")
    assert len(m.teams) == 8
    assert fixtures.matrix_fixture("table3").teams[2] == "WE2015"
    assert len(fixtures.matrix_fixture("table4").teams) == 6


def test_matrix_fixture_unknown_name():
    with pytest.raises(LeagueError, match="not a matrix fixture"):
        fixtures.matrix_fixture("table2")
    with pytest.raises(LeagueError, match="table1, table3, table4"):
        fixtures.matrix_fixture("nope")


def test_ranking_fixture_lookup():
    r = fixtures.ranking_fixture("rank_actual_2016")
    assert r["Gliders"] == 1
    assert len(r) == 8
    chron = fixtures.ranking_fixture("rank_chronological")
    assert chron["Gliders2016"] == 1 and chron["WE2011"] == 6
    with pytest.raises(LeagueError, match="not a ranking fixture"):
        fixtures.ranking_fixture("table1")


def test_tables_are_averages_only():
    for name in ("table1", "table4"):
        m = fixtures.matrix_fixture(name)
        assert not m.counts_known
        assert all(p.n_games == 0 for p in m.pairs)


def test_table2_games_match_benchmark_side():
    games = fixtures.table2_games()
    assert len(games) == 8
    assert all(g.left == "WE2015" for g in games)
    assert set(g.right for g in games) == set(fixtures.TABLE1_TEAMS)
