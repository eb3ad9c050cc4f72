import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leaguelab import (
    GameRecord,
    IncompleteMatrixError,
    InvalidValueError,
    PairAggregate,
    Ranking,
    ScoreMatrix,
    round_half_away,
)
from leaguelab.model import pair_key, valid_team_id


@pytest.mark.parametrize(
    "x,expected",
    [
        (0.0, 0),
        (0.4, 0),
        (0.5, 1),
        (1.5, 2),
        (2.5, 3),
        (2.49999, 2),
        (-0.5, -1),
        (-2.5, -3),
        (17.7, 18),
        (3.0, 3),
    ],
)
def test_round_half_away_cases(x, expected):
    assert round_half_away(x) == expected


@given(st.floats(min_value=-1e6, max_value=1e6))
def test_round_half_away_within_half(x):
    r = round_half_away(x)
    assert abs(r - x) <= 0.5 + 1e-9


@given(st.floats(min_value=-1e6, max_value=1e6), st.floats(min_value=0, max_value=1e6))
def test_round_half_away_monotone(x, delta):
    assert round_half_away(x + delta) >= round_half_away(x)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_round_half_away_rejects_non_finite(bad):
    with pytest.raises(InvalidValueError):
        round_half_away(bad)


def test_valid_team_id():
    assert valid_team_id("HELIOS")
    assert valid_team_id("CSU_Yunlu")
    assert not valid_team_id("")
    assert not valid_team_id("two words")
    assert not valid_team_id("paren(s)")


def test_game_record_validation():
    GameRecord("A", "B", 3, 2)
    with pytest.raises(InvalidValueError):
        GameRecord("A", "A", 1, 1)
    with pytest.raises(InvalidValueError):
        GameRecord("A", "B", -1, 0)
    with pytest.raises(InvalidValueError):
        GameRecord("A", "B", True, 0)


def test_pair_aggregate_counts_must_sum():
    PairAggregate("A", "B", 10, 1.0, 2.0, wins_a=3, draws=4, wins_b=3, counts_known=True)
    with pytest.raises(InvalidValueError):
        PairAggregate("A", "B", 10, 1.0, 2.0, wins_a=3, draws=3, wins_b=3, counts_known=True)


def test_pair_aggregate_averages_only():
    agg = PairAggregate("A", "B", 0, 1.4, 1.8)
    assert not agg.counts_known
    assert agg.n_games == 0


def test_pair_aggregate_swapped():
    agg = PairAggregate("A", "B", 5, 2.0, 1.0, wins_a=3, draws=1, wins_b=1, counts_known=True)
    s = agg.swapped()
    assert (s.a, s.b) == ("B", "A")
    assert (s.avg_goals_a, s.avg_goals_b) == (1.0, 2.0)
    assert (s.wins_a, s.wins_b, s.draws) == (1, 3, 1)


def test_pair_key_is_unordered():
    assert pair_key("B", "A") == pair_key("A", "B") == ("A", "B")


def _tiny_matrix():
    return ScoreMatrix(
        teams=("A", "B", "C"),
        pairs=(
            PairAggregate("A", "B", 0, 2.0, 1.0),
            PairAggregate("A", "C", 0, 0.5, 0.5),
            PairAggregate("C", "B", 0, 3.0, 0.0),
        ),
    )


def test_matrix_symmetric_lookup():
    m = _tiny_matrix()
    ab = m.pair("A", "B")
    ba = m.pair("B", "A")
    assert (ab.avg_goals_a, ab.avg_goals_b) == (2.0, 1.0)
    assert (ba.avg_goals_a, ba.avg_goals_b) == (1.0, 2.0)
    # stored order is (C, B); lookup normalizes the roles
    assert m.pair("B", "C").avg_goals_a == 0.0


def test_matrix_requires_all_pairs():
    with pytest.raises(IncompleteMatrixError, match="B-C"):
        ScoreMatrix(
            teams=("A", "B", "C"),
            pairs=(
                PairAggregate("A", "B", 0, 2.0, 1.0),
                PairAggregate("A", "C", 0, 0.5, 0.5),
            ),
        )


def test_matrix_rejects_duplicates_and_strangers():
    with pytest.raises(InvalidValueError, match="duplicate pair"):
        ScoreMatrix(
            teams=("A", "B"),
            pairs=(PairAggregate("A", "B", 0, 1.0, 1.0), PairAggregate("B", "A", 0, 1.0, 1.0)),
        )
    with pytest.raises(InvalidValueError, match="not in the matrix"):
        ScoreMatrix(teams=("A", "B"), pairs=(PairAggregate("A", "X", 0, 1.0, 1.0),))


def test_matrix_iter_pairs_order():
    m = _tiny_matrix()
    order = [(agg.a, agg.b) for agg in m.iter_pairs()]
    assert order == [("A", "B"), ("A", "C"), ("B", "C")]


def test_ranking_must_be_bijection():
    Ranking({"A": 1, "B": 2})
    with pytest.raises(InvalidValueError):
        Ranking({"A": 1, "B": 3})
    with pytest.raises(InvalidValueError):
        Ranking({"A": 1, "B": 1})
    with pytest.raises(InvalidValueError):
        Ranking({})


def test_ranking_from_sequence_round_trip():
    r = Ranking.from_sequence(["X", "Y", "Z"])
    assert r["X"] == 1 and r["Z"] == 3
    assert r.in_rank_order() == ["X", "Y", "Z"]
    assert r == Ranking({"X": 1, "Y": 2, "Z": 3})
