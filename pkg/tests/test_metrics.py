import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leaguelab import DomainMismatchError, Ranking, chronological_concordance, l1_distance
from leaguelab.metrics import rank_deltas


def test_known_distance():
    ra = Ranking.from_sequence(["A", "B", "C", "D"])
    rb = Ranking.from_sequence(["B", "A", "D", "C"])
    assert l1_distance(ra, rb) == 4


def test_identity_distance_zero():
    r = Ranking.from_sequence(["A", "B", "C"])
    assert l1_distance(r, r) == 0


def test_reversal_is_maximal():
    teams = [f"t{i}" for i in range(8)]
    fwd = Ranking.from_sequence(teams)
    rev = Ranking.from_sequence(list(reversed(teams)))
    # floor(n^2 / 2) for n = 8
    assert l1_distance(fwd, rev) == 32


def test_domain_mismatch_lists_offenders():
    ra = Ranking.from_sequence(["A", "B"])
    rb = Ranking.from_sequence(["A", "C"])
    with pytest.raises(DomainMismatchError, match="B"):
        l1_distance(ra, rb)


@given(st.data())
def test_metric_properties(data):
    n = data.draw(st.integers(min_value=1, max_value=10))
    teams = [f"t{i}" for i in range(n)]
    pa = data.draw(st.permutations(teams))
    pb = data.draw(st.permutations(teams))
    pc = data.draw(st.permutations(teams))
    ra, rb, rc = (Ranking.from_sequence(p) for p in (pa, pb, pc))
    dab = l1_distance(ra, rb)
    assert dab >= 0
    assert (dab == 0) == (ra == rb)
    assert dab == l1_distance(rb, ra)
    assert l1_distance(ra, rc) <= dab + l1_distance(rb, rc)
    assert dab % 2 == 0
    assert dab <= n * n // 2


def test_parity_over_random_pairs():
    rng = random.Random(20160630)
    for _ in range(1000):
        n = rng.randint(2, 12)
        teams = [f"t{i}" for i in range(n)]
        a, b = teams[:], teams[:]
        rng.shuffle(a)
        rng.shuffle(b)
        d = l1_distance(Ranking.from_sequence(a), Ranking.from_sequence(b))
        assert d % 2 == 0


def test_rank_deltas():
    ra = Ranking.from_sequence(["A", "B", "C"])
    rb = Ranking.from_sequence(["C", "B", "A"])
    assert rank_deltas(ra, rb) == {"A": 2, "B": 0, "C": 2}


def test_chronological_concordance():
    order = ("old", "mid", "new")
    assert chronological_concordance(Ranking.from_sequence(order), order) == 0
    flipped = Ranking.from_sequence(("mid", "old", "new"))
    assert chronological_concordance(flipped, order) == 2
