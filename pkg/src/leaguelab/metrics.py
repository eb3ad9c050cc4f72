"""Ranking-comparison metrics.

The L1 distance between two rankings over the same teams is the sum of
absolute rank differences.  Concordance against a reference order (for
example a chronological one) is the L1 distance to the ranking where list
position equals rank.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DomainMismatchError
from .model import Ranking, TeamId


def l1_distance(ra: Ranking, rb: Ranking) -> int:
    """Sum of |rank_a(team) - rank_b(team)| over all teams."""
    teams_a, teams_b = ra.teams(), rb.teams()
    if teams_a != teams_b:
        only_a = sorted(teams_a - teams_b)
        only_b = sorted(teams_b - teams_a)
        raise DomainMismatchError(
            f"rankings cover different teams; only in first: {only_a}, only in second: {only_b}"
        )
    return sum(abs(ra[t] - rb[t]) for t in teams_a)


def rank_deltas(ra: Ranking, rb: Ranking) -> dict[TeamId, int]:
    """Per-team |rank difference|, for distance breakdowns."""
    teams_a, teams_b = ra.teams(), rb.teams()
    if teams_a != teams_b:
        raise DomainMismatchError(
            f"rankings cover different teams; only in first: {sorted(teams_a - teams_b)},"
            f" only in second: {sorted(teams_b - teams_a)}"
        )
    return {t: abs(ra[t] - rb[t]) for t in sorted(teams_a)}


def chronological_concordance(r: Ranking, reference: Sequence[TeamId]) -> int:
    """L1 distance between `r` and the ranking implied by `reference` order."""
    ref_ranking = Ranking.from_sequence(list(reference))
    return l1_distance(r, ref_ranking)
