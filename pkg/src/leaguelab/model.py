"""Domain types for round-robin tournament data.

Team identifiers are plain tokens (no whitespace, no parentheses).  A
:class:`ScoreMatrix` holds one :class:`PairAggregate` per unordered team
pair and is always complete: n teams imply exactly n(n-1)/2 entries.
All types are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping

from .errors import IncompleteMatrixError, InvalidValueError, LeagueError

TeamId = str


def valid_team_id(team: str) -> bool:
    """True if `team` is a non-empty token without whitespace or parens."""
    if not team:
        return False
    return not any(c.isspace() or c in "()" for c in team)


def require_team_id(team: str) -> str:
    if not valid_team_id(team):
        raise InvalidValueError(f"invalid team id {team!r}")
    return team


def round_half_away(x: float) -> int:
    """Round to the nearest integer, halves away from zero.

    This is the rounding mode that turns per-pair average scores into the
    integer scores the discrete scheme awards points on (2.5 -> 3, not 2).
    """
    if not math.isfinite(x):
        raise InvalidValueError(f"cannot round non-finite value {x!r}")
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


@dataclass(frozen=True)
class GameRecord:
    """A single played game: two teams and their integer goals."""

    left: TeamId
    right: TeamId
    goals_left: int
    goals_right: int

    def __post_init__(self):
        require_team_id(self.left)
        require_team_id(self.right)
        if self.left == self.right:
            raise InvalidValueError(f"team {self.left!r} cannot play itself")
        for goals in (self.goals_left, self.goals_right):
            if not isinstance(goals, int) or isinstance(goals, bool) or goals < 0:
                raise InvalidValueError(f"goals must be non-negative integers, got {goals!r}")


@dataclass(frozen=True)
class PairAggregate:
    """Aggregate results of all games between one pair of teams.

    `counts_known` is False for aggregates loaded from published tables that
    give average goals only; such aggregates carry no win/draw/loss counts
    and use n_games = 0 to mean "unknown".
    """

    a: TeamId
    b: TeamId
    n_games: int
    avg_goals_a: float
    avg_goals_b: float
    wins_a: int = 0
    draws: int = 0
    wins_b: int = 0
    counts_known: bool = False

    def __post_init__(self):
        require_team_id(self.a)
        require_team_id(self.b)
        if self.a == self.b:
            raise InvalidValueError(f"self-pair {self.a!r}")
        if self.n_games < 0:
            raise InvalidValueError("n_games must be >= 0")
        for avg in (self.avg_goals_a, self.avg_goals_b):
            if not math.isfinite(avg) or avg < 0:
                raise InvalidValueError(f"average goals must be finite and >= 0, got {avg!r}")
        if self.counts_known:
            if min(self.wins_a, self.draws, self.wins_b) < 0:
                raise InvalidValueError("win/draw/loss counts must be >= 0")
            if self.wins_a + self.draws + self.wins_b != self.n_games:
                raise InvalidValueError(
                    f"counts {self.wins_a}+{self.draws}+{self.wins_b} != n_games {self.n_games}"
                    f" for pair {self.a}-{self.b}"
                )

    def swapped(self) -> "PairAggregate":
        """Same aggregate viewed from the other side."""
        return replace(
            self,
            a=self.b,
            b=self.a,
            avg_goals_a=self.avg_goals_b,
            avg_goals_b=self.avg_goals_a,
            wins_a=self.wins_b,
            wins_b=self.wins_a,
        )


def pair_key(a: TeamId, b: TeamId) -> tuple[TeamId, TeamId]:
    """Canonical unordered-pair key (lexicographic)."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class ScoreMatrix:
    """Complete pairwise aggregates over an ordered team list.

    Lookup is symmetric: `pair(b, a)` returns the stored (a, b) aggregate
    with the roles swapped.
    """

    teams: tuple[TeamId, ...]
    pairs: tuple[PairAggregate, ...]
    _index: Mapping[tuple[TeamId, TeamId], PairAggregate] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        teams = tuple(self.teams)
        object.__setattr__(self, "teams", teams)
        if len(set(teams)) != len(teams):
            raise InvalidValueError("duplicate team ids in matrix")
        for t in teams:
            require_team_id(t)
        team_set = set(teams)
        index: dict[tuple[TeamId, TeamId], PairAggregate] = {}
        for agg in self.pairs:
            if agg.a not in team_set or agg.b not in team_set:
                raise InvalidValueError(f"pair {agg.a}-{agg.b} names a team not in the matrix")
            key = pair_key(agg.a, agg.b)
            if key in index:
                raise InvalidValueError(f"duplicate pair {agg.a}-{agg.b}")
            index[key] = agg
        n = len(teams)
        expected = n * (n - 1) // 2
        if len(index) != expected:
            missing = [
                f"{a}-{b}"
                for i, a in enumerate(teams)
                for b in teams[i + 1 :]
                if pair_key(a, b) not in index
            ]
            raise IncompleteMatrixError(
                f"matrix has {len(index)} pairs, expected {expected};"
                f" missing: {', '.join(missing)}"
            )
        object.__setattr__(self, "pairs", tuple(self.pairs))
        object.__setattr__(self, "_index", index)

    def pair(self, a: TeamId, b: TeamId) -> PairAggregate:
        """The aggregate for (a, b), with a's goals in the `a` role."""
        agg = self._index.get(pair_key(a, b))
        if agg is None:
            raise LeagueError(f"no pair {a}-{b} in matrix")
        return agg if agg.a == a else agg.swapped()

    def iter_pairs(self) -> Iterator[PairAggregate]:
        """Aggregates in canonical order (team-list order of (i, j), i < j)."""
        for i, a in enumerate(self.teams):
            for b in self.teams[i + 1 :]:
                yield self.pair(a, b)

    @property
    def counts_known(self) -> bool:
        """True when every pair carries full win/draw/loss counts."""
        return all(agg.counts_known for agg in self.pairs)


@dataclass(frozen=True)
class PointsRow:
    """One team's totals: points plus rounded and raw goal tallies."""

    team: TeamId
    points: float
    goals_for_rounded: int
    goals_against_rounded: int
    goals_for_raw: float
    goals_against_raw: float


@dataclass(frozen=True)
class PointsTable:
    """Per-team points rows, in matrix team order."""

    rows: tuple[PointsRow, ...]

    def __iter__(self) -> Iterator[PointsRow]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, team: TeamId) -> PointsRow:
        for r in self.rows:
            if r.team == team:
                return r
        raise LeagueError(f"no row for team {team!r}")


class Ranking:
    """A bijection team -> rank with ranks exactly 1..n."""

    def __init__(self, order: Mapping[TeamId, int]):
        if not order:
            raise InvalidValueError("ranking cannot be empty")
        ranks = sorted(order.values())
        if ranks != list(range(1, len(order) + 1)):
            raise InvalidValueError(f"ranks must be exactly 1..{len(order)}, got {ranks}")
        for t in order:
            require_team_id(t)
        self._order = dict(order)

    @classmethod
    def from_sequence(cls, teams: list[TeamId] | tuple[TeamId, ...]) -> "Ranking":
        """Ranking where position in the sequence is the rank (1-based)."""
        return cls({t: i for i, t in enumerate(teams, start=1)})

    def __getitem__(self, team: TeamId) -> int:
        return self._order[team]

    def __contains__(self, team: TeamId) -> bool:
        return team in self._order

    def __len__(self) -> int:
        return len(self._order)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ranking) and self._order == other._order

    def __repr__(self) -> str:
        inner = ", ".join(f"{t}: {r}" for t, r in sorted(self._order.items(), key=lambda kv: kv[1]))
        return f"Ranking({{{inner}}})"

    def teams(self) -> set[TeamId]:
        return set(self._order)

    def items(self):
        return self._order.items()

    def as_dict(self) -> dict[TeamId, int]:
        return dict(self._order)

    def in_rank_order(self) -> list[TeamId]:
        """Teams listed from rank 1 to rank n."""
        return [t for t, _ in sorted(self._order.items(), key=lambda kv: kv[1])]
