"""Tournament evaluation toolkit for round-robin leagues.

Core pieces: discrete and continuous points schemes over average-score
matrices, an L1 distance between rankings, a score-model laboratory
(Monte Carlo sampling plus an exact discretized-normal oracle), embedded
reference fixtures, and a parser/emitter for the challenge-mode command
protocol.
"""

from .challenge import (
    MODE_PARAM,
    WEATHER_PARAMS,
    ParamOverride,
    ParamRegistry,
    ValidationReport,
    emit_change_command,
    emit_server_conf,
    parse_change_command,
    validate,
)
from .errors import (
    CountsRequiredError,
    DomainMismatchError,
    DuplicateParamError,
    EmptyCommandError,
    EmptyPairError,
    IncompleteMatrixError,
    IncompleteModelError,
    InvalidValueError,
    LeagueError,
    ParseError,
)
from .ingest import aggregate, dump_matrix, load_matrix, merge_benchmark, parse_results
from .metrics import chronological_concordance, l1_distance, rank_deltas
from .model import (
    GameRecord,
    PairAggregate,
    PointsRow,
    PointsTable,
    Ranking,
    ScoreMatrix,
    TeamId,
    round_half_away,
)
from .schemes import (
    SchemeKind,
    continuous_pair_points,
    discrete_pair_points,
    points_table,
    rank,
    rank_matrix,
)
from .simlab import (
    BiasRow,
    PairPointsEstimate,
    Scenario,
    ScoreModel,
    SimConfig,
    bias_table,
    exact_pair_distribution,
    exact_pair_points,
    estimate_from_aggregate,
    points_standard_error,
    sample_goals,
    scenario_bounds,
    simulate_pair,
    simulate_round_robin,
)

__version__ = "0.1.0"

__all__ = [
    "MODE_PARAM",
    "WEATHER_PARAMS",
    "BiasRow",
    "CountsRequiredError",
    "DomainMismatchError",
    "DuplicateParamError",
    "EmptyCommandError",
    "EmptyPairError",
    "GameRecord",
    "IncompleteMatrixError",
    "IncompleteModelError",
    "InvalidValueError",
    "LeagueError",
    "PairAggregate",
    "PairPointsEstimate",
    "ParamOverride",
    "ParamRegistry",
    "ParseError",
    "PointsRow",
    "PointsTable",
    "Ranking",
    "Scenario",
    "SchemeKind",
    "ScoreMatrix",
    "ScoreModel",
    "SimConfig",
    "TeamId",
    "ValidationReport",
    "aggregate",
    "bias_table",
    "chronological_concordance",
    "continuous_pair_points",
    "discrete_pair_points",
    "dump_matrix",
    "emit_change_command",
    "emit_server_conf",
    "estimate_from_aggregate",
    "exact_pair_distribution",
    "exact_pair_points",
    "l1_distance",
    "load_matrix",
    "merge_benchmark",
    "parse_change_command",
    "parse_results",
    "points_standard_error",
    "points_table",
    "rank",
    "rank_deltas",
    "rank_matrix",
    "round_half_away",
    "sample_goals",
    "scenario_bounds",
    "simulate_pair",
    "simulate_round_robin",
    "validate",
]
