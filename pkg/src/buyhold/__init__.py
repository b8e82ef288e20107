"""Optimal static buy-and-hold allocation under bounded daily returns.

The package solves finite zero-sum matrix games (by LP or, for square
nonsingular payoffs, in closed form), derives the balanced buy-and-hold
strategy with its exact competitive ratio, and backtests it against
dollar averaging on daily price series.
"""

from .backtest import (
    BacktestReport,
    PlanResult,
    PlanWindow,
    PriceSeries,
    Violation,
    WindowReport,
    bal_generator,
    compare_report,
    da_generator,
    find_violations,
    load_prices,
    parse_prices,
    report_csv,
    report_json,
    report_svg,
    run_plan,
    segment_monthly,
    series_csv,
    synthetic_prices,
)
from .errors import (
    BuyholdError,
    DimensionMismatch,
    DuplicateDate,
    Infeasible,
    LengthMismatch,
    NonPositiveEntry,
    NonPositivePrice,
    NumericalFailure,
    ParseError,
    PreconditionViolated,
    SingularMatrixError,
    Unbounded,
)
from .games import (
    FEASIBILITY_TOL,
    OPTIMALITY_TOL,
    GameSolution,
    LpSolution,
    as_payoff_matrix,
    check_extreme_point,
    is_mixed_strategy,
    solve_game,
    solve_game_closed_form,
    solve_game_lp,
    solve_primal_dual,
    worst_case_columns,
)
from .linalg import invert_matrix
from .market import (
    CIRCUIT_BREAKERS,
    MarketParams,
    bal_adversary,
    bal_ratio,
    bal_weights,
    da_ratio,
    da_weights,
    det_K_closed_form,
    downturns,
    evaluate_static,
    offline_optimum,
    payoff_matrix_K,
    preset_bounds,
    preset_params,
    static_ratio_via_downturns,
    validate_sequence,
)
from .simplex import solve_lp

__version__ = "0.1.0"

__all__ = [
    "BacktestReport",
    "BuyholdError",
    "CIRCUIT_BREAKERS",
    "DimensionMismatch",
    "DuplicateDate",
    "FEASIBILITY_TOL",
    "GameSolution",
    "Infeasible",
    "LengthMismatch",
    "LpSolution",
    "MarketParams",
    "NonPositiveEntry",
    "NonPositivePrice",
    "NumericalFailure",
    "OPTIMALITY_TOL",
    "ParseError",
    "PlanResult",
    "PlanWindow",
    "PreconditionViolated",
    "PriceSeries",
    "SingularMatrixError",
    "Unbounded",
    "Violation",
    "WindowReport",
    "as_payoff_matrix",
    "bal_adversary",
    "bal_generator",
    "bal_ratio",
    "bal_weights",
    "check_extreme_point",
    "compare_report",
    "da_generator",
    "da_ratio",
    "da_weights",
    "det_K_closed_form",
    "downturns",
    "evaluate_static",
    "find_violations",
    "invert_matrix",
    "is_mixed_strategy",
    "load_prices",
    "offline_optimum",
    "parse_prices",
    "payoff_matrix_K",
    "preset_bounds",
    "preset_params",
    "report_csv",
    "report_json",
    "report_svg",
    "run_plan",
    "segment_monthly",
    "series_csv",
    "solve_game",
    "solve_game_closed_form",
    "solve_game_lp",
    "solve_lp",
    "solve_primal_dual",
    "static_ratio_via_downturns",
    "synthetic_prices",
    "validate_sequence",
    "worst_case_columns",
]
