"""Solving positive matrix games two ways.

A game is solved by linear programming (always works) and through the
matrix inverse (square nonsingular payoffs, certifies uniqueness).  The
demo shows both routes agreeing, the LP fallback when the closed form
does not apply, and the worst-case columns an adversary would pick.
"""

import numpy as np

from buyhold import (
    MarketParams,
    check_extreme_point,
    payoff_matrix_K,
    solve_game,
    solve_game_lp,
    worst_case_columns,
)


def show(title, H):
    H = np.asarray(H, dtype=float)
    solution, route = solve_game(H)
    print(f"{title}  (route: {route})")
    print(f"  value {solution.value:.10f}  ratio {solution.ratio:.10f}  unique {solution.unique}")
    print(f"  row strategy    {np.round(solution.online_strategy, 6)}")
    print(f"  column strategy {np.round(solution.adversary_strategy, 6)}")
    return solution


def main():
    K = payoff_matrix_K(MarketParams(2.0, 2.0, 3))
    sol = show("Downturn kernel, alpha = beta = 2, n = 3", K)

    # The optimal row strategy ties on every column; a pure day-one
    # strategy would hand the adversary column 3 (index 2).
    print("  worst columns vs optimum:", sorted(worst_case_columns(K, sol.online_strategy)))
    print("  worst columns vs day-one:", sorted(worst_case_columns(K, [1.0, 0.0, 0.0])))

    # Certificate that the solution is an extreme point of the optimal set.
    x = sol.ratio * sol.online_strategy
    y = sol.ratio * sol.adversary_strategy
    ok = check_extreme_point(K, x, y, range(3), range(3))
    print("  extreme-point certificate over the full support:", ok)
    print()

    # With a dominated row the inverse route refuses and LP takes over.
    show("Game with a dominated row", [[1.0, 1.0], [0.5, 0.4]])
    print()

    # Rectangular games only have the LP route.
    rng = np.random.default_rng(0)
    H = rng.uniform(0.5, 2.0, size=(4, 6))
    lp = solve_game_lp(H)
    payoff = lp.online_strategy @ H
    print("Random 4x6 game: value", f"{lp.value:.6f}",
          "column payoffs in", f"[{payoff.min():.6f}, {payoff.max():.6f}]")
    print("No column pays less than the value: the mixture is safe.")


if __name__ == "__main__":
    main()
