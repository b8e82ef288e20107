"""Acceptance gate: one test per criterion, at the stated tolerances.

Each test prints a single PASS/FAIL line (visible under ``pytest -s``)
in addition to asserting, so the whole gate reads as a checklist.
"""

import itertools
import time

import numpy as np
import pytest

from buyhold import (
    MarketParams,
    bal_adversary,
    bal_ratio,
    bal_weights,
    compare_report,
    da_ratio,
    da_weights,
    det_K_closed_form,
    downturns,
    evaluate_static,
    offline_optimum,
    payoff_matrix_K,
    report_csv,
    report_json,
    segment_monthly,
    solve_game_closed_form,
    solve_game_lp,
    solve_primal_dual,
    static_ratio_via_downturns,
    synthetic_prices,
)

TAIPEI_ALPHA = 1.0 / 0.93
TAIPEI_BETA = 1.07


def _gate(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
    assert ok, f"{name}: {detail}"


def _draw_bounds(rng, span=2.0):
    # Uniform on (1, 1 + span]: 1 - random() lies in (0, 1].
    return 1.0 + span * (1.0 - rng.random())


def test_criterion_1_closed_form_lp_equivalence():
    rng = np.random.default_rng(20260811)
    start = time.perf_counter()
    worst_ratio = 0.0
    worst_strategy = 0.0
    for _ in range(200):
        params = MarketParams(_draw_bounds(rng), _draw_bounds(rng), int(rng.integers(2, 31)))
        K = payoff_matrix_K(params)
        lp = solve_game_lp(K)
        cf = solve_game_closed_form(K)
        r = bal_ratio(params)
        b = bal_weights(params)
        worst_ratio = max(
            worst_ratio, abs(lp.ratio - cf.ratio), abs(lp.ratio - r), abs(cf.ratio - r)
        )
        worst_strategy = max(
            worst_strategy,
            np.abs(lp.online_strategy - cf.online_strategy).max(),
            np.abs(lp.adversary_strategy - cf.adversary_strategy).max(),
            np.abs(lp.online_strategy - b).max(),
            np.abs(cf.online_strategy - b).max(),
        )
    elapsed = time.perf_counter() - start
    ok = worst_ratio <= 1e-9 and worst_strategy <= 1e-8 and elapsed < 30.0
    _gate(
        "criterion 1: closed-form/LP/formula equivalence (200 draws)",
        ok,
        f"ratio dev {worst_ratio:.2e}, strategy dev {worst_strategy:.2e}, {elapsed:.1f}s",
    )


def test_criterion_2_equalizing_property():
    rng = np.random.default_rng(20260811)
    worst = 0.0
    for _ in range(200):
        params = MarketParams(_draw_bounds(rng), _draw_bounds(rng), int(rng.integers(2, 31)))
        w = bal_weights(params)
        r = bal_ratio(params)
        for seq in downturns(params):
            worst = max(worst, abs(offline_optimum(seq) / evaluate_static(w, seq) - r))
    _gate("criterion 2: balanced strategy equalizes all downturns", worst <= 1e-9,
          f"max deviation {worst:.2e}")


def test_criterion_3_determinant_identity():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(100):
        params = MarketParams(_draw_bounds(rng), _draw_bounds(rng), int(rng.integers(2, 13)))
        expected = det_K_closed_form(params)
        numeric = float(np.linalg.det(payoff_matrix_K(params)))
        worst = max(worst, abs(numeric - expected) / abs(expected))
    _gate("criterion 3: kernel determinant closed form (100 draws, n <= 12)",
          worst <= 1e-8, f"max relative error {worst:.2e}")


def test_criterion_4_downturns_dominate():
    rng = np.random.default_rng(4)
    worst = -np.inf
    for alpha, beta in [(2.0, 2.0), (TAIPEI_ALPHA, TAIPEI_BETA), (1.5, 3.0)]:
        for n in range(2, 11):
            params = MarketParams(alpha, beta, n)
            extremes = np.array(
                [
                    np.cumprod(choice)
                    for choice in itertools.product([alpha, 1.0 / beta], repeat=n)
                ]
            )
            interior = np.cumprod(rng.uniform(1.0 / beta, alpha, size=(1000, n)), axis=1)
            sequences = np.vstack([extremes, interior])
            best = sequences.max(axis=1)
            strategies = [bal_weights(params), da_weights(n)]
            strategies += [rng.dirichlet(np.ones(n)) for _ in range(20)]
            for weights in strategies:
                bound = static_ratio_via_downturns(weights, params)
                excess = (best / (sequences @ weights)).max() - bound
                worst = max(worst, excess)
    _gate("criterion 4: no admissible sequence beats the downturn bound",
          worst <= 1e-9, f"max excess {worst:.2e}")


def test_criterion_5_perturbed_weights_are_strictly_worse():
    rng = np.random.default_rng(5)
    params = MarketParams(TAIPEI_ALPHA, TAIPEI_BETA, 21)
    base = bal_weights(params)
    r = bal_ratio(params)
    min_margin = np.inf
    for _ in range(100):
        direction = rng.normal(size=params.n)
        direction -= direction.mean()
        direction *= 1e-3 / np.linalg.norm(direction)
        perturbed = base + direction
        assert np.all(perturbed > 0.0)  # interior, so simplex projection is the identity
        min_margin = min(min_margin, static_ratio_via_downturns(perturbed, params) - r)
    _gate("criterion 5: perturbed balanced weights strictly worse (100 draws)",
          min_margin > 1e-10, f"min margin {min_margin:.2e}")


def test_criterion_6_ratio_sweep_reproduction():
    start = time.perf_counter()
    ns = range(2, 101)
    bal = np.array([bal_ratio(MarketParams(TAIPEI_ALPHA, TAIPEI_BETA, n)) for n in ns])
    da = np.array([da_ratio(MarketParams(TAIPEI_ALPHA, TAIPEI_BETA, n)) for n in ns])
    increasing = bool(np.all(np.diff(bal) > 0.0))
    dominated = bool(np.all(bal <= da + 1e-12))
    endpoints = abs(bal[0] - 1.0350) <= 1e-3 and abs(bal[-1] - 4.465) <= 1e-3
    lp_first = solve_game_lp(payoff_matrix_K(MarketParams(TAIPEI_ALPHA, TAIPEI_BETA, 2)))
    lp_last = solve_game_lp(payoff_matrix_K(MarketParams(TAIPEI_ALPHA, TAIPEI_BETA, 100)))
    lp_check = abs(lp_first.ratio - bal[0]) <= 1e-9 and abs(lp_last.ratio - bal[-1]) <= 1e-9
    elapsed = time.perf_counter() - start
    ok = increasing and dominated and endpoints and lp_check and elapsed < 5.0
    _gate(
        "criterion 6: ratio sweep n=2..100 (shape, endpoints, LP cross-check)",
        ok,
        f"ends {bal[0]:.6f}/{bal[-1]:.6f}, {elapsed:.1f}s",
    )


def test_criterion_7_backtest_soundness():
    series = synthetic_prices(TAIPEI_ALPHA, TAIPEI_BETA, months=12, seed=1997)
    report = compare_report(series, TAIPEI_ALPHA, TAIPEI_BETA)
    windows, _ = segment_monthly(series)
    sound = len(report.windows) == 12
    for window, reported in zip(windows, report.windows):
        results = dict(reported.results)
        params = MarketParams(TAIPEI_ALPHA, TAIPEI_BETA, reported.n)
        sound &= results["BAL"].realized_ratio <= bal_ratio(params) + 1e-9
        sound &= results["DA"].realized_ratio <= da_ratio(params) + 1e-9
        last_close = float(window.closes[-1])
        for result in results.values():
            sound &= result.realized_ratio >= 1.0
            sound &= result.violations == ()
            sound &= abs(result.currency_value - result.shares * last_close) <= (
                1e-12 * result.currency_value
            )
    second = compare_report(series, TAIPEI_ALPHA, TAIPEI_BETA)
    identical = report_json(report) == report_json(second) and report_csv(report) == report_csv(second)
    _gate("criterion 7: synthetic-year backtest sound and byte-stable",
          sound and identical, "")


def test_criterion_8_game_core_generic_properties():
    rng = np.random.default_rng(8)
    worst_gap = 0.0
    worst_saddle = 0.0
    for _ in range(500):
        m, n = rng.integers(1, 21, size=2)
        H = rng.uniform(0.1, 5.0, size=(int(m), int(n)))
        lp = solve_primal_dual(H)
        worst_gap = max(worst_gap, abs(lp.primal_objective - lp.dual_objective))
        value = 1.0 / lp.primal_objective
        f = lp.x / lp.x.sum()
        g = lp.y / lp.y.sum()
        worst_saddle = max(
            worst_saddle,
            value - (f @ H).min(),
            (H @ g).max() - value,
        )
    worst_scale = 0.0
    for _ in range(100):
        m, n = rng.integers(1, 13, size=2)
        H = rng.uniform(0.1, 5.0, size=(int(m), int(n)))
        lam = float(rng.uniform(0.2, 4.0))
        base = solve_game_lp(H)
        scaled = solve_game_lp(lam * H)
        worst_scale = max(
            worst_scale,
            abs(scaled.value - lam * base.value),
            np.abs(scaled.online_strategy - base.online_strategy).max(),
            np.abs(scaled.adversary_strategy - base.adversary_strategy).max(),
        )
    ok = worst_gap <= 1e-8 and worst_saddle <= 1e-8 and worst_scale <= 1e-8
    _gate(
        "criterion 8: duality, saddle, and scale covariance on random games",
        ok,
        f"gap {worst_gap:.2e}, saddle {worst_saddle:.2e}, scale {worst_scale:.2e}",
    )
