"""Backtesting static buy-and-hold plans on daily closing prices.

One plan is run per calendar month: the month's exchange rates are the
reciprocals of its closing prices (deliberately not renormalized; the
realized ratio is scale-invariant), a strategy's weights are generated
for the month's actual trading-day count, and the plan records shares
accumulated, their currency value at the month's last close, the
realized competitive ratio, and any daily moves that violate the
configured return bounds.  Violations are diagnostics: the theory
assumes admissible sequences, and real data (splits, halts) may break
that assumption, so offending windows are reported but still evaluated.
"""

import csv
import io
import json
import os
from dataclasses import dataclass
from datetime import date, timedelta
from typing import Callable

import numpy as np

from .errors import BuyholdError, DuplicateDate, LengthMismatch, NonPositivePrice, ParseError
from .formatting import fmt12, round12
from .market import MarketParams, bal_weights, da_weights
from .svgchart import line_chart

#: Default relative slack when flagging daily bound violations.
VIOLATION_SLACK = 1e-9


@dataclass(frozen=True)
class PriceSeries:
    """Date-sorted daily closing prices.

    ``reordered`` is True when the input rows were not already sorted.
    """

    dates: tuple[date, ...]
    closes: np.ndarray
    reordered: bool = False

    def __post_init__(self):
        self.closes.flags.writeable = False

    def __len__(self) -> int:
        return len(self.dates)


@dataclass(frozen=True)
class PlanWindow:
    """A contiguous one-month slice of a price series."""

    label: str
    dates: tuple[date, ...]
    closes: np.ndarray

    def __post_init__(self):
        self.closes.flags.writeable = False

    def __len__(self) -> int:
        return len(self.dates)

    @property
    def rates(self) -> np.ndarray:
        """Exchange rates: shares per unit of capital, 1/price."""
        return 1.0 / self.closes


@dataclass(frozen=True)
class Violation:
    """A daily rate factor outside the allowed interval.

    ``day`` is the 0-based index (within the window) of the later day of
    the offending step; the interval is ``[1/beta, alpha]`` on the rate
    factor ``e_i / e_{i-1}``.
    """

    day: int
    factor: float
    lo: float
    hi: float


@dataclass(frozen=True)
class PlanResult:
    """Outcome of one strategy on one window."""

    shares: float
    currency_value: float
    realized_ratio: float
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class WindowReport:
    label: str
    n: int
    results: tuple[tuple[str, PlanResult], ...]


@dataclass(frozen=True)
class BacktestReport:
    """Per-window results for every strategy, plus skipped windows."""

    alpha: float
    beta: float
    windows: tuple[WindowReport, ...]
    skipped: tuple[tuple[str, str], ...]


def parse_prices(text: str) -> PriceSeries:
    """Parse ``date,close`` CSV text into a PriceSeries.

    The header must be exactly ``date,close``; dates are ISO-8601 and
    are sorted (with a flag) if they arrive out of order.  Duplicate
    dates and non-positive prices are rejected.
    """
    reader = csv.reader(io.StringIO(text.lstrip("﻿")))
    rows = [(lineno, row) for lineno, row in enumerate(reader, start=1) if row]
    if not rows:
        raise ParseError("empty input", row=1)
    header_line, header = rows[0]
    if [cell.strip() for cell in header] != ["date", "close"]:
        raise ParseError("header must be exactly 'date,close'", row=header_line)
    if len(rows) == 1:
        raise ParseError("no data rows", row=header_line)

    parsed: list[tuple[date, float]] = []
    seen: set[date] = set()
    for lineno, row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", row=lineno)
        try:
            day = date.fromisoformat(row[0].strip())
        except ValueError as exc:
            raise ParseError(f"bad date: {exc}", row=lineno, column=1) from None
        try:
            close = float(row[1])
        except ValueError:
            raise ParseError(f"bad price {row[1]!r}", row=lineno, column=2) from None
        if not np.isfinite(close) or close <= 0.0:
            raise NonPositivePrice(f"price {close:g} must be positive", row=lineno, column=2)
        if day in seen:
            raise DuplicateDate(f"duplicate date {day.isoformat()}", row=lineno, column=1)
        seen.add(day)
        parsed.append((day, close))

    ordered = sorted(parsed)
    reordered = ordered != parsed
    return PriceSeries(
        dates=tuple(day for day, _ in ordered),
        closes=np.array([close for _, close in ordered]),
        reordered=reordered,
    )


def load_prices(source) -> PriceSeries:
    """Load a price CSV from a path, file object, bytes, or text."""
    if hasattr(source, "read"):
        data = source.read()
    elif isinstance(source, bytes):
        data = source
    else:
        with open(os.fspath(source), "rb") as handle:
            data = handle.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return parse_prices(data)


def segment_monthly(series: PriceSeries, min_days: int = 2):
    """Split a series into calendar-month windows.

    Returns ``(windows, skipped)`` where skipped lists ``(label,
    reason)`` for months with fewer than ``min_days`` trading days.
    """
    if len(series) == 0:
        raise LengthMismatch("price series is empty")
    windows: list[PlanWindow] = []
    skipped: list[tuple[str, str]] = []
    start = 0
    for i in range(1, len(series) + 1):
        boundary = i == len(series) or (
            (series.dates[i].year, series.dates[i].month)
            != (series.dates[start].year, series.dates[start].month)
        )
        if not boundary:
            continue
        label = f"{series.dates[start].year:04d}-{series.dates[start].month:02d}"
        if i - start >= min_days:
            windows.append(
                PlanWindow(
                    label=label,
                    dates=series.dates[start:i],
                    closes=series.closes[start:i].copy(),
                )
            )
        else:
            skipped.append((label, f"only {i - start} trading day(s)"))
        start = i
    return windows, skipped


def find_violations(rates, alpha: float, beta: float, slack: float = VIOLATION_SLACK):
    """Daily steps whose rate factor leaves ``[1/beta, alpha]``.

    The comparison is widened by the relative ``slack``; the reported
    interval is the unwidened one.
    """
    e = np.asarray(rates, dtype=float).ravel()
    lo, hi = 1.0 / beta, alpha
    out = []
    for i in range(1, e.shape[0]):
        factor = e[i] / e[i - 1]
        if factor < lo * (1.0 - slack) or factor > hi * (1.0 + slack):
            out.append(Violation(day=i, factor=float(factor), lo=lo, hi=hi))
    return tuple(out)


def run_plan(
    weights_for: Callable[[int], np.ndarray],
    window: PlanWindow,
    alpha: float,
    beta: float,
    slack: float = VIOLATION_SLACK,
) -> PlanResult:
    """Execute one strategy on one window.

    ``weights_for`` maps the window's trading-day count to the daily
    capital fractions.  Rates are the raw price reciprocals: shares are
    the weighted sum of rates, the currency value converts them at the
    final close, and the realized ratio compares the best single-day
    rate with the plan's accumulation.
    """
    weights = np.asarray(weights_for(len(window)), dtype=float).ravel()
    if weights.shape[0] != len(window):
        raise LengthMismatch(
            f"strategy produced {weights.shape[0]} weights for a {len(window)}-day window"
        )
    rates = window.rates
    shares = float(weights @ rates)
    return PlanResult(
        shares=shares,
        currency_value=shares * float(window.closes[-1]),
        realized_ratio=float(rates.max()) / shares,
        violations=find_violations(rates, alpha, beta, slack=slack),
    )


def bal_generator(alpha: float, beta: float) -> Callable[[int], np.ndarray]:
    """Balanced-strategy weights for a given horizon length."""
    return lambda n: bal_weights(MarketParams(alpha=alpha, beta=beta, n=n))


def da_generator() -> Callable[[int], np.ndarray]:
    """Dollar-averaging weights for a given horizon length."""
    return da_weights


def compare_report(
    series: PriceSeries,
    alpha: float,
    beta: float,
    strategies=None,
    slack: float = VIOLATION_SLACK,
) -> BacktestReport:
    """Run every named strategy on every monthly window.

    ``strategies`` is a list of ``(name, weights_for)`` pairs and
    defaults to the balanced strategy and dollar averaging.  Per-window
    failures are recorded as skips rather than aborting the report; the
    output ordering is fixed by window date, so identical inputs yield
    identical reports.
    """
    if strategies is None:
        strategies = [("BAL", bal_generator(alpha, beta)), ("DA", da_generator())]
    if not strategies:
        raise ValueError("at least one strategy is required")
    windows, skipped = segment_monthly(series)
    skipped = list(skipped)
    reports = []
    for window in windows:
        results = []
        for name, weights_for in strategies:
            try:
                results.append((name, run_plan(weights_for, window, alpha, beta, slack=slack)))
            except (BuyholdError, ValueError, ZeroDivisionError) as exc:
                skipped.append((f"{window.label}/{name}", str(exc)))
        reports.append(WindowReport(label=window.label, n=len(window), results=tuple(results)))
    return BacktestReport(
        alpha=alpha, beta=beta, windows=tuple(reports), skipped=tuple(skipped)
    )


def synthetic_prices(
    alpha: float,
    beta: float,
    months: int = 12,
    seed: int = 0,
    start: date = date(1997, 1, 1),
    initial_price: float = 100.0,
) -> PriceSeries:
    """Seeded admissible price series over weekday trading days.

    Each day's rate factor is drawn uniformly from ``[1/beta, alpha]``,
    so every step (within and across months) respects the bounds; the
    price moves by the reciprocal factor.
    """
    if months < 1:
        raise ValueError("months must be >= 1")
    first_month = (start.year, start.month)
    dates = []
    day = start
    while True:
        month_index = (day.year - first_month[0]) * 12 + (day.month - first_month[1])
        if month_index >= months:
            break
        if day.weekday() < 5:
            dates.append(day)
        day += timedelta(days=1)
    rng = np.random.default_rng(seed)
    factors = rng.uniform(1.0 / beta, alpha, size=len(dates) - 1)
    closes = np.empty(len(dates))
    closes[0] = initial_price
    for i, factor in enumerate(factors):
        closes[i + 1] = closes[i] / factor
    return PriceSeries(dates=tuple(dates), closes=closes)


def series_csv(series: PriceSeries) -> str:
    """Render a PriceSeries in the input CSV format."""
    lines = ["date,close"]
    for day, close in zip(series.dates, series.closes):
        lines.append(f"{day.isoformat()},{fmt12(close)}")
    return "\n".join(lines) + "\n"


def report_json(report: BacktestReport) -> str:
    """Render a report as JSON with 12-significant-digit numbers."""
    payload = {
        "params": {"alpha": round12(report.alpha), "beta": round12(report.beta)},
        "windows": [
            {
                "label": window.label,
                "n": window.n,
                "strategies": [
                    {
                        "name": name,
                        "shares": round12(result.shares),
                        "currency_value": round12(result.currency_value),
                        "realized_ratio": round12(result.realized_ratio),
                        "violations": [
                            {
                                "day": v.day,
                                "factor": round12(v.factor),
                                "min": round12(v.lo),
                                "max": round12(v.hi),
                            }
                            for v in result.violations
                        ],
                    }
                    for name, result in window.results
                ],
            }
            for window in report.windows
        ],
        "skipped": [{"window": label, "reason": reason} for label, reason in report.skipped],
    }
    return json.dumps(payload, indent=2) + "\n"


def report_csv(report: BacktestReport) -> str:
    """Flatten a report to one CSV row per (window, strategy)."""
    lines = ["window,n,strategy,shares,currency_value,realized_ratio,violations"]
    for window in report.windows:
        for name, result in window.results:
            lines.append(
                ",".join(
                    [
                        window.label,
                        str(window.n),
                        name,
                        fmt12(result.shares),
                        fmt12(result.currency_value),
                        fmt12(result.realized_ratio),
                        str(len(result.violations)),
                    ]
                )
            )
    return "\n".join(lines) + "\n"


def report_svg(report: BacktestReport) -> str:
    """Line chart of realized ratios per window, one series per strategy."""
    labels = [window.label for window in report.windows]
    names: list[str] = []
    for window in report.windows:
        for name, _ in window.results:
            if name not in names:
                names.append(name)
    series = []
    for idx, name in enumerate(names):
        values = []
        for window in report.windows:
            found = dict(window.results).get(name)
            values.append(found.realized_ratio if found is not None else None)
        series.append((name, values, idx % 2 == 1))
    return line_chart(
        labels, series, title="Realized competitive ratios", y_label="ratio"
    )
