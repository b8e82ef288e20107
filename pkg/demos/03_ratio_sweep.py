"""How fast do worst-case ratios grow with the horizon?

Sweeps horizons 2..100 under the Taipei limits, prints a few sample
rows, and writes an SVG with the balanced strategy's ratio (solid)
against dollar averaging (dashed).  The balanced curve grows linearly
with a slope that has a simple closed form.
"""

from buyhold import MarketParams, bal_ratio, da_ratio, preset_bounds
from buyhold.svgchart import line_chart

OUT = "ratio_sweep_taipei.svg"


def main():
    alpha, beta = preset_bounds("taipei")
    ns = range(2, 101)
    bal = [bal_ratio(MarketParams(alpha, beta, n)) for n in ns]
    da = [da_ratio(MarketParams(alpha, beta, n)) for n in ns]

    print("n     balanced    dollar averaging")
    for i, n in enumerate(ns):
        if n in (2, 5, 10, 21, 50, 100):
            print(f"{n:<5d} {bal[i]:<11.6f} {da[i]:.6f}")

    slope = (alpha - 1.0) * (beta - 1.0) / (alpha * beta - 1.0)
    print(f"\nEach extra day costs the balanced strategy exactly {slope:.6f} in ratio.")
    print("Dollar averaging is never better and drifts further behind as n grows.")

    svg = line_chart(
        list(ns),
        [("BAL", bal, False), ("DA", da, True)],
        title="Worst-case ratios under the Taipei limits",
        y_label="competitive ratio",
    )
    with open(OUT, "w", encoding="utf-8") as handle:
        handle.write(svg)
    print(f"chart written to {OUT}")


if __name__ == "__main__":
    main()
