"""Locale-independent number formatting shared by reports and the CLI."""


def fmt12(value: float) -> str:
    """Format a number with 12 significant digits."""
    return format(float(value), ".12g")


def round12(value: float) -> float:
    """Round to 12 significant digits (for emitting JSON numbers)."""
    return float(fmt12(value))
