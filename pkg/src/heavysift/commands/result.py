"""Shape every subcommand returns, plus shared report conversions."""

from dataclasses import dataclass
from dataclasses import field
from typing import Any

from heavysift.core.trace import DeficitTrace
from heavysift.core.trace import HeavinessReport

BEYOND_HORIZON = 'beyond-horizon'


@dataclass
class CommandResult:
    """Report, its row view for CSV, and whether every checked claim held.

    Attributes:
        report: Full report, mirrored field for field by JSON and TOON output
        rows: Row view used for CSV output
        columns: CSV column order
        ok: False when a certificate or cross-check failed (exit status 1)
        default_format: Format used when neither --format nor the config picks one
    """

    report: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    columns: tuple[str, ...] = ()
    ok: bool = True
    default_format: str = 'json'


def psi_label(value: int | None) -> int | str:
    """ψ for output: the failure time, or 'beyond-horizon'."""
    return BEYOND_HORIZON if value is None else value


def heaviness_dict(report: HeavinessReport) -> dict[str, Any]:
    return {
        'horizon': report.horizon,
        'psi': psi_label(report.psi),
        'heavy': report.heavy,
        'min_deficit': report.min_deficit,
        'argmin_time': report.argmin_time,
        'zero_times': list(report.zero_times),
        'sign_changes': report.sign_changes,
        'numerical': report.numerical,
    }


def trace_rows(trace: DeficitTrace) -> list[dict[str, Any]]:
    return [{'n': n, 'deficit': trace.at(n)} for n in trace.indices()]


def trace_dict(trace: DeficitTrace) -> dict[str, Any]:
    return {
        'start': trace.start,
        'horizon': trace.horizon,
        'numeric_mode': trace.numeric_mode,
        'tolerance': trace.tolerance if not trace.exact else None,
        'deficits': list(trace.deficits),
    }
