"""Report Writer - canonical JSON files and console summaries of experiment reports."""
import logging
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table

from ..models.report import ExperimentReport, ReportStatus

logger = logging.getLogger(__name__)

_STATUS_STYLE = {
    ReportStatus.PASS: "bold green",
    ReportStatus.FAIL: "bold red",
    ReportStatus.INCONCLUSIVE: "bold yellow",
    ReportStatus.ERROR: "bold magenta",
}

# outputs longer than this are summarised in the console table
_MAX_CELL = 80


def write_report_json(report: ExperimentReport, path: str | Path) -> Path:
    """
    Write the canonical JSON of a report.

    Args:
        report: Finished experiment report
        path: Destination file; parent directories are created

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.canonical_json() + "\n")
    logger.info("wrote %s report to %s", report.experiment, path)
    return path


def _cell(value: Any) -> str:
    text = str(value)
    if len(text) <= _MAX_CELL:
        return text
    if isinstance(value, list) and value and isinstance(value[0], list):
        return f"<{len(value)}x{len(value[0])} matrix>"
    return text[: _MAX_CELL - 3] + "..."


def render_report(report: ExperimentReport, console: Console | None = None) -> None:
    """Print a human summary: outputs, verdicts and the final status."""
    console = console or Console()
    style = _STATUS_STYLE[report.status]
    console.print(f"[bold]{report.experiment}[/bold]  status: [{style}]{report.status.value}[/{style}]")
    if report.message:
        console.print(f"  {report.message}")

    if report.outputs:
        outputs = Table(title="Outputs", show_header=True)
        outputs.add_column("name")
        outputs.add_column("value")
        for name, value in report.outputs.items():
            outputs.add_row(name, _cell(value))
        console.print(outputs)

    if report.verdicts:
        verdicts = Table(title="Verdicts", show_header=True)
        verdicts.add_column("check")
        verdicts.add_column("expected")
        verdicts.add_column("observed")
        verdicts.add_column("result")
        for v in report.verdicts:
            mark = "[green]pass[/green]" if v.passed else "[red]fail[/red]"
            verdicts.add_row(v.name, _cell(v.expected), _cell(v.observed), mark)
        console.print(verdicts)
    console.print(f"duration: {report.duration_seconds:.3f}s")
