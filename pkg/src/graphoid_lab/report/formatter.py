"""
Result formatter for Graphoid Lab

Machine-readable JSON goes to stdout; human summary tables are rendered with
rich on stderr.
"""

import json
import sys
from typing import Any, Dict, Iterable, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..analysis.unrelatedness import ModelAnalysis
from ..experiments.models import ExperimentReport
from ..utils.logging import get_logger

logger = get_logger(__name__)


def to_json(data: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent"""
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def _mark(value: bool) -> str:
    return "[green]yes[/green]" if value else "[red]no[/red]"


class ReportFormatter:
    """Formats results for stdout and stderr"""

    def __init__(self, config, json_only: bool = False, console: Optional[Console] = None):
        """
        Initialize report formatter

        Args:
            config: Configuration manager
            json_only: Suppress the stderr tables
            console: Console for the tables (defaults to stderr)
        """
        self.config = config
        self.output_config = config.get('output', {})
        self.color_output = self.output_config.get('color', True)
        self.json_only = json_only

        self.console = console or Console(
            stderr=True,
            color_system="auto" if self.color_output else None,
            force_terminal=True if sys.stderr.isatty() else False,
        )

    def emit(self, data: Any) -> str:
        """JSON text for stdout"""
        return to_json(data)

    def show(self, renderable) -> None:
        if not self.json_only:
            self.console.print(renderable)

    def verdict(self, title: str, holds: bool, rows: Optional[Dict[str, Any]] = None) -> None:
        """One-line verdict panel with optional key/value rows"""
        if self.json_only:
            return
        table = Table(show_header=False, box=None, padding=(0, 1))
        table.add_column("Field", style="bold")
        table.add_column("Value")
        table.add_row("Holds", _mark(holds))
        for key, value in (rows or {}).items():
            table.add_row(key, str(value))
        style = "green" if holds else "red"
        self.show(Panel(table, title=title, border_style=style))

    def analysis_table(self, analysis: ModelAnalysis) -> None:
        """Pair verdicts plus the model flags"""
        if self.json_only:
            return
        names = analysis.universe.names
        table = Table(show_header=True, header_style="bold magenta", title="Unrelatedness")
        table.add_column("Pair", style="cyan")
        table.add_column("Independent", justify="center")
        table.add_column("Uncoupled", justify="center")
        table.add_column("Disconnected", justify="center")
        table.add_column("Witness")
        for verdict in analysis.verdicts:
            witness = ""
            if verdict.witness:
                witness = " | ".join(analysis.universe.format(part) for part in verdict.witness)
            table.add_row(
                f"{names[verdict.a]}, {names[verdict.b]}",
                _mark(verdict.totally_independent),
                _mark(verdict.totally_uncoupled),
                _mark(verdict.totally_disconnected),
                witness,
            )
        self.show(table)
        self.show(
            f"Transitive: {_mark(analysis.transitivity.transitive)}   "
            f"Separable: {_mark(analysis.separability.separable)}"
        )

    def network_table(self, names: Iterable[str], parents: Dict[str, Iterable[str]], title: str) -> None:
        if self.json_only:
            return
        table = Table(show_header=True, header_style="bold magenta", title=title)
        table.add_column("Node", style="cyan")
        table.add_column("Parents")
        for name in names:
            table.add_row(name, ", ".join(parents.get(name, [])) or "-")
        self.show(table)

    def experiment_table(self, report: ExperimentReport) -> None:
        """Per-trial summary of an experiment run"""
        if self.json_only:
            return
        table = Table(show_header=True, header_style="bold magenta",
                      title=f"Suite {report.suite}" + (" (exploratory)" if report.exploratory else ""))
        table.add_column("Trial", justify="right")
        table.add_column("Seed", justify="right")
        table.add_column("Fixture", style="cyan")
        table.add_column("Checks", justify="right")
        table.add_column("Hits", justify="right")
        table.add_column("Skipped", justify="right")
        table.add_column("Pass", justify="center")
        for trial in report.trials:
            table.add_row(
                str(trial.index), str(trial.seed), trial.fixture, str(trial.checks),
                str(trial.antecedent_hits), str(trial.skipped_instances), _mark(trial.passed),
            )
        self.show(table)

        summary = Table(show_header=False, box=None, padding=(0, 1))
        summary.add_column("Metric", style="bold")
        summary.add_column("Value", justify="right")
        summary.add_row("Trials", str(len(report.trials)))
        summary.add_row("Failed", str(len(report.failed_trials)))
        summary.add_row("Checks", str(report.total_checks))
        summary.add_row("Antecedent hits", str(report.antecedent_hits))
        summary.add_row("Skipped instances", str(report.skipped_instances))
        summary.add_row("Wall time", f"{report.wall_time:.2f}s")
        self.show(Panel(summary, title="Summary", border_style="green" if report.passed else "red"))
