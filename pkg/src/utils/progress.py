from typing import Optional

from rich.console import Console
from rich.live import Live
from rich.style import Style
from rich.table import Table
from rich.text import Text

from .analyzers import ANALYZER_CONFIG, display_name

console = Console(stderr=True)

SYMBOLS = {
    "done": ("✓", Style(color="green", bold=True)),
    "error": ("✗", Style(color="red", bold=True)),
}
PENDING = ("⋯", Style(color="yellow"))


class AnalyzerProgress:
    """Live status table of the analyzers working on a graph, drawn on stderr."""

    def __init__(self):
        self.analyzer_status: dict[str, dict[str, Optional[str]]] = {}
        self.table = self._build_table()
        self.live = Live(self.table, console=console, refresh_per_second=4)
        self.started = False

    def start(self):
        if not self.started:
            self.live.start()
            self.started = True

    def stop(self):
        if self.started:
            self.live.stop()
            self.started = False

    def update_status(self, analyzer_name: str, graph_name: Optional[str] = None, status: str = ""):
        """Record what ``analyzer_name`` is doing; empty values keep the previous ones."""
        info = self.analyzer_status.setdefault(analyzer_name, {"status": "", "graph": None})
        if graph_name:
            info["graph"] = graph_name
        if status:
            info["status"] = status
        self._refresh_display()

    def _build_table(self) -> Table:
        table = Table(show_header=False, box=None, padding=(0, 1))
        table.add_column(width=100)
        # report order; analyzers outside the report go last
        ordered = sorted(
            self.analyzer_status.items(),
            key=lambda item: (ANALYZER_CONFIG.get(item[0], {}).get("order", len(ANALYZER_CONFIG)), item[0]),
        )
        for analyzer_name, info in ordered:
            status = info["status"] or ""
            symbol, style = SYMBOLS.get(status.lower(), PENDING)
            line = Text()
            line.append(f"{symbol} ", style=style)
            line.append(f"{display_name(analyzer_name):<30}", style=Style(bold=True))
            if info["graph"]:
                line.append(f"[{info['graph']}] ", style=Style(color="cyan"))
            line.append(status, style=style)
            table.add_row(line)
        return table

    def _refresh_display(self):
        self.table = self._build_table()
        self.live.update(self.table)


progress = AnalyzerProgress()
