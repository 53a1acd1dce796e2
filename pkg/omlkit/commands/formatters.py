"""Display formatting utilities for CLI output.

Rich renderables for the text mode of ``laws`` and ``mge``, and the batch
summary written to standard error.
"""

# Standard library
from typing import Any

# Third-party
from rich.panel import Panel
from rich.table import Table


class LawFormatter:
    """Formatter for law verification reports."""

    @staticmethod
    def format_law_table(key: str, checks: list[dict[str, Any]]) -> Table:
        """Create a rich table with one row per law.

        Args:
            key: Report key (``L<line>``) used in the title.
            checks: ``{"law", "passed", "counterexample"}`` dictionaries in check order.

        Returns:
            Rich Table object
        """
        failed = sum(not check["passed"] for check in checks)
        title = f"{key}: {len(checks) - failed}/{len(checks)} laws hold"
        table = Table(title=title, show_header=True)

        table.add_column("Law", style="cyan", no_wrap=True)
        table.add_column("Result")
        table.add_column("First counterexample", style="yellow")

        for check in checks:
            result = "[green]pass[/green]" if check["passed"] else "[bold red]FAIL[/bold red]"
            counterexample = ", ".join(check["counterexample"] or ()) or "-"
            table.add_row(check["law"], result, counterexample)

        return table


class MgeFormatter:
    """Formatter for synthesized equations."""

    @staticmethod
    def format_mge_panel(key: str, fields: dict[str, Any]) -> Panel:
        """Format an MGE report as a rich panel.

        Args:
            key: Report key (``L<line>``).
            fields: Report fields of an ``mge`` verdict.

        Returns:
            Rich Panel with the pair, the weakening, both condensed forms,
            the MGE and its witness
        """
        witness = ", ".join(f"{name}={label}" for name, label in fields["witness"].items())
        lines = [
            f"[cyan]pair[/cyan]       {fields['pair']}",
            f"[cyan]weakened[/cyan]   {', '.join(fields['weakened']) or '-'}",
            f"[cyan]kept[/cyan]       {', '.join(fields['kept']) or '-'}",
            f"[cyan]atoms[/cyan]      {fields['atoms']}",
            f"[cyan]condensed[/cyan]  [bold]{fields['condensed']}[/bold]",
            f"[cyan]mge[/cyan]        {fields['mge']}",
            f"[cyan]witness[/cyan]    {witness}",
            f"[cyan]corpus[/cyan]     holds on {len(fields['corpus'])} lattices",
        ]
        return Panel("\n".join(lines), title=f"{key}: MGE", border_style="green")


class BatchFormatter:
    """Formatter for end-of-batch statistics."""

    @staticmethod
    def format_summary(metrics: dict[str, Any]) -> str:
        """One-line batch summary from ``MetricsObserver`` metrics.

        Examples:
            >>> BatchFormatter.format_summary({"lattices_processed": 3, "lattices_rejected": 1})
            '4 lattices: 3 processed, 1 rejected'
        """
        processed = metrics.get("lattices_processed", 0)
        rejected = metrics.get("lattices_rejected", 0)
        return f"{processed + rejected} lattices: {processed} processed, {rejected} rejected"
