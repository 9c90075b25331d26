import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import typer
from rich.console import Console
from rich.table import Table

from neighborly.certificates import exit_status, write_certificates
from neighborly.errors import WorkbenchError
from neighborly.models.certificate import Certificate

logger = logging.getLogger(__name__)

console = Console(stderr=True)

OUTPUT_HELP = "Write certificates here instead of stdout ('-' for stdout)."
WORKERS_HELP = "Worker processes, capped by NEIGHBORLY_THREADS."
MAX_CASES_HELP = "Stop after this many cases; the certificate is then partial."
MAX_SECONDS_HELP = "Stop after this many seconds; the certificate is then partial."


@contextmanager
def guarded() -> Iterator[None]:
    """Turn workbench errors into a diagnostic and exit status 2."""
    try:
        yield
    except WorkbenchError as exc:
        console.print(f"[bold red]{exc.code.value}[/bold red]: {exc.message}")
        if exc.details:
            logger.debug(f"Error details: {exc.details}")
        raise typer.Exit(code=exc.exit_code)


def summary_table(certificates: List[Certificate]) -> Table:
    table = Table(title="Certificates")
    table.add_column("claim")
    table.add_column("verdict")
    table.add_column("coverage", justify="right")
    table.add_column("ms", justify="right")
    for cert in certificates:
        if not cert.complete:
            verdict = "[yellow]partial[/yellow]"
        elif cert.verified:
            verdict = "[green]verified[/green]"
        else:
            verdict = "[red]refuted[/red]"
        table.add_row(
            cert.claim.value,
            verdict,
            f"{cert.coverage.checked}/{cert.coverage.total}",
            str(cert.runtime_ms),
        )
    return table


def emit(certificates: List[Certificate], output: Optional[Path]) -> None:
    """Write the certificates, show a summary on stderr and exit with the aggregate status."""
    write_certificates(certificates, output)
    console.print(summary_table(certificates))
    raise typer.Exit(code=exit_status(certificates))
