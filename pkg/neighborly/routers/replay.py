from pathlib import Path

import typer
from rich.table import Table

from neighborly.certificates import read_certificates
from neighborly.replay import replay
from neighborly.routers.common import console, guarded


def replay_command(
    cert: Path = typer.Argument(..., help="Certificate file, one JSON object per line."),
):
    """Re-verify certificates from their embedded witnesses. Exit 0 iff every one replays."""
    with guarded():
        certificates = read_certificates(cert)
        results = [replay(c) for c in certificates]
    table = Table(title=f"Replay of {cert}")
    table.add_column("#", justify="right")
    table.add_column("claim")
    table.add_column("recorded")
    table.add_column("replay")
    for index, (c, ok) in enumerate(zip(certificates, results), start=1):
        table.add_row(
            str(index),
            c.claim.value,
            "verified" if c.verified else "not verified",
            "[green]ok[/green]" if ok else "[red]FAILED[/red]",
        )
    console.print(table)
    raise typer.Exit(code=0 if all(results) else 1)
