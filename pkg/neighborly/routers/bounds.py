from pathlib import Path
from typing import Optional

import typer

from neighborly.bounds import bounds_certificate
from neighborly.routers.common import OUTPUT_HELP, emit, guarded
from neighborly.utils.formats import read_bound_table


def bounds_command(
    table: Path = typer.Option(..., "--table", help="JSON list of bound records."),
    max_d: Optional[int] = typer.Option(None, "--max-d", help="Largest d to derive nu bounds for."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Propagate a table of known bounds through the index relations."""
    with guarded():
        cert = bounds_certificate(read_bound_table(table), max_d)
    emit([cert], output)
