from pathlib import Path
from typing import Optional

import typer

from neighborly.errors import InputError
from neighborly.models.travel import TravelKind
from neighborly.oracles import travel_certificate
from neighborly.routers.common import OUTPUT_HELP, emit, guarded
from neighborly.utils.formats import read_matrix


def travel_command(
    matrix: Path = typer.Option(..., "--matrix", help="Sign matrix file, one line of +/- per row."),
    kind: str = typer.Option("top", "--kind", help="top, bottom or plain."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Compute a travel of one sign matrix."""
    with guarded():
        try:
            travel_kind = TravelKind(kind)
        except ValueError:
            raise InputError(f"Unknown travel kind {kind!r}; use top, bottom or plain")
        cert = travel_certificate(read_matrix(matrix), travel_kind)
    emit([cert], output)
