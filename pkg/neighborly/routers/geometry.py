from pathlib import Path
from typing import Optional

import typer

from neighborly.geometry.divisibility import is_k_divisible, is_s_k_divisible
from neighborly.geometry.gale import gale_certificate, gale_inverse_certificate
from neighborly.geometry.projective import (
    neighbourly_certificate,
    projective_certificate,
    sign_flip_certificate,
)
from neighborly.routers.common import (
    MAX_CASES_HELP,
    MAX_SECONDS_HELP,
    OUTPUT_HELP,
    WORKERS_HELP,
    emit,
    guarded,
)
from neighborly.utils.formats import read_points, read_signs, read_vectors

POINTS_HELP = 'JSON array of points, coordinates as "p/q" strings.'


def gale_command(
    points: Path = typer.Option(..., "--points", help=POINTS_HELP),
    invert: bool = typer.Option(False, "--invert", help="Read Gale vectors and recover points."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Gale transform of a configuration, or a configuration from its Gale vectors."""
    with guarded():
        if invert:
            cert = gale_inverse_certificate(read_vectors(points))
        else:
            cert = gale_certificate(read_points(points))
    emit([cert], output)


def divide_command(
    points: Path = typer.Option(..., "--points", help=POINTS_HELP),
    k: int = typer.Option(..., "--k", help="Number of points removed."),
    s: int = typer.Option(2, "--s", help="Number of blocks."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
    workers: int = typer.Option(1, "--workers", help=WORKERS_HELP),
    max_cases: Optional[int] = typer.Option(None, "--max-cases", help=MAX_CASES_HELP),
    max_seconds: Optional[float] = typer.Option(None, "--max-seconds", help=MAX_SECONDS_HELP),
):
    """Search for a partition whose hulls meet after any k removals."""
    with guarded():
        x = read_points(points)
        if s == 2:
            cert = is_k_divisible(x, k, max_cases=max_cases, max_seconds=max_seconds, workers=workers)
        else:
            cert = is_s_k_divisible(x, s, k, cap=max_cases, max_seconds=max_seconds, workers=workers)
    emit([cert], output)


def neighbourly_command(
    points: Path = typer.Option(..., "--points", help=POINTS_HELP),
    k: int = typer.Option(..., "--k", help="Required elements of each sign per circuit."),
    strict: bool = typer.Option(False, "--strict", help="Require k+1, so every k-set spans a face."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Check k-neighbourliness through the Radon circuits."""
    with guarded():
        cert = neighbourly_certificate(read_points(points), k, strict)
    emit([cert], output)


def signflip_command(
    points: Path = typer.Option(..., "--points", help=POINTS_HELP),
    k: int = typer.Option(..., "--k", help="Number of Gale vectors removed."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Find a sign flip of the Gale diagram and check the projective image."""
    with guarded():
        cert = sign_flip_certificate(read_points(points), k)
    emit([cert], output)


def projective_command(
    points: Path = typer.Option(..., "--points", help=POINTS_HELP),
    signs: Path = typer.Option(..., "--signs", help='Sign file: "+-+" or a JSON array of +1/-1.'),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Build a permissible projective map with the given denominator signs."""
    with guarded():
        cert = projective_certificate(read_points(points), read_signs(signs))
    emit([cert], output)
