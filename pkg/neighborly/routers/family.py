from pathlib import Path
from typing import Optional

import typer

from neighborly.families import board_certificate, verify_lemma_family
from neighborly.models.family import FamilyParams
from neighborly.routers.common import (
    MAX_CASES_HELP,
    MAX_SECONDS_HELP,
    OUTPUT_HELP,
    WORKERS_HELP,
    emit,
    guarded,
)
from neighborly.utils.formats import parse_model

router = typer.Typer(help="Diagonal chessboard families.", no_args_is_help=True)


def _params(rank: int, k: int, l: Optional[int]) -> FamilyParams:
    return parse_model(FamilyParams, {"r": rank, "k": k, "l": l}, "family parameters")


@router.command("build")
def build(
    rank: int = typer.Option(..., "--rank", help="Number of rows r."),
    k: int = typer.Option(..., "--k", help="Reorientation budget k."),
    l: Optional[int] = typer.Option(None, "--l", help="Phase of the single-block rows (k >= 3)."),
    strict: bool = typer.Option(False, "--strict", help="Use the raw displayed formula."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
):
    """Build the board with its diagonal entry sets."""
    with guarded():
        cert = board_certificate(_params(rank, k, l), strict=strict)
    emit([cert], output)


@router.command("verify")
def verify(
    rank: int = typer.Option(..., "--rank", help="Number of rows r."),
    k: int = typer.Option(..., "--k", help="Reorientation budget k."),
    l: Optional[int] = typer.Option(None, "--l", help="Phase of the single-block rows (k >= 3)."),
    strict: bool = typer.Option(False, "--strict", help="Use the raw displayed formula."),
    mode: str = typer.Option("exhaustive", "--mode", help="exhaustive or sampled."),
    count: Optional[int] = typer.Option(None, "--count", help="Sample size in sampled mode."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed in sampled mode."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
    workers: int = typer.Option(1, "--workers", help=WORKERS_HELP),
    max_cases: Optional[int] = typer.Option(None, "--max-cases", help=MAX_CASES_HELP),
    max_seconds: Optional[float] = typer.Option(None, "--max-seconds", help=MAX_SECONDS_HELP),
):
    """Every realization is cyclic or has a cyclic reorientation of at most k columns."""
    with guarded():
        cert = verify_lemma_family(
            _params(rank, k, l),
            mode=mode,
            count=count,
            seed=seed,
            strict=strict,
            max_cases=max_cases,
            max_seconds=max_seconds,
            workers=workers,
        )
    emit([cert], output)
