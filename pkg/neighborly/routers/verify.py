from pathlib import Path
from typing import Optional

import typer

from neighborly.oracles import verify_prop_llom, verify_prop_pt
from neighborly.routers.common import (
    MAX_CASES_HELP,
    MAX_SECONDS_HELP,
    OUTPUT_HELP,
    WORKERS_HELP,
    emit,
    guarded,
)

router = typer.Typer(help="Check the travel propositions against circuit enumeration.", no_args_is_help=True)


@router.command("prop-llom")
def prop_llom(
    rank: int = typer.Option(..., "--rank", help="Number of rows r."),
    cols: int = typer.Option(..., "--cols", help="Number of columns n."),
    mode: str = typer.Option("exhaustive", "--mode", help="exhaustive or sampled."),
    count: Optional[int] = typer.Option(None, "--count", help="Sample size in sampled mode."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed in sampled mode."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
    workers: int = typer.Option(1, "--workers", help=WORKERS_HELP),
    max_cases: Optional[int] = typer.Option(None, "--max-cases", help=MAX_CASES_HELP),
    max_seconds: Optional[float] = typer.Option(None, "--max-seconds", help=MAX_SECONDS_HELP),
):
    """Travel cyclicity verdict versus positive-circuit search."""
    with guarded():
        cert = verify_prop_llom(rank, cols, mode, count, seed, max_cases, max_seconds, workers)
    emit([cert], output)


@router.command("prop-pt")
def prop_pt(
    rank: int = typer.Option(..., "--rank", help="Number of rows r."),
    cols: int = typer.Option(..., "--cols", help="Number of columns n."),
    mode: str = typer.Option("exhaustive", "--mode", help="exhaustive or sampled."),
    count: Optional[int] = typer.Option(None, "--count", help="Sample size in sampled mode."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed in sampled mode."),
    output: Optional[Path] = typer.Option(None, "--output", help=OUTPUT_HELP),
    workers: int = typer.Option(1, "--workers", help=WORKERS_HELP),
    max_cases: Optional[int] = typer.Option(None, "--max-cases", help=MAX_CASES_HELP),
    max_seconds: Optional[float] = typer.Option(None, "--max-seconds", help=MAX_SECONDS_HELP),
):
    """Plain travels versus acyclic reorientation classes."""
    with guarded():
        cert = verify_prop_pt(rank, cols, mode, count, seed, max_cases, max_seconds, workers)
    emit([cert], output)
