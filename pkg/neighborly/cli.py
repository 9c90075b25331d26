import logging
from typing import Optional

import typer
from rich.logging import RichHandler

from neighborly.config import NEIGHBORLY_LOG_LEVEL
from neighborly.routers import bounds, family, geometry, replay, travel, verify
from neighborly.routers.common import console

app = typer.Typer(
    name="neighborly",
    help="Exact verification workbench for neighbourly projective images and k-divisible partitions.",
    no_args_is_help=True,
)

app.add_typer(verify.router, name="verify")
app.add_typer(family.router, name="family")
app.command("travel")(travel.travel_command)
app.command("gale")(geometry.gale_command)
app.command("divide")(geometry.divide_command)
app.command("neighbourly")(geometry.neighbourly_command)
app.command("signflip")(geometry.signflip_command)
app.command("projective")(geometry.projective_command)
app.command("bounds")(bounds.bounds_command)
app.command("replay")(replay.replay_command)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Overrides NEIGHBORLY_LOG_LEVEL."),
):
    # Configure logging
    logging.basicConfig(
        level=(log_level or NEIGHBORLY_LOG_LEVEL).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=True)],
    )


if __name__ == "__main__":
    app()
