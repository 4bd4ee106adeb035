import asyncio
import difflib
import logging
from pathlib import Path
from typing import Optional

import click

from app.commands.common import format_option, handle_errors, max_degree_option, run_config
from app.commands.output import render_records, render_snapshot
from app.data.models import OutputFormat
from app.services.spectral import dimension_table

logger = logging.getLogger(__name__)


@click.command()
@max_degree_option
@format_option
@handle_errors
def table(max_degree: Optional[int], output_format: str):
    """Dimensions of every model for degrees 1..max-degree."""
    config = run_config(format=output_format, max_degree=max_degree)
    records = asyncio.run(dimension_table(config.max_degree))
    click.echo(render_records(records, config.format))


@click.command()
@click.argument("path", type=click.Path(dir_okay=False))
@max_degree_option
@format_option
@handle_errors
def snapshot(path: str, max_degree: Optional[int], output_format: str):
    """
    Write the dimension table to PATH, or compare against it if it exists.

    A mismatch prints a unified diff and exits with 1.
    """
    config = run_config(format=output_format, max_degree=max_degree, snapshot=path)
    if config.format == OutputFormat.TEXT:
        raise click.UsageError("snapshots are written as json or csv")
    records = asyncio.run(dimension_table(config.max_degree))
    current = render_snapshot(records, config.format)
    target = Path(path)
    if not target.exists():
        target.write_text(current)
        logger.info(f"snapshot written to {target} ({len(records)} rows)")
        click.echo(f"wrote {target}")
        return
    stored = target.read_text()
    if stored == current:
        click.echo(f"{target} matches")
        return
    diff = difflib.unified_diff(
        stored.splitlines(keepends=True), current.splitlines(keepends=True), fromfile=str(target), tofile="computed"
    )
    click.echo("".join(diff), nl=False)
    logger.error(f"snapshot {target} does not match the computed table")
    click.get_current_context().exit(1)
