import logging
from typing import Optional

import click

from app.commands.common import ambient_cap_option, format_option, handle_errors, max_degree_option, run_config
from app.commands.output import render_report
from app.data.models import Verdict
from app.errors import ModelError
from app.services.spectral import STATEMENTS

logger = logging.getLogger(__name__)

LIE_STATEMENTS = ("lie", "differential")


@click.command()
@click.argument("statement", type=click.Choice(sorted(STATEMENTS)))
@click.option("--degree", type=int, required=True, help="Degree n.")
@max_degree_option
@ambient_cap_option
@format_option
@handle_errors
def verify(statement: str, degree: int, max_degree: Optional[int], ambient_cap: Optional[int], output_format: str):
    """
    Run one verification and print its report.

    Exits with 1 when the verdict is fail; the report is printed either way.
    """
    config = run_config(format=output_format, max_degree=max_degree, ambient_cap=ambient_cap)
    if degree < 1:
        raise ModelError(f"degree must be at least 1, got {degree}")
    options = {}
    if max_degree is not None:
        options["degree_cap"] = max_degree
    if statement in LIE_STATEMENTS:
        options["ambient_cap"] = config.ambient_cap
    report = STATEMENTS[statement](degree, **options)
    click.echo(render_report(report, config.format))
    if report.verdict == Verdict.FAIL:
        logger.error(f"verification {statement} failed for n={degree}")
        click.get_current_context().exit(1)
