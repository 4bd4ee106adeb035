import logging
from typing import Optional

import click

from app.commands.common import format_option, handle_errors, max_degree_option, resolve_model, run_config
from app.commands.output import render_record
from app.errors import ModelError
from app.services.spectral import dimension

logger = logging.getLogger(__name__)


@click.command()
@click.option("--model", required=True, help="Quotient model, e.g. chords, feynman, aikn, trees or e2.")
@click.option("--degree", type=int, required=True, help="Degree n.")
@click.option("--k", type=int, default=None, help="Component count for the aikn model (default 1).")
@max_degree_option
@format_option
@handle_errors
def dims(model: str, degree: int, k: Optional[int], max_degree: Optional[int], output_format: str):
    """Dimension of one quotient model in one degree."""
    config = run_config(format=output_format, max_degree=max_degree)
    name = resolve_model(model)
    cap = max_degree or config.diagram_degree_cap
    if degree > cap:
        raise ModelError(f"degree {degree} is above the cap of {cap}; pass --max-degree to raise it")
    if k is not None and name != "AIkn_mod_IHX_STU2_SEP":
        raise ModelError(f"--k only applies to AIkn_mod_IHX_STU2_SEP, not {name}")
    record = dimension(name, degree, k)
    logger.info(f"{name} n={degree}: dim {record.dim}")
    click.echo(render_record(record, config.format))
