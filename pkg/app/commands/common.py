import functools
import logging

import click
from pydantic import ValidationError

from app.data.models import OutputFormat, RunConfig
from app.errors import AlgebraError, DiagramSyntaxError, ModelError
from setup.config import build_config

logger = logging.getLogger(__name__)

MODEL_ALIASES = {
    "chords": "chords_mod_4T_SEP",
    "feynman": "feynman_mod_STU_SEP",
    "aikn": "AIkn_mod_IHX_STU2_SEP",
    "trees": "barAI1n_mod_IHX",
    "e2": "e2_antidiagonal",
}

format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.JSON.value,
    show_default=True,
    help="Output format.",
)
max_degree_option = click.option(
    "--max-degree", type=int, default=None, help="Largest degree to compute; also raises the degree cap."
)
ambient_cap_option = click.option(
    "--ambient-cap", type=int, default=None, help="Largest number of Lie monomials in one component."
)


def resolve_model(name: str) -> str:
    """Accepts a full model name or one of its short aliases."""
    full_names = set(MODEL_ALIASES.values())
    if name in full_names:
        return name
    if name.lower() in MODEL_ALIASES:
        return MODEL_ALIASES[name.lower()]
    raise ModelError(f"unknown model {name!r}; expected one of {sorted(full_names)} or {sorted(MODEL_ALIASES)}")


def run_config(**flags) -> RunConfig:
    try:
        return build_config(**flags)
    except ValidationError as e:
        raise click.UsageError(f"invalid option: {e.errors()[0]['loc'][0]} {e.errors()[0]['msg']}")


def handle_errors(command):
    """
    Converts service errors into exit codes at the command boundary.

    Model and syntax errors are usage errors (exit 2); any other algebra error
    aborts the command with exit 1.
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ModelError, DiagramSyntaxError) as e:
            logger.error(f"rejected arguments: {e}")
            raise click.UsageError(str(e))
        except AlgebraError as e:
            logger.error(f"{command.__name__} failed: {e}", exc_info=True)
            raise click.ClickException(str(e))

    return wrapper
