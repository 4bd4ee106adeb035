"""
Run configuration. Every setting comes from command-line flags; there is no
environment layer so that a command line alone fixes the output.
"""
import logging

from app.data.models import RunConfig

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 4
DEFAULT_AMBIENT_CAP = 200_000
DEFAULT_DIAGRAM_DEGREE_CAP = 5
DEFAULT_VERIFY_DEGREE_CAP = 4


def build_config(**flags) -> RunConfig:
    """Defaults overlaid with every flag that was actually given."""
    settings = {
        'max_degree': DEFAULT_MAX_DEGREE,
        'ambient_cap': DEFAULT_AMBIENT_CAP,
        'diagram_degree_cap': DEFAULT_DIAGRAM_DEGREE_CAP,
        'verify_degree_cap': DEFAULT_VERIFY_DEGREE_CAP,
    }
    settings.update({name: value for name, value in flags.items() if value is not None})
    run_config = RunConfig(**settings)
    log.debug(f"run config: {run_config.model_dump()}")
    return run_config
