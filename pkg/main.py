import logging

import click

from app.commands import dims, normalize, snapshot, table, verify

logging.basicConfig(level=logging.INFO)
log = logging.getLogger(__name__)


@click.group()
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
def cli(verbose: bool):
    """Exact computations with chord diagrams, Feynman diagrams and their Lie algebra models."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
        log.debug("verbose logging enabled")


cli.add_command(dims)
cli.add_command(verify)
cli.add_command(table)
cli.add_command(snapshot)
cli.add_command(normalize)


if __name__ == "__main__":
    cli()
