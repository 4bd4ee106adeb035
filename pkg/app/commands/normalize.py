import click

from app.commands.common import handle_errors
from app.services.diagrams import LineDiagram, canonicalize_labeled_tree, canonicalize_line_diagram, parse
from app.services.liealg import canonical_monomial, parse_monomial, text


@click.command()
@click.argument("source")
@click.option("--monomial", is_flag=True, help="Read SOURCE as a bracket monomial instead of a diagram or tree.")
@handle_errors
def normalize(source: str, monomial: bool):
    """Print the sign and canonical key of a diagram, tree or monomial."""
    if monomial:
        sign, canonical = canonical_monomial(parse_monomial(source))
        click.echo(f"{sign} {text(canonical)}" if sign else "0")
        return
    value = parse(source)
    if isinstance(value, LineDiagram):
        signed = canonicalize_line_diagram(value)
    else:
        signed = canonicalize_labeled_tree(value)
    click.echo(f"{signed.sign} {signed.key}")
