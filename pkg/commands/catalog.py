"""
Catalog commands.

Commands for listing catalog constructors, describing or emitting one entry,
and auditing the shipped μ table.
"""

import click

from commands.helpers import echo_json, handle_errors, heading
from core.config import Settings
from core.errors import InputError, OracleBoundError
from core.fixtures import facts_for
from models import catalog as catalog_model
from models.formats import format_cayley, format_generators
from models.simple_id import mu_table
from models.types import REPORT_SCHEMA_VERSION


@click.command(name='catalog')
@click.argument('spec', required=False)
@click.option('--emit', type=click.Choice(['generators', 'cayley']),
              help='Print the entry as a generator or Cayley table file')
@click.option('--cayley-bound', type=click.IntRange(min=1), default=None,
              help='Largest order for --emit cayley (default: 5000)')
@click.option('--json', 'json_output', is_flag=True, help='Print one JSON report')
@handle_errors
def catalog_command(spec, emit, cayley_bound, json_output):
    """List catalog groups, or describe one entry given its SPEC.

    With --emit the entry is written in the generator or Cayley table file
    format, ready for --generators or --cayley.

    \b
    Examples:
      kappa catalog
      kappa catalog 'direct_product:(alternating:5),(cyclic:2)'
      kappa catalog symmetric:4 --emit generators > s4.txt
      kappa catalog klein4 --emit cayley > v4.txt
    """
    if emit:
        if spec is None:
            raise InputError("--emit needs a catalog SPEC")
        click.echo(_emit(spec, emit, cayley_bound), nl=False)
        return

    if spec is None:
        entries = catalog_model.list_entries()
        if json_output:
            echo_json({
                'schema_version': REPORT_SCHEMA_VERSION,
                'command': 'catalog',
                'constructors': [{'name': n, 'parameters': h} for n, h in entries],
                'corpus': list(catalog_model.CORPUS),
            })
            return
        heading('Catalog')
        width = max(len(name) for name, _ in entries)
        for name, hint in entries:
            click.echo(f"  {click.style(name.ljust(width), fg='green')}  {hint}")
        click.echo()
        click.secho(f"Corpus ({len(catalog_model.CORPUS)} groups):", fg='yellow', bold=True)
        for name in catalog_model.CORPUS:
            click.echo(f"  {name}")
        click.echo()
        return

    entry = catalog_model.make(spec, cayley_bound=None)
    report = {
        'schema_version': REPORT_SCHEMA_VERSION,
        'command': 'catalog',
        'name': entry.name,
        'order': entry.order,
        'degree': entry.perm.degree,
        'generators': len(entry.perm.generators),
        'smallest_orbit_index': entry.smallest_orbit_index(),
        'facts': facts_for(entry.name),
    }
    if json_output:
        echo_json(report)
        return

    heading('Catalog Entry')
    click.echo(f"Name:    {click.style(entry.name, fg='white', bold=True)}")
    click.echo(f"Order:   {entry.order}")
    click.echo(f"Degree:  {entry.perm.degree} ({report['generators']} generators)")
    if report['facts']:
        facts = report['facts']
        click.echo(f"Known:   κ = {facts['kappa']}, μ = {facts['mu']}, simple: {'yes' if facts['simple'] else 'no'}")
    click.echo()


@click.command(name='mu-table')
@click.option('--json', 'json_output', is_flag=True, help='Print one JSON report')
@handle_errors
def mu_table_command(json_output):
    """Show the shipped minimal-degree table of simple groups."""
    rows = mu_table()
    if json_output:
        echo_json({'schema_version': REPORT_SCHEMA_VERSION, 'command': 'mu-table', 'rows': rows})
        return

    heading('Minimal Faithful Degrees')
    click.echo(f"  {'name':<12} {'family':<12} {'order':>16}  {'μ':>6}")
    for row in rows:
        click.echo(f"  {click.style(row['name'].ljust(12), fg='green')} {row['family']:<12} "
                   f"{row['order']:>16}  {row['mu']:>6}")
    click.echo()


def _emit(spec: str, emit: str, cayley_bound: int | None) -> str:
    """File-format text for a catalog entry."""
    if emit == 'generators':
        return format_generators(catalog_model.make(spec, cayley_bound=None).perm)
    bound = Settings.from_environment().override(cayley_bound=cayley_bound).cayley_bound
    entry = catalog_model.make(spec, cayley_bound=bound)
    if entry.cayley is None:
        raise OracleBoundError(f"{entry.name} has order {entry.order}, above --cayley-bound {bound}")
    return format_cayley(entry.cayley)
