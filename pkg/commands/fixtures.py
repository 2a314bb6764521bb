"""Known-facts fixture CLI commands.

This module provides CLI commands for regenerating and inspecting the
oracle-derived facts stored for the catalog corpus.
"""

import click

from commands.helpers import handle_errors, heading, make_analyzer
from core.config import FIXTURES_FILE
from core.fixtures import get_fixtures_info, regenerate_fixtures


@click.command(name='regen-fixtures')
@click.option('--oracle-bound', type=click.IntRange(min=1), default=None,
              help='Largest order for brute-force oracles (default: 400)')
@click.option('--threads', type=click.IntRange(min=1), default=None,
              help='Worker threads for subgroup enumeration (default: 1)')
@handle_errors
def regen_fixtures_command(oracle_bound, threads):
    """Recompute brute-force κ, μ and simplicity for the catalog corpus.

    Results are saved with provenance (timestamp, bounds, seed) and shown by
    'catalog SPEC' for matching entries.
    """
    analyzer = make_analyzer(oracle_bound=oracle_bound, threads=threads)

    heading('Regenerating Fixtures')
    data = regenerate_fixtures(analyzer.settings)
    click.echo()
    click.secho(f"✓ {len(data['entries'])} groups recorded", fg='green')
    click.echo()


@click.command(name='fixtures-info')
@handle_errors
def fixtures_info_command():
    """Show whether fixtures exist, how old they are and how many groups they cover."""
    heading('Fixtures Information')

    info = get_fixtures_info()

    if not info['exists']:
        click.secho("No fixtures found", fg='red')
        click.echo(f"Fixtures file: {FIXTURES_FILE}")
        click.echo()
        click.echo("Run 'regen-fixtures' to create them:")
        click.echo("  kappa regen-fixtures")
        click.echo()
        return

    click.echo(f"Generated:    {info['generated_at']}")
    if info['age_hours'] is not None:
        if info['age_hours'] < 48:
            age = f"{info['age_hours']:.1f} hours"
        else:
            age = f"{info['age_hours'] / 24:.1f} days"
        colour = 'yellow' if info['is_stale'] else 'green'
        click.echo("Age:          " + click.style(age, fg=colour))
    click.echo(f"Groups:       {info['count']}")
    click.echo(f"Oracle bound: {info['oracle_bound']}")
    click.echo(f"File:         {FIXTURES_FILE}")
    if info['is_stale']:
        click.echo()
        click.secho("⚠ Fixtures are stale; run 'regen-fixtures' to refresh them", fg='yellow')
    click.echo()
