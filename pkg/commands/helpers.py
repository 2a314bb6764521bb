"""
Helper functions for the analysis commands.

Shared utilities used across multiple commands:
- Group input and settings options
- Error handling with exit codes
- JSON and coloured text output
"""

import functools
import json
import sys
from pathlib import Path

import click

from core.analyzer import GroupAnalyzer
from core.config import Settings
from core.errors import CatalogError, KappaError

FILE = click.Path(exists=False, dir_okay=False, path_type=Path)


def group_options(func):
    """--generators / --cayley / --catalog (exactly one is required)."""
    func = click.option('--catalog', '-c', 'catalog_spec', metavar='SPEC',
                        help="Catalog group, e.g. 'alternating:5'")(func)
    func = click.option('--cayley', '-t', type=FILE, help='Cayley table file')(func)
    func = click.option('--generators', '-g', type=FILE, help='Generator file (1-based cycles)')(func)
    return func


def settings_options(func):
    """Bounds, Monte Carlo and threading flags; unset flags keep the environment value."""
    func = click.option('--json', 'json_output', is_flag=True, help='Print one JSON report')(func)
    func = click.option('--threads', type=click.IntRange(min=1), default=None,
                        help='Worker threads for subgroup enumeration (default: 1)')(func)
    func = click.option('--seed', type=click.IntRange(min=0), default=None,
                        help='Random seed (default: 0)')(func)
    func = click.option('--trials', type=click.IntRange(min=1), default=None,
                        help='Monte Carlo simplicity rounds (default: 20)')(func)
    func = click.option('--oracle-bound', type=click.IntRange(min=1), default=None,
                        help='Largest order for brute-force oracles (default: 400)')(func)
    func = click.option('--cayley-bound', type=click.IntRange(min=1), default=None,
                        help='Largest order for Cayley tables (default: 5000)')(func)
    return func


def make_analyzer(cayley_bound=None, oracle_bound=None, trials=None, seed=None, threads=None) -> GroupAnalyzer:
    """GroupAnalyzer with environment settings overridden by the given flags."""
    settings = Settings.from_environment().override(
        cayley_bound=cayley_bound,
        oracle_bound=oracle_bound,
        trials=trials,
        seed=seed,
        threads=threads,
    )
    return GroupAnalyzer(settings)


def handle_errors(func):
    """Print KappaError messages in red on stderr and exit with their code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except KappaError as e:
            click.secho(f"Error: {e}", fg='red', err=True)
            if isinstance(e, CatalogError) and e.suggestions:
                click.secho("Did you mean one of these?", fg='yellow', err=True)
                for suggestion in e.suggestions:
                    click.secho(f"  • {suggestion}", fg='green', err=True)
            sys.exit(e.exit_code)

    return wrapper


def dump_json(report: dict) -> str:
    """Stable JSON text for a report."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def echo_json(report: dict):
    """Print a report as JSON, highlighted when stdout is a terminal."""
    text = dump_json(report)
    if sys.stdout.isatty():
        from pygments import highlight
        from pygments.formatters import TerminalFormatter
        from pygments.lexers import JsonLexer
        text = highlight(text, JsonLexer(), TerminalFormatter()).rstrip('\n')
    click.echo(text)


def heading(text: str):
    click.echo()
    click.secho(f"=== {text} ===", fg='cyan', bold=True)
    click.echo()


def describe_group(group: dict):
    """One line naming the input group."""
    degree = f", degree {group['degree']}" if group['degree'] is not None else ''
    click.echo(f"Group: {click.style(group['name'], fg='white', bold=True)} "
               f"({group['source']}, order {group['order']}{degree})")


def mark(ok: bool) -> str:
    return click.style('✓', fg='green') if ok else click.style('✗', fg='red')


def format_subgroup(elements: list[int], limit: int = 24) -> str:
    """Element list, truncated for display."""
    shown = ', '.join(map(str, elements[:limit]))
    more = f", … ({len(elements)} elements)" if len(elements) > limit else ''
    return '{' + shown + more + '}'
