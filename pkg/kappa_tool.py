#!/usr/bin/env python3
"""
Kappa Toolkit CLI
Minimal index of proper subgroups, minimal-index subgroups, and
representability of finite groups in symmetric groups and on trees.
"""

import click

from commands.analysis import (
    factors_command,
    kappa_command,
    maximal_subgroups_command,
    min_subgroups_command,
    mu_command,
    oracle_command,
    perm_rep_command,
)
from commands.catalog import catalog_command, mu_table_command
from commands.fixtures import fixtures_info_command, regen_fixtures_command
from commands.setup import ColouredGroup, help_command
from commands.tree import tree_rep_command


@click.group(
    cls=ColouredGroup,
    context_settings={
        'help_option_names': ['-h', '--help'],
        'max_content_width': 999
    }
)
@click.version_option(version='0.1.0', prog_name='Kappa Toolkit')
def cli():
    """Kappa Toolkit - minimal index κ(G) of a proper subgroup of a finite group.

Groups come from a generator file (-g), a Cayley table file (-t) or the
built-in catalog (-c). Settings come from KAPPA_* environment variables or
a .env file; flags override them.

Exit status: 0 success, 1 invalid input, 2 beyond the shipped capability.

Use 'help' for a quick reference of all commands.
Use 'COMMAND -h' or 'COMMAND --help' for detailed help on a specific command."""
    pass


# Register help
cli.add_command(help_command)

# Register analysis commands
cli.add_command(kappa_command)
cli.add_command(factors_command)
cli.add_command(mu_command)
cli.add_command(min_subgroups_command)
cli.add_command(maximal_subgroups_command)
cli.add_command(oracle_command)
cli.add_command(perm_rep_command)

# Register tree command
cli.add_command(tree_rep_command)

# Register catalog commands
cli.add_command(catalog_command)
cli.add_command(mu_table_command)

# Register fixture commands
cli.add_command(regen_fixtures_command)
cli.add_command(fixtures_info_command)


if __name__ == '__main__':
    cli()
