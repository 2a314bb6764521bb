"""
Help and CLI group for the kappa toolkit.

Contains the custom Click group class for coloured help output and typo
suggestions, and the quick-reference help command.
"""

from dataclasses import dataclass

import click

from core.config import FIXTURES_FILE
from models.utils import find_similar_strings


@dataclass(frozen=True)
class CommandSection:
    """A section of the quick reference."""
    name: str
    icon: str
    commands: list[tuple[str, str]]


class ColouredGroup(click.Group):
    """Click group with coloured help and suggestions for mistyped commands."""

    def resolve_command(self, ctx, args):
        try:
            return super().resolve_command(ctx, args)
        except click.UsageError as e:
            if 'No such command' not in str(e):
                raise
            cmd_name = args[0] if args else ''
            suggestions = self.suggest(ctx, cmd_name)
            if not suggestions:
                raise
            message = f"No such command '{cmd_name}'.\n\n"
            message += click.style("Did you mean one of these?\n", fg='yellow')
            message += ''.join(click.style(f"  • {s}\n", fg='green') for s in suggestions)
            raise click.UsageError(message, ctx) from None

    def suggest(self, ctx, cmd_name: str, limit: int = 3) -> list[str]:
        """Visible command names most similar to cmd_name."""
        if not cmd_name:
            return []
        visible = [name for name in self.list_commands(ctx) if not self.get_command(ctx, name).hidden]
        return find_similar_strings(cmd_name.lower(), visible, limit=limit)

    def format_usage(self, ctx, formatter):
        formatter.write_paragraph()
        formatter.write_text(
            click.style('Usage: ', fg='cyan', bold=True) +
            click.style(f'{ctx.command_path} [OPTIONS] COMMAND [ARGS]...', fg='white')
        )

    def format_help_text(self, ctx, formatter):
        if not self.help:
            return
        formatter.write_paragraph()
        for line in self.help.split('\n'):
            if line.strip():
                formatter.write_text(click.style(line, fg='white'))
            else:
                formatter.write_paragraph()

    def format_options(self, ctx, formatter):
        records = [p.get_help_record(ctx) for p in self.get_params(ctx)]
        records = [r for r in records if r is not None]
        if records:
            formatter.write_paragraph()
            formatter.write_text(click.style('Options:', fg='yellow', bold=True))
            with formatter.indentation():
                for name, text in records:
                    formatter.write_text(click.style(name, fg='green') + '  ' + click.style(text, fg='white'))
        self.format_commands(ctx, formatter)

    def format_commands(self, ctx, formatter):
        commands = []
        for name in self.list_commands(ctx):
            cmd = self.get_command(ctx, name)
            if cmd is not None and not cmd.hidden:
                commands.append((name, cmd.get_short_help_str(limit=500)))
        if not commands:
            return
        formatter.write_paragraph()
        formatter.write_text(click.style('Commands:', fg='yellow', bold=True))
        width = max(max(len(name) for name, _ in commands), 20)
        with formatter.indentation():
            for name, text in commands:
                formatter.write_text(
                    click.style(name.ljust(width), fg='green') + '  ' + click.style(text, fg='white', dim=True)
                )


COMMAND_SECTIONS = [
    CommandSection(
        name="MINIMAL INDEX",
        icon="🔢",
        commands=[
            ("kappa -c <spec>", "κ(G) with the simple quotient attaining it"),
            ("min-subgroups -t <file>", "Every subgroup of index κ(G)"),
            ("perm-rep -c <spec> -n <degree>", "Nontrivial homomorphism into Sym(n)?"),
            ("tree-rep -c <spec> --tree <file>", "Nontrivial homomorphism into Aut(tree)?"),
        ]
    ),
    CommandSection(
        name="STRUCTURE",
        icon="🧩",
        commands=[
            ("factors -g <file>", "Composition factors and decomposition steps"),
            ("mu -c <spec>", "Identify a simple group and its μ"),
            ("maximal-subgroups -c <spec>", "Maximal subgroups as element lists"),
        ]
    ),
    CommandSection(
        name="ORACLES & FIXTURES",
        icon="🔍",
        commands=[
            ("oracle -c <spec>", "Brute-force κ and μ from the subgroup lattice"),
            ("regen-fixtures", "Recompute known facts for the catalog corpus"),
            ("fixtures-info", "Show fixture age and coverage"),
        ]
    ),
    CommandSection(
        name="CATALOG",
        icon="📚",
        commands=[
            ("catalog", "List catalog constructors and the corpus"),
            ("catalog <spec>", "Describe one catalog group"),
            ("catalog <spec> --emit cayley", "Write a catalog group as a Cayley table file"),
            ("mu-table", "Shipped minimal faithful degrees of simple groups"),
        ]
    ),
]

SHORT_FLAGS = [
    ("-g, --generators <file>", "Generator file: 'degree n' then 1-based cycles"),
    ("-t, --cayley <file>", "Cayley table: 'order m' then m rows"),
    ("-c, --catalog <spec>", "Catalog group, e.g. alternating:5"),
    ("--json", "One JSON report on stdout"),
    ("--seed / --threads", "Deterministic for any value of either"),
]


@click.command(name='help')
def help_command():
    """Display a quick reference of all commands."""
    click.secho("\n╔══════════════════════════════════════════════════════════════════════════════════╗", fg='cyan', bold=True)
    click.secho("║                           Kappa Toolkit - Quick Reference                        ║", fg='cyan', bold=True)
    click.secho("╚══════════════════════════════════════════════════════════════════════════════════╝", fg='cyan', bold=True)
    click.echo()

    for section in COMMAND_SECTIONS:
        click.secho(f"{section.icon} {section.name}", fg='yellow', bold=True)
        for cmd, desc in section.commands:
            click.echo("  ", nl=False)
            click.secho(cmd, fg='green', nl=False)
            click.echo(" " * (40 - len(cmd)) + "  " + desc)
        click.echo()

    click.secho("🔧 INPUT & OUTPUT FLAGS", fg='yellow', bold=True)
    for flag, desc in SHORT_FLAGS:
        click.echo("  ", nl=False)
        click.secho(flag, fg='cyan', nl=False)
        click.echo(" " * (40 - len(flag)) + "  " + desc)
    click.echo()

    click.secho("📖 For detailed help on any command:", fg='cyan')
    click.echo(f"  kappa {click.style('<command> -h', fg='white', bold=True)}")
    click.echo(f"  Known facts are read from {FIXTURES_FILE}")
    click.echo()
