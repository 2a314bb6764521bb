"""
Group analysis commands.

Commands for κ, composition factors, μ of simple groups, subgroup searches,
the brute-force oracle and permutation representability.
"""

import click

from commands.helpers import (
    describe_group,
    echo_json,
    format_subgroup,
    group_options,
    handle_errors,
    heading,
    make_analyzer,
    mark,
    settings_options,
)
from core.errors import IncompleteResultError


def _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec):
    analyzer = make_analyzer(cayley_bound, oracle_bound, trials, seed, threads)
    return analyzer, analyzer.load_group(generators, cayley, catalog_spec)


@click.command(name='kappa')
@group_options
@settings_options
@handle_errors
def kappa_command(generators, cayley, catalog_spec, cayley_bound, oracle_bound, trials, seed, threads, json_output):
    """Minimal index κ(G) of a proper subgroup.

    Reports κ, the simple quotient G/N attaining it, and whether the value is
    certified. An uncertified value exits with status 2.

    \b
    Examples:
      kappa kappa --catalog alternating:5
      kappa kappa --generators s4.txt --json
    """
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.kappa(group)

    if json_output:
        echo_json(report)
    else:
        heading('Minimal Index')
        describe_group(report['group'])
        witness = report['witness']
        click.echo(f"κ = {click.style(str(report['kappa']), fg='green', bold=True)}")
        click.echo(f"Witness: G/N ≅ {witness['simple']['name']} "
                   f"(|N| = {witness['kernel_order']}, {witness['kind']})")
        click.echo(f"  {witness['description']}")
        if report['complete']:
            click.echo(f"{mark(True)} Complete")
        else:
            click.secho("⚠ Not certified: no simple quotient with smaller μ was ruled out", fg='yellow', err=True)
        click.echo()

    if not report['complete']:
        raise IncompleteResultError(
            f"κ = {report['kappa']} is a lower-bound candidate; raise --cayley-bound above {group.order} to certify it"
        )


@click.command(name='factors')
@group_options
@settings_options
@handle_errors
def factors_command(generators, cayley, catalog_spec, cayley_bound, oracle_bound, trials, seed, threads, json_output):
    """Composition factors with the decomposition steps that produced them."""
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.factors(group)

    if json_output:
        echo_json(report)
        return

    heading('Composition Factors')
    describe_group(report['group'])
    names = [f['name'] for f in report['factors']]
    click.echo(f"Factors: {click.style(', '.join(names), fg='green')}")
    click.echo()
    click.secho("Steps:", fg='yellow', bold=True)
    for step in report['steps']:
        click.echo(f"  order {step['order']:>8}  →  {step['factor']}")
    click.echo()


@click.command(name='mu')
@group_options
@settings_options
@handle_errors
def mu_command(generators, cayley, catalog_spec, cayley_bound, oracle_bound, trials, seed, threads, json_output):
    """Identify a simple group and print its minimal faithful degree μ."""
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.mu(group)

    if json_output:
        echo_json(report)
        return

    heading('Simple Group')
    describe_group(report['group'])
    simple = report['simple']
    click.echo(f"Type: {click.style(simple['name'], fg='green', bold=True)} ({simple['family']})")
    click.echo(f"μ = {click.style(str(simple['mu']), fg='green', bold=True)}")
    if report['sampled']:
        click.secho("  Simplicity is a Monte Carlo verdict.", dim=True)
    click.echo()


def _print_subgroups(title: str, report: dict):
    heading(title)
    describe_group(report['group'])
    subgroups = report['subgroups']
    index = f", index {report['index']}" if report['index'] is not None else ''
    click.echo(f"{click.style(str(len(subgroups)), fg='green', bold=True)} subgroup(s){index}")
    click.echo()
    for elements in subgroups:
        click.echo(f"  order {len(elements):>5}  {format_subgroup(elements)}")
    click.echo()


@click.command(name='min-subgroups')
@group_options
@settings_options
@handle_errors
def min_subgroups_command(generators, cayley, catalog_spec, cayley_bound, oracle_bound, trials, seed, threads,
                          json_output):
    """List every subgroup of index κ(G) as sorted Cayley-table element lists.

    Needs a Cayley table: permutation input is tabulated when its order is
    at most --cayley-bound.
    """
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.min_subgroups(group)
    if json_output:
        echo_json(report)
    else:
        _print_subgroups('Minimal-Index Subgroups', report)


@click.command(name='maximal-subgroups')
@group_options
@settings_options
@handle_errors
def maximal_subgroups_command(generators, cayley, catalog_spec, cayley_bound, oracle_bound, trials, seed, threads,
                              json_output):
    """List the maximal subgroups as sorted Cayley-table element lists.

    Simple groups use the 4-generated search (order up to 700); other groups
    read them off the full lattice (order up to --oracle-bound).
    """
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.maximal_subgroups(group)
    if json_output:
        echo_json(report)
    else:
        _print_subgroups('Maximal Subgroups', report)


@click.command(name='oracle')
@group_options
@settings_options
@handle_errors
def oracle_command(generators, cayley, catalog_spec, cayley_bound, oracle_bound, trials, seed, threads, json_output):
    """Brute-force κ and μ from the full subgroup lattice.

    Also checks that G is simple exactly when κ(G) = μ(G).
    """
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.oracle(group)

    if json_output:
        echo_json(report)
        return

    heading('Lattice Oracle')
    describe_group(report['group'])
    click.echo(f"κ = {report['kappa']}   μ = {report['mu']}   simple: {'yes' if report['simple'] else 'no'}")
    click.echo(f"{mark(report['berkovich_holds'])} simple ⟺ κ = μ")
    click.echo()


@click.command(name='perm-rep')
@group_options
@click.option('--degree', '-n', type=int, required=True, help='Degree n of Sym(n)')
@settings_options
@handle_errors
def perm_rep_command(generators, cayley, catalog_spec, degree, cayley_bound, oracle_bound, trials, seed, threads,
                     json_output):
    """Decide whether G has a nontrivial homomorphism into Sym(n).

    Such a homomorphism exists exactly when n ≥ κ(G).
    """
    analyzer, group = _load(cayley_bound, oracle_bound, trials, seed, threads, generators, cayley, catalog_spec)
    report = analyzer.perm_rep(group, degree)

    if json_output:
        echo_json(report)
        return

    heading('Permutation Representability')
    describe_group(report['group'])
    verdict = 'REPRESENTABLE' if report['representable'] else 'NOT representable'
    click.echo(f"{mark(report['representable'])} {verdict} in Sym({degree}) (κ = {report['kappa']})")
    click.echo()
