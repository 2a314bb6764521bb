"""
Tree representability command.
"""

import click

from commands.helpers import (
    FILE,
    describe_group,
    echo_json,
    group_options,
    handle_errors,
    heading,
    make_analyzer,
    mark,
    settings_options,
)


@click.command(name='tree-rep')
@group_options
@click.option('--tree', 'tree_file', type=FILE, required=True, help="Tree file ('vertices n' then 'u v' edges)")
@settings_options
@handle_errors
def tree_rep_command(generators, cayley, catalog_spec, tree_file, cayley_bound, oracle_bound, trials, seed, threads,
                     json_output):
    """Decide whether G maps nontrivially into the automorphism group of a tree.

    The answer is yes exactly when κ(G) ≤ m*, the largest number of pairwise
    isomorphic sibling subtrees of the tree rooted at its center.

    \b
    Example:
      kappa tree-rep --catalog cyclic:3 --tree path3.txt
    """
    analyzer = make_analyzer(cayley_bound, oracle_bound, trials, seed, threads)
    group = analyzer.load_group(generators, cayley, catalog_spec)
    tree = analyzer.load_tree(tree_file)
    report = analyzer.tree_rep(group, tree, str(tree_file))

    if json_output:
        echo_json(report)
        return

    heading('Tree Representability')
    describe_group(report['group'])
    click.echo(f"Tree: {report['tree']['name']} ({report['tree']['vertices']} vertices, "
               f"|Aut| = {report['automorphism_order']})")
    ok = report['representable']
    verdict = 'REPRESENTABLE' if ok else 'NOT representable'
    relation = '≤' if ok else '>'
    click.echo(f"{mark(ok)} {verdict} (κ = {report['kappa']} {relation} m* = {report['max_multiplicity']})")
    click.echo()
