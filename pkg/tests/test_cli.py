"""End-to-end tests of the kappa CLI through click's test runner."""

import json
import os
from contextlib import contextmanager
from functools import partial
from random import Random
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from commands.helpers import dump_json
from core.fixtures import regenerate_fixtures
from kappa_tool import cli
from models import catalog
from models.formats import format_cycles, parse_cayley, parse_generators
from models.kappa import CompositionFactors
from models.simple_id import CyclicPrime, SimplicityVerdict, UnknownSimple, is_simple_perm

S4_GENERATORS = "degree 4\n(1,2)\n(1,2,3,4)\n"
PATH3 = "vertices 3\n1 2\n2 3\n"
EMPTY_FIXTURES = {'schema_version': 1, 'entries': {}}

# One invocation per registered command; '{tree}' is replaced by a path3 tree file.
COMMAND_MATRIX = {
    'help': ['help'],
    'kappa': ['kappa', '-c', 'direct_product:(alternating:5),(cyclic:2)'],
    'factors': ['factors', '-c', 'symmetric:4'],
    'mu': ['mu', '-c', 'alternating:5'],
    'min-subgroups': ['min-subgroups', '-c', 'symmetric:4'],
    'maximal-subgroups': ['maximal-subgroups', '-c', 'symmetric:4'],
    'oracle': ['oracle', '-c', 'symmetric:3'],
    'perm-rep': ['perm-rep', '-c', 'symmetric:4', '-n', '3'],
    'tree-rep': ['tree-rep', '-c', 'cyclic:3', '--tree', '{tree}'],
    'catalog': ['catalog', 'klein4'],
    'mu-table': ['mu-table'],
    'regen-fixtures': ['regen-fixtures'],
    'fixtures-info': ['fixtures-info'],
}
JSON_COMMANDS = sorted(set(COMMAND_MATRIX) - {'help', 'regen-fixtures', 'fixtures-info'})


@pytest.fixture
def run(monkeypatch):
    """Invoke the CLI with no .env file, no KAPPA_* variables and no stored fixtures."""
    for key in list(os.environ):
        if key.startswith('KAPPA_'):
            monkeypatch.delenv(key)

    def _run(*args, env=None):
        with patch('core.config._load_dotenv_safe'), \
                patch('core.fixtures.load_fixtures', return_value=EMPTY_FIXTURES):
            return CliRunner().invoke(cli, list(args), env=env)
    return _run


def report(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def matrix_args(command: str, write_file) -> list[str]:
    tree = str(write_file('path3.txt', PATH3))
    return [tree if arg == '{tree}' else arg for arg in COMMAND_MATRIX[command]]


@contextmanager
def small_regeneration():
    """regen-fixtures over two small groups, without writing the fixtures file."""
    with patch('commands.fixtures.regenerate_fixtures', partial(regenerate_fixtures, names=['cyclic:3', 'klein4'])), \
            patch('core.fixtures.save_fixtures'):
        yield


class TestKappaCommand:
    """kappa on every input source."""

    def test_catalog(self, run):
        """A catalog group reports κ, its witness and the group description."""
        data = report(run('kappa', '--catalog', 'alternating:5', '--json'))
        assert data['kappa'] == 5
        assert data['complete'] is True
        assert data['witness']['simple']['name'] == 'A5'
        assert data['group'] == {'source': 'catalog', 'name': 'alternating:5', 'order': 60, 'degree': 5}

    def test_generator_file(self, run, write_file):
        """A generator file is read with 1-based cycles."""
        path = write_file('s4.txt', S4_GENERATORS)
        data = report(run('kappa', '-g', str(path), '--json'))
        assert data['kappa'] == 2
        assert data['witness']['kind'] == 'abelianization'

    def test_cayley_file(self, run, write_file):
        """A Cayley table file has no degree."""
        path = write_file('c3.txt', "order 3\n0 1 2\n1 2 0\n2 0 1\n")
        data = report(run('kappa', '-t', str(path), '--json'))
        assert data['kappa'] == 3
        assert data['group']['degree'] is None

    def test_text_output(self, run):
        """Text mode prints the heading, the value and the certification mark."""
        result = run('kappa', '-c', 'sl2_5')
        assert result.exit_code == 0
        assert '=== Minimal Index ===' in result.output
        assert 'κ = 5' in result.output
        assert '✓ Complete' in result.output

    def test_trivial_table(self, run, write_file):
        """The trivial group exits 1 because κ is undefined."""
        path = write_file('trivial.txt', "order 1\n0\n")
        result = run('kappa', '-t', str(path))
        assert result.exit_code == 1
        assert 'κ undefined: no proper subgroup' in result.output

    def test_relabel_warning(self, run, write_file):
        """A table with the identity off index 0 warns about the relabel."""
        path = write_file('c2.txt', "order 2\n1 0\n0 1\n")
        result = run('kappa', '-t', str(path))
        assert result.exit_code == 0
        assert 'identity is element 1' in result.output


class TestExitCodes:
    """0 success, 1 invalid input, 2 beyond capability."""

    def test_unknown_catalog_name(self, run):
        """A misspelt catalog name exits 1 with a suggestion."""
        result = run('kappa', '-c', 'alternatng:5')
        assert result.exit_code == 1
        assert 'alternating' in result.output

    def test_no_source(self, run):
        """Omitting every input source exits 1."""
        assert run('kappa').exit_code == 1

    def test_two_sources(self, run, write_file):
        """Giving two input sources exits 1."""
        path = write_file('s4.txt', S4_GENERATORS)
        assert run('kappa', '-g', str(path), '-c', 'cyclic:2').exit_code == 1

    def test_missing_file(self, run, tmp_path):
        """An unreadable file exits 1."""
        result = run('kappa', '-g', str(tmp_path / 'nope.txt'))
        assert result.exit_code == 1
        assert 'cannot read' in result.output

    def test_malformed_generators(self, run, write_file):
        """A malformed generator file names the offending line."""
        path = write_file('bad.txt', "degree 3\n(1,4)\n")
        result = run('factors', '-g', str(path))
        assert result.exit_code == 1
        assert 'line 2' in result.output

    def test_bad_cayley_table(self, run, write_file):
        """A table failing a group axiom exits 1."""
        path = write_file('bad.txt', "order 2\n0 1\n1 1\n")
        assert run('kappa', '-t', str(path)).exit_code == 1

    def test_mu_of_non_simple(self, run):
        """mu of a non-simple group exits 1."""
        assert run('mu', '-c', 'symmetric:4').exit_code == 1

    def test_table_above_bound(self, run):
        """A table needed above --cayley-bound exits 2."""
        result = run('min-subgroups', '-c', 'psl3_4', '--cayley-bound', '100')
        assert result.exit_code == 2
        assert '--cayley-bound' in result.output

    def test_oracle_above_bound(self, run):
        """The oracle above --oracle-bound exits 2."""
        assert run('oracle', '-c', 'alternating:5', '--oracle-bound', '10').exit_code == 2

    def test_bad_environment(self, run):
        """A non-integer KAPPA_* variable exits 1."""
        result = run('kappa', '-c', 'cyclic:2', env={'KAPPA_TRIALS': 'many'})
        assert result.exit_code == 1
        assert 'KAPPA_TRIALS must be an integer' in result.output

    def test_uncertified_kappa(self, run, monkeypatch):
        """An uncertified κ is printed but exits 2."""
        factors = CompositionFactors(order=120, factors=(CyclicPrime(2), UnknownSimple(60)))
        monkeypatch.setattr('models.kappa.composition_factors', lambda group, options=None: factors)
        result = run('kappa', '-c', 'sl2_5', '--cayley-bound', '1')
        assert result.exit_code == 2
        assert 'κ = 5' in result.output
        assert 'Not certified' in result.output

    def test_undecomposable_section(self, run, monkeypatch):
        """A perfect primitive section above the Cayley bound exits 2."""
        monkeypatch.setattr('models.kappa.is_simple_perm',
                            lambda group, trials, rng: SimplicityVerdict(False, group.generators[0]))
        result = run('factors', '-c', 'alternating:5', '--cayley-bound', '10')
        assert result.exit_code == 2
        assert 'exceeds the Cayley bound 10' in result.output

    def test_not_simple_witness_is_one_based(self, run):
        """The NotSimple witness is printed in 1-based cycle notation."""
        group = catalog.make('symmetric:4', cayley_bound=None).perm
        verdict = is_simple_perm(group, 20, Random(0))
        result = run('mu', '-c', 'symmetric:4')
        assert result.exit_code == 1
        assert f"witness {format_cycles(verdict.witness)}" in result.output

    def test_unknown_command_suggests(self, run):
        """A misspelt command is rejected with a suggestion."""
        result = run('kapa')
        assert result.exit_code == 2
        assert 'kappa' in result.output


class TestOtherCommands:
    """factors, mu, subgroup listings, oracle and representability."""

    def test_factors(self, run):
        """S5 has composition factors C2 and A5."""
        data = report(run('factors', '-c', 'symmetric:5', '--json'))
        assert [f['name'] for f in data['factors']] == ['C2', 'A5']

    def test_mu(self, run):
        """PSL(2,7) is identified with μ = 7 from sampled elements."""
        data = report(run('mu', '-c', 'psl2:7', '--json'))
        assert data['simple'] == {'name': 'PSL(2,7)', 'family': 'psl', 'order': 168, 'mu': 7}
        assert data['sampled'] is True

    def test_min_subgroups(self, run):
        """The Klein four-group has three subgroups of index 2, listed sorted."""
        data = report(run('min-subgroups', '-c', 'klein4', '--json'))
        assert data['index'] == 2
        assert len(data['subgroups']) == 3
        assert all(s == sorted(s) and s[0] == 0 for s in data['subgroups'])

    def test_maximal_subgroups(self, run):
        """A5 has 21 maximal subgroups."""
        data = report(run('maximal-subgroups', '-c', 'alternating:5', '--json'))
        assert len(data['subgroups']) == 21

    def test_oracle(self, run):
        """The oracle confirms κ = μ = 5 for the simple group A5."""
        data = report(run('oracle', '-c', 'alternating:5', '--json'))
        assert (data['kappa'], data['mu'], data['simple'], data['berkovich_holds']) == (5, 5, True, True)

    def test_perm_rep(self, run):
        """A5 maps nontrivially into Sym(5) but not into Sym(4)."""
        assert report(run('perm-rep', '-c', 'alternating:5', '-n', '4', '--json'))['representable'] is False
        assert report(run('perm-rep', '-c', 'alternating:5', '-n', '5', '--json'))['representable'] is True
        assert run('perm-rep', '-c', 'alternating:5', '-n', '0').exit_code == 1

    def test_tree_rep(self, run, write_file):
        """C3 has no nontrivial action on the path with 3 vertices."""
        path = write_file('path3.txt', PATH3)
        result = run('tree-rep', '-c', 'cyclic:3', '--tree', str(path))
        assert result.exit_code == 0
        assert 'NOT representable' in result.output
        assert 'm* = 2' in result.output

    def test_tree_rep_json(self, run, write_file):
        """C2 acts on the path with 3 vertices by reflection."""
        path = write_file('path3.txt', PATH3)
        data = report(run('tree-rep', '-c', 'cyclic:2', '--tree', str(path), '--json'))
        assert data['representable'] is True
        assert data['max_multiplicity'] == 2
        assert data['automorphism_order'] == 2


class TestCatalogCommands:
    """catalog, mu-table, help and fixtures."""

    def test_catalog_listing(self, run):
        """The listing includes the direct_product constructor."""
        result = run('catalog')
        assert result.exit_code == 0
        assert 'direct_product' in result.output

    def test_catalog_entry(self, run):
        """An entry report carries order and smallest orbit index."""
        data = report(run('catalog', 'psl2:7', '--json'))
        assert data['order'] == 168
        assert data['smallest_orbit_index'] == 8
        assert data['facts'] == {}

    def test_emit_generators(self, run):
        """--emit generators writes a generator file that parses back to the same group."""
        result = run('catalog', 'symmetric:4', '--emit', 'generators')
        assert result.exit_code == 0
        group = parse_generators(result.stdout)
        assert (group.degree, group.order) == (4, 24)

    def test_emit_cayley(self, run):
        """--emit cayley writes a table file that parses back to the same order."""
        result = run('catalog', 'direct_product:(symmetric:3),(cyclic:3)', '--emit', 'cayley')
        assert result.exit_code == 0
        table = parse_cayley(result.stdout)
        assert table.size == 18
        assert table.relabeled_from is None

    def test_emit_cayley_above_bound(self, run):
        """--emit cayley above the bound exits 2."""
        result = run('catalog', 'alternating:5', '--emit', 'cayley', '--cayley-bound', '10')
        assert result.exit_code == 2
        assert '--cayley-bound 10' in result.output

    def test_emit_needs_spec(self, run):
        """--emit without a SPEC exits 1."""
        assert run('catalog', '--emit', 'generators').exit_code == 1

    def test_mu_table(self, run):
        """The μ table lists A6 with μ = 6."""
        data = report(run('mu-table', '--json'))
        assert {'name': 'A6', 'family': 'alternating', 'order': 360, 'mu': 6} in data['rows']

    def test_help(self, run):
        """help prints the quick reference."""
        result = run('help')
        assert result.exit_code == 0
        assert 'Quick Reference' in result.output

    @patch('commands.fixtures.get_fixtures_info')
    def test_fixtures_info_missing(self, mock_info, run):
        """fixtures-info explains how to create missing fixtures."""
        mock_info.return_value = {'exists': False}
        result = run('fixtures-info')
        assert result.exit_code == 0
        assert 'No fixtures found' in result.output

    @patch('commands.fixtures.regenerate_fixtures')
    def test_regen_fixtures(self, mock_regen, run):
        """regen-fixtures passes --oracle-bound through and reports the count."""
        mock_regen.return_value = {'entries': {'cyclic:2': {}, 'klein4': {}}}
        result = run('regen-fixtures', '--oracle-bound', '50')
        assert result.exit_code == 0
        assert '2 groups recorded' in result.output
        assert mock_regen.call_args.args[0].oracle_bound == 50


class TestCommandMatrix:
    """Every registered command gives repeatable output whatever the thread count."""

    def test_matrix_covers_every_command(self):
        """The matrix names each registered command once."""
        assert set(COMMAND_MATRIX) == set(cli.commands)

    @pytest.mark.parametrize('command', sorted(COMMAND_MATRIX))
    def test_output_independent_of_threads(self, run, write_file, command):
        """KAPPA_THREADS=1 and KAPPA_THREADS=4 print the same bytes."""
        args = matrix_args(command, write_file)
        with small_regeneration():
            single = run(*args, env={'KAPPA_THREADS': '1'})
            pooled = run(*args, env={'KAPPA_THREADS': '4'})
        assert single.exit_code == pooled.exit_code == 0, single.output
        assert single.stdout == pooled.stdout

    @pytest.mark.parametrize('command', JSON_COMMANDS)
    def test_json_is_stable(self, run, write_file, command):
        """--json output re-serializes to the same bytes."""
        result = run(*matrix_args(command, write_file), '--json')
        assert dump_json(report(result)) + '\n' == result.stdout
