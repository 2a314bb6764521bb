"""GroupAnalyzer: the façade every command goes through.

It resolves the group input (generator file, Cayley table file or catalog
spec), applies the active Settings to the domain algorithms, and turns
their results into the report dicts printed by the commands.
"""

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from random import Random

import click

from core.config import Settings
from core.errors import InputError, NotSimpleError, OracleBoundError, UnknownSimpleError
from core.fixtures import facts_for
from models import catalog
from models.cayley import CayleyGroup, SubgroupSet, is_simple_cayley
from models.formats import format_cycles, parse_cayley, parse_generators, parse_tree
from models.kappa import (
    CompositionFactors,
    KappaResult,
    SearchOptions,
    composition_factors,
    composition_factors_cayley,
    kappa_cayley,
    kappa_perm,
    representable_in_symmetric,
)
from models.lattice import all_maximal_subgroups_simple, berkovich_check, maximal_subgroups, minimal_index_subgroups
from models.permutation import PermGroup
from models.simple_id import (
    SimpleType,
    family_of,
    fingerprint_cayley,
    fingerprint_perm,
    identify_simple,
    is_simple_perm,
    mu_of,
)
from models.tree_rep import Tree, automorphism_order, max_symmetric_degree, representable_on_tree
from models.types import (
    FactorsReport,
    GroupInfo,
    KappaReport,
    MuReport,
    OracleReport,
    PermRepReport,
    REPORT_SCHEMA_VERSION,
    SimpleInfo,
    SubgroupsReport,
    TreeRepReport,
    WitnessInfo,
)

SOURCES = ('generators', 'cayley', 'catalog')


@dataclass(eq=False)
class GroupInput:
    """A resolved group argument.

    Attributes:
        source: 'generators', 'cayley' or 'catalog'
        name: File path or canonical catalog spec
        perm: Permutation realization (None for table input)
        cayley: Table realization, when already available
        facts: Known facts attached from the fixtures file
    """
    source: str
    name: str
    perm: PermGroup | None = None
    cayley: CayleyGroup | None = None
    facts: dict = field(default_factory=dict)

    @cached_property
    def order(self) -> int:
        return self.perm.order if self.perm is not None else self.cayley.size

    def info(self) -> GroupInfo:
        return {
            'source': self.source,
            'name': self.name,
            'order': self.order,
            'degree': self.perm.degree if self.perm is not None else None,
        }


def simple_info(simple: SimpleType) -> SimpleInfo:
    try:
        mu = mu_of(simple)
    except UnknownSimpleError:
        mu = None
    return {'name': str(simple), 'family': family_of(simple), 'order': simple.order, 'mu': mu}


def subgroup_elements(subgroups: list[SubgroupSet]) -> list[list[int]]:
    return [list(h.elements) for h in subgroups]


def _read(path: Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None


class GroupAnalyzer:
    """Runs the toolkit operations under one set of Settings."""

    def __init__(self, settings: Settings | None = None):
        """Initialise GroupAnalyzer.

        Args:
            settings: Active settings (environment defaults when None)
        """
        self.settings = settings if settings is not None else Settings.from_environment()

    @property
    def options(self) -> SearchOptions:
        s = self.settings
        return SearchOptions(trials=s.trials, seed=s.seed, cayley_bound=s.cayley_bound, sample_size=s.sample_size)

    # ===== Inputs =====

    def load_group(self, generators: Path | None = None, cayley: Path | None = None,
                   catalog_spec: str | None = None) -> GroupInput:
        """Resolve exactly one of the three group sources.

        Raises:
            InputError: zero or several sources, or an unreadable file
            FileFormatError / CayleyTableError / CatalogError: invalid input
        """
        given = [name for name, value in zip(SOURCES, (generators, cayley, catalog_spec)) if value is not None]
        if len(given) != 1:
            raise InputError("give exactly one of --generators, --cayley or --catalog")

        if generators is not None:
            return GroupInput('generators', str(generators), perm=parse_generators(_read(generators)))
        if cayley is not None:
            table = parse_cayley(_read(cayley))
            if table.relabeled_from is not None:
                click.secho(
                    f"⚠ Warning: identity is element {table.relabeled_from}; swapped with 0 (elements renumbered)",
                    fg='yellow',
                    err=True,
                )
            return GroupInput('cayley', str(cayley), cayley=table)
        entry = catalog.make(catalog_spec, cayley_bound=self.settings.cayley_bound)
        return GroupInput('catalog', entry.name, perm=entry.perm, cayley=entry.cayley, facts=facts_for(entry.name))

    def load_tree(self, path: Path) -> Tree:
        return parse_tree(_read(path))

    def table_of(self, group: GroupInput, purpose: str) -> CayleyGroup:
        """Cayley table of the group, built on demand within the Cayley bound.

        Raises:
            OracleBoundError: a permutation group above --cayley-bound
        """
        if group.cayley is None:
            if group.order > self.settings.cayley_bound:
                raise OracleBoundError(
                    f"{purpose} needs a Cayley table, but the group has order {group.order} "
                    f"(above --cayley-bound {self.settings.cayley_bound})"
                )
            group.cayley = CayleyGroup.from_permutation_group(group.perm)
        return group.cayley

    def _report(self, command: str, group: GroupInput) -> dict:
        return {'schema_version': REPORT_SCHEMA_VERSION, 'command': command, 'group': group.info()}

    # ===== Operations =====

    def kappa_result(self, group: GroupInput) -> KappaResult:
        if group.perm is not None:
            return kappa_perm(group.perm, self.options)
        return kappa_cayley(group.cayley)

    def kappa(self, group: GroupInput) -> KappaReport:
        result = self.kappa_result(group)
        w = result.witness
        witness: WitnessInfo = {
            'simple': simple_info(w.simple),
            'kind': w.kind,
            'description': w.description,
            'kernel_order': w.kernel_order,
        }
        return self._report('kappa', group) | {'kappa': result.kappa, 'witness': witness, 'complete': result.complete}

    def factors(self, group: GroupInput) -> FactorsReport:
        result: CompositionFactors
        if group.perm is not None:
            result = composition_factors(group.perm, self.options)
        else:
            result = composition_factors_cayley(group.cayley)
        steps = [{'order': order, 'factor': str(factor)} for order, factor in result.chain_witness]
        return self._report('factors', group) | {
            'factors': [simple_info(f) for f in result.factors],
            'steps': steps,
        }

    def mu(self, group: GroupInput) -> MuReport:
        """mu of a simple group.

        Raises:
            NotSimpleError: the group is not simple
            UnknownSimpleError: the simple group is outside the shipped table
        """
        if group.perm is not None:
            rng = Random(self.settings.seed)
            verdict = is_simple_perm(group.perm, self.settings.trials, rng)
            if not verdict:
                raise NotSimpleError(
                    f"group of order {group.order} is not simple (witness {format_cycles(verdict.witness)})"
                )
            fingerprint = fingerprint_perm(group.perm, rng, self.settings.sample_size)
        else:
            if not is_simple_cayley(group.cayley):
                raise NotSimpleError(f"group of order {group.order} is not simple")
            fingerprint = fingerprint_cayley(group.cayley)
        simple = identify_simple(fingerprint)
        info = simple_info(simple)
        if info['mu'] is None:
            raise UnknownSimpleError(simple.order)
        return self._report('mu', group) | {'simple': info, 'sampled': fingerprint.sampled}

    def min_subgroups(self, group: GroupInput) -> SubgroupsReport:
        table = self.table_of(group, 'min-subgroups')
        subgroups = minimal_index_subgroups(table, self.settings.simple_bound, self.settings.threads)
        return self._report('min-subgroups', group) | {
            'index': subgroups[0].index,
            'subgroups': subgroup_elements(subgroups),
        }

    def maximal_subgroups(self, group: GroupInput) -> SubgroupsReport:
        """Maximal subgroups: the 4-generated search for simple groups, the lattice otherwise."""
        table = self.table_of(group, 'maximal-subgroups')
        s = self.settings
        if table.size > 1 and is_simple_cayley(table):
            subgroups = all_maximal_subgroups_simple(table, s.simple_bound, s.threads)
        else:
            subgroups = maximal_subgroups(table, s.oracle_bound, s.threads)
        return self._report('maximal-subgroups', group) | {
            'index': None,
            'subgroups': subgroup_elements(subgroups),
        }

    def oracle(self, group: GroupInput) -> OracleReport:
        table = self.table_of(group, 'oracle')
        report = berkovich_check(table, self.settings.oracle_bound, self.settings.threads)
        return self._report('oracle', group) | {
            'kappa': report.kappa,
            'mu': report.mu,
            'simple': report.simple,
            'berkovich_holds': report.holds,
        }

    def perm_rep(self, group: GroupInput, degree: int) -> PermRepReport:
        kappa = self.kappa_result(group).kappa
        return self._report('perm-rep', group) | {
            'kappa': kappa,
            'degree': degree,
            'representable': representable_in_symmetric(kappa, degree),
        }

    def tree_rep(self, group: GroupInput, tree: Tree, tree_name: str) -> TreeRepReport:
        kappa = self.kappa_result(group).kappa
        return self._report('tree-rep', group) | {
            'tree': {'name': tree_name, 'vertices': tree.n},
            'kappa': kappa,
            'max_multiplicity': max_symmetric_degree(tree),
            'automorphism_order': automorphism_order(tree),
            'representable': representable_on_tree(kappa, tree),
        }
