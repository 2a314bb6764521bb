"""Known-facts fixtures for the catalog corpus.

This module recomputes brute-force kappa, mu and simplicity for the catalog
corpus, persists them with provenance, and reports on the stored file.
"""

from datetime import datetime, timedelta
from typing import Iterable

import click

from core.config import FIXTURES_FILE, FIXTURES_SCHEMA_VERSION, Settings, load_fixtures, save_fixtures
from core.errors import OracleBoundError
from models import catalog
from models.lattice import berkovich_check, minimal_index_subgroups
from models.types import FixturesInfo


def compute_facts(entry: catalog.CatalogEntry, settings: Settings) -> dict:
    """Oracle facts for one catalog entry.

    Raises:
        OracleBoundError: the order exceeds the oracle bound
    """
    if entry.cayley is None or entry.order > settings.oracle_bound:
        raise OracleBoundError(f"{entry.name} has order {entry.order}, above the oracle bound {settings.oracle_bound}")
    report = berkovich_check(entry.cayley, bound=settings.oracle_bound, threads=settings.threads)
    minimal = minimal_index_subgroups(entry.cayley, simple_bound=settings.simple_bound, threads=settings.threads)
    return {
        'order': report.order,
        'kappa': report.kappa,
        'mu': report.mu,
        'simple': report.simple,
        'berkovich_holds': report.holds,
        'minimal_index_count': len(minimal),
    }


def regenerate_fixtures(settings: Settings, names: Iterable[str] = catalog.CORPUS) -> dict:
    """Recompute facts for every named catalog group and save them.

    Groups above the oracle bound are skipped with a warning.

    Returns:
        The saved fixtures dict
    """
    entries = {}
    for name in names:
        entry = catalog.make(name, cayley_bound=settings.cayley_bound)
        try:
            entries[entry.name] = compute_facts(entry, settings)
        except OracleBoundError as e:
            click.secho(f"⚠ Skipped {entry.name}: {e}", fg='yellow', err=True)
            continue
        facts = entries[entry.name]
        click.echo(f"✓ {entry.name}: order {facts['order']}, κ={facts['kappa']}, μ={facts['mu']}")

    data = {
        'schema_version': FIXTURES_SCHEMA_VERSION,
        'provenance': {
            'generator': 'kappa regen-fixtures',
            'generated_at': datetime.now().isoformat(timespec='seconds'),
            'oracle_bound': settings.oracle_bound,
            'simple_bound': settings.simple_bound,
            'seed': settings.seed,
        },
        'entries': entries,
    }
    save_fixtures(data)
    click.echo(f"\nFixtures saved to {FIXTURES_FILE}")
    return data


def facts_for(name: str, data: dict | None = None) -> dict:
    """Stored facts for a canonical catalog name ({} when absent)."""
    data = data if data is not None else load_fixtures()
    return dict(data.get('entries', {}).get(name, {}))


def get_fixtures_info(data: dict | None = None, max_age_days: int = 30) -> FixturesInfo:
    """Information about the stored fixtures.

    Args:
        data: Fixtures dict (loaded from disk when None)
        max_age_days: Age after which the fixtures count as stale
    """
    data = data if data is not None else load_fixtures()
    provenance = data.get('provenance', {})
    entries = data.get('entries', {})

    if not provenance:
        return {
            'exists': False,
            'generated_at': None,
            'age_hours': None,
            'is_stale': True,
            'count': len(entries),
            'oracle_bound': None,
        }

    generated_at = provenance.get('generated_at')
    age_hours = None
    is_stale = True
    if generated_at:
        try:
            age = datetime.now() - datetime.fromisoformat(generated_at)
            age_hours = age.total_seconds() / 3600
            is_stale = age > timedelta(days=max_age_days)
        except (ValueError, TypeError):
            age_hours = None
            is_stale = True

    return {
        'exists': True,
        'generated_at': generated_at,
        'age_hours': age_hours,
        'is_stale': is_stale,
        'count': len(entries),
        'oracle_bound': provenance.get('oracle_bound'),
    }
