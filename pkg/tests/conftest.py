"""Pytest configuration and fixtures for kappa toolkit tests."""

from pathlib import Path

import pytest

from models import catalog
from models.lattice import subgroup_lattice


@pytest.fixture
def project_root():
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path."""
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write


@pytest.fixture(scope='session')
def entries():
    """Catalog entry cache keyed by spec; tables are built once per session."""
    cache: dict[str, catalog.CatalogEntry] = {}

    def _entry(spec: str) -> catalog.CatalogEntry:
        if spec not in cache:
            cache[spec] = catalog.make(spec)
        return cache[spec]
    return _entry


@pytest.fixture(scope='session')
def lattices(entries):
    """Full subgroup lattices keyed by spec, computed once per session."""
    cache: dict[str, list] = {}

    def _lattice(spec: str):
        if spec not in cache:
            cache[spec] = subgroup_lattice(entries(spec).cayley)
        return cache[spec]
    return _lattice
