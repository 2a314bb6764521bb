"""Configuration management.

This module handles:
- Settings (search bounds, Monte Carlo trials, seed, threads) from the
  environment and an optional .env file
- Loading/saving the known-facts fixtures file
"""

import json
import os
import threading
from dataclasses import dataclass, fields, replace
from pathlib import Path

import click

from core.errors import ConfigError

# Fixture file paths
FIXTURES_FILE = Path(__file__).parent.parent / 'fixtures' / 'known_facts.json'
FIXTURES_SCHEMA_VERSION = 1

ENV_PREFIX = 'KAPPA_'


@dataclass(frozen=True)
class Settings:
    """Bounds and knobs shared by every command.

    Attributes:
        cayley_bound: Largest order for which a Cayley table is built
        oracle_bound: Largest order accepted by the brute-force oracles
        simple_bound: Largest order accepted by the maximal-subgroup search
            of simple groups
        trials: Monte Carlo rounds of the simplicity test
        seed: Seed of every random choice
        threads: Worker threads for subgroup enumeration
        sample_size: Random elements drawn for element-order fingerprints
    """
    cayley_bound: int = 5000
    oracle_bound: int = 400
    simple_bound: int = 700
    trials: int = 20
    seed: int = 0
    threads: int = 1
    sample_size: int = 200

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            minimum = 0 if f.name == 'seed' else 1
            if not isinstance(value, int) or value < minimum:
                raise ConfigError(f"{f.name} must be an integer >= {minimum}, got {value!r}")

    @classmethod
    def from_environment(cls) -> 'Settings':
        """Settings from KAPPA_* environment variables (after loading .env).

        Raises:
            ConfigError: a variable is not a valid integer
        """
        _load_dotenv_safe()
        values = {}
        for f in fields(cls):
            raw = os.getenv(ENV_PREFIX + f.name.upper())
            if raw is None or not raw.strip():
                continue
            try:
                values[f.name] = int(raw.strip())
            except ValueError:
                raise ConfigError(f"{ENV_PREFIX}{f.name.upper()} must be an integer, got '{raw}'") from None
        return cls(**values)

    def override(self, **overrides) -> 'Settings':
        """Copy with the given non-None values replaced (command-line flags)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _load_dotenv_safe(timeout: float = 3.0) -> None:
    """Load .env with a timeout so a blocked mount cannot hang the CLI."""
    from dotenv import load_dotenv
    done = threading.Event()

    def _load():
        load_dotenv()
        done.set()

    threading.Thread(target=_load, daemon=True).start()
    if not done.wait(timeout=timeout):
        click.secho(
            "⚠ Warning: .env file timed out; using defaults and existing environment variables.",
            fg='yellow',
            err=True,
        )


def load_fixtures() -> dict:
    """Load the known-facts fixtures file.

    Returns:
        Dict with 'schema_version', 'entries' and optionally 'provenance'
    """
    if FIXTURES_FILE.exists():
        with open(FIXTURES_FILE, 'r') as f:
            return json.load(f)
    return {'schema_version': FIXTURES_SCHEMA_VERSION, 'entries': {}}


def save_fixtures(data: dict):
    """Save the fixtures file.

    Args:
        data: Fixtures dict to save
    """
    FIXTURES_FILE.parent.mkdir(parents=True, exist_ok=True)

    with open(FIXTURES_FILE, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True)
