"""Type definitions for kappa-groups reports.

TypedDicts for the structured reports the analyzer builds and the
``--json`` output emits. Every top-level report carries ``schema_version``
and ``command``.
"""

from typing import TypedDict

REPORT_SCHEMA_VERSION = 1


class GroupInfo(TypedDict):
    """Where a group came from and how big it is."""
    source: str          # 'generators', 'cayley' or 'catalog'
    name: str            # file path or catalog spec
    order: int
    degree: int | None   # None for Cayley-table input


class SimpleInfo(TypedDict):
    name: str
    family: str
    order: int
    mu: int | None       # None when outside the shipped table


class WitnessInfo(TypedDict):
    simple: SimpleInfo
    kind: str
    description: str
    kernel_order: int


class KappaReport(TypedDict):
    schema_version: int
    command: str
    group: GroupInfo
    kappa: int
    witness: WitnessInfo
    complete: bool


class FactorsReport(TypedDict):
    schema_version: int
    command: str
    group: GroupInfo
    factors: list[SimpleInfo]
    steps: list[dict]


class MuReport(TypedDict):
    schema_version: int
    command: str
    group: GroupInfo
    simple: SimpleInfo
    sampled: bool


class SubgroupsReport(TypedDict):
    """Subgroups as sorted 0-based element lists of the Cayley table."""
    schema_version: int
    command: str
    group: GroupInfo
    index: int | None
    subgroups: list[list[int]]


class OracleReport(TypedDict):
    schema_version: int
    command: str
    group: GroupInfo
    kappa: int
    mu: int
    simple: bool
    berkovich_holds: bool


class PermRepReport(TypedDict):
    schema_version: int
    command: str
    group: GroupInfo
    kappa: int
    degree: int
    representable: bool


class TreeRepReport(TypedDict):
    schema_version: int
    command: str
    group: GroupInfo
    tree: dict
    kappa: int
    max_multiplicity: int
    automorphism_order: int
    representable: bool


class FixturesInfo(TypedDict):
    """Summary of the known-facts fixtures file."""
    exists: bool
    generated_at: str | None
    age_hours: float | None
    is_stale: bool
    count: int
    oracle_bound: int | None
