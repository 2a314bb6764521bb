"""CLI command modules.

This package contains:
- analysis: κ, composition factors, μ, subgroup searches, oracle, perm-rep
- tree: Tree representability
- catalog: Catalog listing and the μ table
- fixtures: Known-facts commands (regen-fixtures, fixtures-info)
- helpers: Shared options, error handling and output
- setup: Coloured CLI group and help
"""
