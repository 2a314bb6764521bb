"""Core functionality for the kappa toolkit.

This package contains:
- analyzer: GroupAnalyzer façade used by every command
- config: Settings, .env loading and the fixtures file
- errors: Exception hierarchy and exit codes
- fixtures: Known-facts regeneration and inspection
"""
