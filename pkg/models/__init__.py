"""Group-theory models and utility functions.

This package contains:
- permutation: Permutations, stabilizer chains, orbits, blocks, actions
- cayley: Cayley tables, subgroups, normal structure
- lattice: Subgroup lattice search and brute-force oracles
- simple_id: Simple group recognition and minimal degrees
- kappa: Composition factors, top quotients and κ
- tree_rep: Tree canonical forms and representability
- catalog: Named group constructors
- formats: Generator, Cayley table and tree file formats
- fields: Finite fields for the linear groups
- types: Report shapes for --json output
- utils: Number theory and fuzzy matching helpers
"""
