"""The generator, Cayley table and tree text formats.

Generator file:
    degree n
    (1,2)(3,4,5)
    ()
One permutation per nonempty line in 1-based disjoint-cycle notation;
whitespace is ignored and '#' starts a comment.

Cayley table file:
    order m
    followed by m lines of m whitespace-separated 0-based element indices.

Tree file:
    vertices n
    followed by n-1 lines 'u v' with 1-based endpoints.

Parse errors are FileFormatError carrying the 1-based line number.
"""

from __future__ import annotations

import re

from core.errors import FileFormatError, TreeFormatError
from models.cayley import CayleyGroup, validate_cayley
from models.permutation import Permutation, PermGroup
from models.tree_rep import Tree

_CYCLE = re.compile(r'\(([^()]*)\)')


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(line number, stripped content) for every nonempty, non-comment line."""
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            result.append((number, line))
    return result


def _header(lines: list[tuple[int, str]], keyword: str) -> int:
    if not lines:
        raise FileFormatError(f"empty file, expected '{keyword} N'", line=1)
    number, line = lines[0]
    parts = line.split()
    if len(parts) != 2 or parts[0].lower() != keyword or not parts[1].isdigit():
        raise FileFormatError(f"expected '{keyword} N', got '{line}'", line=number)
    value = int(parts[1])
    if value < 1:
        raise FileFormatError(f"{keyword} must be positive", line=number)
    return value


# ===== Permutations =====

def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as '(1,2)(3,4,5)' or '()'.

    Raises:
        ValueError: malformed notation, point out of range, or repeated point
    """
    compact = ''.join(text.split())
    if not compact or _CYCLE.sub('', compact):
        raise ValueError(f"not in cycle notation: '{text}'")
    cycles = []
    for body in _CYCLE.findall(compact):
        if not body:
            continue
        try:
            points = [int(p) - 1 for p in body.split(',')]
        except ValueError:
            raise ValueError(f"cycle '({body})' must list integers separated by commas") from None
        cycles.append(points)
    return Permutation.from_cycles(degree, cycles)


def format_cycles(perm: Permutation) -> str:
    """1-based cycle notation; '()' for the identity."""
    cycles = perm.cycles()
    if not cycles:
        return '()'
    return ''.join('(' + ','.join(str(p + 1) for p in c) + ')' for c in cycles)


def parse_generators(text: str) -> PermGroup:
    """Parse a generator file into a PermGroup.

    Raises:
        FileFormatError: with the offending line number
    """
    lines = _content_lines(text)
    degree = _header(lines, 'degree')
    generators = []
    for number, line in lines[1:]:
        try:
            generators.append(parse_cycles(line, degree))
        except ValueError as e:
            raise FileFormatError(str(e), line=number) from None
    return PermGroup(degree, tuple(generators) or (Permutation.identity(degree),))


def format_generators(group: PermGroup) -> str:
    lines = [f"degree {group.degree}"] + [format_cycles(g) for g in group.generators]
    return '\n'.join(lines) + '\n'


# ===== Cayley tables =====

def parse_cayley(text: str, check_associativity: bool = True) -> CayleyGroup:
    """Parse a Cayley table file and validate the group axioms.

    A table whose identity is not element 0 is relabeled; the result records
    the original identity index in ``relabeled_from``.

    Raises:
        FileFormatError: malformed rows (with line number)
        CayleyTableError: a group axiom fails
    """
    lines = _content_lines(text)
    order = _header(lines, 'order')
    rows = lines[1:]
    if len(rows) != order:
        line = rows[order][0] if len(rows) > order else (rows[-1][0] + 1 if rows else lines[0][0] + 1)
        raise FileFormatError(f"expected {order} table rows, got {len(rows)}", line=line)
    table = []
    for number, line in rows:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise FileFormatError(f"row must contain integers: '{line}'", line=number) from None
        if len(row) != order:
            raise FileFormatError(f"expected {order} entries, got {len(row)}", line=number)
        bad = [x for x in row if not 0 <= x < order]
        if bad:
            raise FileFormatError(f"entry {bad[0]} outside 0..{order - 1}", line=number)
        table.append(row)
    return validate_cayley(table, check_associativity=check_associativity)


def format_cayley(group: CayleyGroup) -> str:
    width = len(str(group.size - 1))
    lines = [f"order {group.size}"]
    lines += [' '.join(str(int(x)).rjust(width) for x in row) for row in group.table]
    return '\n'.join(lines) + '\n'


# ===== Trees =====

def parse_tree(text: str) -> Tree:
    """Parse a tree file.

    Raises:
        FileFormatError: malformed lines (with line number)
        TreeFormatError: the edges do not form a tree
    """
    lines = _content_lines(text)
    n = _header(lines, 'vertices')
    edges = []
    for number, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FileFormatError(f"expected 'u v', got '{line}'", line=number)
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise FileFormatError(f"endpoint outside 1..{n}", line=number)
        edges.append((u, v))
    if len(edges) != n - 1:
        raise TreeFormatError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
    return Tree(n, tuple(edges))


def format_tree(tree: Tree) -> str:
    lines = [f"vertices {tree.n}"] + [f"{u} {v}" for u, v in tree.edges]
    return '\n'.join(lines) + '\n'
