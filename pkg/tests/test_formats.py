"""Tests for the text file formats in models/formats.py"""

import pytest

from core.errors import CayleyTableError, FileFormatError, TreeFormatError
from models import catalog
from models.formats import (
    format_cayley,
    format_cycles,
    format_generators,
    format_tree,
    parse_cayley,
    parse_cycles,
    parse_generators,
    parse_tree,
)
from models.permutation import Permutation
from models.tree_rep import Tree


class TestCycles:
    """1-based cycle notation."""

    def test_parse(self):
        """1-based cycles with optional spaces parse to 0-based images."""
        p = parse_cycles('(1,2)(3, 4, 5)', 5)
        assert p.images == (1, 0, 3, 4, 2)

    def test_identity(self):
        """'()' is the identity in both directions."""
        assert parse_cycles('()', 4).is_identity
        assert format_cycles(Permutation.identity(4)) == '()'

    def test_format(self):
        """Cycles are printed 1-based without spaces."""
        assert format_cycles(Permutation((1, 2, 0, 3))) == '(1,2,3)'

    @pytest.mark.parametrize('text', ['', '1,2', '(1,2', '(1,a)', '(1,2)x', '(1,1)', '(0,1)', '(1,6)'])
    def test_malformed(self, text):
        """Unbalanced, non-numeric, repeated or out-of-range cycles are rejected."""
        with pytest.raises(ValueError):
            parse_cycles(text, 5)


class TestGeneratorFile:
    """'degree n' followed by one permutation per line."""

    def test_parse(self):
        """Comments and blank lines are skipped."""
        group = parse_generators("# S4\ndegree 4\n(1,2)\n\n(1,2,3,4)  # 4-cycle\n")
        assert group.degree == 4
        assert group.order == 24

    def test_no_generators_is_trivial(self):
        """A header with no generators gives the trivial group."""
        assert parse_generators("degree 3\n").order == 1

    def test_bad_header(self):
        """A wrong header reports its line number."""
        with pytest.raises(FileFormatError) as e:
            parse_generators("# comment\nsize 4\n(1,2)\n")
        assert e.value.line == 2

    def test_bad_line_number(self):
        """A point above the degree reports the generator's line."""
        with pytest.raises(FileFormatError) as e:
            parse_generators("degree 4\n(1,2)\n(1,5)\n")
        assert e.value.line == 3
        assert str(e.value).startswith('line 3: ')

    def test_empty(self):
        """A file with no content is rejected."""
        with pytest.raises(FileFormatError):
            parse_generators("\n# nothing\n")

    def test_format_is_parseable(self):
        """Formatted generators parse back to the same generators."""
        group = catalog.alternating(5)
        assert parse_generators(format_generators(group)).generators == group.generators


class TestCayleyFile:
    """'order m' followed by m rows."""

    def test_parse(self):
        """A well-formed table parses and validates."""
        group = parse_cayley("order 3\n0 1 2\n1 2 0\n2 0 1\n")
        assert group.size == 3

    def test_row_count(self):
        """A missing row is reported on the line after the last row."""
        with pytest.raises(FileFormatError) as e:
            parse_cayley("order 3\n0 1 2\n1 2 0\n")
        assert e.value.line == 4

    def test_extra_row(self):
        """A surplus row is reported on its own line."""
        with pytest.raises(FileFormatError) as e:
            parse_cayley("order 1\n0\n0\n")
        assert e.value.line == 3

    def test_row_width(self):
        """A short row reports its line."""
        with pytest.raises(FileFormatError) as e:
            parse_cayley("order 2\n0 1\n1\n")
        assert e.value.line == 3

    def test_non_integer(self):
        """Non-integer entries are rejected."""
        with pytest.raises(FileFormatError):
            parse_cayley("order 2\n0 1\n1 x\n")

    def test_out_of_range(self):
        """An entry outside 0..n-1 reports its line."""
        with pytest.raises(FileFormatError) as e:
            parse_cayley("order 2\n0 1\n1 2\n")
        assert e.value.line == 3

    def test_axiom_failure(self):
        """A well-formed table that is not a group raises CayleyTableError."""
        with pytest.raises(CayleyTableError):
            parse_cayley("order 2\n0 1\n1 1\n")

    def test_format_is_parseable(self, entries):
        """A formatted table parses back to the same table."""
        group = entries('symmetric:3').cayley
        assert parse_cayley(format_cayley(group)).table.tolist() == group.table.tolist()


class TestTreeFile:
    """'vertices n' followed by n-1 edges."""

    def test_parse(self):
        """Edges are read as 1-based pairs."""
        tree = parse_tree("vertices 3\n1 2\n2 3\n")
        assert tree == Tree(3, ((1, 2), (2, 3)))

    def test_single_vertex(self):
        """A one-vertex tree has no edges."""
        assert parse_tree("vertices 1\n").n == 1

    def test_edge_count(self):
        """A tree on n vertices needs n-1 edges."""
        with pytest.raises(TreeFormatError):
            parse_tree("vertices 3\n1 2\n")

    def test_bad_edge_line(self):
        """A malformed edge reports its line."""
        with pytest.raises(FileFormatError) as e:
            parse_tree("vertices 3\n1 2\n2-3\n")
        assert e.value.line == 3

    def test_endpoint_range(self):
        """Endpoints above the vertex count are rejected."""
        with pytest.raises(FileFormatError):
            parse_tree("vertices 3\n1 2\n2 4\n")

    def test_cycle(self):
        """Edges that close a cycle do not form a tree."""
        with pytest.raises(TreeFormatError):
            parse_tree("vertices 4\n1 2\n2 3\n3 1\n")

    def test_format(self):
        """A tree is written with its header and one edge per line."""
        assert format_tree(Tree(3, ((1, 2), (2, 3)))) == "vertices 3\n1 2\n2 3\n"
