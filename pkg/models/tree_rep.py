"""Group representability on trees.

The automorphism group of a tree rooted at its center is built from direct
products and wreath products A wr Sym(m), one for each class of m pairwise
isomorphic child subtrees. A group G has a nontrivial homomorphism into such
a product iff it has one into some Sym(m) occurring in it, that is iff
kappa(G) <= m*, the largest sibling multiplicity anywhere in the tree.

Bicentral trees are rooted at a virtual vertex 0 subdividing the central
edge; tree vertices are 1-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import factorial

import networkx as nx

from core.errors import InputError, TreeFormatError

VIRTUAL_ROOT = 0


@dataclass(frozen=True)
class Tree:
    """An unrooted tree on vertices 1..n given by its n-1 edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, 'edges', edges)
        if self.n < 1:
            raise TreeFormatError(f"a tree needs at least one vertex, got {self.n}")
        if len(edges) != self.n - 1:
            raise TreeFormatError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(edges)}")
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise TreeFormatError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise TreeFormatError(f"self-loop at vertex {u}")
        if not nx.is_tree(self.graph):
            raise TreeFormatError("edges contain a cycle or leave the graph disconnected")

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def relabel(self, mapping: dict[int, int]) -> Tree:
        """The same tree with vertex v renamed mapping[v]."""
        return Tree(self.n, tuple((mapping[u], mapping[v]) for u, v in self.edges))


@dataclass(frozen=True)
class CanonicalCode:
    """AHU codes of the center-rooted tree.

    Attributes:
        root: The center vertex, or VIRTUAL_ROOT for bicentral trees
        codes: Vertex -> code string of the subtree below it
        multiplicities: Vertex -> multiplicities of its child isomorphism
            classes, largest first
        automorphisms: Vertex -> order of the automorphism group of its subtree
    """
    root: int
    codes: dict[int, str]
    multiplicities: dict[int, tuple[int, ...]]
    automorphisms: dict[int, int]

    @property
    def root_code(self) -> str:
        return self.codes[self.root]


def center(tree: Tree) -> tuple[int, ...]:
    """The one or two central vertices, sorted."""
    return tuple(sorted(nx.center(tree.graph)))


def _rooted(tree: Tree) -> tuple[nx.Graph, int]:
    centers = center(tree)
    if len(centers) == 1:
        return tree.graph, centers[0]
    g = tree.graph.copy()
    a, b = centers
    g.remove_edge(a, b)
    g.add_edge(VIRTUAL_ROOT, a)
    g.add_edge(VIRTUAL_ROOT, b)
    return g, VIRTUAL_ROOT


def ahu_canonize(tree: Tree) -> CanonicalCode:
    """Bottom-up AHU codes with children's codes sorted before concatenation."""
    graph, root = _rooted(tree)
    parent = dict(nx.bfs_predecessors(graph, root))
    children: dict[int, list[int]] = {v: [] for v in graph}
    for child, p in parent.items():
        children[p].append(child)

    codes: dict[int, str] = {}
    multiplicities: dict[int, tuple[int, ...]] = {}
    automorphisms: dict[int, int] = {}
    for v in nx.dfs_postorder_nodes(graph, root):
        child_codes = sorted(codes[c] for c in children[v])
        codes[v] = '(' + ''.join(child_codes) + ')'
        counts = Counter(child_codes)
        multiplicities[v] = tuple(sorted(counts.values(), reverse=True))
        aut = 1
        representative = {codes[c]: c for c in children[v]}
        for code, m in counts.items():
            aut *= factorial(m) * automorphisms[representative[code]] ** m
        automorphisms[v] = aut
    return CanonicalCode(root=root, codes=codes, multiplicities=multiplicities, automorphisms=automorphisms)


def max_symmetric_degree(tree: Tree) -> int:
    """Largest multiplicity of isomorphic sibling subtrees (1 when Aut is trivial)."""
    code = ahu_canonize(tree)
    return max([1] + [m[0] for m in code.multiplicities.values() if m])


def automorphism_order(tree: Tree) -> int:
    return ahu_canonize(tree).automorphisms[_rooted(tree)[1]]


def representable_on_tree(kappa: int, tree: Tree) -> bool:
    """True iff a group with this kappa maps nontrivially into Aut(tree).

    Raises:
        InputError: kappa < 2
    """
    if kappa < 2:
        raise InputError(f"kappa must be at least 2, got {kappa}")
    return kappa <= max_symmetric_degree(tree)
