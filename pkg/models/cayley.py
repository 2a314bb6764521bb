"""Groups given by multiplication tables.

Elements are the indices 0..m-1 with the identity at index 0, and
``table[a, b]`` is the index of the product ab. Subgroups are SubgroupSet
values: an integer bitset over the element indices plus, when known, a
generating set used to extend them cheaply.

This module provides:
- CayleyGroup / validate_cayley: checked construction from raw tables
- CayleyGroup.from_permutation_group: table of a permutation group
- generated_subgroup, join, intersection, product_set
- is_maximal, core, is_normal, quotient, subgroup_table
- maximal_normal_subgroups and is_simple_cayley
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from core.errors import (
    CayleyTableError,
    InconsistencyError,
    InputError,
    NotNormalError,
    OracleBoundError,
    TrivialGroupError,
)
from models.permutation import Permutation, PermGroup
from models.utils import bits_from_mask, mask_from_bits


# ===== Subgroups =====

@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of a Cayley group, identified by its membership bitset.

    Attributes:
        bits: Bit i is set iff element i belongs to the subgroup
        group_size: Order of the ambient group
        generators: Element indices generating the subgroup (empty if unknown
            or trivial); not part of the subgroup's identity
    """
    bits: int
    group_size: int
    generators: tuple[int, ...] = field(default=(), compare=False)

    @property
    def canonical_key(self) -> int:
        return self.bits

    @cached_property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def index(self) -> int:
        return self.group_size // self.size

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.mask))

    @cached_property
    def mask(self) -> np.ndarray:
        return mask_from_bits(self.bits, self.group_size)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.size, self.elements)

    def __contains__(self, x: int) -> bool:
        return bool((self.bits >> int(x)) & 1)

    def issubset(self, other: SubgroupSet) -> bool:
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return f"SubgroupSet(size={self.size}, elements={list(self.elements)})"


def sort_subgroups(subgroups: Iterable[SubgroupSet]) -> list[SubgroupSet]:
    """Deduplicate by canonical key and order by (size, element list)."""
    unique = {h.bits: h for h in subgroups}
    return sorted(unique.values(), key=lambda h: h.sort_key)


# ===== Groups =====

@dataclass(frozen=True, eq=False)
class CayleyGroup:
    """A finite group given by its multiplication table.

    Attributes:
        table: m x m array of element indices; identity at index 0
        labels: Optional permutation realising each element (tables built
            from permutation groups)
        relabeled_from: Original index of the identity when the input table
            had to be relabeled, else None
    """
    table: np.ndarray
    labels: tuple[Permutation, ...] | None = None
    relabeled_from: int | None = None

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    @property
    def full_bits(self) -> int:
        return (1 << self.size) - 1

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1)

    @cached_property
    def element_order(self) -> np.ndarray:
        m = self.size
        arange = np.arange(m)
        orders = np.zeros(m, dtype=np.int64)
        power = arange.copy()
        for k in range(1, m + 1):
            hit = (power == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            power = self.table[power, arange]
        return orders

    @cached_property
    def _conjugacy(self) -> tuple[tuple[int, ...], np.ndarray]:
        m = self.size
        arange = np.arange(m)
        class_of = np.full(m, -1, dtype=np.int64)
        class_bits = []
        for x in range(m):
            if class_of[x] >= 0:
                continue
            # g^-1 x g for every g
            conjugates = self.table[self.table[self.inv, x], arange]
            class_of[conjugates] = len(class_bits)
            mask = np.zeros(m, dtype=bool)
            mask[conjugates] = True
            class_bits.append(bits_from_mask(mask))
        return tuple(class_bits), class_of

    @property
    def class_bits(self) -> tuple[int, ...]:
        """Conjugacy classes as bitsets, ordered by least element."""
        return self._conjugacy[0]

    @property
    def class_of(self) -> np.ndarray:
        return self._conjugacy[1]

    @cached_property
    def class_closures(self) -> tuple[SubgroupSet, ...]:
        """Normal closure of each conjugacy class, aligned with class_bits."""
        return tuple(
            generated_subgroup(self, np.flatnonzero(mask_from_bits(bits, self.size)))
            for bits in self.class_bits
        )

    @cached_property
    def generating_set(self) -> tuple[int, ...]:
        """A small generating set of the whole group (greedy, highest order first)."""
        candidates = sorted(range(self.size), key=lambda x: (-int(self.element_order[x]), x))
        return generated_subgroup(self, candidates).generators

    @property
    def whole(self) -> SubgroupSet:
        return SubgroupSet(self.full_bits, self.size, self.generating_set)

    @property
    def trivial(self) -> SubgroupSet:
        return SubgroupSet(1, self.size, ())

    def _close(self, mask: np.ndarray, gens: Sequence[int], extra: Iterable[int]) -> tuple[np.ndarray, list[int]]:
        """Dimino extension of the subgroup in mask (generated by gens) by extra elements."""
        table = self.table
        mask = mask.copy()
        gens = list(gens)
        for g in extra:
            g = int(g)
            if mask[g]:
                continue
            gens.append(g)
            current = np.flatnonzero(mask)
            reps = [0]
            i = 0
            while i < len(reps):
                r = reps[i]
                for s in gens:
                    x = int(table[r, s])
                    if not mask[x]:
                        mask[table[current, x]] = True
                        reps.append(x)
                i += 1
        return mask, gens

    @classmethod
    def from_permutation_group(cls, group: PermGroup, bound: int | None = None) -> CayleyGroup:
        """Multiplication table of a permutation group (regular representation).

        Elements are numbered by stabilizer-chain enumeration with the identity
        first; each product is located by its images of the base points.

        Raises:
            OracleBoundError: the group order exceeds bound
        """
        chain = group.chain
        m = chain.order
        if bound is not None and m > bound:
            raise OracleBoundError(f"group of order {m} exceeds the Cayley table bound {bound}")
        elements = chain.element_array()
        base = np.array(chain.base, dtype=np.int64)
        labels = tuple(Permutation._trusted(tuple(int(x) for x in row)) for row in elements)
        if m == 1:
            return cls(table=_frozen(np.zeros((1, 1))), labels=labels)

        base_images = elements[:, base]
        weights = np.random.default_rng(0x6B61).integers(1, 2**62, size=len(base), dtype=np.uint64)
        codes = (base_images.astype(np.uint64) * weights).sum(axis=1)
        order = np.argsort(codes, kind='stable')
        sorted_codes = codes[order]
        table = np.empty((m, m), dtype=np.int32)
        if np.any(sorted_codes[1:] == sorted_codes[:-1]):
            lookup = {tuple(row): i for i, row in enumerate(base_images.tolist())}
            for i in range(m):
                products = elements[:, elements[i, base]]
                table[i] = [lookup[tuple(row)] for row in products.tolist()]
        else:
            for i in range(m):
                # compose(e_i, e_j) sends b to e_j[e_i[b]]
                products = elements[:, elements[i, base]]
                positions = np.searchsorted(sorted_codes, (products.astype(np.uint64) * weights).sum(axis=1))
                found = order[np.minimum(positions, m - 1)]
                if not np.array_equal(base_images[found], products):
                    raise InconsistencyError("element lookup failed while building the Cayley table")
                table[i] = found
        return cls(table=_frozen(table), labels=labels)


def _frozen(table: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=np.int32)
    table.setflags(write=False)
    return table


# ===== Validation =====

def validate_cayley(raw, check_associativity: bool = True) -> CayleyGroup:
    """Check the group axioms on a raw multiplication table.

    A table whose identity is not element 0 is relabeled by swapping the
    identity with 0; the original index is kept in ``relabeled_from``.

    Args:
        raw: Square matrix (nested lists or array) of 0-based element indices
        check_associativity: Run the full O(m^3) associativity check

    Returns:
        A validated CayleyGroup

    Raises:
        CayleyTableError: with the failed axiom and a witness
    """
    try:
        table = np.array(raw, dtype=np.int64)
    except (TypeError, ValueError):
        raise CayleyTableError("table entries must be integers", axiom='entries') from None
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise CayleyTableError(f"table must be a nonempty square matrix, got shape {table.shape}", axiom='shape')
    m = table.shape[0]
    bad = np.argwhere((table < 0) | (table >= m))
    if len(bad):
        a, b = (int(x) for x in bad[0])
        raise CayleyTableError(f"entry ({a},{b}) = {table[a, b]} outside 0..{m - 1}", axiom='entries', witness=(a, b))

    arange = np.arange(m)
    for name, matrix in (('row', table), ('column', table.T)):
        ok = (np.sort(matrix, axis=1) == arange).all(axis=1)
        if not ok.all():
            line = int(np.flatnonzero(~ok)[0])
            raise CayleyTableError(f"not a Latin square: {name} {line} repeats an element",
                                   axiom='latin', witness=(line,))

    identities = np.flatnonzero((table == arange).all(axis=1) & (table.T == arange).all(axis=1))
    if len(identities) == 0:
        raise CayleyTableError("no identity element", axiom='identity')
    e = int(identities[0])
    relabeled_from = None
    if e != 0:
        sigma = arange.copy()
        sigma[0], sigma[e] = e, 0
        table = sigma[table[np.ix_(sigma, sigma)]]
        relabeled_from = e

    if check_associativity:
        for a in range(m):
            left = table[table[a][:, None], arange[None, :]]
            right = table[a][table]
            mismatch = np.argwhere(left != right)
            if len(mismatch):
                b, c = (int(x) for x in mismatch[0])
                raise CayleyTableError(f"associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})",
                                       axiom='associativity', witness=(a, b, c))

    return CayleyGroup(table=_frozen(table), relabeled_from=relabeled_from)


# ===== Subgroup operations =====

def generated_subgroup(group: CayleyGroup, seeds: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing the seeds."""
    seeds = [int(s) for s in seeds]
    for s in seeds:
        if not 0 <= s < group.size:
            raise InputError(f"element {s} outside 0..{group.size - 1}")
    mask = np.zeros(group.size, dtype=bool)
    mask[0] = True
    mask, gens = group._close(mask, [], seeds)
    return SubgroupSet(bits_from_mask(mask), group.size, tuple(gens))


def generators_of(group: CayleyGroup, subgroup: SubgroupSet) -> tuple[int, ...]:
    """A generating set of the subgroup (its recorded one if present)."""
    if subgroup.generators or subgroup.size == 1:
        return subgroup.generators
    return generated_subgroup(group, subgroup.elements).generators


def join(group: CayleyGroup, subgroup: SubgroupSet, extra: Iterable[int]) -> SubgroupSet:
    """Subgroup generated by a subgroup and extra elements."""
    gens = generators_of(group, subgroup)
    mask, gens = group._close(subgroup.mask, gens, extra)
    return SubgroupSet(bits_from_mask(mask), group.size, tuple(gens))


def intersection(a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    return SubgroupSet(a.bits & b.bits, a.group_size)


def product_set(group: CayleyGroup, a: SubgroupSet, b: SubgroupSet) -> int:
    """Bitset of the set product AB = {xy : x in A, y in B}."""
    products = group.table[np.ix_(a.elements, b.elements)].ravel()
    mask = np.zeros(group.size, dtype=bool)
    mask[products] = True
    return bits_from_mask(mask)


def is_subgroup(group: CayleyGroup, bits: int) -> bool:
    """Closure, identity and Lagrange check on an arbitrary bitset."""
    if not bits & 1:
        return False
    elements = np.flatnonzero(mask_from_bits(bits, group.size))
    if group.size % len(elements):
        return False
    products = group.table[np.ix_(elements, elements)].ravel()
    return bits_from_mask(np.isin(np.arange(group.size), products)) == bits


def is_maximal(group: CayleyGroup, subgroup: SubgroupSet) -> bool:
    """True iff adding any element outside the subgroup generates the whole group.

    Raises:
        InputError: the subgroup is the whole group
    """
    if subgroup.bits == group.full_bits:
        raise InputError("a maximal subgroup must be proper")
    seen = subgroup.mask.copy()
    members = np.array(subgroup.elements)
    for g in range(group.size):
        if seen[g]:
            continue
        # <H, g> depends only on the coset Hg
        seen[group.table[members, g]] = True
        if join(group, subgroup, [g]).bits != group.full_bits:
            return False
    return True


def core(group: CayleyGroup, subgroup: SubgroupSet) -> SubgroupSet:
    """Largest normal subgroup inside the subgroup: the union of classes it contains."""
    bits = 0
    for class_bits in group.class_bits:
        if class_bits & ~subgroup.bits == 0:
            bits |= class_bits
    return SubgroupSet(bits, group.size, subgroup.generators if bits == subgroup.bits else ())


def is_normal(group: CayleyGroup, subgroup: SubgroupSet) -> bool:
    return core(group, subgroup).bits == subgroup.bits


class Quotient(NamedTuple):
    """Factor group with its projection map."""
    group: CayleyGroup
    projection: np.ndarray
    representatives: tuple[int, ...]


def quotient(group: CayleyGroup, normal: SubgroupSet) -> Quotient:
    """Coset multiplication table G/N with the identity coset at index 0.

    Raises:
        NotNormalError: N is not normal in G
    """
    if not is_normal(group, normal):
        raise NotNormalError("quotient requires a normal subgroup")
    table = group.table
    members = np.array(normal.elements)
    coset_of = np.full(group.size, -1, dtype=np.int64)
    reps: list[int] = []
    for x in range(group.size):
        if coset_of[x] < 0:
            coset_of[table[members, x]] = len(reps)
            reps.append(x)
    q_table = coset_of[table[np.ix_(reps, reps)]]
    if not np.array_equal(coset_of[table], q_table[coset_of[:, None], coset_of[None, :]]):
        raise InconsistencyError("coset projection is not a homomorphism")
    return Quotient(group=CayleyGroup(table=_frozen(q_table)), projection=coset_of, representatives=tuple(reps))


def subgroup_table(group: CayleyGroup, subgroup: SubgroupSet) -> tuple[CayleyGroup, np.ndarray]:
    """The subgroup as a group in its own right.

    Returns:
        (induced CayleyGroup, embedding array mapping new index -> old index)
    """
    elements = np.array(subgroup.elements, dtype=np.int64)
    index = np.full(group.size, -1, dtype=np.int64)
    index[elements] = np.arange(len(elements))
    table = index[group.table[np.ix_(elements, elements)]]
    labels = tuple(group.labels[i] for i in elements) if group.labels else None
    return CayleyGroup(table=_frozen(table), labels=labels), elements


def pullback(group: CayleyGroup, quotient_data: Quotient, subgroup: SubgroupSet) -> SubgroupSet:
    """Preimage of a subgroup of G/N under the projection."""
    mask = subgroup.mask[quotient_data.projection]
    gens = tuple(quotient_data.representatives[g] for g in subgroup.generators)
    normal_gens = generators_of(group, SubgroupSet(bits_from_mask(quotient_data.projection == 0), group.size))
    return SubgroupSet(bits_from_mask(mask), group.size, tuple(dict.fromkeys(gens + normal_gens)))


# ===== Normal structure =====

def is_simple_cayley(group: CayleyGroup) -> bool:
    """Exact simplicity test: every nontrivial class must normally generate G.

    The normal closure of an element equals that of its class, so one
    closure per class decides all m-1 elements.

    Raises:
        TrivialGroupError: for the trivial group
    """
    if group.size == 1:
        raise TrivialGroupError("simplicity is undefined for the trivial group")
    full = group.full_bits
    return all(c.bits == full for i, c in enumerate(group.class_closures) if i != group.class_of[0])


def maximal_normal_subgroups(group: CayleyGroup, verify: bool = True) -> list[SubgroupSet]:
    """All maximal normal subgroups (G/N simple), sorted by (size, elements).

    Searches upward from the trivial subgroup and the proper class closures,
    joining with class closures until only G lies above.

    Raises:
        TrivialGroupError: for the trivial group
        InconsistencyError: a returned quotient failed the simplicity check
    """
    if group.size == 1:
        raise TrivialGroupError("the trivial group has no maximal normal subgroup")
    full = group.full_bits
    closures = sort_subgroups(c for c in group.class_closures if c.bits != full and c.size > 1)

    seen: dict[int, SubgroupSet] = {}
    queue: deque[SubgroupSet] = deque()
    for start in [group.trivial, *closures]:
        if start.bits not in seen:
            seen[start.bits] = start
            queue.append(start)

    maximal = []
    while queue:
        normal = queue.popleft()
        extendable = False
        for closure in closures:
            if closure.issubset(normal):
                continue
            joined = join(group, normal, closure.generators)
            if joined.bits == full:
                continue
            extendable = True
            if joined.bits not in seen:
                seen[joined.bits] = joined
                queue.append(joined)
        if not extendable:
            maximal.append(normal)

    result = sort_subgroups(maximal)
    if verify:
        for normal in result:
            if not is_simple_cayley(quotient(group, normal).group):
                raise InconsistencyError(f"quotient by normal subgroup of order {normal.size} is not simple")
    return result
