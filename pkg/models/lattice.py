"""Subgroup lattice search on Cayley tables.

Subgroups are discovered one conjugacy class at a time: a class
representative is extended by one element per right coset, and every new
subgroup found is immediately expanded to all of its conjugates. Generation
depth (the number of elements added to the trivial group) is tracked so the
same search yields both the full lattice and the 4-generated maximal
subgroups of a simple group.

This module provides:
- subgroup_lattice: every subgroup of a table group
- all_maximal_subgroups_simple: maximal subgroups of a simple group
- minimal_index_subgroups: all subgroups of index kappa
- brute_kappa / brute_mu: lattice-based oracles
- berkovich_check: simplicity versus kappa == mu on one group
- isaacs_index_inequality: the index identity |NU : NV| <= |U : V|
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from core.errors import (
    InputError,
    NotNormalError,
    NotSimpleError,
    OracleBoundError,
    TrivialGroupError,
    UnknownSimpleError,
)
from models.cayley import (
    CayleyGroup,
    SubgroupSet,
    core,
    generators_of,
    intersection,
    is_maximal,
    is_normal,
    is_simple_cayley,
    is_subgroup,
    join,
    maximal_normal_subgroups,
    product_set,
    pullback,
    quotient,
    sort_subgroups,
)
from models.simple_id import fingerprint_cayley, identify_simple, mu_of
from models.utils import bits_from_mask

# Every maximal subgroup of a finite simple group is generated by 4 elements.
MAX_GENERATION_DEPTH = 4


# ===== Conjugacy-class search =====

def conjugates(group: CayleyGroup, subgroup: SubgroupSet) -> list[SubgroupSet]:
    """All distinct conjugates g^-1 H g, each carrying conjugated generators."""
    table, inv = group.table, group.inv
    members = np.array(subgroup.elements)
    gens = np.array(generators_of(group, subgroup), dtype=np.int64)
    found: dict[int, SubgroupSet] = {}
    for g in range(group.size):
        image = table[table[inv[g], members], g]
        mask = np.zeros(group.size, dtype=bool)
        mask[image] = True
        bits = bits_from_mask(mask)
        if bits not in found:
            conj_gens = tuple(int(x) for x in table[table[inv[g], gens], g]) if len(gens) else ()
            found[bits] = SubgroupSet(bits, group.size, conj_gens)
    return list(found.values())


def _extensions(group: CayleyGroup, subgroup: SubgroupSet) -> list[SubgroupSet]:
    """Proper subgroups <H, g>, one g per right coset Hg outside H."""
    full = group.full_bits
    if subgroup.size == 1:
        # Up to conjugacy the cyclic subgroups come from class representatives
        candidates = [int(np.flatnonzero(group.class_of == c)[0]) for c in range(len(group.class_bits))]
        candidates = [x for x in candidates if x != 0]
    else:
        seen = subgroup.mask.copy()
        members = np.array(subgroup.elements)
        candidates = []
        for g in range(group.size):
            if not seen[g]:
                seen[group.table[members, g]] = True
                candidates.append(g)
    result = []
    for g in candidates:
        joined = join(group, subgroup, [g])
        if joined.bits != full:
            result.append(joined)
    return result


def _subgroup_classes(group: CayleyGroup, max_depth: int | None, threads: int = 1) -> tuple[list[SubgroupSet], dict[int, SubgroupSet]]:
    """Breadth-first search over conjugacy classes of proper subgroups.

    Args:
        group: The ambient group
        max_depth: Stop extending subgroups found at this generation depth
            (None for the full lattice)
        threads: Worker threads for extending one depth level

    Returns:
        (class representatives in discovery order, every proper subgroup by bitset)
    """
    trivial = group.trivial
    representatives = [trivial]
    everything: dict[int, SubgroupSet] = {trivial.bits: trivial}
    level = [trivial]
    depth = 0
    while level and (max_depth is None or depth < max_depth):
        if threads > 1 and len(level) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                batches = list(pool.map(lambda h: _extensions(group, h), level))
        else:
            batches = [_extensions(group, h) for h in level]
        next_level = []
        # Merge in level order so results do not depend on the thread count
        for batch in batches:
            for candidate in batch:
                if candidate.bits in everything:
                    continue
                for conjugate in conjugates(group, candidate):
                    everything.setdefault(conjugate.bits, conjugate)
                representatives.append(candidate)
                next_level.append(candidate)
        level = next_level
        depth += 1
    return representatives, everything


def subgroup_lattice(group: CayleyGroup, bound: int | None = None, threads: int = 1) -> list[SubgroupSet]:
    """Every subgroup of the group (including 1 and G), sorted by (size, elements).

    Raises:
        OracleBoundError: the group is larger than bound
    """
    if bound is not None and group.size > bound:
        raise OracleBoundError(f"lattice search on order {group.size} exceeds the oracle bound {bound}")
    _, everything = _subgroup_classes(group, max_depth=None, threads=threads)
    everything[group.full_bits] = group.whole
    return sort_subgroups(everything.values())


def all_maximal_subgroups_simple(group: CayleyGroup, bound: int | None = 700, threads: int = 1) -> list[SubgroupSet]:
    """Maximal subgroups of a simple group, sorted by (size, elements).

    Only subgroups generated by at most four elements are searched; each
    returned subgroup carries such a generating tuple in ``generators``.

    Raises:
        OracleBoundError: the group is larger than bound
        NotSimpleError: the group is not simple
    """
    if bound is not None and group.size > bound:
        raise OracleBoundError(f"maximal subgroup search on order {group.size} exceeds the bound {bound}")
    if group.size == 1 or not is_simple_cayley(group):
        raise NotSimpleError(f"group of order {group.size} is not simple")
    representatives, everything = _subgroup_classes(group, max_depth=MAX_GENERATION_DEPTH, threads=threads)
    maximal = []
    for rep in representatives:
        if is_maximal(group, rep):
            maximal.extend(everything[c.bits] for c in conjugates(group, rep))
    return sort_subgroups(maximal)


def maximal_subgroups(group: CayleyGroup, bound: int | None = None, threads: int = 1) -> list[SubgroupSet]:
    """Maximal subgroups of any group, read off the full lattice."""
    lattice = [h for h in subgroup_lattice(group, bound, threads) if h.bits != group.full_bits]
    return [h for h in lattice if not any(h.bits != k.bits and h.issubset(k) for k in lattice)]


# ===== Minimal-index subgroups =====

def minimal_index_subgroups(group: CayleyGroup, simple_bound: int | None = 700, threads: int = 1) -> list[SubgroupSet]:
    """All subgroups of minimal index, sorted by (size, elements).

    Every such subgroup contains a maximal normal subgroup N; for each N the
    maximal subgroups of the simple quotient G/N are pulled back and those of
    index kappa are kept. Quotients whose type is known to have a larger
    minimal degree are skipped.

    Raises:
        TrivialGroupError: for the trivial group
        OracleBoundError: a quotient that must be searched exceeds simple_bound
    """
    if group.size == 1:
        raise TrivialGroupError()
    quotients = []
    for normal in maximal_normal_subgroups(group):
        q = quotient(group, normal)
        try:
            mu = mu_of(identify_simple(fingerprint_cayley(q.group)))
        except UnknownSimpleError:
            mu = None
        quotients.append((mu, q))
    known = [mu for mu, _ in quotients if mu is not None]
    best_known = min(known) if known else None

    candidates: list[SubgroupSet] = []
    for mu, q in quotients:
        if mu is not None and best_known is not None and mu > best_known:
            continue
        for m in all_maximal_subgroups_simple(q.group, simple_bound, threads):
            candidates.append(pullback(group, q, m))
    kappa = min(h.index for h in candidates)
    return sort_subgroups(h for h in candidates if h.index == kappa)


# ===== Oracles =====

def brute_kappa(group: CayleyGroup, bound: int | None = 400, threads: int = 1) -> int:
    """Minimal index of a proper subgroup, read off the full lattice.

    Raises:
        TrivialGroupError: for the trivial group
        OracleBoundError: the group is larger than bound
    """
    if group.size == 1:
        raise TrivialGroupError()
    lattice = subgroup_lattice(group, bound, threads)
    return min(h.index for h in lattice if h.bits != group.full_bits)


def brute_mu(group: CayleyGroup, bound: int | None = 400, threads: int = 1) -> int:
    """Minimal degree of a faithful permutation representation.

    Minimises the total index of a family of subgroups whose cores meet
    trivially. Only one subgroup per distinct core matters (the one of least
    index), and the search runs branch-and-bound over those. The trivial
    group has degree 0.

    Raises:
        OracleBoundError: the group is larger than bound
    """
    if group.size == 1:
        return 0
    lattice = subgroup_lattice(group, bound, threads)
    best_by_core: dict[int, int] = {}
    for h in lattice:
        if h.bits == group.full_bits:
            continue
        c = core(group, h).bits
        if c not in best_by_core or h.index < best_by_core[c]:
            best_by_core[c] = h.index
    items = sorted(best_by_core.items(), key=lambda item: (item[1], item[0]))
    best = group.size

    def search(start: int, meet: int, total: int):
        nonlocal best
        if meet == 1:
            best = min(best, total)
            return
        for i in range(start, len(items)):
            core_bits, index = items[i]
            if total + index >= best:
                # items are sorted by index
                break
            narrowed = meet & core_bits
            if narrowed != meet:
                search(i + 1, narrowed, total + index)

    search(0, group.full_bits, 0)
    return best


class BerkovichReport(NamedTuple):
    """Simplicity compared with kappa == mu on one group."""
    order: int
    kappa: int
    mu: int
    simple: bool
    holds: bool


def berkovich_check(group: CayleyGroup, bound: int | None = 400, threads: int = 1) -> BerkovichReport:
    """Evaluate brute kappa, brute mu and simplicity together.

    Raises:
        TrivialGroupError: for the trivial group
        OracleBoundError: the group is larger than bound
    """
    kappa = brute_kappa(group, bound, threads)
    mu = brute_mu(group, bound, threads)
    simple = is_simple_cayley(group)
    return BerkovichReport(order=group.size, kappa=kappa, mu=mu, simple=simple, holds=simple == (kappa == mu))


# ===== Index inequality =====

class IsaacsReport(NamedTuple):
    """Cardinalities behind |NU : NV| = |N||U||N∩V| / (|N||V||N∩U|) <= |U : V|."""
    n: int
    u: int
    v: int
    n_cap_u: int
    n_cap_v: int
    nu: int
    nv: int
    index_nu_nv: Fraction
    formula: Fraction
    index_u_v: int
    holds: bool


def isaacs_index_inequality(group: CayleyGroup, n: SubgroupSet, u: SubgroupSet, v: SubgroupSet) -> IsaacsReport:
    """Compute both sides of the index identity for N normal and V <= U.

    Raises:
        InputError: an argument is not a subgroup, or V is not inside U
        NotNormalError: N is not normal
    """
    for name, h in (('N', n), ('U', u), ('V', v)):
        if not is_subgroup(group, h.bits):
            raise InputError(f"{name} is not a subgroup")
    if not is_normal(group, n):
        raise NotNormalError("N must be normal")
    if not v.issubset(u):
        raise InputError("V must be contained in U")
    nu = product_set(group, n, u).bit_count()
    nv = product_set(group, n, v).bit_count()
    n_cap_u = intersection(n, u).size
    n_cap_v = intersection(n, v).size
    index_nu_nv = Fraction(nu, nv)
    formula = Fraction(n.size * u.size * n_cap_v, n.size * v.size * n_cap_u)
    index_u_v = u.size // v.size
    return IsaacsReport(
        n=n.size, u=u.size, v=v.size, n_cap_u=n_cap_u, n_cap_v=n_cap_v, nu=nu, nv=nv,
        index_nu_nv=index_nu_nv, formula=formula, index_u_v=index_u_v,
        holds=index_nu_nv == formula and index_nu_nv <= index_u_v,
    )
