"""Permutation arithmetic and the permutation-group toolbox.

Permutations act on the right: ``compose(p, q)`` applies ``p`` first and then
``q``, i.e. it maps x to q(p(x)). Every function in the package follows this
convention. Points are 0-based here; the text formats in models.formats are
1-based.

This module provides:
- Permutation: immutable bijection on 0..n-1
- PermGroup: a group given by generators, with a lazily built stabilizer chain
- StabilizerChain: deterministic Schreier-Sims base and strong generating set
- orbit / orbits, normal_closure, derived_subgroup
- minimal_block_system, action_homomorphism
- random_element (uniform, seeded by the caller)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from random import Random
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from core.errors import (
    DegreeMismatchError,
    IntransitiveError,
    InvalidDomainError,
    PointRangeError,
)
from models.utils import lcm_all


# ===== Permutations =====

@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    """A bijection on {0, ..., n-1}; ``images[i]`` is the image of point i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {list(images)}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # Skips validation; callers guarantee a bijection.
        perm = object.__new__(cls)
        object.__setattr__(perm, 'images', images)
        return perm

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build a permutation from disjoint 0-based cycles.

        Args:
            degree: Number of points
            cycles: Cycles such as [[0, 1], [2, 3, 4]]; points must be distinct

        Raises:
            PointRangeError: A point is outside 0..degree-1
            ValueError: A point occurs twice
        """
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise PointRangeError(f"point {point + 1} outside 1..{degree}")
                if point in seen:
                    raise ValueError(f"point {point + 1} occurs in more than one cycle")
                seen.add(point)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._trusted(tuple(inv))

    def conjugate(self, by: Permutation) -> Permutation:
        """Return by^-1 * self * by."""
        return by.inverse() * self * by

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        result = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        """Element order: lcm of the cycle lengths."""
        return lcm_all(len(c) for c in self.cycles())

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(map(str, c)) + ')' for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation x -> q(p(x)).

    Raises:
        DegreeMismatchError: p and q act on different numbers of points
    """
    if len(p.images) != len(q.images):
        raise DegreeMismatchError(f"cannot compose degree {p.degree} with degree {q.degree}")
    qi = q.images
    return Permutation._trusted(tuple(qi[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


def _first_moved_point(p: Permutation) -> int:
    for i, x in enumerate(p.images):
        if i != x:
            return i
    raise ValueError("identity moves no point")


# ===== Stabilizer chains =====

@dataclass(frozen=True, eq=False)
class ChainLevel:
    """One level of a stabilizer chain.

    Attributes:
        point: The base point of this level
        transversal: Orbit point -> coset representative u with point^u = orbit point
        generators: Strong generators fixing all earlier base points
    """
    point: int
    transversal: dict[int, Permutation]
    generators: tuple[Permutation, ...]

    @cached_property
    def representatives(self) -> tuple[Permutation, ...]:
        """Coset representatives, the identity (for the base point) first."""
        others = sorted(p for p in self.transversal if p != self.point)
        return (self.transversal[self.point],) + tuple(self.transversal[p] for p in others)


@dataclass(frozen=True, eq=False)
class StabilizerChain:
    """Base and strong generating set of a permutation group."""

    degree: int
    levels: tuple[ChainLevel, ...]

    @property
    def base(self) -> list[int]:
        return [level.point for level in self.levels]

    @cached_property
    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.transversal)
        return result

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: dict[Permutation, None] = {}
        for level in self.levels:
            for g in level.generators:
                seen.setdefault(g, None)
        return list(seen)

    def sift(self, p: Permutation) -> tuple[Permutation, int]:
        """Strip p through the chain.

        Returns:
            (residue, depth): depth == len(levels) means every level was passed
        """
        if p.degree != self.degree:
            raise DegreeMismatchError(f"permutation of degree {p.degree} in group of degree {self.degree}")
        h = p
        for depth, level in enumerate(self.levels):
            u = level.transversal.get(h.images[level.point])
            if u is None:
                return h, depth
            h = h * u.inverse()
        return h, len(self.levels)

    def contains(self, p: Permutation) -> bool:
        residue, depth = self.sift(p)
        return depth == len(self.levels) and residue.is_identity

    def random_element(self, rng: Random) -> Permutation:
        """Uniform element: one uniformly chosen coset representative per level."""
        g = Permutation.identity(self.degree)
        for level in reversed(self.levels):
            g = g * rng.choice(level.representatives)
        return g

    def element_array(self) -> np.ndarray:
        """All group elements as rows of an (order x degree) array; row 0 is the identity."""
        current = np.arange(self.degree, dtype=np.int64)[None, :]
        for level in reversed(self.levels):
            reps = np.array([u.images for u in level.representatives], dtype=np.int64)
            # reps[j][current[i]] is compose(current[i], reps[j])
            current = reps[:, current].reshape(-1, self.degree)
        return current


def _orbit_transversal(point: int, generators: Sequence[Permutation], identity: Permutation) -> dict[int, Permutation]:
    transversal = {point: identity}
    queue = deque([point])
    while queue:
        beta = queue.popleft()
        u = transversal[beta]
        for s in generators:
            gamma = s.images[beta]
            if gamma not in transversal:
                transversal[gamma] = u * s
                queue.append(gamma)
    return transversal


def _schreier_sims(degree: int, generators: Sequence[Permutation],
                   base_prefix: Sequence[int] = ()) -> StabilizerChain:
    """Deterministic Schreier-Sims.

    Args:
        degree: Number of points
        generators: Group generators
        base_prefix: Points forced to the front of the base (may have trivial orbits)
    """
    identity = Permutation.identity(degree)
    gens = list(dict.fromkeys(g for g in generators if not g.is_identity))
    base = list(dict.fromkeys(base_prefix))
    for g in gens:
        if all(g.images[b] == b for b in base):
            base.append(_first_moved_point(g))
    level_gens = [[g for g in gens if all(g.images[b] == b for b in base[:i])] for i in range(len(base))]
    transversals = [_orbit_transversal(base[i], level_gens[i], identity) for i in range(len(base))]

    def sift(h: Permutation, start: int) -> tuple[Permutation, int]:
        for level in range(start, len(base)):
            u = transversals[level].get(h.images[base[level]])
            if u is None:
                return h, level
            h = h * u.inverse()
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        extension = None
        transversal = transversals[i]
        for beta, u in transversal.items():
            for s in level_gens[i]:
                h = u * s * transversal[s.images[beta]].inverse()
                if h.is_identity:
                    continue
                residue, depth = sift(h, i + 1)
                if depth < len(base) or not residue.is_identity:
                    extension = (residue, depth)
                    break
            if extension:
                break
        if extension is None:
            i -= 1
            continue
        residue, depth = extension
        if depth == len(base):
            base.append(_first_moved_point(residue))
            level_gens.append([])
            transversals.append({})
        for level in range(i + 1, depth + 1):
            level_gens[level].append(residue)
            transversals[level] = _orbit_transversal(base[level], level_gens[level], identity)
        i = depth

    levels = tuple(
        ChainLevel(point=base[k], transversal=transversals[k], generators=tuple(level_gens[k]))
        for k in range(len(base))
    )
    return StabilizerChain(degree=degree, levels=levels)


# ===== Permutation groups =====

@dataclass(frozen=True, eq=False)
class PermGroup:
    """A permutation group of the given degree, presented by generators.

    Duplicate generators are removed, as are identities when any nonidentity
    generator is present; the generator list is never empty.
    """

    degree: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise PointRangeError(f"degree must be positive, got {self.degree}")
        gens = tuple(dict.fromkeys(self.generators))
        for g in gens:
            if g.degree != self.degree:
                raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {self.degree}")
        nontrivial = tuple(g for g in gens if not g.is_identity)
        object.__setattr__(self, 'generators', nontrivial or (Permutation.identity(self.degree),))

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree, (Permutation.identity(degree),))

    @classmethod
    def with_chain(cls, degree: int, generators: Sequence[Permutation], chain: StabilizerChain) -> PermGroup:
        group = cls(degree, tuple(generators))
        group.__dict__['chain'] = chain
        return group

    @cached_property
    def chain(self) -> StabilizerChain:
        return build_bsgs(self)

    @property
    def order(self) -> int:
        return self.chain.order

    @property
    def is_trivial(self) -> bool:
        return all(g.is_identity for g in self.generators)

    def contains(self, p: Permutation) -> bool:
        return self.chain.contains(p)

    def orbits(self) -> list[tuple[int, ...]]:
        return orbits(self)

    def is_transitive(self) -> bool:
        return len(orbit(self, 0)) == self.degree

    def __repr__(self) -> str:
        gens = ', '.join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"


def build_bsgs(group: PermGroup) -> StabilizerChain:
    """Stabilizer chain of a permutation group (deterministic Schreier-Sims)."""
    return _schreier_sims(group.degree, group.generators)


def order(chain: StabilizerChain) -> int:
    return chain.order


def contains(chain: StabilizerChain, p: Permutation) -> bool:
    return chain.contains(p)


def random_element(chain: StabilizerChain, rng: Random) -> Permutation:
    return chain.random_element(rng)


def orbit(group: PermGroup, point: int) -> frozenset[int]:
    """The orbit of a point under the group's generators.

    Raises:
        PointRangeError: point outside 0..degree-1
    """
    if not 0 <= point < group.degree:
        raise PointRangeError(f"point {point} outside 0..{group.degree - 1}")
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def orbits(group: PermGroup) -> list[tuple[int, ...]]:
    """All orbits as sorted tuples, ordered by least point."""
    remaining = set(range(group.degree))
    result = []
    for point in range(group.degree):
        if point in remaining:
            orb = orbit(group, point)
            remaining -= orb
            result.append(tuple(sorted(orb)))
    return result


def normal_closure(group: PermGroup, seeds: Iterable[Permutation]) -> PermGroup:
    """Smallest subgroup containing the seeds and normalised by the group.

    The result carries its own stabilizer chain.
    """
    gens: list[Permutation] = []
    for s in seeds:
        if s.degree != group.degree:
            raise DegreeMismatchError(f"seed {s} has degree {s.degree}, expected {group.degree}")
        if not s.is_identity and s not in gens:
            gens.append(s)
    if not gens:
        return PermGroup.trivial(group.degree)

    chain = _schreier_sims(group.degree, gens)
    queue = deque(gens)
    while queue:
        x = queue.popleft()
        for g in group.generators:
            c = x.conjugate(g)
            if not chain.contains(c):
                gens.append(c)
                queue.append(c)
                chain = _schreier_sims(group.degree, gens, base_prefix=chain.base)
    return PermGroup.with_chain(group.degree, gens, chain)


def derived_subgroup(group: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of commutators of generator pairs."""
    gens = group.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(group, comms)


# ===== Blocks and actions =====

BlockSystem = tuple[tuple[int, ...], ...]


def _minimal_block_containing(generators: Sequence[Permutation], degree: int, alpha: int, beta: int) -> BlockSystem:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    a, b = find(alpha), find(beta)
    parent[max(a, b)] = min(a, b)
    queue = [(alpha, beta)]
    while queue:
        x, y = queue.pop()
        for g in generators:
            ra, rb = find(g.images[x]), find(g.images[y])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
                queue.append((ra, rb))

    classes: dict[int, list[int]] = {}
    for point in range(degree):
        classes.setdefault(find(point), []).append(point)
    return tuple(sorted(tuple(c) for c in classes.values()))


def minimal_block_system(group: PermGroup) -> BlockSystem | None:
    """A nontrivial block system with the smallest possible block size.

    Ties are broken by the lexicographically least system.

    Returns:
        Tuple of sorted blocks, or None if the group is primitive

    Raises:
        IntransitiveError: the group is not transitive on its points
    """
    if not group.is_transitive():
        raise IntransitiveError("block systems are defined for transitive groups only")
    best: BlockSystem | None = None
    for beta in range(1, group.degree):
        system = _minimal_block_containing(group.generators, group.degree, 0, beta)
        if len(system) == 1:
            continue
        key = (len(system[0]), system)
        if best is None or key < (len(best[0]), best):
            best = system
    return best


class ActionHomomorphism(NamedTuple):
    """Induced action on an orbit or block system."""
    image: PermGroup
    kernel: PermGroup


def _induced_images(group: PermGroup, domain) -> tuple[int, list[tuple[int, ...]]]:
    """Validate the domain and return (size, induced generator images)."""
    domain = list(domain)
    if not domain:
        raise InvalidDomainError("empty action domain")
    if all(isinstance(x, (int, np.integer)) for x in domain):
        points = sorted(int(x) for x in domain)
        if len(set(points)) != len(points) or not all(0 <= p < group.degree for p in points):
            raise InvalidDomainError("orbit must list distinct points of the group")
        position = {p: i for i, p in enumerate(points)}
        induced = []
        for g in group.generators:
            try:
                induced.append(tuple(position[g.images[p]] for p in points))
            except KeyError:
                raise InvalidDomainError(f"{points} is not invariant under {g}") from None
        return len(points), induced

    blocks = [tuple(sorted(int(x) for x in block)) for block in domain]
    block_of: dict[int, int] = {}
    for index, block in enumerate(blocks):
        for p in block:
            if p in block_of or not 0 <= p < group.degree:
                raise InvalidDomainError("blocks must partition the points")
            block_of[p] = index
    if len(block_of) != group.degree:
        raise InvalidDomainError("blocks must cover every point")
    induced = []
    for g in group.generators:
        images = []
        for block in blocks:
            targets = {block_of[g.images[p]] for p in block}
            target = targets.pop()
            if targets or len(blocks[target]) != len(block):
                raise InvalidDomainError(f"block {block} is not mapped onto a block by {g}")
            images.append(target)
        induced.append(tuple(images))
    return len(blocks), induced


def _restrict(p: Permutation, offset: int) -> Permutation:
    return Permutation._trusted(tuple(x - offset for x in p.images[offset:]))


def action_homomorphism(group: PermGroup, domain) -> ActionHomomorphism:
    """Action of the group on an invariant orbit or block system.

    Args:
        group: The acting group
        domain: Either a collection of points (an orbit or union of orbits) or
            a collection of blocks partitioning all points

    Returns:
        ActionHomomorphism(image, kernel) with |group| = |image| * |kernel|

    Raises:
        InvalidDomainError: domain is not invariant
    """
    size, induced = _induced_images(group, domain)
    n = group.degree
    # Act on domain points 0..size-1 and original points shifted by size;
    # forcing the domain to the front of the base makes the tail of the chain
    # a stabilizer chain of the kernel.
    combined = [
        Permutation._trusted(images + tuple(size + x for x in g.images))
        for images, g in zip(induced, group.generators)
    ]
    chain = _schreier_sims(size + n, combined, base_prefix=range(size))

    image = PermGroup(size, tuple(Permutation._trusted(images) for images in induced))
    tail = chain.levels[size:]
    kernel_levels = tuple(
        ChainLevel(
            point=level.point - size,
            transversal={beta - size: _restrict(u, size) for beta, u in level.transversal.items()},
            generators=tuple(_restrict(g, size) for g in level.generators),
        )
        for level in tail
    )
    kernel_chain = StabilizerChain(degree=n, levels=kernel_levels)
    kernel_gens = tail[0].generators if tail else ()
    kernel = PermGroup.with_chain(n, tuple(_restrict(g, size) for g in kernel_gens), kernel_chain)
    image.__dict__['chain'] = StabilizerChain(
        degree=size,
        levels=tuple(
            ChainLevel(
                point=level.point,
                transversal={beta: Permutation._trusted(u.images[:size]) for beta, u in level.transversal.items()},
                generators=tuple(Permutation._trusted(g.images[:size]) for g in level.generators),
            )
            for level in chain.levels[:size]
        ),
    )
    return ActionHomomorphism(image=image, kernel=kernel)
