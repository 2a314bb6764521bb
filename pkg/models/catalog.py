"""Deterministic constructors for the groups used across the toolkit.

Entries are addressed by spec strings: ``name`` or ``name:arg[,arg]``, and
``direct_product:(spec),(spec)`` for products. Every entry has a permutation
realization; the Cayley table is built as well when the order is at most
the caller's bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from core.errors import CatalogError
from models.cayley import CayleyGroup
from models.fields import GaloisField
from models.permutation import Permutation, PermGroup, orbits
from models.utils import find_similar_strings, is_prime, prime_factorization


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    """A named group with its realizations.

    Attributes:
        name: Canonical spec string, e.g. 'alternating:5'
        params: Constructor parameters
        perm: Permutation realization
        cayley: Table realization (None above the Cayley bound)
        facts: Oracle-derived facts attached from the fixtures file
    """
    name: str
    params: tuple
    perm: PermGroup
    cayley: CayleyGroup | None = None
    facts: dict = field(default_factory=dict)

    @cached_property
    def order(self) -> int:
        return self.perm.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def smallest_orbit_index(self) -> int | None:
        """Index of a point stabilizer on the smallest nontrivial orbit (an upper bound for kappa)."""
        sizes = [len(orb) for orb in orbits(self.perm) if len(orb) > 1]
        return min(sizes) if sizes else None


# ===== Constructors =====

def _cycle(degree: int, points) -> Permutation:
    return Permutation.from_cycles(degree, [list(points)])


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise CatalogError(f"cyclic:{n} needs n >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup(n, (_cycle(n, range(n)),))


def dihedral(n: int) -> PermGroup:
    """Symmetries of the regular n-gon on its n vertices (order 2n)."""
    if n < 3:
        raise CatalogError(f"dihedral:{n} needs n >= 3")
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return PermGroup(n, (_cycle(n, range(n)), reflection))


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise CatalogError(f"symmetric:{n} needs n >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    if n == 2:
        return PermGroup(2, (_cycle(2, [0, 1]),))
    return PermGroup(n, (_cycle(n, [0, 1]), _cycle(n, range(n))))


def alternating(n: int) -> PermGroup:
    """A_n generated by the 3-cycles (0 1 i)."""
    if n < 3:
        raise CatalogError(f"alternating:{n} needs n >= 3")
    return PermGroup(n, tuple(_cycle(n, [0, 1, i]) for i in range(2, n)))


def klein4() -> PermGroup:
    return PermGroup(4, (Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))))


# Quaternion units as (sign, unit) with unit in 1, i, j, k
_UNIT_PRODUCTS = {
    ('1', u): (1, u) for u in '1ijk'
} | {
    (u, '1'): (1, u) for u in '1ijk'
} | {
    ('i', 'i'): (-1, '1'), ('j', 'j'): (-1, '1'), ('k', 'k'): (-1, '1'),
    ('i', 'j'): (1, 'k'), ('j', 'k'): (1, 'i'), ('k', 'i'): (1, 'j'),
    ('j', 'i'): (-1, 'k'), ('k', 'j'): (-1, 'i'), ('i', 'k'): (-1, 'j'),
}
_QUATERNIONS = [(s, u) for u in '1ijk' for s in (1, -1)]


def quaternion8() -> PermGroup:
    """Q8 in its regular representation: right multiplication by i and j."""
    index = {q: n for n, q in enumerate(_QUATERNIONS)}

    def right_mult(by: str) -> Permutation:
        images = []
        for sign, unit in _QUATERNIONS:
            s, u = _UNIT_PRODUCTS[(unit, by)]
            images.append(index[(sign * s, u)])
        return Permutation(tuple(images))

    return PermGroup(8, (right_mult('i'), right_mult('j')))


def linear_group(n: int, q: int, projective: bool) -> PermGroup:
    """SL(n,q) on nonzero vectors, or PSL(n,q) on projective points.

    Row vectors are acted on from the right by the elementary transvections
    I + b e_ij, with b running over an additive basis of GF(q); these
    generate SL(n,q).
    """
    field_ = GaloisField(q)
    vectors = [v for v in product(range(q), repeat=n) if any(v)]
    if projective:
        vectors = [v for v in vectors if v[next(i for i, x in enumerate(v) if x)] == 1]
    index = {v: k for k, v in enumerate(vectors)}

    def normalise(v: list[int]) -> tuple[int, ...]:
        if not projective:
            return tuple(v)
        lead = next(x for x in v if x)
        scale = field_.inv(lead)
        return tuple(field_.mul(x, scale) for x in v)

    generators = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for b in field_.additive_basis:
                images = []
                for v in vectors:
                    w = list(v)
                    w[j] = field_.add(w[j], field_.mul(v[i], b))
                    images.append(index[normalise(w)])
                generators.append(Permutation(tuple(images)))
    return PermGroup(len(vectors), tuple(generators))


def _prime_power(q: int) -> bool:
    return q > 1 and len(prime_factorization(q)) == 1


def psl(n: int, q: int) -> PermGroup:
    if n < 2 or not _prime_power(q) or (n == 2 and q < 4):
        raise CatalogError(f"psl:{n},{q} needs n >= 2, q a prime power, and (n, q) not (2, 2) or (2, 3)")
    if (q ** n - 1) // (q - 1) > 400:
        raise CatalogError(f"psl:{n},{q} acts on more than 400 points")
    return linear_group(n, q, projective=True)


def psl2(p: int) -> PermGroup:
    """PSL(2,p) on the p+1 points of the projective line."""
    if not is_prime(p) or not 5 <= p <= 31:
        raise CatalogError(f"psl2:{p} needs a prime 5 <= p <= 31")
    return linear_group(2, p, projective=True)


def psl2_9() -> PermGroup:
    """PSL(2,9) on the 10 points of the projective line over GF(9) = GF(3)[i]."""
    return linear_group(2, 9, projective=True)


def psl3_4() -> PermGroup:
    """PSL(3,4) on the 21 points of the projective plane over GF(4)."""
    return linear_group(3, 4, projective=True)


def sl2_5() -> PermGroup:
    """SL(2,5) on the 24 nonzero vectors of GF(5)^2."""
    return linear_group(2, 5, projective=False)


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of their points (A first)."""
    shift = a.degree
    degree = a.degree + b.degree
    gens = [Permutation(g.images + tuple(range(shift, degree))) for g in a.generators]
    gens += [Permutation(tuple(range(shift)) + tuple(shift + x for x in g.images)) for g in b.generators]
    return PermGroup(degree, tuple(gens))


# name -> (arity, constructor, parameter hint)
CONSTRUCTORS = {
    'cyclic': (1, cyclic, 'n >= 1'),
    'dihedral': (1, dihedral, 'n >= 3 (order 2n)'),
    'symmetric': (1, symmetric, 'n >= 1'),
    'alternating': (1, alternating, 'n >= 3'),
    'klein4': (0, klein4, ''),
    'quaternion8': (0, quaternion8, ''),
    'psl': (2, psl, 'n,q'),
    'psl2': (1, psl2, 'prime 5 <= p <= 31'),
    'psl2_9': (0, psl2_9, ''),
    'psl3_4': (0, psl3_4, ''),
    'sl2_5': (0, sl2_5, ''),
    'direct_product': (2, direct_product, '(spec),(spec)'),
}


# ===== Spec strings =====

def _split_product(args: str) -> tuple[str, str]:
    text = args.strip()
    depth = 0
    for i, ch in enumerate(text):
        depth += {'(': 1, ')': -1}.get(ch, 0)
        if depth == 0:
            break
    else:
        i = -1
    match = re.fullmatch(r'\s*,\s*\((.*)\)', text[i + 1:]) if text.startswith('(') and i > 0 else None
    if not match:
        raise CatalogError(f"direct_product expects '(spec),(spec)', got '{args}'")
    return text[1:i], match.group(1)


def parse_spec(spec: str) -> tuple[str, tuple]:
    """Split 'name:args' into the name and its parameters.

    Raises:
        CatalogError: unknown name (with suggestions) or malformed parameters
    """
    name, _, args = spec.strip().partition(':')
    name = name.strip().lower()
    if name not in CONSTRUCTORS:
        suggestions = find_similar_strings(name, list(CONSTRUCTORS), limit=3)
        hint = f" (did you mean: {', '.join(suggestions)}?)" if suggestions else ""
        raise CatalogError(f"unknown catalog group '{name}'{hint}", suggestions)
    arity = CONSTRUCTORS[name][0]
    if name == 'direct_product':
        return name, _split_product(args)
    values = [a.strip() for a in args.split(',')] if args.strip() else []
    if len(values) != arity:
        raise CatalogError(f"{name} takes {arity} parameter(s), got {len(values)}")
    try:
        return name, tuple(int(v) for v in values)
    except ValueError:
        raise CatalogError(f"{name} parameters must be integers, got '{args}'") from None


def canonical_name(name: str, params: tuple) -> str:
    if name == 'direct_product':
        return f"direct_product:({params[0]}),({params[1]})"
    return f"{name}:{','.join(map(str, params))}" if params else name


def make(spec: str, cayley_bound: int | None = 5000) -> CatalogEntry:
    """Build a catalog entry from a spec string.

    Raises:
        CatalogError: unknown name or parameter out of range
    """
    name, params = parse_spec(spec)
    constructor = CONSTRUCTORS[name][1]
    if name == 'direct_product':
        left, right = (make(p, cayley_bound=None) for p in params)
        perm = direct_product(left.perm, right.perm)
        params = (left.name, right.name)
    else:
        perm = constructor(*params)
    cayley = None
    if cayley_bound is not None and perm.order <= cayley_bound:
        cayley = CayleyGroup.from_permutation_group(perm)
    return CatalogEntry(name=canonical_name(name, params), params=params, perm=perm, cayley=cayley)


def list_entries() -> list[tuple[str, str]]:
    """(name, parameter hint) for every constructor."""
    return [(name, hint) for name, (_, _, hint) in CONSTRUCTORS.items()]


# Groups of order at most 400 used by the oracle suites and fixtures.
CORPUS = (
    'cyclic:2', 'cyclic:3', 'cyclic:4', 'cyclic:5', 'cyclic:6', 'cyclic:7', 'cyclic:11', 'cyclic:13', 'cyclic:15',
    'klein4', 'symmetric:3', 'quaternion8', 'dihedral:4', 'dihedral:5', 'dihedral:6',
    'alternating:4', 'symmetric:4', 'alternating:5', 'sl2_5', 'psl2:7',
    'direct_product:(alternating:5),(cyclic:2)', 'direct_product:(cyclic:2),(cyclic:2)',
    'direct_product:(symmetric:3),(cyclic:3)', 'symmetric:5', 'psl2_9',
)
