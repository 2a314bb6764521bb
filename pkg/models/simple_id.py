"""Recognition of finite simple groups and their minimal degrees.

A simple group is identified from its order, using element orders only to
separate A8 from PSL(3,4) (both of order 20160; only A8 has elements of
order 15). Exceptional isomorphisms are normalised to one name:
PSL(2,4) and PSL(2,5) are A5, PSL(2,9) is A6, PSL(4,2) is A8 and PSL(3,2)
is PSL(2,7).

The minimal faithful permutation degree mu(S) is known for cyclic groups of
prime order, alternating groups, PSL(n,q) and a handful of sporadic groups;
any other simple group is reported as UnknownSimple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial, gcd, prod
from random import Random
from typing import Union

from core.errors import InconsistencyError, TrivialGroupError, UnknownSimpleError
from models.permutation import Permutation, PermGroup, derived_subgroup, normal_closure
from models.utils import is_prime, prime_factors

# Orders up to this bound are tabulated for the alternating and PSL families.
ORDER_TABLE_LIMIT = 10 ** 12

SPORADIC_ORDERS = {
    'M11': 7920,
    'M12': 95040,
    'M22': 443520,
    'J2': 604800,
    'M23': 10200960,
    'HS': 44352000,
    'M24': 244823040,
}

SPORADIC_MU = {
    'M11': 11,
    'M12': 12,
    'M22': 22,
    'J2': 100,
    'M23': 23,
    'HS': 100,
    'M24': 24,
}

PSL2_EXCEPTIONAL_MU = {5: 5, 7: 7, 9: 6, 11: 11}


# ===== Types =====

@dataclass(frozen=True)
class CyclicPrime:
    p: int

    @property
    def order(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"C{self.p}"


@dataclass(frozen=True)
class Alternating:
    n: int

    @property
    def order(self) -> int:
        return factorial(self.n) // 2

    def __str__(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class PSL:
    n: int
    q: int

    @property
    def order(self) -> int:
        return psl_order(self.n, self.q)

    def __str__(self) -> str:
        return f"PSL({self.n},{self.q})"


@dataclass(frozen=True)
class Sporadic:
    name: str

    @property
    def order(self) -> int:
        return SPORADIC_ORDERS[self.name]

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class UnknownSimple:
    size: int

    @property
    def order(self) -> int:
        return self.size

    def __str__(self) -> str:
        return f"Simple({self.size})"


SimpleType = Union[CyclicPrime, Alternating, PSL, Sporadic, UnknownSimple]


def family_of(simple: SimpleType) -> str:
    return {
        CyclicPrime: 'cyclic', Alternating: 'alternating', PSL: 'psl',
        Sporadic: 'sporadic', UnknownSimple: 'unknown',
    }[type(simple)]


def is_abelian(simple: SimpleType) -> bool:
    return isinstance(simple, CyclicPrime)


def type_sort_key(simple: SimpleType) -> tuple[int, str]:
    return (simple.order, str(simple))


@dataclass(frozen=True)
class Fingerprint:
    """Order and element orders of a group.

    Attributes:
        order: Group order
        element_orders: Element orders seen; exact for tables, sampled for
            permutation groups
        sample_size: Number of random elements drawn, or None when exact
    """
    order: int
    element_orders: frozenset[int]
    sample_size: int | None = None

    @property
    def sampled(self) -> bool:
        return self.sample_size is not None


def fingerprint_cayley(group) -> Fingerprint:
    """Exact fingerprint of a CayleyGroup."""
    return Fingerprint(order=group.size, element_orders=frozenset(int(x) for x in set(group.element_order.tolist())))


def fingerprint_perm(group: PermGroup, rng: Random, sample_size: int = 200) -> Fingerprint:
    """Sampled fingerprint of a permutation group."""
    chain = group.chain
    orders = {1}
    for _ in range(sample_size):
        orders.add(chain.random_element(rng).order())
    return Fingerprint(order=chain.order, element_orders=frozenset(orders), sample_size=sample_size)


# ===== Order table =====

def psl_order(n: int, q: int) -> int:
    """|PSL(n,q)| = q^(n(n-1)/2) * prod_{i=2..n}(q^i - 1) / gcd(n, q-1)."""
    return q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(2, n + 1)) // gcd(n, q - 1)


def _prime_powers(limit: int):
    for p in range(2, limit + 1):
        if is_prime(p):
            q = p
            while q <= limit:
                yield q
                q *= p


def _normalise(simple: SimpleType) -> SimpleType:
    if isinstance(simple, PSL):
        if (simple.n, simple.q) in ((2, 4), (2, 5)):
            return Alternating(5)
        if (simple.n, simple.q) == (2, 9):
            return Alternating(6)
        if (simple.n, simple.q) == (4, 2):
            return Alternating(8)
        if (simple.n, simple.q) == (3, 2):
            return PSL(2, 7)
    return simple


@cache
def order_table() -> dict[int, tuple[SimpleType, ...]]:
    """Nonabelian simple groups of the shipped families, keyed by order."""
    table: dict[int, list[SimpleType]] = {}

    def add(simple: SimpleType):
        simple = _normalise(simple)
        entries = table.setdefault(simple.order, [])
        if simple not in entries:
            entries.append(simple)

    n = 5
    while factorial(n) // 2 <= ORDER_TABLE_LIMIT:
        add(Alternating(n))
        n += 1
    # |PSL(2,q)| >= q^3 / 4, so q stays below 2 * LIMIT^(1/3)
    for q in sorted(_prime_powers(2 * int(round(ORDER_TABLE_LIMIT ** (1 / 3))) + 1)):
        n = 2
        while psl_order(n, q) <= ORDER_TABLE_LIMIT:
            if not (n == 2 and q < 4):
                add(PSL(n, q))
            n += 1
    for name in SPORADIC_ORDERS:
        add(Sporadic(name))
    return {order: tuple(sorted(entries, key=str)) for order, entries in table.items()}


def _cannot_be_simple(order: int) -> bool:
    # Burnside p^a q^b, Feit-Thompson, and the smallest nonabelian simple order
    return order < 60 or order % 2 == 1 or len(prime_factors(order)) < 3


# ===== Operations =====

def identify_simple(fingerprint: Fingerprint) -> SimpleType:
    """Isomorphism type of a simple group from its fingerprint.

    Raises:
        TrivialGroupError: order 1
        InconsistencyError: no simple group has this order
    """
    order = fingerprint.order
    if order == 1:
        raise TrivialGroupError("the trivial group is not simple")
    if is_prime(order):
        return CyclicPrime(order)
    candidates = order_table().get(order)
    if candidates is None:
        if _cannot_be_simple(order):
            raise InconsistencyError(f"a group of order {order} was claimed simple, but no simple group has that order")
        return UnknownSimple(order)
    if len(candidates) == 1:
        return candidates[0]
    if set(candidates) == {Alternating(8), PSL(3, 4)}:
        return Alternating(8) if 15 in fingerprint.element_orders else PSL(3, 4)
    return UnknownSimple(order)


def mu_of(simple: SimpleType) -> int:
    """Minimal faithful permutation degree of a simple group.

    Raises:
        UnknownSimpleError: the type is outside the shipped table
    """
    match simple:
        case CyclicPrime(p):
            return p
        case Alternating(n):
            return n
        case PSL(2, q):
            return PSL2_EXCEPTIONAL_MU.get(q, q + 1)
        case PSL(4, 2):
            return 8
        case PSL(n, q):
            return (q ** n - 1) // (q - 1)
        case Sporadic(name):
            return SPORADIC_MU[name]
        case _:
            raise UnknownSimpleError(simple.order)


def mu_table(max_alternating: int = 12, max_psl2_q: int = 32, max_psl3_q: int = 9) -> list[dict]:
    """The shipped mu values as rows for auditing."""
    rows: list[SimpleType] = [Alternating(n) for n in range(5, max_alternating + 1)]
    rows += [PSL(2, q) for q in sorted(_prime_powers(max_psl2_q)) if q > 3 and _normalise(PSL(2, q)) == PSL(2, q)]
    rows += [PSL(3, q) for q in sorted(_prime_powers(max_psl3_q)) if _normalise(PSL(3, q)) == PSL(3, q)]
    rows += [PSL(4, 3), PSL(5, 2)]
    rows += [Sporadic(name) for name in SPORADIC_ORDERS]
    return [
        {'name': str(s), 'family': family_of(s), 'order': s.order, 'mu': mu_of(s)}
        for s in rows
    ]


class SimplicityVerdict:
    """Outcome of a simplicity test; ``witness`` has a proper normal closure."""

    __slots__ = ('simple', 'witness')

    def __init__(self, simple: bool, witness: Permutation | None = None):
        self.simple = simple
        self.witness = witness

    def __bool__(self) -> bool:
        return self.simple

    def __repr__(self) -> str:
        return f"SimplicityVerdict(simple={self.simple}, witness={self.witness})"


def _prime_order_powers(x: Permutation) -> list[Permutation]:
    k = x.order()
    return [x ** (k // p) for p in prime_factors(k)]


def is_simple_perm(group: PermGroup, trials: int = 20, rng: Random | None = None) -> SimplicityVerdict:
    """One-sided Monte Carlo simplicity test.

    A False verdict is exact and carries an element whose normal closure is
    proper. A True verdict can be wrong with probability falling with trials.
    Each sampled element and its prime-order powers are tested, which catches
    small normal subgroups such as a central involution.

    Raises:
        TrivialGroupError: for the trivial group
    """
    rng = rng if rng is not None else Random(0)
    order = group.order
    if order == 1:
        raise TrivialGroupError("simplicity is undefined for the trivial group")
    if is_prime(order):
        return SimplicityVerdict(True)

    derived = derived_subgroup(group)
    if derived.order < order:
        if derived.order > 1:
            return SimplicityVerdict(False, derived.generators[0])
        # Abelian of composite order: a prime-order element spans a proper normal subgroup
        g = next(g for g in group.generators if not g.is_identity)
        return SimplicityVerdict(False, _prime_order_powers(g)[0])

    chain = group.chain
    for _ in range(trials):
        x = chain.random_element(rng)
        while x.is_identity:
            x = chain.random_element(rng)
        for y in [x] + _prime_order_powers(x):
            if normal_closure(group, [y]).order < order:
                return SimplicityVerdict(False, y)
    return SimplicityVerdict(True)
