"""Minimal index of a proper subgroup.

kappa(G) is the least mu(S) over the simple groups S = G/N with N a maximal
normal subgroup. For permutation groups those top quotients are found from
the abelianization, from G itself when it is simple, and by recursing into
the images of orbit and block actions; when that search cannot be certified
and G is small enough, the Cayley table of G settles it exactly.

This module provides:
- composition_factors / composition_factors_cayley
- top_simple_quotients
- kappa_perm / kappa_cayley
- representable_in_symmetric
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import NamedTuple

from core.errors import (
    DecompositionIncompleteError,
    InconsistencyError,
    InputError,
    TrivialGroupError,
    UnknownSimpleError,
)
from models.cayley import (
    CayleyGroup,
    maximal_normal_subgroups,
    quotient,
    subgroup_table,
)
from models.permutation import (
    PermGroup,
    action_homomorphism,
    derived_subgroup,
    minimal_block_system,
    normal_closure,
    orbits,
)
from models.simple_id import (
    CyclicPrime,
    SimpleType,
    fingerprint_cayley,
    fingerprint_perm,
    identify_simple,
    is_abelian,
    is_simple_perm,
    mu_of,
    type_sort_key,
)
from models.utils import is_prime, prime_factorization, prime_factors


@dataclass(frozen=True)
class SearchOptions:
    """Knobs shared by the permutation-group algorithms."""
    trials: int = 20
    seed: int = 0
    cayley_bound: int = 5000
    sample_size: int = 200


# ===== Result types =====

@dataclass(frozen=True)
class CompositionFactors:
    """Composition factors with the recursion that produced them.

    Attributes:
        factors: Factor types sorted by (order, name)
        chain_witness: (order of the group being split, factor found) per step
    """
    order: int
    factors: tuple[SimpleType, ...]
    chain_witness: tuple[tuple[int, SimpleType], ...] = field(default=(), compare=False)

    def __post_init__(self):
        product = 1
        for f in self.factors:
            product *= f.order
        if product != self.order:
            raise InconsistencyError(f"composition factor orders multiply to {product}, expected {self.order}")

    @property
    def nonabelian_types(self) -> frozenset[SimpleType]:
        return frozenset(f for f in self.factors if not is_abelian(f))


@dataclass(frozen=True)
class SimpleQuotientWitness:
    """A surjection G -> S.

    Attributes:
        simple: The simple quotient S
        kind: 'abelianization', 'whole-group', 'orbit-action', 'block-action'
            or 'maximal-normal'
        description: How the kernel was obtained
        kernel_order: |N| for the witnessed G/N isomorphic to S
    """
    simple: SimpleType
    kind: str
    description: str
    kernel_order: int


@dataclass(frozen=True)
class KappaResult:
    """kappa(G) with the quotient attaining it.

    ``complete`` is False when the value is only a lower-bound candidate.
    """
    kappa: int
    witness: SimpleQuotientWitness
    complete: bool = True

    def __post_init__(self):
        if self.kappa != mu_of(self.witness.simple):
            raise InconsistencyError(f"kappa {self.kappa} does not match mu({self.witness.simple})")


class TopQuotients(NamedTuple):
    """Simple top quotients found and whether the set is known to be complete."""
    witnesses: tuple[SimpleQuotientWitness, ...]
    complete: bool


# ===== Composition factors =====

def _abelian_factors(order: int) -> list[SimpleType]:
    return [CyclicPrime(p) for p, e in sorted(prime_factorization(order).items()) for _ in range(e)]


def _decompose(group: PermGroup, options: SearchOptions, rng: Random, steps: list):
    order = group.order
    if order == 1:
        return
    if is_prime(order):
        steps.append((order, CyclicPrime(order)))
        return

    nontrivial = [orb for orb in orbits(group) if len(orb) > 1]
    if len(nontrivial) > 1 or len(nontrivial[0]) < group.degree:
        hom = action_homomorphism(group, nontrivial[0])
        _decompose(hom.image, options, rng, steps)
        _decompose(hom.kernel, options, rng, steps)
        return

    blocks = minimal_block_system(group)
    if blocks is not None:
        hom = action_homomorphism(group, blocks)
        _decompose(hom.image, options, rng, steps)
        _decompose(hom.kernel, options, rng, steps)
        return

    derived = derived_subgroup(group)
    if derived.order < order:
        for factor in _abelian_factors(order // derived.order):
            steps.append((order, factor))
        _decompose(derived, options, rng, steps)
        return

    verdict = is_simple_perm(group, options.trials, rng)
    if verdict:
        steps.append((order, identify_simple(fingerprint_perm(group, rng, options.sample_size))))
        return

    # Perfect primitive and not simple: split through the multiplication table
    if order > options.cayley_bound:
        normal = normal_closure(group, [verdict.witness])
        raise DecompositionIncompleteError(
            f"perfect primitive group of order {order} has a normal subgroup of order {normal.order} "
            f"but exceeds the Cayley bound {options.cayley_bound}"
        )
    table_factors = composition_factors_cayley(CayleyGroup.from_permutation_group(group))
    steps.extend(table_factors.chain_witness)


def composition_factors(group: PermGroup, options: SearchOptions = SearchOptions()) -> CompositionFactors:
    """Composition factors of a permutation group.

    Raises:
        TrivialGroupError: for the trivial group
        DecompositionIncompleteError: a perfect primitive non-simple section is
            larger than the Cayley bound
    """
    if group.order == 1:
        raise TrivialGroupError("the trivial group has no composition factors")
    steps: list[tuple[int, SimpleType]] = []
    _decompose(group, options, Random(options.seed), steps)
    factors = tuple(sorted((f for _, f in steps), key=type_sort_key))
    return CompositionFactors(order=group.order, factors=factors, chain_witness=tuple(steps))


def composition_factors_cayley(group: CayleyGroup) -> CompositionFactors:
    """Composition factors of a table group through successive maximal normal subgroups.

    Raises:
        TrivialGroupError: for the trivial group
    """
    if group.size == 1:
        raise TrivialGroupError("the trivial group has no composition factors")
    steps: list[tuple[int, SimpleType]] = []
    current = group
    while current.size > 1:
        normal = maximal_normal_subgroups(current)[0]
        top = quotient(current, normal).group
        steps.append((current.size, identify_simple(fingerprint_cayley(top))))
        current, _ = subgroup_table(current, normal)
    factors = tuple(sorted((f for _, f in steps), key=type_sort_key))
    return CompositionFactors(order=group.size, factors=factors, chain_witness=tuple(steps))


# ===== Top quotients =====

def _abelianization_witnesses(order: int, derived_order: int) -> list[SimpleQuotientWitness]:
    abelian = order // derived_order
    return [
        SimpleQuotientWitness(
            simple=CyclicPrime(p),
            kind='abelianization',
            description=f"G -> G/G' (order {abelian}) -> C{p}",
            kernel_order=order // p,
        )
        for p in prime_factors(abelian)
    ]


def _lift(witness: SimpleQuotientWitness, kind: str, kernel_order: int, domain: str) -> SimpleQuotientWitness:
    return SimpleQuotientWitness(
        simple=witness.simple,
        kind=kind,
        description=f"action on {domain}, then {witness.description}",
        kernel_order=kernel_order * witness.kernel_order,
    )


def _search(group: PermGroup, options: SearchOptions, rng: Random) -> tuple[dict[SimpleType, SimpleQuotientWitness], bool]:
    """Top quotients reachable without a Cayley table, and whether they are all of them."""
    order = group.order
    found: dict[SimpleType, SimpleQuotientWitness] = {}
    derived = derived_subgroup(group)
    for w in _abelianization_witnesses(order, derived.order):
        found.setdefault(w.simple, w)
    if derived.order == 1:
        return found, True

    if derived.order == order:
        verdict = is_simple_perm(group, options.trials, rng)
        if verdict:
            simple = identify_simple(fingerprint_perm(group, rng, options.sample_size))
            found[simple] = SimpleQuotientWitness(simple, 'whole-group', 'G is simple', 1)
            return found, True

    nontrivial = [orb for orb in orbits(group) if len(orb) > 1]
    if len(nontrivial) > 1 or len(nontrivial[0]) < group.degree:
        # A nonabelian simple quotient of a subdirect product factors through one projection
        complete = True
        for orb in nontrivial:
            hom = action_homomorphism(group, orb)
            sub_found, sub_complete = _search(hom.image, options, rng)
            complete = complete and sub_complete
            domain = f"orbit {{{','.join(str(p + 1) for p in orb)}}}"
            for simple, w in sub_found.items():
                found.setdefault(simple, _lift(w, 'orbit-action', hom.kernel.order, domain))
        return found, complete

    blocks = minimal_block_system(group)
    if blocks is not None:
        hom = action_homomorphism(group, blocks)
        sub_found, _ = _search(hom.image, options, rng)
        domain = f"{len(blocks)} blocks of size {len(blocks[0])}"
        for simple, w in sub_found.items():
            found.setdefault(simple, _lift(w, 'block-action', hom.kernel.order, domain))
    return found, False


def _covers_factors(group: PermGroup, found: dict, options: SearchOptions) -> bool:
    """True iff every nonabelian composition factor type is among the found quotients."""
    try:
        factors = composition_factors(group, options)
    except DecompositionIncompleteError:
        return False
    return factors.nonabelian_types <= set(found)


def _cayley_witnesses(group: CayleyGroup) -> dict[SimpleType, SimpleQuotientWitness]:
    found: dict[SimpleType, SimpleQuotientWitness] = {}
    for normal in maximal_normal_subgroups(group):
        simple = identify_simple(fingerprint_cayley(quotient(group, normal).group))
        found.setdefault(simple, SimpleQuotientWitness(
            simple=simple,
            kind='maximal-normal',
            description=f"quotient by a maximal normal subgroup of order {normal.size}",
            kernel_order=normal.size,
        ))
    return found


def _sorted(found: dict) -> tuple[SimpleQuotientWitness, ...]:
    return tuple(found[s] for s in sorted(found, key=type_sort_key))


def top_simple_quotients(group: PermGroup, options: SearchOptions = SearchOptions()) -> TopQuotients:
    """Simple groups S with G/N isomorphic to S for a maximal normal N.

    Raises:
        TrivialGroupError: for the trivial group
    """
    if group.order == 1:
        raise TrivialGroupError("the trivial group has no simple quotient")
    found, complete = _search(group, options, Random(options.seed))
    if not complete:
        complete = _covers_factors(group, found, options)
    if not complete and group.order <= options.cayley_bound:
        found = _cayley_witnesses(CayleyGroup.from_permutation_group(group))
        complete = True
    return TopQuotients(witnesses=_sorted(found), complete=complete)


# ===== kappa =====

def _best(witnesses) -> SimpleQuotientWitness:
    return min(witnesses, key=lambda w: (mu_of(w.simple), type_sort_key(w.simple)))


def kappa_perm(group: PermGroup, options: SearchOptions = SearchOptions()) -> KappaResult:
    """kappa of a permutation group.

    If 2 divides |G/G'| the answer is 2 at once. Otherwise the least mu over
    the top quotients found is certified when every nonabelian composition
    factor missing from them has mu at least as large; failing that, the
    Cayley table decides when |G| <= cayley_bound, and otherwise the result
    is returned with ``complete=False``.

    Raises:
        TrivialGroupError: for the trivial group
        UnknownSimpleError: the best quotient found is a simple group outside
            the table
    """
    order = group.order
    if order == 1:
        raise TrivialGroupError()
    derived = derived_subgroup(group)
    if (order // derived.order) % 2 == 0:
        witness = next(w for w in _abelianization_witnesses(order, derived.order) if w.simple == CyclicPrime(2))
        return KappaResult(kappa=2, witness=witness)

    found, complete = _search(group, options, Random(options.seed))
    best = _best(found.values()) if found else None
    if not complete and best is not None:
        try:
            missing = composition_factors(group, options).nonabelian_types - set(found)
            complete = all(mu_of(s) >= mu_of(best.simple) for s in missing)
        except (DecompositionIncompleteError, UnknownSimpleError):
            complete = False
    if not complete and order <= options.cayley_bound:
        best = _best(_cayley_witnesses(CayleyGroup.from_permutation_group(group)).values())
        complete = True
    if best is None:
        raise DecompositionIncompleteError(f"no simple quotient found for a group of order {order}")
    return KappaResult(kappa=mu_of(best.simple), witness=best, complete=complete)


def kappa_cayley(group: CayleyGroup) -> KappaResult:
    """kappa of a table group via its maximal normal subgroups; always complete.

    Raises:
        TrivialGroupError: for the trivial group
        UnknownSimpleError: the best quotient found is a simple group outside
            the table
    """
    if group.size == 1:
        raise TrivialGroupError()
    best = _best(_cayley_witnesses(group).values())
    return KappaResult(kappa=mu_of(best.simple), witness=best)


def representable_in_symmetric(kappa: int, degree: int) -> bool:
    """A nontrivial homomorphism G -> Sym(degree) exists iff degree >= kappa(G).

    Raises:
        InputError: kappa < 2 or degree < 1
    """
    if kappa < 2:
        raise InputError(f"kappa must be at least 2, got {kappa}")
    if degree < 1:
        raise InputError(f"degree must be positive, got {degree}")
    return degree >= kappa
