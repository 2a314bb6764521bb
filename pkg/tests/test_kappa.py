"""Tests for composition factors and kappa in models/kappa.py"""

import pytest

from core.config import load_fixtures
from core.errors import InconsistencyError, InputError, TrivialGroupError
from models import catalog
from models.cayley import validate_cayley
from models.kappa import (
    CompositionFactors,
    KappaResult,
    SearchOptions,
    SimpleQuotientWitness,
    composition_factors,
    composition_factors_cayley,
    kappa_cayley,
    kappa_perm,
    representable_in_symmetric,
    top_simple_quotients,
)
from models.lattice import brute_kappa
from models.simple_id import PSL, Alternating, CyclicPrime, UnknownSimple, mu_of


KNOWN_FACTS = load_fixtures()['entries']


def perm(spec: str):
    return catalog.make(spec, cayley_bound=None).perm


class TestCompositionFactors:
    """Factor multisets from both realizations."""

    @pytest.mark.parametrize('spec,factors', [
        ('cyclic:6', [CyclicPrime(2), CyclicPrime(3)]),
        ('symmetric:4', [CyclicPrime(2)] * 3 + [CyclicPrime(3)]),
        ('quaternion8', [CyclicPrime(2)] * 3),
        ('alternating:5', [Alternating(5)]),
        ('sl2_5', [CyclicPrime(2), Alternating(5)]),
        ('direct_product:(alternating:5),(cyclic:2)', [CyclicPrime(2), Alternating(5)]),
        ('psl2:7', [PSL(2, 7)]),
        ('psl2_9', [Alternating(6)]),
    ])
    def test_factors(self, entries, spec, factors):
        """Permutation and table realizations give the same factor list."""
        assert list(composition_factors(perm(spec)).factors) == factors
        assert list(composition_factors_cayley(entries(spec).cayley).factors) == factors

    def test_chain_witness_covers_order(self):
        """Each decomposition step records the order of the group it split."""
        result = composition_factors(perm('symmetric:5'))
        assert result.factors == (CyclicPrime(2), Alternating(5))
        assert sorted(order for order, _ in result.chain_witness) == [60, 120]

    def test_nonabelian_types(self):
        """Only nonabelian factors are listed as nonabelian types."""
        result = composition_factors(perm('direct_product:(alternating:5),(cyclic:2)'))
        assert result.nonabelian_types == frozenset({Alternating(5)})

    def test_orders_must_multiply(self):
        """Factor orders that do not multiply to the group order are rejected."""
        with pytest.raises(InconsistencyError):
            CompositionFactors(order=12, factors=(CyclicPrime(2), CyclicPrime(3)))

    def test_trivial(self):
        """The trivial group has no composition factors."""
        with pytest.raises(TrivialGroupError):
            composition_factors(catalog.cyclic(1))
        with pytest.raises(TrivialGroupError):
            composition_factors_cayley(validate_cayley([[0]]))


class TestTopSimpleQuotients:
    """Simple quotients G/N for maximal normal N."""

    def test_product_with_cyclic(self):
        """A5 x C2 has top quotients C2 and A5."""
        result = top_simple_quotients(perm('direct_product:(alternating:5),(cyclic:2)'))
        assert result.complete
        assert [w.simple for w in result.witnesses] == [CyclicPrime(2), Alternating(5)]
        a5 = result.witnesses[1]
        assert a5.kind == 'orbit-action'
        assert a5.kernel_order == 2

    def test_central_extension(self):
        """SL(2,5) has A5 as its only simple quotient."""
        result = top_simple_quotients(perm('sl2_5'))
        assert result.complete
        assert [w.simple for w in result.witnesses] == [Alternating(5)]
        assert result.witnesses[0].kernel_order == 2

    def test_abelian(self):
        """A cyclic group's quotients all come from the abelianization."""
        result = top_simple_quotients(perm('cyclic:15'))
        assert [w.simple for w in result.witnesses] == [CyclicPrime(3), CyclicPrime(5)]
        assert all(w.kind == 'abelianization' for w in result.witnesses)


class TestKappa:
    """kappa from permutation groups and tables."""

    @pytest.mark.parametrize('spec,kappa,kind', [
        ('symmetric:4', 2, 'abelianization'),
        ('quaternion8', 2, 'abelianization'),
        ('cyclic:15', 3, 'abelianization'),
        ('alternating:4', 3, 'abelianization'),
        ('alternating:5', 5, 'whole-group'),
        ('psl2:7', 7, 'whole-group'),
        ('psl2_9', 6, 'whole-group'),
        ('cyclic:13', 13, 'abelianization'),
    ])
    def test_perm(self, spec, kappa, kind):
        """κ and the kind of witness for representative groups."""
        result = kappa_perm(perm(spec))
        assert result.kappa == kappa
        assert result.witness.kind == kind
        assert result.complete

    @pytest.mark.parametrize('spec', sorted(KNOWN_FACTS))
    def test_known_facts(self, spec):
        """kappa_perm reproduces the checked-in oracle value for every corpus group."""
        result = kappa_perm(perm(spec))
        assert result.kappa == KNOWN_FACTS[spec]['kappa']
        assert result.complete

    def test_sl2_5_certified_without_table(self):
        """SL(2,5) is certified from its composition factors alone."""
        result = kappa_perm(perm('sl2_5'), SearchOptions(cayley_bound=1))
        assert result.kappa == 5
        assert result.witness.simple == Alternating(5)
        assert result.complete

    def test_unknown_factor_defers_to_table(self, monkeypatch):
        """A composition factor outside the mu table leaves the Cayley table to decide."""
        factors = CompositionFactors(order=120, factors=(CyclicPrime(2), UnknownSimple(60)))
        monkeypatch.setattr('models.kappa.composition_factors', lambda group, options=None: factors)

        result = kappa_perm(perm('sl2_5'))
        assert result.kappa == 5
        assert result.complete

        bounded = kappa_perm(perm('sl2_5'), SearchOptions(cayley_bound=1))
        assert bounded.kappa == 5
        assert not bounded.complete

    def test_psl3_4(self):
        """PSL(3,4) is recognised and has κ = 21."""
        result = kappa_perm(catalog.psl3_4())
        assert result.kappa == 21
        assert result.witness.simple == PSL(3, 4)

    def test_seed_does_not_change_value(self):
        """The seed never changes κ."""
        group = perm('direct_product:(alternating:5),(cyclic:2)')
        values = {kappa_perm(group, SearchOptions(seed=s)).kappa for s in range(5)}
        assert values == {2}

    @pytest.mark.parametrize('spec', catalog.CORPUS)
    def test_perm_matches_table(self, entries, spec):
        """Permutation and table realizations give the same κ."""
        entry = entries(spec)
        assert kappa_perm(entry.perm).kappa == kappa_cayley(entry.cayley).kappa

    @pytest.mark.slow
    @pytest.mark.parametrize('spec', catalog.CORPUS)
    def test_matches_brute_force(self, entries, spec):
        """κ from the table equals the brute-force value and μ of the witness."""
        entry = entries(spec)
        result = kappa_cayley(entry.cayley)
        assert result.kappa == brute_kappa(entry.cayley)
        assert result.kappa == mu_of(result.witness.simple)

    def test_result_checks_witness(self):
        """A κ that disagrees with μ of the witness is rejected."""
        witness = SimpleQuotientWitness(Alternating(5), 'whole-group', 'G is simple', 1)
        with pytest.raises(InconsistencyError):
            KappaResult(kappa=3, witness=witness)

    def test_trivial(self):
        """κ is undefined for the trivial group."""
        with pytest.raises(TrivialGroupError):
            kappa_perm(catalog.cyclic(1))
        with pytest.raises(TrivialGroupError):
            kappa_cayley(validate_cayley([[0]]))


class TestRepresentableInSymmetric:
    """Sym(n) representability from kappa."""

    def test_threshold(self):
        """Sym(n) admits a nontrivial image exactly from n = κ on."""
        assert not representable_in_symmetric(5, 4)
        assert representable_in_symmetric(5, 5)
        assert representable_in_symmetric(2, 100)

    def test_invalid(self):
        """κ below 2 or a degree below 1 raises InputError."""
        with pytest.raises(InputError):
            representable_in_symmetric(1, 3)
        with pytest.raises(InputError):
            representable_in_symmetric(3, 0)
