"""Tests for catalog constructors and spec strings in models/catalog.py"""

from collections import Counter

import pytest

from core.errors import CatalogError
from models import catalog
from models.fields import GaloisField, irreducible_polynomial
from models.permutation import Permutation, orbits


class TestParseSpec:
    """Spec string parsing."""

    @pytest.mark.parametrize('spec,expected', [
        ('cyclic:6', ('cyclic', (6,))),
        (' Alternating : 5 ', ('alternating', (5,))),
        ('klein4', ('klein4', ())),
        ('psl:3,4', ('psl', (3, 4))),
        ('direct_product:(alternating:5),(cyclic:2)', ('direct_product', ('alternating:5', 'cyclic:2'))),
        ('direct_product:(direct_product:(cyclic:2),(cyclic:3)),(cyclic:5)',
         ('direct_product', ('direct_product:(cyclic:2),(cyclic:3)', 'cyclic:5'))),
    ])
    def test_valid(self, spec, expected):
        """Spec strings parse to a constructor name and parameters."""
        assert catalog.parse_spec(spec) == expected

    def test_unknown_name_suggests(self):
        """An unknown name raises CatalogError with close matches."""
        with pytest.raises(CatalogError) as e:
            catalog.parse_spec('alternatng:5')
        assert 'alternating' in e.value.suggestions
        assert 'did you mean' in str(e.value)

    @pytest.mark.parametrize('spec', ['cyclic', 'cyclic:2,3', 'cyclic:x', 'klein4:2', 'direct_product:cyclic:2'])
    def test_malformed(self, spec):
        """Malformed spec strings are rejected."""
        with pytest.raises(CatalogError):
            catalog.parse_spec(spec)

    def test_canonical_name(self):
        """Entry names are normalised to lower case with spaces removed."""
        assert catalog.make('  Cyclic:6', cayley_bound=None).name == 'cyclic:6'
        assert catalog.make('direct_product:( cyclic:2 ),(cyclic:3)', cayley_bound=None).name == \
            'direct_product:(cyclic:2),(cyclic:3)'


class TestConstructors:
    """Orders and degrees of the constructed groups."""

    @pytest.mark.parametrize('spec,order,degree', [
        ('cyclic:1', 1, 1),
        ('cyclic:12', 12, 12),
        ('dihedral:5', 10, 5),
        ('symmetric:2', 2, 2),
        ('symmetric:5', 120, 5),
        ('alternating:6', 360, 6),
        ('klein4', 4, 4),
        ('quaternion8', 8, 8),
        ('psl:3,2', 168, 7),
        ('psl2:11', 660, 12),
        ('psl2_9', 360, 10),
        ('psl3_4', 20160, 21),
        ('sl2_5', 120, 24),
        ('direct_product:(symmetric:3),(cyclic:3)', 18, 6),
    ])
    def test_order_and_degree(self, spec, order, degree):
        """Each constructor builds a group of the expected order and degree."""
        entry = catalog.make(spec, cayley_bound=None)
        assert entry.order == order
        assert entry.perm.degree == degree

    @pytest.mark.parametrize('spec', [
        'cyclic:0', 'dihedral:2', 'symmetric:0', 'alternating:2', 'psl:2,3', 'psl:2,6', 'psl2:4', 'psl2:37', 'psl:3,23',
    ])
    def test_out_of_range(self, spec):
        """Parameters outside a constructor's range raise CatalogError."""
        with pytest.raises(CatalogError):
            catalog.make(spec, cayley_bound=None)

    def test_cayley_bound(self):
        """The Cayley table is built only within the bound."""
        assert catalog.make('alternating:5').cayley.size == 60
        assert catalog.make('alternating:5', cayley_bound=59).cayley is None
        assert catalog.make('alternating:5', cayley_bound=None).cayley is None

    def test_direct_product_orbits(self):
        """A direct product acts on the disjoint union of the factors' points."""
        entry = catalog.make('direct_product:(alternating:5),(cyclic:2)', cayley_bound=None)
        assert [len(orb) for orb in orbits(entry.perm)] == [5, 2]

    def test_smallest_orbit_index(self):
        """The smallest nontrivial orbit bounds kappa from above."""
        assert catalog.make('direct_product:(alternating:5),(cyclic:2)', cayley_bound=None).smallest_orbit_index() == 2
        assert catalog.make('cyclic:1', cayley_bound=None).smallest_orbit_index() is None

    def test_corpus_builds(self):
        """The oracle corpus has 25 groups, none above order 400."""
        orders = [catalog.make(spec, cayley_bound=None).order for spec in catalog.CORPUS]
        assert len(catalog.CORPUS) == 25
        assert max(orders) <= 400

    @pytest.mark.parametrize('spec', catalog.CORPUS)
    def test_realizations_share_element_orders(self, entries, spec):
        """Permutation and Cayley realizations have the same multiset of element orders."""
        entry = entries(spec)
        rows = entry.perm.chain.element_array().tolist()
        perm_orders = Counter(Permutation(tuple(row)).order() for row in rows)
        assert perm_orders == Counter(entry.cayley.element_order.tolist())

    def test_list_entries(self):
        """Listing covers every constructor in declaration order."""
        names = [name for name, _ in catalog.list_entries()]
        assert names == list(catalog.CONSTRUCTORS)


class TestGaloisField:
    """Finite field arithmetic used by the linear groups."""

    @pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9])
    def test_field_axioms(self, q):
        """Every element has additive and multiplicative identities and inverses."""
        field = GaloisField(q)
        for a in field.elements:
            assert field.add(a, 0) == a
            assert field.mul(a, 1) == a
            assert field.add(a, field.neg(a)) == 0
            if a:
                assert field.mul(a, field.inv(a)) == 1

    def test_gf9_has_square_root_of_minus_one(self):
        """GF(9) is built over x^2 + 1, so i*i = -1."""
        field = GaloisField(9)
        assert irreducible_polynomial(3, 2) == [1, 0, 1]
        assert field.mul(3, 3) == field.neg(1)

    def test_not_prime_power(self):
        """Orders that are not prime powers are rejected."""
        with pytest.raises(ValueError):
            GaloisField(6)

    def test_zero_has_no_inverse(self):
        """Inverting zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            GaloisField(5).inv(0)
