#!/usr/bin/env python3

"""Tests for algebras and their morphisms in python-ghalg."""

# Copyright © 2019 Timothy Pederick.
#
# This file is part of python-ghalg.
#
# python-ghalg is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# python-ghalg is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with python-ghalg. If not, see <http://www.gnu.org/licenses/>.

# Standard library imports.
from itertools import product as cartesian
import random
import unittest

# Local utility module.
from utils import (GF2, GF3, QQ, Z4, a5, converse_fro, random_algebra, s3,
                   unit_vector, upper_triangular)

# Library to be tested.
from ghalg.algebra import (Algebra, AlgebraMorphism, base_algebra,
                           centre_idempotent_block, group_algebra,
                           local_decomposition, nilradical, opposite, product,
                           quotient_algebra, socle, subalgebra_on, tensor,
                           trivial_extension, truncated_poly)
from ghalg.errors import (AssociativityViolation, NonCommutativeSource,
                          NotCentral, NotRingHom, UnitViolation)
from ghalg.exactlin import BaseRing, Span, is_invertible
from ghalg.modrep import regular_module


# Test cases.
class TestAlgebra(unittest.TestCase):
    """Test building and validating algebras."""
    def test_dual_numbers(self):
        """Test that k[x]/(x^2) is a valid algebra."""
        a = truncated_poly(GF2, 2)
        self.assertEqual(a.names, ('1', 'x'))
        self.assertEqual(a.multiply((0, 1), (0, 1)), (0, 0))
        self.assertTrue(a.is_commutative)

    def test_unit_violation(self):
        """Test that a unit that does not act as one is rejected."""
        table = [[(0, 1), (0, 0)], [(0, 0), (0, 0)]]
        with self.assertRaises(UnitViolation):
            Algebra(QQ, 2, table, (1, 0))

    def test_associativity_violation(self):
        """Test that a non-associative table is rejected with a witness."""
        table = [[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
                 [(0, 1, 0), (0, 0, 1), (0, 0, 0)],
                 [(0, 0, 1), (0, 1, 0), (0, 0, 0)]]
        with self.assertRaises(AssociativityViolation) as caught:
            Algebra(QQ, 3, table, (1, 0, 0))
        self.assertEqual(caught.exception.witness, (1, 1, 1))

    def test_a5(self):
        """Test the five-dimensional local algebra."""
        a = a5()
        x, w = unit_vector(5, 1), unit_vector(5, 4)
        self.assertEqual(a.multiply(x, x), w)
        self.assertEqual(a.power(x, 3), (0,) * 5)
        self.assertTrue(a.is_commutative)

    def test_opposite(self):
        """Test that the opposite swaps the table and is an involution."""
        t = upper_triangular(QQ)
        op = opposite(t)
        for i, j in cartesian(range(3), repeat=2):
            self.assertEqual(op.table[i][j], t.table[j][i])
        self.assertEqual(opposite(op).table, t.table)
        self.assertFalse(t.is_commutative)

    def test_group_algebra(self):
        """Test that F_2 C_2 is F_2[x]/(x^2) under x -> g + 1."""
        g = group_algebra(GF2, [2])
        self.assertEqual(g.names, ('1', 'g'))
        a2 = truncated_poly(GF2, 2)
        iso = AlgebraMorphism.from_images(a2, g, [(1, 0), (1, 1)])
        self.assertTrue(is_invertible(iso.matrix))

    def test_group_algebra_two_factors(self):
        """Test the group algebra of C_2 x C_3."""
        g = group_algebra(GF3, [2, 3])
        self.assertEqual(g.dim, 6)
        self.assertTrue(g.is_commutative)
        self.assertEqual(g.names[0], '1')

    def test_product_and_tensor(self):
        """Test the dimensions and units of products and tensors."""
        a, b = truncated_poly(QQ, 2), truncated_poly(QQ, 3, 'y')
        p = product(a, b)
        self.assertEqual(p.dim, 5)
        self.assertEqual(p.unit, (1, 0, 1, 0, 0))
        t = tensor(a, b)
        self.assertEqual(t.dim, 6)
        self.assertEqual(t.names, ('1', 'y', 'y^2', 'x', 'x.y', 'x.y^2'))

    def test_trivial_extension(self):
        """Test that k |x k is the dual numbers."""
        k = base_algebra(QQ)
        t = trivial_extension(regular_module(k))
        self.assertEqual(t.names, ('1', 'm0'))
        self.assertEqual(t.table, truncated_poly(QQ, 2).table)

    def test_quotient(self):
        """Test dividing S3 by the ideal generated by y."""
        s = s3(GF3)
        q, projection = quotient_algebra(s, [(0, 0, 1)])
        self.assertEqual(q.dim, 2)
        self.assertEqual(q.names, ('1', 'x'))
        self.assertEqual(q.multiply((0, 1), (0, 1)), (0, 0))
        self.assertEqual(projection.shape, (2, 3))


class TestMorphism(unittest.TestCase):
    """Test validating algebra morphisms."""
    def test_converse_fro(self):
        """Test the map Q[t]/(t^2) -> A5 sending t to w."""
        phi = converse_fro()
        self.assertEqual(phi.apply((0, 1)), unit_vector(5, 4))

    def test_identity(self):
        """Test that identities of commutative algebras are valid."""
        for a in (a5(), s3(GF3), group_algebra(GF2, [2, 2])):
            phi = AlgebraMorphism.identity(a)
            self.assertEqual(phi.images, [a.basis_vector(i)
                                          for i in range(a.dim)])

    def test_multiplicative(self):
        """Test that images of products are products of images."""
        phi = converse_fro()
        r, a = phi.source, phi.target
        for i, j in cartesian(range(r.dim), repeat=2):
            self.assertEqual(phi.apply(r.table[i][j]),
                             a.multiply(phi.images[i], phi.images[j]))

    def test_not_central(self):
        """Test that a non-central image is rejected."""
        r = truncated_poly(QQ, 2, 't')
        with self.assertRaises(NotCentral) as caught:
            AlgebraMorphism.from_images(r, upper_triangular(QQ),
                                        [(1, 0, 1), (0, 1, 0)])
        self.assertEqual(caught.exception.witness, (1, 0))

    def test_noncommutative_source(self):
        """Test that the source must be commutative."""
        t = upper_triangular(QQ)
        with self.assertRaises(NonCommutativeSource):
            AlgebraMorphism.identity(t)

    def test_not_ring_hom(self):
        """Test that a linear map that is not multiplicative is rejected."""
        r = truncated_poly(QQ, 2, 't')
        with self.assertRaises(NotRingHom) as caught:
            AlgebraMorphism.from_images(r, r, [(1, 0), (1, 0)])
        self.assertEqual(caught.exception.witness, (1, 1))


class TestCommutative(unittest.TestCase):
    """Test nilradicals, socles and local decompositions."""
    def test_nilradical(self):
        """Test nilradicals of small algebras."""
        self.assertEqual(nilradical(truncated_poly(QQ, 2)),
                         Span(QQ, 2, [(0, 1)]))
        self.assertEqual(nilradical(product(base_algebra(QQ),
                                            base_algebra(QQ))).rank, 0)
        self.assertEqual(nilradical(s3(GF3)), Span(GF3, 3, [(0, 1, 0),
                                                            (0, 0, 1)]))

    def test_nilradical_nilpotent(self):
        """Test that nilradical generators are nilpotent and the quotient
        is reduced."""
        rng = random.Random(11)
        for _ in range(20):
            a = random_algebra(rng, rng.choice([GF2, GF3]))
            radical = nilradical(a)
            for v in radical.basis:
                self.assertFalse(any(a.power(v, a.dim)))
            if radical.rank:
                q, _ = quotient_algebra(a, radical)
                self.assertEqual(nilradical(q).rank, 0)

    def test_socle(self):
        """Test socle dimensions."""
        self.assertEqual(socle(truncated_poly(QQ, 2, 't')),
                         Span(QQ, 2, [(0, 1)]))
        self.assertEqual(socle(a5()), Span(QQ, 5, [unit_vector(5, 4)]))
        self.assertEqual(socle(s3(GF3)).rank, 2)

    def test_decompose_split(self):
        """Test that Q x Q splits into its two factors."""
        factors = local_decomposition(product(base_algebra(QQ),
                                              base_algebra(QQ)))
        self.assertEqual({f.idempotent for f in factors}, {(1, 0), (0, 1)})

    def test_decompose_local(self):
        """Test that a local algebra is its own only factor."""
        r = truncated_poly(QQ, 2, 't')
        factors = local_decomposition(r)
        self.assertEqual(len(factors), 1)
        self.assertEqual(factors[0].idempotent, r.unit)
        self.assertTrue(factors[0].is_gorenstein)

    def test_decompose_mixed(self):
        """Test Q x S3 over the rationals."""
        factors = local_decomposition(product(base_algebra(QQ), s3(QQ)))
        self.assertEqual(sorted(f.socle_dim for f in factors), [1, 2])
        self.assertEqual(sorted(f.is_gorenstein for f in factors),
                         [False, True])

    def test_decompose_integers_mod(self):
        """Test that Z/6 splits by the Chinese remainder theorem."""
        factors = local_decomposition(base_algebra(BaseRing.integers_mod(6)))
        self.assertEqual({f.idempotent for f in factors}, {(3,), (4,)})
        self.assertEqual(len(local_decomposition(base_algebra(Z4))), 1)

    def test_decompose_invariants(self):
        """Test completeness and orthogonality of the idempotents."""
        rng = random.Random(12)
        for _ in range(30):
            a = random_algebra(rng, rng.choice([GF2, GF3]))
            factors = local_decomposition(a)
            total = a.zero_vector()
            for f in factors:
                total = a.add(total, f.idempotent)
                for other in factors:
                    product_ = a.multiply(f.idempotent, other.idempotent)
                    expected = (f.idempotent if f is other
                                else a.zero_vector())
                    self.assertEqual(product_, expected)
            self.assertEqual(total, a.unit)
            self.assertEqual(sum(f.factor.dim for f in factors), a.dim)

    def test_corner(self):
        """Test the corner algebra of an idempotent."""
        p = product(truncated_poly(GF3, 2), base_algebra(GF3))
        corner, embedding = subalgebra_on(p, (1, 0, 0))
        self.assertEqual(corner.dim, 2)
        self.assertEqual(embedding.shape, (3, 2))

    def test_block_morphism(self):
        """Test the block of a map at a central idempotent."""
        p = product(base_algebra(QQ), truncated_poly(QQ, 2))
        phi = AlgebraMorphism.identity(p)
        block = centre_idempotent_block(phi, (0, 1, 0))
        self.assertEqual((block.source.dim, block.target.dim), (2, 2))
        self.assertIsNone(centre_idempotent_block(
            AlgebraMorphism.from_images(p, base_algebra(QQ),
                                        [(1,), (0,), (0,)]), (0, 1, 0)))


if __name__ == '__main__':
    unittest.main()
