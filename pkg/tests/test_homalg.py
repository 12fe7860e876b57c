#!/usr/bin/env python3

"""Tests for complexes, resolutions and derived functors in python-ghalg."""

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
import unittest

# Local utility module.
from utils import (GF2, GF3, QQ, a5, converse_fro, eg2, fibre_failure, s3,
                   z4_complex)

# Library to be tested.
from ghalg import config
from ghalg.algebra import base_algebra, product, truncated_poly
from ghalg.errors import UnboundedBelow, WindowOverflow
from ghalg.exactlin import Matrix
from ghalg.homalg import (ChainMap, ComplexRep, Resolution, cone, ext,
                          free_resolution, hom_complex, homology,
                          injective_resolution, is_perfect,
                          periodicity_certificate, resolve_complex, stalk,
                          suspend, syzygy, tensor_complex, tor)
from ghalg.modrep import (LEFT, RIGHT, cyclic_module, dual_over_base,
                          free_module, hom_module, is_projective,
                          regular_module, restrict)
from ghalg.verdict import Status


def dual_numbers():
    return truncated_poly(GF2, 2)


def residue_field(algebra, side=LEFT):
    return cyclic_module(algebra, [algebra.basis_vector(i)
                                   for i in range(1, algebra.dim)], side)


def assert_complex(test, x):
    """Assert that consecutive differentials compose to zero."""
    for n in range(x.lo + 2, x.hi + 1):
        test.assertTrue((x.differential(n - 1) @ x.differential(n)).is_zero(),
                        'd*d is not zero at degree {}'.format(n))


# Test cases.
class TestComplex(unittest.TestCase):
    """Test the complex type."""
    def test_stalk(self):
        """Test a module concentrated in one degree."""
        k = residue_field(dual_numbers())
        x = stalk(k, 2)
        self.assertEqual((x.lo, x.hi), (2, 2))
        self.assertEqual(x.dim(2), 1)
        self.assertEqual(x.dim(0), 0)
        self.assertTrue(x.is_stalk)

    def test_d_squared(self):
        """Test that a non-complex is rejected."""
        a2 = dual_numbers()
        m = regular_module(a2)
        x = m.action((1, 0))
        with self.assertRaises(ValueError):
            ComplexRep(a2, 0, [m, m, m], {1: x, 2: x})

    def test_zero_complex(self):
        """Test that the zero complex has zero homology."""
        x = ComplexRep(dual_numbers(), 0, [], {})
        h = homology(x)
        self.assertEqual(h.nonzero_degrees(), [])
        self.assertTrue(h.is_zero_at(0))

    def test_z4_window(self):
        """Test that the cut Z/4 complex is acyclic inside its window."""
        x = z4_complex()
        h = homology(x)
        self.assertEqual(h.measure, 'order')
        self.assertEqual(x.interior, (-2, 2))
        self.assertEqual(sorted(h.determinate), [-2, -1, 0, 1, 2])
        self.assertEqual(h.nonzero_degrees(), [])
        self.assertEqual(h[3], 2)

    def test_suspension(self):
        """Test that X[1]_i = X_(i-1) with negated differentials."""
        complex_, _ = free_resolution(residue_field(dual_numbers()), 2)
        shifted = suspend(complex_)
        self.assertEqual(shifted.lo, 1)
        self.assertEqual(shifted.term(1), complex_.term(0))
        self.assertEqual(shifted.differential(2),
                         complex_.differential(1).scale(-1))
        twice = suspend(shifted)
        direct = suspend(complex_, 2)
        self.assertEqual(twice.lo, direct.lo)
        for i in direct.degrees:
            self.assertEqual(twice.differential(i), direct.differential(i))


class TestResolution(unittest.TestCase):
    """Test free resolutions and syzygies."""
    def test_free(self):
        """Test that a free module resolves by itself."""
        a2 = dual_numbers()
        complex_, augmentation = free_resolution(regular_module(a2), 3)
        self.assertEqual(complex_.dim(0), 2)
        self.assertEqual([complex_.dim(n) for n in (1, 2, 3)], [0, 0, 0])
        self.assertEqual(augmentation, Matrix.identity(GF2, 2))
        self.assertEqual(syzygy(regular_module(a2), 1).dim, 0)

    def test_dual_numbers_periodic(self):
        """Test the 2-periodic resolution of k over the dual numbers."""
        k = residue_field(dual_numbers())
        resolution = Resolution(k)
        self.assertEqual([resolution.syzygy(n).dim for n in range(5)],
                         [1] * 5)
        self.assertEqual([resolution.rank(n) for n in range(4)], [1] * 4)
        self.assertTrue(resolution.verify(4))

    def test_s3_doubling(self):
        """Test that syzygies of k over S3 double in dimension."""
        k = residue_field(s3(GF3))
        self.assertEqual(syzygy(k, 0), k)
        self.assertEqual(syzygy(k, 1).dim, 2)
        self.assertEqual(syzygy(k, 2).dim, 4)
        self.assertTrue(Resolution(k).verify(3))

    def test_exact(self):
        """Test that the resolution complex has no higher homology."""
        k = residue_field(s3(GF3))
        complex_, _ = free_resolution(k, 3)
        assert_complex(self, complex_)
        h = homology(complex_, range(1, 3))
        self.assertEqual(h.nonzero_degrees(), [])
        self.assertEqual(homology(complex_)[0], 1)

    def test_shuffled(self):
        """Test that a shuffled resolution still resolves."""
        k = residue_field(s3(GF3))
        self.assertTrue(Resolution(k, seed=7).verify(3))


class TestExtTor(unittest.TestCase):
    """Test Ext and Tor."""
    def test_ext_dual_numbers(self):
        """Test that Ext^i(k, A2) vanishes for i = 1..4."""
        a2 = dual_numbers()
        k = residue_field(a2)
        e = ext(k, regular_module(a2), range(5))
        self.assertEqual(e[0], 1)
        self.assertEqual(e.nonzero_degrees(), [0])

    def test_vanishing_over_prime_fields(self):
        """Test that vanishing Ext and Tor read as zero over GF(p)."""
        a2 = dual_numbers()
        k = residue_field(a2)
        e = ext(k, regular_module(a2), [1])
        self.assertEqual(e.measure, 'dim')
        self.assertEqual(e[1], 0)
        self.assertTrue(e.is_zero_at(1))
        phi = eg2()
        s = restrict(phi, regular_module(phi.target))
        e = ext(s, regular_module(phi.source), range(1, 4))
        self.assertEqual(e.nonzero_degrees(), [])
        for i in range(1, 4):
            self.assertTrue(e.is_zero_at(i))
        t = tor(regular_module(a2, RIGHT), k, [1])
        self.assertTrue(t.is_zero_at(1))

    def test_ext_residue_field(self):
        """Test Ext^i(k, k) over the dual numbers and over S3."""
        k = residue_field(dual_numbers())
        self.assertEqual([ext(k, k, range(4))[i] for i in range(4)],
                         [1] * 4)
        k3 = residue_field(s3(GF3))
        self.assertEqual(ext(k3, k3, [1])[1], 2)

    def test_ext_s3_obstruction(self):
        """Test that Ext^1(k, S3) is nonzero."""
        s = s3(GF3)
        self.assertEqual(ext(residue_field(s), regular_module(s), [1])[1], 3)

    def test_ext_free(self):
        """Test that Ext^i(A, N) vanishes for i >= 1."""
        s = s3(GF3)
        for n in (regular_module(s), residue_field(s)):
            e = ext(regular_module(s), n, range(1, 4))
            self.assertEqual(e.nonzero_degrees(), [])

    def test_ext_resolution_independent(self):
        """Test Ext against a resolution with shuffled generators."""
        s = s3(GF3)
        k = residue_field(s)
        for n in (regular_module(s), k):
            plain = ext(k, n, range(3))
            shuffled = ext(k, n, range(3), Resolution(k, seed=7))
            self.assertEqual(plain.sizes, shuffled.sizes)

    def test_ext_duality(self):
        """Test that Ext_A(M, N) and Ext_A^op(DN, DM) agree."""
        s = s3(GF3)
        modules = [regular_module(s), residue_field(s)]
        for m in modules:
            for n in modules:
                left = ext(m, n, range(3))
                right = ext(dual_over_base(n), dual_over_base(m), range(3))
                self.assertEqual(left.sizes, right.sizes)

    def test_tor(self):
        """Test Tor over the dual numbers and a semisimple algebra."""
        a2 = dual_numbers()
        k = residue_field(a2)
        self.assertEqual(tor(residue_field(a2, RIGHT), k, [1])[1], 1)
        self.assertEqual(tor(regular_module(a2, RIGHT), k,
                             range(1, 3)).nonzero_degrees(), [])
        p = product(base_algebra(QQ), base_algebra(QQ))
        simple = cyclic_module(p, [(1, 0)])
        self.assertEqual(tor(cyclic_module(p, [(0, 1)], RIGHT), simple,
                             range(1, 3)).nonzero_degrees(), [])


class TestTotalComplexes(unittest.TestCase):
    """Test Hom and tensor complexes."""
    def test_hom_complex_of_stalk(self):
        """Test that Hom(A, Y) has the dimensions of Y."""
        a2 = dual_numbers()
        y, _ = free_resolution(residue_field(a2), 3)
        h = hom_complex(stalk(regular_module(a2)), y)
        self.assertEqual((h.lo, h.hi), (0, 3))
        self.assertEqual([h.dim(i) for i in h.degrees],
                         [y.dim(i) for i in y.degrees])
        assert_complex(self, h)

    def test_hom_complex_signs(self):
        """Test that Hom(P, P) is a complex."""
        p, _ = free_resolution(residue_field(dual_numbers()), 2)
        h = hom_complex(p, p)
        self.assertEqual((h.lo, h.hi), (-2, 2))
        assert_complex(self, h)

    def test_tensor_complex_of_stalk(self):
        """Test that X (x) A has the dimensions of X."""
        a2 = dual_numbers()
        x, _ = free_resolution(residue_field(a2), 3)
        t = tensor_complex(x, stalk(regular_module(a2)))
        self.assertEqual([t.dim(i) for i in t.degrees],
                         [x.dim(i) for i in x.degrees])
        assert_complex(self, t)

    def test_tensor_complex_signs(self):
        """Test that P (x) P is a complex computing Tor(k, k)."""
        a2 = dual_numbers()
        k = residue_field(a2)
        p, _ = free_resolution(k, 3)
        t = tensor_complex(p, stalk(k))
        assert_complex(self, t)
        h = homology(t, range(3))
        self.assertEqual([h[i] for i in range(3)], [1, 1, 1])
        assert_complex(self, tensor_complex(p, p))

    def test_z4_tensor_square(self):
        """Test that X (x) X is not acyclic for the cut Z/4 complex."""
        x = z4_complex()
        t = tensor_complex(x, x)
        self.assertEqual(t.interior, (1, 5))
        h = homology(t)
        self.assertEqual(h.nonzero_degrees(), [1, 2, 3, 4, 5])
        self.assertEqual([h[i] for i in range(1, 6)], [2] * 5)

    def test_window_overflow(self):
        """Test that oversized total complexes are refused."""
        k = base_algebra(QQ)
        zero = free_module(k, 0)
        count = config.MAX_WINDOW // 2 + 1
        x = ComplexRep(k, 0, [zero] * count, {})
        with self.assertRaises(WindowOverflow):
            tensor_complex(x, x)
        with self.assertRaises(WindowOverflow):
            hom_complex(x, x)


class TestResolveComplex(unittest.TestCase):
    """Test resolutions of complexes and mapping cones."""
    def test_free_unchanged(self):
        """Test that a free complex is its own resolution."""
        p, _ = free_resolution(residue_field(dual_numbers()), 2)
        resolved, alpha = resolve_complex(p)
        self.assertIs(resolved, p)
        self.assertEqual(alpha.component(1), Matrix.identity(GF2, 2))

    def test_stalk_matches_free_resolution(self):
        """Test that a stalk resolves like its module."""
        k = residue_field(s3(GF3))
        resolved, alpha = resolve_complex(stalk(k), 3)
        self.assertTrue(all(resolved.term(i).free_rank is not None
                            for i in resolved.degrees))
        ChainMap(resolved, stalk(k), alpha.components)
        h = homology(resolved, range(0, 3))
        self.assertEqual([h[i] for i in range(3)], [1, 0, 0])

    def test_gap_complex(self):
        """Test resolving k -> 0 -> k over the dual numbers."""
        a2 = dual_numbers()
        k = residue_field(a2)
        x = ComplexRep(a2, 0, [k, free_module(a2, 0), k], {})
        resolved, alpha = resolve_complex(x, 3)
        ChainMap(resolved, x, alpha.components)
        for i in resolved.degrees:
            self.assertTrue(is_projective(resolved.term(i))[0])
        h = homology(resolved, range(0, 5))
        self.assertEqual([h[i] for i in range(5)], [1, 0, 1, 0, 0])

    def test_unbounded(self):
        """Test that a cut window cannot be resolved."""
        with self.assertRaises(UnboundedBelow):
            resolve_complex(z4_complex())

    def test_cone_of_identity(self):
        """Test that the cone of an identity map is acyclic."""
        p, _ = free_resolution(residue_field(dual_numbers()), 2)
        identity = ChainMap(p, p, {i: Matrix.identity(GF2, p.dim(i))
                                   for i in p.degrees})
        c = cone(identity)
        assert_complex(self, c)
        self.assertEqual(homology(c).nonzero_degrees(), [])


class TestPerfect(unittest.TestCase):
    """Test the perfectness verdict."""
    def test_free(self):
        """Test that a free stalk is perfect at horizon zero."""
        verdict = is_perfect(stalk(regular_module(dual_numbers())), 3)
        self.assertIs(verdict.status, Status.PROVEN)
        self.assertEqual(verdict.horizon, 0)

    def test_periodic(self):
        """Test that k over the dual numbers is certified not perfect."""
        verdict = is_perfect(stalk(residue_field(dual_numbers())), 3)
        self.assertIs(verdict.status, Status.REFUTED)
        self.assertEqual(verdict.evidence.kind, 'syzygy-period')
        self.assertEqual(verdict.evidence.summary, {'start': 0, 'period': 1})
        self.assertTrue(verdict.recheck())

    def test_hom_into_base(self):
        """Test that Hom_R2(A5, R2) is perfect."""
        phi = converse_fro()
        d = hom_module(regular_module(phi.target),
                       regular_module(phi.source), along=phi)
        verdict = is_perfect(stalk(d), 2)
        self.assertIs(verdict.status, Status.PROVEN)
        self.assertEqual(verdict.evidence.kind, 'finite-resolution')

    def test_s3_inconclusive(self):
        """Test that growing syzygies give no certificate."""
        k = residue_field(s3(GF3))
        self.assertIsNone(periodicity_certificate(k, 2))
        verdict = is_perfect(stalk(k), 2)
        self.assertIs(verdict.status, Status.INCONCLUSIVE)
        self.assertEqual(verdict.horizon, 2)

    def test_acyclic(self):
        """Test that an acyclic complex is perfect."""
        a2 = dual_numbers()
        m = regular_module(a2)
        x = ComplexRep(a2, 0, [m, m], {1: Matrix.identity(GF2, 2)})
        self.assertEqual(is_perfect(x, 2).evidence.kind, 'acyclic')


class TestInjectiveResolution(unittest.TestCase):
    """Test injective resolutions by duality."""
    def test_self_injective(self):
        """Test that A2 is its own injective resolution."""
        a2 = dual_numbers()
        result = injective_resolution(regular_module(a2), 3)
        self.assertTrue(result.terminated)
        self.assertEqual(result.length, 0)
        self.assertEqual(result.complex.dim(0), 2)
        self.assertTrue(result.verify())

    def test_periodic(self):
        """Test the periodic injective resolution of k over A2."""
        result = injective_resolution(residue_field(dual_numbers()), 3)
        self.assertFalse(result.terminated)
        self.assertEqual([result.complex.dim(-j) for j in range(4)],
                         [2] * 4)
        self.assertTrue(result.verify())

    def test_semisimple(self):
        """Test that modules over Q x Q are injective."""
        p = product(base_algebra(QQ), base_algebra(QQ))
        result = injective_resolution(cyclic_module(p, [(1, 0)]), 3)
        self.assertTrue(result.terminated)
        self.assertEqual(result.length, 0)

    def test_ext_both_ways(self):
        """Test Ext from a projective and from an injective resolution
        over the corpus algebras."""
        full = config.DEFAULT_HORIZON
        # Resolutions over the last four grow with the degree.
        algebras = [(dual_numbers(), full), (converse_fro().source, full),
                    (a5(), 3), (s3(GF3), 4), (eg2().source, 3),
                    (fibre_failure().source, 4)]
        for algebra, horizon in algebras:
            modules = [regular_module(algebra), residue_field(algebra)]
            for m in modules:
                for n in modules:
                    injective = injective_resolution(n, horizon)
                    h = hom_complex(stalk(m), injective.complex)
                    top = (injective.length if injective.terminated
                           else injective.length - 1)
                    e = ext(m, n, range(top + 1))
                    for i in range(top + 1):
                        via_injective = homology(h, [-i])
                        self.assertEqual(via_injective.is_zero_at(-i),
                                         e.is_zero_at(i), (algebra, i))
                        self.assertEqual(via_injective[-i], e[i])

    def test_ext_known_dimensions(self):
        """Test Ext of the residue field against its known dimensions."""
        a2 = dual_numbers()
        k = residue_field(a2)
        degrees = range(config.DEFAULT_HORIZON + 1)
        self.assertEqual([ext(k, k, degrees)[i] for i in degrees],
                         [1] * len(degrees))
        self.assertEqual(ext(k, regular_module(a2), degrees)
                         .nonzero_degrees(), [0])
        k3 = residue_field(s3(GF3))
        e = ext(k3, k3, range(5))
        self.assertEqual([e[i] for i in range(5)], [1, 2, 4, 8, 16])


if __name__ == '__main__':
    unittest.main()
