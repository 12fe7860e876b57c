#!/usr/bin/env python3

"""Utility functions for python-ghalg tests."""

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
from functools import lru_cache
from pathlib import Path

# Library under test, for building fixtures.
from ghalg.algebra import (Algebra, AlgebraMorphism, base_algebra,
                           group_algebra, product, tensor, truncated_poly)
from ghalg.cli import corpus_path, parse_session
from ghalg.exactlin import BaseRing, Matrix
from ghalg.homalg import ComplexRep
from ghalg.modrep import cyclic_module, direct_sum, regular_module

QQ = BaseRing.rationals()
GF2 = BaseRing.prime_field(2)
GF3 = BaseRing.prime_field(3)
Z4 = BaseRing.integers_mod(4)

GOLDEN = Path(__file__).parent / 'golden'


def unit_vector(dim, i):
    return tuple(1 if k == i else 0 for k in range(dim))


def square_zero(ring, names):
    """k[x_1, ..., x_n] modulo the square of its maximal ideal."""
    dim = len(names) + 1
    zero = (0,) * dim
    table = [[unit_vector(dim, j) if i == 0 else
              unit_vector(dim, i) if j == 0 else zero
              for j in range(dim)] for i in range(dim)]
    return Algebra(ring, dim, table, unit_vector(dim, 0), ['1'] + names)


@lru_cache(maxsize=None)
def upper_triangular(ring=QQ):
    """2 x 2 upper triangular matrices, basis e11, e12, e22."""
    table = [[(1, 0, 0), (0, 1, 0), (0, 0, 0)],
             [(0, 0, 0), (0, 0, 0), (0, 1, 0)],
             [(0, 0, 0), (0, 0, 0), (0, 0, 1)]]
    return Algebra(ring, 3, table, (1, 0, 1), ['a', 'b', 'c'])


@lru_cache(maxsize=None)
def s3(ring=GF3):
    """The non-Gorenstein local algebra k[x,y]/(x^2, xy, y^2)."""
    return square_zero(ring, ['x', 'y'])


@lru_cache(maxsize=None)
def a5():
    """Q[x,y,z]/(x^2-y^2, x^2-z^2, xy, xz, yz), with w = x^2."""
    dim = 5
    zero = (0,) * dim
    w = unit_vector(dim, 4)
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i == 0:
                row.append(unit_vector(dim, j))
            elif j == 0:
                row.append(unit_vector(dim, i))
            elif i == j and i in (1, 2, 3):
                row.append(w)
            else:
                row.append(zero)
        table.append(row)
    return Algebra(QQ, dim, table, unit_vector(dim, 0),
                   ['1', 'x', 'y', 'z', 'w'])


@lru_cache(maxsize=None)
def converse_fro():
    """The map Q[t]/(t^2) -> A5 sending t to w."""
    r2 = truncated_poly(QQ, 2, 't')
    return AlgebraMorphism.from_images(r2, a5(), [unit_vector(5, 0),
                                                  unit_vector(5, 4)])


@lru_cache(maxsize=None)
def eg_dual():
    """The structure map F_2 -> F_2[x]/(x^2)."""
    a2 = truncated_poly(GF2, 2)
    return AlgebraMorphism.from_images(base_algebra(GF2), a2,
                                       [unit_vector(2, 0)])


@lru_cache(maxsize=None)
def eg2():
    """The surjection S[u]/(u^2) -> S for S = F_3[x,y]/(x^2, xy, y^2)."""
    s = s3(GF3)
    r6 = tensor(s, truncated_poly(GF3, 2, 'u'))
    # Basis of R6: 1, u, x, x.u, y, y.u.
    zero = (0, 0, 0)
    images = [unit_vector(3, 0), zero, unit_vector(3, 1), zero,
              unit_vector(3, 2), zero]
    return AlgebraMorphism.from_images(r6, s, images)


@lru_cache(maxsize=None)
def fibre_failure():
    """The projection Q x S -> Q with S = Q[x,y]/(x^2, xy, y^2)."""
    q = base_algebra(QQ)
    r = product(q, s3(QQ))
    return AlgebraMorphism.from_images(r, q, [(1,), (0,), (0,), (0,)])


@lru_cache(maxsize=None)
def z4_complex():
    """... -> Z/4 -2-> Z/4 -2-> Z/4 -> ... cut to degrees -3..3."""
    z4 = base_algebra(Z4)
    m = regular_module(z4)
    two = Matrix(Z4, [[2]])
    return ComplexRep(z4, -3, [m] * 7, {i: two for i in range(-2, 4)},
                      window_of_unbounded=True)


def identity(algebra):
    return AlgebraMorphism.identity(algebra)


def structure_map(algebra):
    """The map from the base ring into an algebra."""
    return AlgebraMorphism.from_images(base_algebra(algebra.ring), algebra,
                                       [algebra.unit])


def corpus_session(name):
    return parse_session(corpus_path(name).read_text(encoding='utf-8'))


def golden_path(name):
    return GOLDEN / (name + '.jsonl')


# Random instances for the property suites. Every building block has its
# unit as the first basis vector.
def _block(rng, ring, budget):
    choices = [lambda: base_algebra(ring)]
    if budget >= 2:
        choices.append(lambda: truncated_poly(ring, rng.randint(2, min(
            budget, 4))))
        choices.append(lambda: group_algebra(ring, [rng.randint(2, min(
            budget, 4))]))
    if budget >= 3:
        choices.append(lambda: square_zero(ring, ['x', 'y']))
    return rng.choice(choices)()


def random_algebra(rng, ring, budget=6):
    """A random commutative algebra of dimension at most budget."""
    a = _block(rng, ring, budget)
    if a.dim * 2 <= budget and rng.random() < 0.3:
        b = _block(rng, ring, budget // a.dim)
        a = tensor(a, b) if rng.random() < 0.5 else product(a, b)
    return a


def random_morphism(rng, ring=None, budget=6):
    """A random map between commutative algebras of dimension at most
    budget: a structure map, an identity, a base extension R -> R (x) B,
    a diagonal R -> R x R, or a projection R x B -> R."""
    if ring is None:
        ring = rng.choice([GF2, GF3])
    kind = rng.choice(['structure', 'identity', 'extension', 'diagonal',
                       'projection'])
    if kind == 'structure':
        return structure_map(random_algebra(rng, ring, budget))
    if kind == 'identity':
        return identity(random_algebra(rng, ring, budget))
    r = random_algebra(rng, ring, budget // 2)
    if kind == 'diagonal':
        target = product(r, r)
        images = [tuple(v) + tuple(v)
                  for v in (r.basis_vector(i) for i in range(r.dim))]
        return AlgebraMorphism.from_images(r, target, images)
    b = _block(rng, ring, budget // r.dim)
    if kind == 'extension':
        target = tensor(r, b)
        images = [unit_vector(target.dim, i * b.dim) for i in range(r.dim)]
        return AlgebraMorphism.from_images(r, target, images)
    source = product(r, b)
    images = [unit_vector(r.dim, i) if i < r.dim else (0,) * r.dim
              for i in range(source.dim)]
    return AlgebraMorphism.from_images(source, r, images)


def random_module(rng, algebra):
    """A random left module: the regular module, a cyclic quotient or a
    sum of two cyclic quotients."""
    def cyclic():
        element = tuple(algebra.ring.random_element(rng)
                        for _ in range(algebra.dim))
        return cyclic_module(algebra, [element])
    kind = rng.choice(['regular', 'cyclic', 'sum'])
    if kind == 'regular':
        return regular_module(algebra)
    if kind == 'cyclic':
        return cyclic()
    return direct_sum(cyclic(), cyclic())
