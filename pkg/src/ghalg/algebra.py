#!/usr/bin/env python3

"""Finite-dimensional associative algebras and their morphisms."""

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

__all__ = ['Algebra', 'AlgebraMorphism', 'LocalFactor',
           'base_algebra', 'truncated_poly', 'group_algebra', 'opposite',
           'product', 'tensor', 'trivial_extension',
           'subalgebra_on', 'quotient_algebra', 'reduce_modulo',
           'nilradical', 'socle', 'local_decomposition',
           'centre_idempotent_block']

# Standard library imports.
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as cartesian
import logging
from math import gcd

# Third-party library imports.
from sympy import Poly, Rational, Symbol, QQ

# Local imports.
from .errors import (AssociativityViolation, UnitViolation, ShapeMismatch,
                     NonCommutativeSource, NonCommutative, NotRingHom,
                     NotCentral, NotFreeOverBase, UnsupportedBaseRing,
                     IdempotentSplittingFailure)
from .exactlin import BaseRing, Matrix, Span, solve

logger = logging.getLogger(__name__)


# Pythonic class for algebras given by structure constants.
class Algebra:
    """A finite-dimensional associative unital algebra over a base ring.

    The multiplication is given by a table of coordinate vectors:
    table[i][j] holds the coordinates of e_i*e_j.

    """
    def __init__(self, ring, dim, table, unit, names=None):
        """Construct and validate a new algebra.

        Positional arguments:
            ring -- the BaseRing.
            dim -- the number of basis elements (at least 1).
            table -- a dim x dim nested sequence of coordinate vectors.
            unit -- the coordinates of the identity element.

        Keyword arguments:
            names -- display names for the basis elements. Defaults to
                'e0', 'e1', and so on.

        Raises AssociativityViolation (with the witness triple) or
        UnitViolation when the table does not define a unital
        associative algebra, and ShapeMismatch on malformed input.

        """
        if dim < 1:
            raise ShapeMismatch('an algebra needs a positive dimension')
        if len(table) != dim or any(len(row) != dim for row in table):
            raise ShapeMismatch('table must be {0} x {0}'.format(dim))
        normalize = ring.normalize
        self._table = tuple(tuple(tuple(normalize(x) for x in entry)
                                  for entry in row) for row in table)
        if any(len(entry) != dim for row in self._table for entry in row):
            raise ShapeMismatch('table entries must have length '
                                '{}'.format(dim))
        unit = tuple(normalize(x) for x in unit)
        if len(unit) != dim:
            raise ShapeMismatch('unit must have length {}'.format(dim))
        self._ring = ring
        self._dim = dim
        self._unit = unit
        if names is None:
            names = ['e{}'.format(i) for i in range(dim)]
        names = tuple(names)
        if len(names) != dim or len(set(names)) != dim:
            raise ShapeMismatch('need {} distinct basis names'.format(dim))
        self._names = names
        self._opposite = None
        self._left = None
        self._right = None
        self._validate()

    def _validate(self):
        basis = [self.basis_vector(i) for i in range(self._dim)]
        for i, e in enumerate(basis):
            if (self.multiply(self._unit, e) != e or
                    self.multiply(e, self._unit) != e):
                raise UnitViolation('unit does not fix basis element '
                                    '{}'.format(self._names[i]))
        for i, j, k in cartesian(range(self._dim), repeat=3):
            left = self.multiply(self._table[i][j], basis[k])
            right = self.multiply(basis[i], self._table[j][k])
            if left != right:
                raise AssociativityViolation(
                    '({0}*{1})*{2} != {0}*({1}*{2})'.format(
                        self._names[i], self._names[j], self._names[k]),
                    (i, j, k))

    @property
    def ring(self):
        return self._ring

    @property
    def dim(self):
        return self._dim

    @property
    def table(self):
        return self._table

    @property
    def unit(self):
        return self._unit

    @property
    def names(self):
        return self._names

    def index(self, name):
        """The position of a named basis element."""
        return self._names.index(name)

    def basis_vector(self, i):
        ring = self._ring
        return tuple(ring.one if k == i else ring.zero
                     for k in range(self._dim))

    def zero_vector(self):
        return (self._ring.zero,) * self._dim

    def scalar(self, c):
        """The element c times the unit."""
        normalize = self._ring.normalize
        return tuple(normalize(c * u) for u in self._unit)

    def add(self, a, b):
        normalize = self._ring.normalize
        return tuple(normalize(x + y) for x, y in zip(a, b))

    def sub(self, a, b):
        normalize = self._ring.normalize
        return tuple(normalize(x - y) for x, y in zip(a, b))

    def multiply(self, a, b):
        """Multiply two elements given by coordinates."""
        ring = self._ring
        acc = [0] * self._dim
        for i, x in enumerate(a):
            if not x:
                continue
            row = self._table[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                c = x * y
                for k, t in enumerate(row[j]):
                    if t:
                        acc[k] += c * t
        return tuple(ring.normalize(v) for v in acc)

    def power(self, a, k):
        result = self._unit
        while k:
            if k & 1:
                result = self.multiply(result, a)
            a = self.multiply(a, a)
            k >>= 1
        return result

    def is_idempotent(self, e):
        return self.multiply(e, e) == tuple(e)

    def left_matrix(self, a):
        """The matrix of x -> a*x."""
        return Matrix.from_columns(self._ring,
                                   (self.multiply(a, self.basis_vector(j))
                                    for j in range(self._dim)), self._dim)

    def right_matrix(self, a):
        """The matrix of x -> x*a."""
        return Matrix.from_columns(self._ring,
                                   (self.multiply(self.basis_vector(j), a)
                                    for j in range(self._dim)), self._dim)

    @property
    def left_multiplications(self):
        """Left multiplication matrices of the basis elements."""
        if self._left is None:
            self._left = tuple(self.left_matrix(self.basis_vector(i))
                               for i in range(self._dim))
        return self._left

    @property
    def right_multiplications(self):
        """Right multiplication matrices of the basis elements."""
        if self._right is None:
            self._right = tuple(self.right_matrix(self.basis_vector(i))
                                for i in range(self._dim))
        return self._right

    def commutativity_witness(self):
        """A pair of basis indices that do not commute, or None."""
        for i, j in combinations(range(self._dim), 2):
            if self._table[i][j] != self._table[j][i]:
                return (i, j)
        return None

    @property
    def is_commutative(self):
        return self.commutativity_witness() is None

    def require_commutative(self, error=NonCommutative):
        witness = self.commutativity_witness()
        if witness is not None:
            i, j = witness
            raise error('{} and {} do not commute'.format(
                self._names[i], self._names[j]), witness)

    def minimal_polynomial(self, a, unit=None):
        """Coefficients (leading first) of the monic minimal polynomial of
        an element, computed from the first dependency among its powers.

        Keyword arguments:
            unit -- the identity to start from; pass an idempotent e to
                get the minimal polynomial of e*a in the corner algebra.

        """
        if unit is None:
            unit = self._unit
        ring = self._ring
        powers = [tuple(unit)]
        while True:
            nxt = self.multiply(a, powers[-1])
            basis = Matrix.from_columns(ring, powers, self._dim)
            coeffs = solve(basis, Matrix.from_columns(ring, [nxt],
                                                      self._dim))
            if coeffs is not None:
                lower = coeffs.column(0)
                return ((ring.one,) +
                        tuple(ring.normalize(-c) for c in reversed(lower)))
            powers.append(nxt)

    def evaluate(self, coefficients, a, unit=None):
        """Evaluate a polynomial (leading coefficient first) at a."""
        if unit is None:
            unit = self._unit
        result = self.zero_vector()
        normalize = self._ring.normalize
        for c in coefficients:
            result = self.multiply(result, a)
            result = tuple(normalize(r + c * u) for r, u in zip(result, unit))
        return result

    def opposite(self):
        """The opposite algebra, with e_i*e_j swapped."""
        if self._opposite is None:
            d = self._dim
            table = [[self._table[j][i] for j in range(d)] for i in range(d)]
            op = Algebra(self._ring, d, table, self._unit, self._names)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self._ring == other._ring and
                self._table == other._table and self._unit == other._unit)

    def __hash__(self):
        return hash((self._ring, self._table, self._unit))

    def __repr__(self):
        return '<Algebra over {} of dimension {} ({})>'.format(
            self._ring, self._dim, ' '.join(self._names))


# Combinators.
def base_algebra(ring):
    """The base ring itself as a one-dimensional algebra."""
    return Algebra(ring, 1, [[[1]]], [1], ['1'])


def truncated_poly(ring, m, variable='x'):
    """The truncated polynomial algebra k[x]/(x^m)."""
    if m < 1:
        raise ValueError('truncation degree must be positive')
    table = [[[1 if k == i + j else 0 for k in range(m)] for j in range(m)]
             for i in range(m)]
    names = ['1', variable] + ['{}^{}'.format(variable, i)
                               for i in range(2, m)]
    return Algebra(ring, m, table, [1] + [0] * (m - 1), names[:m])


def group_algebra(ring, orders, generator='g'):
    """The group algebra of a finite abelian group.

    Positional arguments:
        ring -- the BaseRing.
        orders -- the orders of the cyclic factors of the group.

    Returns:
        An Algebra whose basis is the group, identity first.

    """
    orders = list(orders)
    if not orders or any(n < 1 for n in orders):
        raise ValueError('cyclic factor orders must be positive')
    elements = list(cartesian(*(range(n) for n in orders)))
    position = {g: i for i, g in enumerate(elements)}
    d = len(elements)
    table = []
    for g in elements:
        row = []
        for h in elements:
            gh = tuple((a + b) % n for a, b, n in zip(g, h, orders))
            row.append([1 if k == position[gh] else 0 for k in range(d)])
        table.append(row)

    def name(g):
        parts = []
        for i, a in enumerate(g):
            if a:
                symbol = generator if len(orders) == 1 else '{}{}'.format(
                    generator, i + 1)
                parts.append(symbol if a == 1 else '{}^{}'.format(symbol, a))
        return '.'.join(parts) or '1'
    return Algebra(ring, d, table, [1] + [0] * (d - 1),
                   [name(g) for g in elements])


def opposite(a):
    return a.opposite()


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise ShapeMismatch('algebras over {} and {} cannot be '
                            'combined'.format(a.ring, b.ring))


def product(a, b):
    """The direct product algebra A x B."""
    _check_same_ring(a, b)
    d = a.dim + b.dim
    zero = a.ring.zero
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            if i < a.dim and j < a.dim:
                row.append(a.table[i][j] + (zero,) * b.dim)
            elif i >= a.dim and j >= a.dim:
                row.append((zero,) * a.dim + b.table[i - a.dim][j - a.dim])
            else:
                row.append((zero,) * d)
        table.append(row)
    names = list(a.names) + list(b.names)
    if len(set(names)) != d:
        names = (['{}_1'.format(n) for n in a.names] +
                 ['{}_2'.format(n) for n in b.names])
    return Algebra(a.ring, d, table, a.unit + b.unit, names)


def tensor(a, b):
    """The tensor product A (x) B over the base ring."""
    _check_same_ring(a, b)
    ring = a.ring
    pairs = list(cartesian(range(a.dim), range(b.dim)))
    table = []
    for i, j in pairs:
        row = []
        for k, l in pairs:
            left, right = a.table[i][k], b.table[j][l]
            row.append([x * y for x in left for y in right])
        table.append(row)
    unit = [x * y for x in a.unit for y in b.unit]

    def name(i, j):
        left, right = a.names[i], b.names[j]
        if right == '1':
            return left
        elif left == '1':
            return right
        return '{}.{}'.format(left, right)
    names = [name(i, j) for i, j in pairs]
    if len(set(names)) != len(names):
        names = ['{}.{}'.format(a.names[i], b.names[j]) for i, j in pairs]
    return Algebra(ring, len(pairs), table, unit, names)


def trivial_extension(module, prefix='m'):
    """The trivial extension R |x M of a commutative algebra by a module.

    The module is used as a symmetric bimodule; products of two module
    elements vanish.

    """
    r = module.algebra
    r.require_commutative()
    ring = r.ring
    d = r.dim + module.dim
    zero = ring.zero
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            if i < r.dim and j < r.dim:
                row.append(r.table[i][j] + (zero,) * module.dim)
            elif i < r.dim <= j:
                image = module.actions[i].column(j - r.dim)
                row.append((zero,) * r.dim + image)
            elif j < r.dim <= i:
                image = module.actions[j].column(i - r.dim)
                row.append((zero,) * r.dim + image)
            else:
                row.append((zero,) * d)
        table.append(row)
    names = list(r.names) + ['{}{}'.format(prefix, k)
                             for k in range(module.dim)]
    return Algebra(ring, d, table, r.unit + (zero,) * module.dim, names)


def _corner_basis(a, e):
    """Echelon basis of e*A*e, requiring it to be free over the base."""
    ring = a.ring
    vectors = [a.multiply(a.multiply(e, a.basis_vector(i)), e)
               for i in range(a.dim)]
    span = Span(ring, a.dim, vectors)
    if not span.is_free:
        raise NotFreeOverBase('the corner algebra is not free over '
                              '{}'.format(ring))
    return span


def subalgebra_on(a, e):
    """The corner algebra e*A*e of an idempotent e.

    Returns:
        A pair (corner, embedding), where embedding is the matrix whose
        columns are the corner's basis written in A's coordinates.

    """
    e = tuple(a.ring.normalize(x) for x in e)
    if not a.is_idempotent(e):
        raise ValueError('{} is not idempotent'.format(e))
    if not any(e):
        raise ValueError('the zero idempotent has no corner algebra')
    span = _corner_basis(a, e)
    basis = span.basis
    table = [[span.coordinates(a.multiply(x, y)) for y in basis]
             for x in basis]
    names = [a.names[c] for c in span.pivots]
    corner = Algebra(a.ring, len(basis), table, span.coordinates(e), names)
    return corner, span.as_matrix()


def quotient_algebra(a, ideal):
    """The quotient of an algebra by a two-sided ideal.

    Positional arguments:
        a -- the Algebra.
        ideal -- a Span (or iterable of generating vectors) closed under
            multiplication on both sides.

    Returns:
        A pair (quotient, projection) where projection is the matrix of
        the quotient map.

    """
    if not isinstance(ideal, Span):
        ideal = Span(a.ring, a.dim, ideal)
    if not ideal.is_free:
        raise NotFreeOverBase('the ideal is not a free summand over '
                              '{}'.format(a.ring))
    keep = ideal.complement()
    if not keep:
        raise ValueError('the quotient by the whole algebra is zero')
    basis = [a.basis_vector(k) for k in keep]
    table = [[ideal.quotient_coordinates(a.multiply(x, y)) for y in basis]
             for x in basis]
    quotient = Algebra(a.ring, len(keep), table,
                       ideal.quotient_coordinates(a.unit),
                       [a.names[k] for k in keep])
    projection = Matrix.from_columns(
        a.ring, (ideal.quotient_coordinates(a.basis_vector(i))
                 for i in range(a.dim)), len(keep))
    return quotient, projection


def reduce_modulo(a, modulus):
    """The same table read modulo a divisor of the base modulus."""
    ring = a.ring
    if not ring.is_finite or ring.modulus % modulus:
        raise ValueError('{} does not divide the modulus of {}'.format(
            modulus, ring))
    target = (BaseRing.integers_mod(modulus) if modulus != ring.modulus
              else ring)
    return Algebra(target, a.dim, a.table, a.unit, a.names)


# Pythonic class for algebra morphisms.
class AlgebraMorphism:
    """A unital ring homomorphism from a commutative algebra into the
    centre of another."""
    def __init__(self, source, target, matrix):
        """Construct and validate a new morphism.

        Positional arguments:
            source -- the commutative Algebra R.
            target -- the Algebra A.
            matrix -- a Matrix whose j-th column is the image of the
                j-th basis element of R, in A's coordinates.

        Raises NonCommutativeSource, NotRingHom or NotCentral, each with
        a witness pair of basis indices.

        """
        if matrix.shape != (target.dim, source.dim):
            raise ShapeMismatch('morphism matrix must be {} x {}'.format(
                target.dim, source.dim))
        if source.ring != target.ring:
            raise ShapeMismatch('morphisms must preserve the base ring')
        self._source = source
        self._target = target
        self._matrix = matrix
        self._validate()

    @classmethod
    def from_images(cls, source, target, images):
        return cls(source, target,
                   Matrix.from_columns(source.ring, images, target.dim))

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, Matrix.identity(algebra.ring,
                                                     algebra.dim))

    def _validate(self):
        source, target = self._source, self._target
        source.require_commutative(NonCommutativeSource)
        if self.apply(source.unit) != target.unit:
            raise NotRingHom('the unit is not sent to the unit', None)
        images = self.images
        for i, j in cartesian(range(source.dim), repeat=2):
            if (self.apply(source.table[i][j]) !=
                    target.multiply(images[i], images[j])):
                raise NotRingHom('image of {}*{} is not the product of '
                                 'images'.format(source.names[i],
                                                 source.names[j]), (i, j))
        for i, k in cartesian(range(source.dim), range(target.dim)):
            x = target.basis_vector(k)
            if (target.multiply(images[i], x) !=
                    target.multiply(x, images[i])):
                raise NotCentral('image of {} does not commute with '
                                 '{}'.format(source.names[i],
                                             target.names[k]), (i, k))

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def matrix(self):
        return self._matrix

    @property
    def images(self):
        return self._matrix.columns()

    def apply(self, vector):
        return self._matrix.apply(vector)

    def __eq__(self, other):
        return (isinstance(other, AlgebraMorphism) and
                self._source == other._source and
                self._target == other._target and
                self._matrix == other._matrix)

    def __hash__(self):
        return hash((self._source, self._target, self._matrix))

    def __repr__(self):
        return '<AlgebraMorphism {!r} -> {!r}>'.format(self._source,
                                                        self._target)


# Commutative artinian utilities.
def _frobenius_matrix(r):
    """The matrix of a -> a^p on a commutative algebra over F_p."""
    p = r.ring.modulus
    return Matrix.from_columns(r.ring, (r.power(r.basis_vector(i), p)
                                        for i in range(r.dim)), r.dim)


def nilradical(r):
    """The ideal of nilpotent elements of a commutative algebra.

    Over the rationals this is the radical of the trace form of the
    regular representation. Over F_p the trace form degenerates, so the
    kernel of a sufficiently high power of the Frobenius map is used.

    Returns:
        A Span.

    """
    r.require_commutative()
    ring = r.ring
    if not ring.is_finite:
        mults = r.left_multiplications
        gram = Matrix(ring, [[sum(((mults[i] @ mults[j]).entry(k, k)
                                   for k in range(r.dim)), Fraction(0))
                              for j in range(r.dim)]
                             for i in range(r.dim)])
        return Span.kernel(gram)
    elif ring.is_field:
        p = ring.modulus
        frobenius = _frobenius_matrix(r)
        power, reach = frobenius, p
        while reach < r.dim:
            power = power @ frobenius
            reach *= p
        return Span.kernel(power)
    raise UnsupportedBaseRing('nilradical needs a field, not '
                              '{}'.format(ring))


def socle(r):
    """The annihilator of the nilradical of a commutative algebra."""
    radical = nilradical(r)
    if not radical.rank:
        return Span(r.ring, r.dim, [r.basis_vector(i) for i in range(r.dim)])
    stacked = Matrix.vstack(r.ring, (r.left_matrix(m)
                                     for m in radical.basis))
    return Span.kernel(stacked)


@dataclass(frozen=True)
class LocalFactor:
    """One block R*e of a commutative algebra.

    split_complete is False when locality of the factor could not be
    certified (a residue algebra over the rationals that might still
    split).

    """
    idempotent: tuple
    factor: Algebra
    residue_dim: int
    split_complete: bool = True

    @property
    def socle_dim(self):
        return socle(self.factor).rank

    @property
    def is_gorenstein(self):
        """Socle dimension equals the residue field degree."""
        return self.socle_dim == self.residue_dim


def _split_prime_field(r):
    """Primitive idempotents of a commutative algebra over F_p."""
    ring = r.ring
    p = ring.modulus
    frobenius = _frobenius_matrix(r)
    fixed = Span.kernel(frobenius - Matrix.identity(ring, r.dim))
    count = fixed.rank
    idempotents = [r.unit]
    for b in fixed.basis:
        if len(idempotents) == count:
            break
        refined = []
        for e in idempotents:
            eb = r.multiply(e, b)
            for value in range(p):
                shifted = r.sub(eb, r.scalar(value))
                shifted = r.multiply(e, shifted)
                part = r.sub(e, r.power(shifted, p - 1))
                if any(part):
                    refined.append(part)
        idempotents = refined
    if len(idempotents) != count:
        raise IdempotentSplittingFailure('found {} of {} idempotents'.format(
            len(idempotents), count))
    return idempotents


def _to_fraction(c):
    return Fraction(int(c.p), int(c.q))


def _sympy_poly(coefficients):
    x = Symbol('x')
    return Poly([Rational(c.numerator, c.denominator) for c in coefficients],
                x, domain=QQ)


def _split_by_element(r, e, a):
    """Split an idempotent e by the factors of the minimal polynomial of
    e*a in the corner algebra. Returns the list of pieces."""
    mu = _sympy_poly(r.minimal_polynomial(r.multiply(e, a), unit=e))
    _, factors = mu.factor_list()
    if len(factors) < 2:
        return [e]
    pieces = []
    ea = r.multiply(e, a)
    for f, k in factors:
        q = f ** k
        cofactor = mu.exquo(q)
        u = cofactor.invert(q)
        interpolant = (u * cofactor).rem(mu)
        coefficients = [_to_fraction(c) for c in interpolant.all_coeffs()]
        pieces.append(r.evaluate(coefficients, ea, unit=e))
    return pieces


def _candidates(r):
    basis = [r.basis_vector(i) for i in range(r.dim)]
    yield from basis
    for x, y in combinations(basis, 2):
        yield r.add(x, y)


def _certified_local(r, e, residue_dim):
    """Whether some element of e*R generates a residue field of full
    degree, which makes e*R local."""
    if residue_dim <= 1:
        return True
    for a in _candidates(r):
        mu = _sympy_poly(r.minimal_polynomial(r.multiply(e, a), unit=e))
        _, factors = mu.factor_list()
        if len(factors) == 1 and factors[0][0].degree() == residue_dim:
            return True
    return False


def _split_rationals(r):
    idempotents = [r.unit]
    for a in _candidates(r):
        refined = []
        for e in idempotents:
            refined.extend(_split_by_element(r, e, a))
        idempotents = refined
    return idempotents


def _hensel_lift(r, approximations, p):
    """Lift idempotents known modulo p to orthogonal idempotents of r."""
    ring = r.ring
    steps = 1
    reach = p
    while reach < ring.modulus:
        reach *= reach
        steps += 1
    lifted = []
    taken = r.zero_vector()
    for approx in approximations[:-1]:
        e = r.multiply(r.sub(r.unit, taken), approx)
        for _ in range(steps + 1):
            e2 = r.multiply(e, e)
            e3 = r.multiply(e2, e)
            e = tuple(ring.normalize(3 * x - 2 * y) for x, y in zip(e2, e3))
        if not r.is_idempotent(e):
            raise IdempotentSplittingFailure('idempotent lifting did not '
                                             'converge')
        lifted.append(e)
        taken = r.add(taken, e)
    lifted.append(r.sub(r.unit, taken))
    return lifted


def _prime_power_factors(n):
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            factors.append((p, q))
        p += 1
    if n > 1:
        factors.append((n, n))
    return factors


def _residue_dim(factor):
    ring = factor.ring
    if ring.is_field:
        return factor.dim - nilradical(factor).rank
    p = _prime_power_factors(ring.modulus)[0][0]
    reduced = reduce_modulo(factor, p)
    return factor.dim - nilradical(reduced).rank


def _sort_key(e):
    first = next(i for i, x in enumerate(e) if x)
    return (first, tuple(-x for x in e))


def local_decomposition(r):
    """Split a commutative algebra into local factors.

    Over a field, complete orthogonal idempotents are found by splitting
    minimal polynomials (the rationals) or from the Frobenius-fixed
    subalgebra (F_p). Over Z/n the modulus is split into prime powers and
    idempotents found modulo each prime are lifted.

    Returns:
        A list of LocalFactor instances, in a stable order.

    """
    r.require_commutative()
    ring = r.ring
    factors = []
    if not ring.is_finite:
        for e in _split_rationals(r):
            corner, _ = subalgebra_on(r, e)
            residue = _residue_dim(corner)
            factors.append(LocalFactor(e, corner, residue,
                                       _certified_local(r, e, residue)))
    elif ring.is_field:
        for e in _split_prime_field(r):
            corner, _ = subalgebra_on(r, e)
            factors.append(LocalFactor(e, corner, _residue_dim(corner)))
    else:
        n = ring.modulus
        for p, q in _prime_power_factors(n):
            block = reduce_modulo(r, q)
            approximations = _split_prime_field(reduce_modulo(r, p))
            if q == p:
                local = approximations
            else:
                local = _hensel_lift(block, approximations, p)
            # Carry each idempotent back to Z/n by the Chinese remainder
            # theorem.
            other = n // q
            weight = other * pow(other, -1, q) if other > 1 else 1
            for e in local:
                corner, _ = subalgebra_on(block, e)
                lifted = tuple(ring.normalize(weight * x) for x in e)
                factors.append(LocalFactor(lifted, corner,
                                           _residue_dim(corner)))
    factors.sort(key=lambda f: _sort_key(f.idempotent))
    logger.debug('%r splits into %d local factors', r, len(factors))
    return factors


def centre_idempotent_block(phi, e):
    """The block morphism R*e -> A*phi(e) of a central idempotent.

    Returns:
        An AlgebraMorphism, or None when phi(e) is zero.

    """
    source, target = phi.source, phi.target
    image = phi.apply(e)
    if not any(image):
        return None
    r_block, r_embed = subalgebra_on(source, e)
    a_block, a_embed = subalgebra_on(target, image)
    a_span = Span(target.ring, target.dim, a_embed.columns())
    images = [a_span.coordinates(phi.apply(col))
              for col in r_embed.columns()]
    # Coordinates come back in the echelon basis, which is the corner's.
    return AlgebraMorphism.from_images(r_block, a_block, images)
