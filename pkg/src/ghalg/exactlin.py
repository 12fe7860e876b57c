#!/usr/bin/env python3

"""Exact linear algebra over the rationals, prime fields and Z/n."""

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

__all__ = ['BaseRing', 'Matrix', 'Echelon', 'Span',
           'echelon', 'kernel_basis', 'solve', 'rank', 'is_invertible',
           'inverse']

# Standard library imports.
from collections import namedtuple
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import reduce
import logging
from math import gcd
import re

# Local imports.
from .errors import ShapeMismatch

logger = logging.getLogger(__name__)


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# Arithmetic helpers for Z/n.
def _unit_normalizer(a, n):
    """Find a unit x of Z/n with x*a = gcd(a, n) (mod n)."""
    g = gcd(a, n)
    n_reduced = n // g
    if n_reduced == 1:
        return 1
    x = pow((a // g) % n_reduced, -1, n_reduced)
    while gcd(x, n) != 1:
        x += n_reduced
    return x % n


def _gcdex(a, b):
    """Extended gcd over the integers: (g, s, t) with s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


# Pythonic class for the coefficient rings.
class BaseRing:
    """An exact coefficient ring: the rationals, F_p or Z/n."""
    RATIONALS = 'rationals'
    PRIME_FIELD = 'prime-field'
    INTEGERS_MOD = 'integers-mod'

    def __init__(self, kind, modulus=None):
        """Construct a new base ring.

        Positional arguments:
            kind -- one of BaseRing.RATIONALS, BaseRing.PRIME_FIELD or
                BaseRing.INTEGERS_MOD.

        Keyword arguments:
            modulus -- the prime p or the modulus n; must be omitted for
                the rationals.

        """
        if kind == self.RATIONALS:
            if modulus is not None:
                raise ValueError('the rationals take no modulus')
        elif kind == self.PRIME_FIELD:
            if not isinstance(modulus, int) or not _is_prime(modulus):
                raise ValueError('prime field modulus must be prime, not '
                                 '{!r}'.format(modulus))
        elif kind == self.INTEGERS_MOD:
            if not isinstance(modulus, int) or modulus < 2:
                raise ValueError('modulus must be an integer >= 2, not '
                                 '{!r}'.format(modulus))
        else:
            raise ValueError('unknown base ring kind {!r}'.format(kind))
        self._kind = kind
        self._modulus = modulus

    @classmethod
    def rationals(cls):
        return cls(cls.RATIONALS)

    @classmethod
    def prime_field(cls, p):
        return cls(cls.PRIME_FIELD, p)

    @classmethod
    def integers_mod(cls, n):
        return cls(cls.INTEGERS_MOD, n)

    @classmethod
    def parse(cls, text):
        """Read a ring from its display name ('QQ', 'GF(3)', 'Z/4')."""
        text = text.strip()
        if text in ('QQ', 'Q'):
            return cls.rationals()
        match = re.fullmatch(r'(?:GF|F)\(?(\d+)\)?', text)
        if match:
            return cls.prime_field(int(match.group(1)))
        match = re.fullmatch(r'Z/\(?(\d+)\)?', text)
        if match:
            return cls.integers_mod(int(match.group(1)))
        raise ValueError('unrecognised base ring {!r}'.format(text))

    @property
    def kind(self):
        return self._kind

    @property
    def modulus(self):
        return self._modulus

    @property
    def is_field(self):
        """Whether every nonzero element is invertible."""
        return (self._kind != self.INTEGERS_MOD or
                _is_prime(self._modulus))

    @property
    def is_finite(self):
        return self._kind != self.RATIONALS

    @property
    def order(self):
        """The number of elements, or None for the rationals."""
        return self._modulus

    @property
    def characteristic(self):
        return 0 if self._kind == self.RATIONALS else self._modulus

    zero = property(lambda self: self.normalize(0))
    one = property(lambda self: self.normalize(1))

    def normalize(self, x):
        """Return the canonical representative of x."""
        if self._kind == self.RATIONALS:
            return Fraction(x)
        n = self._modulus
        if isinstance(x, Fraction) or isinstance(x, str):
            x = Fraction(x)
            if x.denominator == 1:
                return x.numerator % n
            return x.numerator * pow(x.denominator, -1, n) % n
        return int(x) % n

    def is_unit(self, x):
        if self._kind == self.RATIONALS:
            return x != 0
        return gcd(x, self._modulus) == 1

    def inverse(self, x):
        """Invert a unit, raising ZeroDivisionError otherwise."""
        if self._kind == self.RATIONALS:
            return 1 / Fraction(x)
        if not self.is_unit(x):
            raise ZeroDivisionError('{} is not a unit in {}'.format(x, self))
        return pow(x, -1, self._modulus)

    def divides(self, d, x):
        """Whether x is a multiple of d."""
        if self._kind == self.RATIONALS:
            return d != 0 or x == 0
        return x % gcd(d, self._modulus) == 0

    def elements(self):
        """Iterate over all elements of a finite ring."""
        if not self.is_finite:
            raise ValueError('the rationals cannot be enumerated')
        return iter(range(self._modulus))

    def random_element(self, rng, height=3):
        """Draw an element using a random.Random instance."""
        if self.is_finite:
            return rng.randrange(self._modulus)
        return Fraction(rng.randint(-height, height))

    def __eq__(self, other):
        return (isinstance(other, BaseRing) and
                self._kind == other._kind and
                self._modulus == other._modulus)

    def __hash__(self):
        return hash((self._kind, self._modulus))

    def __str__(self):
        if self._kind == self.RATIONALS:
            return 'QQ'
        elif self._kind == self.PRIME_FIELD:
            return 'GF({})'.format(self._modulus)
        else:
            return 'Z/{}'.format(self._modulus)

    def __repr__(self):
        return 'BaseRing.parse({!r})'.format(str(self))


# Pythonic class wrapping dense matrix functionality.
class Matrix(Sequence):
    """An immutable dense matrix over a base ring, as a sequence of rows."""
    def __init__(self, ring, rows, ncols=None):
        """Construct a new matrix.

        Positional arguments:
            ring -- the BaseRing the entries live in.
            rows -- an iterable of rows, each an iterable of entries.
                Entries are normalised into the ring.

        Keyword arguments:
            ncols -- the number of columns. Required only when there are
                no rows.

        """
        normalize = ring.normalize
        self._rows = tuple(tuple(normalize(x) for x in row) for row in rows)
        if ncols is None:
            if not self._rows:
                raise ShapeMismatch('ncols is required for a matrix with no '
                                    'rows')
            ncols = len(self._rows[0])
        if any(len(row) != ncols for row in self._rows):
            raise ShapeMismatch('rows must all have length {}'.format(ncols))
        self._ring = ring
        self._ncols = ncols

    @classmethod
    def _raw(cls, ring, rows, ncols):
        """Wrap rows that are already canonical tuples."""
        self = cls.__new__(cls)
        self._ring = ring
        self._rows = rows
        self._ncols = ncols
        return self

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        zero = ring.zero
        return cls._raw(ring, tuple((zero,) * ncols for _ in range(nrows)),
                        ncols)

    @classmethod
    def identity(cls, ring, size):
        zero, one = ring.zero, ring.one
        return cls._raw(ring, tuple(tuple(one if i == j else zero
                                          for j in range(size))
                                    for i in range(size)), size)

    @classmethod
    def from_entries(cls, ring, nrows, ncols, entries):
        """Build a matrix from a row-major sequence of entries."""
        entries = list(entries)
        if len(entries) != nrows * ncols:
            raise ShapeMismatch('expected {} entries, got {}'.format(
                nrows * ncols, len(entries)))
        return cls(ring, (entries[i * ncols:(i + 1) * ncols]
                          for i in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, ring, columns, nrows=None):
        """Build a matrix whose columns are the given vectors."""
        columns = [tuple(col) for col in columns]
        if nrows is None:
            if not columns:
                raise ShapeMismatch('nrows is required for a matrix with no '
                                    'columns')
            nrows = len(columns[0])
        if not columns:
            return cls.zeros(ring, nrows, 0)
        return cls(ring, zip(*columns), len(columns))

    @classmethod
    def hstack(cls, ring, blocks, nrows=None):
        blocks = list(blocks)
        if not blocks:
            return cls.zeros(ring, nrows or 0, 0)
        heights = set(b.nrows for b in blocks)
        if len(heights) != 1:
            raise ShapeMismatch('blocks have different heights')
        rows = tuple(sum((b._rows[i] for b in blocks), ())
                     for i in range(blocks[0].nrows))
        return cls._raw(ring, rows, sum(b.ncols for b in blocks))

    @classmethod
    def vstack(cls, ring, blocks, ncols=None):
        blocks = list(blocks)
        if not blocks:
            return cls.zeros(ring, 0, ncols or 0)
        widths = set(b.ncols for b in blocks)
        if len(widths) != 1:
            raise ShapeMismatch('blocks have different widths')
        return cls._raw(ring, sum((b._rows for b in blocks), ()),
                        blocks[0].ncols)

    @classmethod
    def block_diagonal(cls, ring, blocks):
        blocks = list(blocks)
        ncols = sum(b.ncols for b in blocks)
        zero = ring.zero
        rows = []
        offset = 0
        for b in blocks:
            for row in b._rows:
                rows.append((zero,) * offset + row +
                            (zero,) * (ncols - offset - b.ncols))
            offset += b.ncols
        return cls._raw(ring, tuple(rows), ncols)

    @property
    def ring(self):
        return self._ring

    @property
    def nrows(self):
        return len(self._rows)

    @property
    def ncols(self):
        return self._ncols

    @property
    def shape(self):
        return (len(self._rows), self._ncols)

    @property
    def entries(self):
        """The entries in row-major order."""
        return tuple(x for row in self._rows for x in row)

    def __getitem__(self, index):
        return self._rows[index]

    def __len__(self):
        return len(self._rows)

    def entry(self, i, j):
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self._ncols)]

    def transpose(self):
        if not self._rows:
            return Matrix.zeros(self._ring, self._ncols, 0)
        return Matrix._raw(self._ring, tuple(zip(*self._rows)),
                           len(self._rows))

    T = property(transpose)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return Matrix._raw(self._ring,
                           tuple(tuple(self._rows[i][j] for j in cols)
                                 for i in rows), len(cols))

    def is_zero(self):
        zero = self._ring.zero
        return all(x == zero for row in self._rows for x in row)

    def _check_same_shape(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            raise ShapeMismatch('cannot combine shapes {} and {}'.format(
                self.shape, getattr(other, 'shape', None)))

    def __add__(self, other):
        """Find the sum of this matrix with another."""
        self._check_same_shape(other)
        return Matrix(self._ring, ((a + b for a, b in zip(r, s))
                                   for r, s in zip(self._rows, other._rows)),
                      self._ncols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self._ring, ((a - b for a, b in zip(r, s))
                                   for r, s in zip(self._rows, other._rows)),
                      self._ncols)

    def __neg__(self):
        return Matrix(self._ring, ((-a for a in r) for r in self._rows),
                      self._ncols)

    def scale(self, c):
        """Multiply every entry by the scalar c."""
        return Matrix(self._ring, ((c * a for a in r) for r in self._rows),
                      self._ncols)

    def __matmul__(self, other):
        """Use the matrix multiplication operator for the matrix product."""
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._ncols != other.nrows:
            raise ShapeMismatch('cannot multiply {} by {}'.format(self.shape,
                                                                 other.shape))
        ring = self._ring
        other_cols = list(zip(*other._rows)) if other._rows else (
            [()] * other.ncols)
        if ring.is_finite:
            n = ring.modulus
            rows = tuple(tuple(sum(a * b for a, b in zip(row, col)) % n
                               for col in other_cols)
                         for row in self._rows)
        else:
            zero = ring.zero
            rows = tuple(tuple(sum((a * b for a, b in zip(row, col) if a),
                                   zero)
                               for col in other_cols)
                         for row in self._rows)
        return Matrix._raw(ring, rows, other.ncols)

    def apply(self, vector):
        """Multiply a column vector, given as a sequence, by this matrix."""
        if len(vector) != self._ncols:
            raise ShapeMismatch('vector of length {} for {} matrix'.format(
                len(vector), self.shape))
        ring = self._ring
        if ring.is_finite:
            n = ring.modulus
            return tuple(sum(a * b for a, b in zip(row, vector)) % n
                         for row in self._rows)
        zero = ring.zero
        return tuple(sum((a * b for a, b in zip(row, vector) if a), zero)
                     for row in self._rows)

    def kronecker(self, other):
        """The Kronecker (tensor) product of two matrices."""
        ring = self._ring
        rows = []
        for row in self._rows:
            for other_row in other._rows:
                rows.append([a * b for a in row for b in other_row])
        return Matrix(ring, rows, self._ncols * other.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self._ring == other._ring and
                self._ncols == other._ncols and self._rows == other._rows)

    def __hash__(self):
        return hash((self._ring, self._ncols, self._rows))

    def __repr__(self):
        return 'Matrix({!r}, {!r}, ncols={})'.format(
            self._ring, [list(map(str, row)) for row in self._rows],
            self._ncols)


# Row reduction. Rows are lists of canonical entries; both routines return
# the nonzero rows of the reduced form and the pivot columns.
def _howell_rows(rows, ncols, n):
    """Howell normal form over Z/n (reduced row echelon form when n is
    prime)."""
    rows = [list(row) for row in rows]
    r = 0
    pivots = []
    for c in range(ncols):
        j = r
        while j < len(rows) and rows[j][c] == 0:
            j += 1
        if j == len(rows):
            continue
        if j > r:
            rows[r], rows[j] = rows[j], rows[r]

        # Make the pivot the divisor of n generating the same ideal.
        x = _unit_normalizer(rows[r][c], n)
        if x != 1:
            rows[r] = [x * v % n for v in rows[r]]

        # Clear the column below the pivot with unimodular 2x2 updates.
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b:
                a = rows[r][c]
                g, s, t = _gcdex(a, b)
                u, v = -(b // g), a // g
                top, bottom = rows[r], rows[i]
                rows[r] = [(s * p + t * q) % n for p, q in zip(top, bottom)]
                rows[i] = [(u * p + v * q) % n for p, q in zip(top, bottom)]

        # Reduce the entries above the pivot.
        pivot = rows[r][c]
        for i in range(r):
            if rows[i][c] >= pivot:
                q = rows[i][c] // pivot
                rows[i] = [(p - q * s) % n for p, s in zip(rows[i], rows[r])]

        # A zero-divisor pivot leaves a multiple of its row behind.
        annihilator = (n // pivot) % n
        if annihilator:
            extra = [annihilator * v % n for v in rows[r]]
            if any(extra):
                rows.append(extra)
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _primitive(row):
    content = reduce(gcd, row, 0)
    if content > 1:
        return [x // content for x in row]
    return row


def _rational_rows(rows, ncols):
    """Reduced row echelon form over the rationals, eliminating on
    integer rows."""
    int_rows = []
    for row in rows:
        denominator = reduce(lambda a, b: a * b // gcd(a, b),
                             (x.denominator for x in row), 1)
        int_rows.append(_primitive([int(x * denominator) for x in row]))
    r = 0
    pivots = []
    for c in range(ncols):
        candidates = [j for j in range(r, len(int_rows)) if int_rows[j][c]]
        if not candidates:
            continue
        j = min(candidates, key=lambda j: abs(int_rows[j][c]))
        int_rows[r], int_rows[j] = int_rows[j], int_rows[r]
        pivot_row = int_rows[r]
        a = pivot_row[c]
        for i in range(len(int_rows)):
            b = int_rows[i][c]
            if i != r and b:
                g = gcd(a, b)
                int_rows[i] = _primitive([(a // g) * x - (b // g) * y
                                          for x, y in zip(int_rows[i],
                                                          pivot_row)])
        pivots.append(c)
        r += 1
    form = [[Fraction(x, row[c]) for x in row]
            for row, c in zip(int_rows[:r], pivots)]
    return form, pivots


def _reduce_rows(ring, rows, ncols):
    if ring.is_finite:
        return _howell_rows(rows, ncols, ring.modulus)
    return _rational_rows(rows, ncols)


Echelon = namedtuple('Echelon', ['form', 'pivots', 'pivot_values'])
Echelon.__doc__ = """Echelon form with its rank profile.

form -- the reduced matrix (RREF over a field, Howell form over Z/n),
    padded with zero rows to at least the input row count.
pivots -- the pivot column of each nonzero row.
pivot_values -- the pivot entries (all 1 over a field; divisors of n
    over Z/n).
"""


def echelon(m, ring=None):
    """Reduce a matrix to canonical echelon form.

    Over a field this is the reduced row echelon form; over Z/n it is the
    Howell normal form, so two matrices with the same row span have the
    same form.

    Positional arguments:
        m -- a Matrix.

    Keyword arguments:
        ring -- the base ring; defaults to the matrix's own.

    Returns:
        An Echelon tuple.

    """
    ring = ring or m.ring
    rows, pivots = _reduce_rows(ring, m, m.ncols)
    values = tuple(row[c] for row, c in zip(rows, pivots))
    zero = ring.zero
    padding = [[zero] * m.ncols for _ in range(max(0, m.nrows - len(rows)))]
    form = Matrix(ring, rows + padding, m.ncols)
    return Echelon(form, tuple(pivots), values)


def rank(m, ring=None):
    """The number of nonzero rows in the echelon form."""
    return len(echelon(m, ring).pivots)


def is_invertible(m, ring=None):
    """Whether a square matrix is invertible over its ring."""
    ring = ring or m.ring
    if m.nrows != m.ncols:
        return False
    ech = echelon(m, ring)
    return (ech.pivots == tuple(range(m.ncols)) and
            all(ring.is_unit(v) for v in ech.pivot_values))


def _augmented_rows(m):
    """Rows of [m^T | I], whose span records which combinations of columns
    of m give which vectors."""
    ring = m.ring
    zero, one = ring.zero, ring.one
    size = m.ncols
    columns = m.columns() if m.nrows else [()] * size
    return [list(col) + [one if i == j else zero for i in range(size)]
            for j, col in enumerate(columns)]


def kernel_basis(m, ring=None):
    """Generators of the right kernel of a matrix.

    Positional arguments:
        m -- a Matrix.

    Keyword arguments:
        ring -- the base ring; defaults to the matrix's own.

    Returns:
        A Matrix K with m @ K = 0 whose columns generate the kernel:
        over a field they form a basis; over Z/n they generate it as a
        Z/n-module (read off the Howell form of [m^T | I]).

    """
    ring = ring or m.ring
    rows, pivots = _reduce_rows(ring, _augmented_rows(m), m.nrows + m.ncols)
    kernel = [row[m.nrows:] for row, c in zip(rows, pivots) if c >= m.nrows]
    return Matrix.from_columns(ring, kernel, m.ncols)


class _Solver:
    """Reusable reduction data for solving m @ x = b."""
    def __init__(self, m):
        self.m = m
        ring = m.ring
        rows, pivots = _reduce_rows(ring, _augmented_rows(m),
                                    m.nrows + m.ncols)
        self.rows = [(row, c) for row, c in zip(rows, pivots) if c < m.nrows]

    def solve_vector(self, b):
        m = self.m
        ring = m.ring
        if ring.is_finite:
            n = ring.modulus
            residue = list(b) + [0] * m.ncols
            for row, c in self.rows:
                value = residue[c]
                if value:
                    pivot = row[c]
                    if value % pivot:
                        return None
                    q = value // pivot
                    residue = [(x - q * y) % n for x, y in zip(residue, row)]
        else:
            residue = list(b) + [Fraction(0)] * m.ncols
            for row, c in self.rows:
                q = residue[c]
                if q:
                    residue = [x - q * y for x, y in zip(residue, row)]
        if any(residue[:m.nrows]):
            return None
        return tuple(ring.normalize(-x) for x in residue[m.nrows:])


def solve(m, b, ring=None):
    """Solve the linear system m @ x = b exactly.

    Positional arguments:
        m -- a Matrix with r rows.
        b -- a Matrix with r rows (one system per column).

    Keyword arguments:
        ring -- the base ring; defaults to the matrix's own.

    Returns:
        A Matrix x with m @ x = b, or None when no solution exists.

    """
    if m.nrows != b.nrows:
        raise ShapeMismatch('cannot solve {} system with {} right-hand '
                            'side'.format(m.shape, b.shape))
    solver = _Solver(m)
    columns = []
    for col in b.columns():
        x = solver.solve_vector(col)
        if x is None:
            return None
        columns.append(x)
    return Matrix.from_columns(m.ring, columns, m.ncols)


def inverse(m):
    """Invert a square matrix, or return None when it is singular."""
    if m.nrows != m.ncols:
        raise ShapeMismatch('only square matrices have inverses')
    return solve(m, Matrix.identity(m.ring, m.nrows))


# Pythonic class wrapping subspaces and free submodules.
class Span:
    """The span of a set of vectors in ring^ambient, kept in echelon form."""
    def __init__(self, ring, ambient, vectors=()):
        """Construct a new span.

        Positional arguments:
            ring -- the BaseRing.
            ambient -- the length of the vectors.

        Keyword arguments:
            vectors -- an iterable of spanning vectors.

        """
        self._ring = ring
        self._ambient = ambient
        vectors = [[ring.normalize(x) for x in v] for v in vectors]
        if any(len(v) != ambient for v in vectors):
            raise ShapeMismatch('span vectors must have length '
                                '{}'.format(ambient))
        if vectors:
            rows, pivots = _reduce_rows(ring, vectors, ambient)
        else:
            rows, pivots = [], []
        self._rows = [tuple(row) for row in rows]
        self._pivots = tuple(pivots)

    @classmethod
    def of_columns(cls, m):
        """The column span of a matrix."""
        return cls(m.ring, m.nrows, m.columns())

    @classmethod
    def kernel(cls, m):
        """The right kernel of a matrix as a span."""
        return cls(m.ring, m.ncols, kernel_basis(m).columns())

    @property
    def ring(self):
        return self._ring

    @property
    def ambient(self):
        return self._ambient

    @property
    def basis(self):
        """The echelon generators as tuples."""
        return list(self._rows)

    @property
    def pivots(self):
        return self._pivots

    @property
    def rank(self):
        """The number of echelon generators (the dimension over a field)."""
        return len(self._rows)

    @property
    def is_free(self):
        """Whether the echelon generators form a basis over the ring."""
        return all(row[c] == 1 for row, c in zip(self._rows, self._pivots))

    @property
    def order(self):
        """The number of elements (finite rings only)."""
        if not self._ring.is_finite:
            raise ValueError('spans over the rationals are infinite')
        n = self._ring.modulus
        count = 1
        for row, c in zip(self._rows, self._pivots):
            count *= n // gcd(row[c], n)
        return count

    def as_matrix(self):
        """The generators as the columns of a matrix."""
        return Matrix.from_columns(self._ring, self._rows, self._ambient)

    def reduce(self, vector):
        """Reduce a vector against the generators; zero iff it is in the
        span."""
        ring = self._ring
        residue = [ring.normalize(x) for x in vector]
        if ring.is_finite:
            n = ring.modulus
            for row, c in zip(self._rows, self._pivots):
                value = residue[c]
                if value and value % row[c] == 0:
                    q = value // row[c]
                    residue = [(x - q * y) % n for x, y in zip(residue, row)]
        else:
            for row, c in zip(self._rows, self._pivots):
                q = residue[c]
                if q:
                    residue = [x - q * y for x, y in zip(residue, row)]
        return tuple(residue)

    def contains(self, vector):
        return not any(self.reduce(vector))

    __contains__ = contains

    def coordinates(self, vector):
        """Coordinates of a member vector in the echelon basis.

        Only meaningful for free spans; raises ValueError when the
        vector is not in the span.

        """
        ring = self._ring
        vector = [ring.normalize(x) for x in vector]
        coords = tuple(vector[c] for c in self._pivots)
        if ring.is_finite:
            n = ring.modulus
            check = [0] * self._ambient
            for q, row in zip(coords, self._rows):
                if q:
                    check = [(x + q * y) % n for x, y in zip(check, row)]
        else:
            check = [Fraction(0)] * self._ambient
            for q, row in zip(coords, self._rows):
                if q:
                    check = [x + q * y for x, y in zip(check, row)]
        if list(check) != vector:
            raise ValueError('vector is not in the span')
        return coords

    def complement(self):
        """Indices of the coordinate vectors completing a basis."""
        pivots = set(self._pivots)
        return [j for j in range(self._ambient) if j not in pivots]

    def quotient_coordinates(self, vector):
        """Coordinates of the image of a vector in ambient/span."""
        residue = self.reduce(vector)
        return tuple(residue[j] for j in self.complement())

    def extend(self, vectors):
        """A new span with more generators."""
        return Span(self._ring, self._ambient, self._rows + [tuple(v)
                                                            for v in vectors])

    def __eq__(self, other):
        return (isinstance(other, Span) and self._ring == other._ring and
                self._ambient == other._ambient and
                self._rows == other._rows)

    def __hash__(self):
        return hash((self._ring, self._ambient, tuple(self._rows)))

    def __repr__(self):
        return 'Span({!r}, {}, rank={})'.format(self._ring, self._ambient,
                                                self.rank)
