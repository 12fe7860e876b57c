#!/usr/bin/env python3

"""Complexes, resolutions and derived functors."""

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

__all__ = ['Status', 'Evidence', 'Verdict', 'meet', 'GradedVectorData',
           'ComplexRep', 'HomComplex', 'TensorComplex', 'ChainMap',
           'Resolution', 'InjectiveResolution',
           'stalk', 'homology', 'free_resolution', 'syzygy', 'ext', 'tor',
           'hom_complex', 'tensor_complex', 'suspend', 'cone',
           'resolve_complex', 'is_perfect', 'periodicity_certificate',
           'injective_resolution']

# Standard library imports.
from dataclasses import dataclass, field
import logging
from random import Random

# Local imports.
from . import config
from .algebra import base_algebra
from .errors import (ShapeMismatch, SideMismatch, UnboundedBelow,
                     WindowOverflow, NotFreeOverBase)
from .exactlin import Matrix, Span, kernel_basis, solve
from .modrep import (LEFT, RIGHT, ModuleRep, ModuleHom, Presentation,
                     TensorQuotient, free_module, direct_sum, submodule,
                     generated_span, dual_over_base, is_projective,
                     iso_search, hom_matrices)
from .verdict import Status, Evidence, Verdict, meet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedVectorData:
    """Sizes and representatives of a graded space, degree by degree.

    sizes holds dimensions over a field and orders over Z/n (the measure
    field says which). Degrees whose value could not be determined are
    absent from determinate.

    """
    measure: str
    sizes: dict = field(default_factory=dict)
    representatives: dict = field(default_factory=dict)
    determinate: frozenset = frozenset()

    @property
    def degrees(self):
        return sorted(self.sizes)

    def __getitem__(self, degree):
        return self.sizes.get(degree, 1 if self.measure == 'order' else 0)

    def is_zero_at(self, degree):
        return self[degree] == (1 if self.measure == 'order' else 0)

    def nonzero_degrees(self, determinate_only=True):
        return [i for i in self.degrees
                if not self.is_zero_at(i) and
                (i in self.determinate or not determinate_only)]


def _zero_module(algebra, side=LEFT):
    return free_module(algebra, 0, side)


def _full_span(ring, dim):
    return Span(ring, dim, Matrix.identity(ring, dim))


def _homology_at(ring, dim, incoming, outgoing):
    """Homology at a term of dimension dim, given the matrices in and
    out. Returns (size, representatives)."""
    cycles = Span.kernel(outgoing)
    boundaries = Span.of_columns(incoming)
    representatives = []
    reached = boundaries
    for z in cycles.basis:
        if not reached.contains(z):
            representatives.append(z)
            reached = reached.extend([z])
    if _measure(ring) == 'order':
        size = cycles.order // boundaries.order
    else:
        size = cycles.rank - boundaries.rank
    return size, representatives


def _measure(ring):
    return 'order' if ring.is_finite and not ring.is_field else 'dim'


def _size(ring, span):
    return span.order if _measure(ring) == 'order' else span.rank


# Pythonic class for complexes.
class ComplexRep:
    """A chain complex of modules in a finite window of degrees.

    Differentials lower the degree: differential(i) maps the term in
    degree i to the term in degree i-1.

    """
    def __init__(self, algebra, lo, terms, differentials, side=LEFT,
                 window_of_unbounded=False, interior=None, check=True):
        """Construct a new complex.

        Positional arguments:
            algebra -- the Algebra the terms are modules over.
            lo -- the lowest degree of the window.
            terms -- ModuleRep instances for degrees lo, lo+1, ...
            differentials -- a mapping from degree i to the Matrix of the
                differential out of degree i. Missing entries are zero.

        Keyword arguments:
            side -- the side of every term.
            window_of_unbounded -- whether the window cuts a two-sided
                unbounded complex, so that edge degrees are indeterminate.
            interior -- the (first, last) determinate degrees. Defaults
                to the whole window, or the window without its two edge
                degrees for a cut complex.
            check -- validate shapes, module maps and d*d = 0.

        """
        terms = list(terms)
        if not terms:
            terms = [_zero_module(algebra, side)]
        self._algebra = algebra
        self._side = side
        self._lo = lo
        self._terms = terms
        self._differentials = {}
        ring = algebra.ring
        for i in range(lo + 1, lo + len(terms)):
            d = differentials.get(i)
            shape = (terms[i - 1 - lo].dim, terms[i - lo].dim)
            if d is None:
                d = Matrix.zeros(ring, *shape)
            elif d.shape != shape:
                raise ShapeMismatch('differential in degree {} should be '
                                    '{}, not {}'.format(i, shape, d.shape))
            self._differentials[i] = d
        self._window_of_unbounded = window_of_unbounded
        if interior is None:
            hi = self.hi
            interior = (lo + 1, hi - 1) if window_of_unbounded else (lo, hi)
        self._interior = interior
        if check:
            self._validate()

    def _validate(self):
        for term in self._terms:
            if term.algebra != self._algebra or term.side != self._side:
                raise SideMismatch('every term must be a {} module over the '
                                   'same algebra'.format(self._side))
        for i in range(self._lo + 1, self.hi + 1):
            ModuleHom(self.term(i), self.term(i - 1), self.differential(i))
        for i in range(self._lo + 2, self.hi + 1):
            if not (self.differential(i - 1) @ self.differential(i)).is_zero():
                raise ValueError('d*d is not zero at degree {}'.format(i))

    algebra = property(lambda self: self._algebra)
    side = property(lambda self: self._side)
    lo = property(lambda self: self._lo)
    window_of_unbounded = property(lambda self: self._window_of_unbounded)
    interior = property(lambda self: self._interior)

    @property
    def ring(self):
        return self._algebra.ring

    @property
    def hi(self):
        return self._lo + len(self._terms) - 1

    @property
    def degrees(self):
        return range(self._lo, self.hi + 1)

    def term(self, i):
        if self._lo <= i <= self.hi:
            return self._terms[i - self._lo]
        return _zero_module(self._algebra, self._side)

    def dim(self, i):
        return self.term(i).dim

    def differential(self, i):
        """The Matrix of the differential out of degree i."""
        d = self._differentials.get(i)
        if d is None:
            return Matrix.zeros(self.ring, self.dim(i - 1), self.dim(i))
        return d

    def is_determinate(self, i):
        first, last = self._interior
        return first <= i <= last

    @property
    def is_free(self):
        return all(term.free_rank is not None for term in self._terms)

    @property
    def is_stalk(self):
        return sum(1 for term in self._terms if term.dim) <= 1

    def __repr__(self):
        return '<ComplexRep over {!r} in degrees {}..{}>'.format(
            self._algebra, self._lo, self.hi)


def stalk(module, degree=0):
    """A module as a complex concentrated in one degree."""
    return ComplexRep(module.algebra, degree, [module], {}, module.side,
                      check=False)


def homology(x, degrees=None):
    """Homology of a complex, degree by degree.

    Returns:
        GradedVectorData whose representatives are cycles that are not
        boundaries. Degrees outside the interior of a cut complex are
        computed but not marked determinate.

    """
    ring = x.ring
    if degrees is None:
        degrees = x.degrees
    sizes, reps, determinate = {}, {}, set()
    for i in degrees:
        size, representatives = _homology_at(ring, x.dim(i),
                                             x.differential(i + 1),
                                             x.differential(i))
        sizes[i] = size
        reps[i] = tuple(representatives)
        if x.is_determinate(i):
            determinate.add(i)
    return GradedVectorData(_measure(ring), sizes, reps,
                            frozenset(determinate))


# Free resolutions.
class Resolution:
    """A free resolution ... -> F_1 -> F_0 -> M, built stage by stage.

    Stage n presents the syzygy module Omega^n M (Omega^0 M = M) and
    takes F_n as the free cover.

    """
    def __init__(self, module, seed=None):
        self.module = module.as_left()
        self.algebra = self.module.algebra
        self._rng = Random(seed) if seed is not None else None
        self._syzygies = [self.module]
        self._inclusions = [None]
        self._presentations = []

    def _present(self, module):
        if self._rng is None:
            return module.presentation
        order = list(range(module.dim))
        self._rng.shuffle(order)
        return Presentation(module, order)

    def presentation(self, n):
        while len(self._presentations) <= n:
            k = len(self._presentations)
            pres = self._present(self.syzygy(k))
            self._presentations.append(pres)
        return self._presentations[n]

    def syzygy(self, n):
        """Omega^n M as a module."""
        while len(self._syzygies) <= n:
            k = len(self._syzygies) - 1
            pres = self.presentation(k)
            module, inclusion = submodule(pres.free, pres.kernel)
            self._syzygies.append(module)
            self._inclusions.append(inclusion)
            logger.debug('syzygy %d has dimension %d', k + 1, module.dim)
        return self._syzygies[n]

    def inclusion(self, n):
        """The inclusion of Omega^n M into F_{n-1}, for n >= 1."""
        self.syzygy(n)
        return self._inclusions[n]

    def rank(self, n):
        return self.presentation(n).rank

    def term(self, n):
        return self.presentation(n).free

    @property
    def augmentation(self):
        return self.presentation(0).cover

    def differential(self, n):
        """The Matrix of F_n -> F_{n-1}, for n >= 1."""
        return self.inclusion(n) @ self.presentation(n).cover

    def generator_images(self, n):
        """The images in F_{n-1} of the generators of F_n."""
        d = self.differential(n)
        dim = self.algebra.dim
        unit = self.algebra.unit
        images = []
        for l in range(self.rank(n)):
            column = [0] * (self.rank(n) * dim)
            column[l * dim:(l + 1) * dim] = unit
            images.append(d.apply(column))
        return images

    def complex(self, length):
        """F_length -> ... -> F_0 as a complex in degrees 0..length."""
        terms = [self.term(n) for n in range(length + 1)]
        differentials = {n: self.differential(n)
                         for n in range(1, length + 1)}
        return ComplexRep(self.algebra, 0, terms, differentials,
                          check=False)

    def verify(self, length):
        """Check exactness of F_length -> ... -> F_0 -> M -> 0 in degrees
        0..length-1."""
        ring = self.algebra.ring
        identity = Matrix.identity(ring, self.module.dim)
        if self.module.dim and solve(self.augmentation, identity) is None:
            return False
        outgoing = self.augmentation
        for n in range(length):
            incoming = self.differential(n + 1)
            if not (outgoing @ incoming).is_zero():
                return False
            cycles = Span.kernel(outgoing)
            boundaries = Span.of_columns(incoming)
            if _size(ring, cycles) != _size(ring, boundaries):
                return False
            outgoing = incoming
        return True


def free_resolution(module, horizon, seed=None):
    """A free resolution of a module up to degree horizon.

    Returns:
        A pair (complex, augmentation) where complex holds F_0..F_horizon
        and augmentation is the Matrix of F_0 -> M.

    """
    resolution = Resolution(module, seed)
    return resolution.complex(horizon), resolution.augmentation


def syzygy(module, n):
    """The n-th syzygy module of a free resolution."""
    return Resolution(module).syzygy(n)


def _cochain_matrix(resolution, n, target):
    """Matrix of Hom(F_n, N) -> Hom(F_{n+1}, N), both written as N^s."""
    ring = target.ring
    dim = resolution.algebra.dim
    rows = []
    for w in resolution.generator_images(n + 1):
        blocks = [target.action(w[j * dim:(j + 1) * dim])
                  for j in range(resolution.rank(n))]
        rows.append(Matrix.hstack(ring, blocks, target.dim))
    return Matrix.vstack(ring, rows, resolution.rank(n) * target.dim)


def ext(m, n, degrees, resolution=None):
    """Ext^i_A(M, N) for i in degrees.

    Positional arguments:
        m, n -- ModuleRep instances over the same algebra and side.
        degrees -- an iterable of nonnegative integers.

    Keyword arguments:
        resolution -- a Resolution of m to use (default: a fresh one).

    Returns:
        GradedVectorData whose representatives are cocycles in N^s_i
        (images of the generators of F_i) that are not coboundaries.

    """
    if m.algebra != n.algebra or m.side != n.side:
        raise SideMismatch('Ext needs modules over the same algebra on the '
                           'same side')
    target = n.as_left()
    if resolution is None:
        resolution = Resolution(m)
    ring = m.ring
    sizes, reps = {}, {}
    degrees = list(degrees)
    for i in degrees:
        size_i = resolution.rank(i) * target.dim
        outgoing = _cochain_matrix(resolution, i, target)
        if i == 0:
            incoming = Matrix.zeros(ring, size_i, 0)
        else:
            incoming = _cochain_matrix(resolution, i - 1, target)
        sizes[i], reps[i] = _homology_at(ring, size_i, incoming, outgoing)
        reps[i] = tuple(reps[i])
    return GradedVectorData(_measure(ring), sizes, reps, frozenset(degrees))


def tor(m, n, degrees, resolution=None):
    """Tor_i^A(M, N) for a right module M and a left module N."""
    if m.side != RIGHT or n.side != LEFT or m.algebra != n.algebra:
        raise SideMismatch('Tor needs a right and a left module over the '
                           'same algebra')
    if resolution is None:
        resolution = Resolution(m)
    ring = m.ring
    dim = m.algebra.dim
    sizes, reps = {}, {}
    degrees = list(degrees)

    def chain_matrix(i):
        # Tensoring F_i -> F_{i-1} with N: block (j, l) acts by w_lj.
        rows = resolution.rank(i - 1)
        columns = []
        for w in resolution.generator_images(i):
            blocks = [n.action(w[j * dim:(j + 1) * dim])
                      for j in range(rows)]
            columns.append(Matrix.vstack(ring, blocks, n.dim))
        return Matrix.hstack(ring, columns, rows * n.dim)
    for i in degrees:
        size_i = resolution.rank(i) * n.dim
        outgoing = (chain_matrix(i) if i > 0
                    else Matrix.zeros(ring, 0, size_i))
        incoming = chain_matrix(i + 1)
        sizes[i], reps[i] = _homology_at(ring, size_i, incoming, outgoing)
        reps[i] = tuple(reps[i])
    return GradedVectorData(_measure(ring), sizes, reps, frozenset(degrees))


# Total complexes.
def _check_window(count):
    if count > config.MAX_WINDOW:
        raise WindowOverflow('total complex would span {} degrees (limit '
                             '{})'.format(count, config.MAX_WINDOW))


def _base_terms(ring, dims):
    algebra = base_algebra(ring)
    return algebra, [ModuleRep(algebra, [Matrix.identity(ring, d)],
                               check=False) for d in dims]


class HomComplex(ComplexRep):
    """Hom_A(X, Y) over the base, remembering its components.

    components[n] lists (i, maps, span, offset) for the summands
    Hom_A(X_i, Y_{i+n}) of degree n.

    """
    def element(self, n, family):
        """Coordinates of the degree-n element with components
        family[i]: X_i -> Y_{i+n} (missing components are zero)."""
        ring = self.ring
        vector = [ring.zero] * self.dim(n)
        for i, maps, span, offset in self.components.get(n, ()):
            matrix = family.get(i)
            if matrix is None or not maps:
                continue
            coords = span.coordinates(matrix.entries)
            vector[offset:offset + len(coords)] = coords
        return tuple(vector)


def hom_complex(x, y):
    """The total Hom complex Hom_A(X, Y), over the base ring.

    The differential of f in degree n is d_Y f - (-1)^n f d_X.

    """
    if x.algebra != y.algebra or x.side != y.side:
        raise SideMismatch('Hom complexes need complexes over the same '
                           'algebra on the same side')
    ring = x.ring
    lo, hi = y.lo - x.hi, y.hi - x.lo
    _check_window(hi - lo + 1)
    components = {}
    for n in range(lo, hi + 1):
        offset = 0
        parts = []
        for i in x.degrees:
            if not y.lo <= i + n <= y.hi:
                continue
            maps, span = hom_matrices(x.term(i).as_left(),
                                       y.term(i + n).as_left())
            if maps and not span.is_free:
                raise NotFreeOverBase('Hom space is not free over '
                                      '{}'.format(ring))
            parts.append((i, maps, span, offset))
            offset += len(maps)
        components[n] = parts
    dims = [sum(len(p[1]) for p in components[n]) for n in range(lo, hi + 1)]
    algebra, terms = _base_terms(ring, dims)
    differentials = {}
    for n in range(lo + 1, hi + 1):
        target_parts = {i: (span, offset)
                        for i, _, span, offset in components[n - 1]}
        columns = []
        sign = -1 if n % 2 == 0 else 1
        for i, maps, _, _ in components[n]:
            for f in maps:
                column = [ring.zero] * dims[n - 1 - lo]
                if i in target_parts:
                    span, offset = target_parts[i]
                    image = y.differential(i + n) @ f
                    coords = span.coordinates(image.entries)
                    for k, c in enumerate(coords):
                        column[offset + k] += c
                if i + 1 in target_parts:
                    span, offset = target_parts[i + 1]
                    image = (f @ x.differential(i + 1)).scale(sign)
                    coords = span.coordinates(image.entries)
                    for k, c in enumerate(coords):
                        column[offset + k] += c
                columns.append(column)
        differentials[n] = Matrix.from_columns(ring, columns,
                                               dims[n - 1 - lo])
    cut = x.window_of_unbounded or y.window_of_unbounded
    result = HomComplex(algebra, lo, terms, differentials,
                        window_of_unbounded=cut,
                        interior=(hi, lo) if cut else None, check=False)
    result.components = components
    return result


class TensorComplex(ComplexRep):
    """X (x)_A Y over the base, remembering its components.

    components[n] lists (i, j, quotient, offset) for the summands
    X_i (x)_A Y_j with i + j = n.

    """


def _as_right_terms(x):
    """Terms of a complex as right modules; left modules over a
    commutative algebra are reread as right modules."""
    if x.side == RIGHT:
        return x
    x.algebra.require_commutative()
    terms = [ModuleRep(t.algebra, t.actions, RIGHT, t.free_rank, check=False)
             for t in (x.term(i) for i in x.degrees)]
    return ComplexRep(x.algebra, x.lo, terms,
                      {i: x.differential(i) for i in x.degrees}, RIGHT,
                      x.window_of_unbounded, x.interior, check=False)


def tensor_complex(x, y):
    """The total tensor complex X (x)_A Y, over the base ring.

    The differential is d(a (x) b) = da (x) b + (-1)^|a| a (x) db. When
    either factor is a cut window of an unbounded complex, the result is
    determinate only in degrees [max(lo_X + hi_Y, lo_Y + hi_X) + 1,
    hi_X + hi_Y - 1].

    """
    x = _as_right_terms(x)
    if y.side != LEFT or x.algebra != y.algebra:
        raise SideMismatch('tensor complexes need a right and a left '
                           'complex over the same algebra')
    ring = x.ring
    lo, hi = x.lo + y.lo, x.hi + y.hi
    _check_window(hi - lo + 1)
    quotients = {}
    for i in x.degrees:
        for j in y.degrees:
            a, b = x.term(i), y.term(j)
            quotients[i, j] = TensorQuotient(ring, a.actions, b.actions,
                                             a.dim, b.dim)
    components = {}
    for n in range(lo, hi + 1):
        offset = 0
        parts = []
        for i in x.degrees:
            if (i, n - i) in quotients:
                q = quotients[i, n - i]
                parts.append((i, n - i, q, offset))
                offset += q.dim
        components[n] = parts
    dims = [sum(p[2].dim for p in components[n]) for n in range(lo, hi + 1)]
    algebra, terms = _base_terms(ring, dims)
    differentials = {}
    for n in range(lo + 1, hi + 1):
        where = {(i, j): (q, offset)
                 for i, j, q, offset in components[n - 1]}
        blocks = []
        for i, j, q, _ in components[n]:
            block = [[ring.zero] * q.dim for _ in range(dims[n - 1 - lo])]
            eye_y = Matrix.identity(ring, y.dim(j))
            eye_x = Matrix.identity(ring, x.dim(i))
            moves = []
            if (i - 1, j) in where:
                moves.append(((i - 1, j),
                              x.differential(i).kronecker(eye_y), 1))
            if (i, j - 1) in where:
                moves.append(((i, j - 1),
                              eye_x.kronecker(y.differential(j)),
                              -1 if i % 2 else 1))
            for key, matrix, sign in moves:
                target, offset = where[key]
                if not target.dim or not q.dim:
                    continue
                induced = q.induced(matrix, target)
                for r, row in enumerate(induced):
                    for c, v in enumerate(row):
                        block[offset + r][c] += sign * v
            blocks.append(Matrix(ring, block, q.dim))
        differentials[n] = Matrix.hstack(ring, blocks, dims[n - 1 - lo])
    cut = x.window_of_unbounded or y.window_of_unbounded
    interior = None
    if cut:
        interior = (max(x.lo + y.hi, y.lo + x.hi) + 1, x.hi + y.hi - 1)
    result = TensorComplex(algebra, lo, terms, differentials,
                           window_of_unbounded=cut, interior=interior,
                           check=False)
    result.components = components
    return result


def suspend(x, n=1):
    """The shift X[n], with X[n]_i = X_{i-n} and differential
    (-1)^n d."""
    sign = -1 if n % 2 else 1
    differentials = {i + n: x.differential(i).scale(sign)
                     for i in range(x.lo + 1, x.hi + 1)}
    first, last = x.interior
    return ComplexRep(x.algebra, x.lo + n, [x.term(i) for i in x.degrees],
                      differentials, x.side, x.window_of_unbounded,
                      (first + n, last + n), check=False)


class ChainMap:
    """A degreewise family of module maps commuting with differentials."""
    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        ring = source.ring
        self.components = {}
        for i in range(min(source.lo, target.lo),
                       max(source.hi, target.hi) + 1):
            c = components.get(i)
            if c is None:
                c = Matrix.zeros(ring, target.dim(i), source.dim(i))
            self.components[i] = c
        if check:
            for i, c in self.components.items():
                if (target.differential(i) @ c !=
                        self.component(i - 1) @ source.differential(i)):
                    raise ValueError('not a chain map at degree '
                                     '{}'.format(i))

    def component(self, i):
        c = self.components.get(i)
        if c is None:
            return Matrix.zeros(self.source.ring, self.target.dim(i),
                                self.source.dim(i))
        return c


def cone(alpha):
    """The mapping cone of a chain map X -> Y: Cone_n = X_{n-1} + Y_n
    with d(x, y) = (-dx, alpha(x) + dy)."""
    x, y = alpha.source, alpha.target
    ring = x.ring
    lo = min(x.lo + 1, y.lo)
    hi = max(x.hi + 1, y.hi)
    terms = [direct_sum(x.term(n - 1), y.term(n)) for n in range(lo, hi + 1)]
    differentials = {}
    for n in range(lo + 1, hi + 1):
        top = Matrix.hstack(ring, [-x.differential(n - 1),
                                   Matrix.zeros(ring, x.dim(n - 2),
                                                y.dim(n))], x.dim(n - 2))
        bottom = Matrix.hstack(ring, [alpha.component(n - 1),
                                      y.differential(n)], y.dim(n - 1))
        differentials[n] = Matrix.vstack(ring, [top, bottom],
                                         x.dim(n - 1) + y.dim(n))
    return ComplexRep(x.algebra, lo, terms, differentials, x.side,
                      check=False)


def resolve_complex(x, horizon=None):
    """Replace a bounded-below complex by a degreewise free one.

    Each free term P_n covers the cycles of the mapping cone in degree n
    that are not yet boundaries, so the cone is acyclic through the top
    degree built.

    Returns:
        A pair (P, alpha) of a free ComplexRep in degrees lo..hi+horizon
        and a ChainMap P -> X inducing isomorphisms on homology in
        degrees up to hi + horizon - 1.

    """
    if x.window_of_unbounded:
        raise UnboundedBelow('cannot resolve a cut window of an unbounded '
                             'complex')
    if x.is_free:
        identity = {i: Matrix.identity(x.ring, x.dim(i)) for i in x.degrees}
        return x, ChainMap(x, x, identity, check=False)
    if horizon is None:
        horizon = config.default_horizon()
    algebra = x.algebra
    ring = x.ring
    terms_p, diffs_p, alpha = [], {}, {}
    top = x.hi + horizon
    previous = _zero_module(algebra, x.side)
    previous_d = Matrix.zeros(ring, 0, 0)
    for n in range(x.lo, top + 1):
        x_n = x.term(n)
        cone_term = direct_sum(previous, x_n)
        # Cone differential on P_{n-1} + X_n.
        below = x.dim(n - 1)
        d_p = (previous_d if n > x.lo
               else Matrix.zeros(ring, 0, previous.dim))
        alpha_prev = (alpha[n - 1] if n > x.lo
                      else Matrix.zeros(ring, x.dim(n - 1), previous.dim))
        top_rows = Matrix.hstack(ring, [-d_p, Matrix.zeros(
            ring, d_p.nrows, x_n.dim)], d_p.nrows)
        bottom_rows = Matrix.hstack(ring, [alpha_prev, x.differential(n)],
                                    below)
        d_cone = Matrix.vstack(ring, [top_rows, bottom_rows],
                               cone_term.dim)
        cycles = Span.kernel(d_cone)
        x_boundaries = [(ring.zero,) * previous.dim + b
                        for b in x.differential(n + 1).columns()]
        reached = generated_span(cone_term, x_boundaries)
        generators = []
        for z in cycles.basis:
            if not reached.contains(z):
                generators.append(z)
                reached = generated_span(cone_term, [z], reached)
        p_n = free_module(algebra, len(generators), x.side)
        columns = [act.apply(g) for g in generators
                   for act in cone_term.actions]
        psi = Matrix.from_columns(ring, columns, cone_term.dim)
        d_n = -psi.submatrix(range(previous.dim), range(psi.ncols))
        alpha[n] = psi.submatrix(range(previous.dim, cone_term.dim),
                                 range(psi.ncols))
        if n > x.lo:
            diffs_p[n] = d_n
        terms_p.append(p_n)
        previous, previous_d = p_n, d_n
        logger.debug('resolved complex degree %d with free rank %d', n,
                     len(generators))
    p = ComplexRep(algebra, x.lo, terms_p, diffs_p, x.side, check=False)
    return p, ChainMap(p, x, alpha, check=False)


def _top_homology_degree(x):
    nonzero = homology(x).nonzero_degrees(determinate_only=False)
    return max(nonzero) if nonzero else None


def periodicity_certificate(module, horizon, seed=0):
    """Look for Omega^{j+p} M isomorphic to Omega^j M with a
    non-projective member, which forces infinite projective dimension.

    Returns:
        A dict (start, period) or None.

    """
    resolution = Resolution(module)
    syzygies = [resolution.syzygy(n) for n in range(horizon + 1)]
    for end in range(1, horizon + 1):
        for start in range(end):
            a, b = syzygies[start], syzygies[end]
            if a.dim != b.dim or a.dim == 0:
                continue
            if iso_search(a, b, seed=seed).status != Status.PROVEN:
                continue
            projective, _ = is_projective(a)
            if not projective:
                logger.debug('syzygies %d and %d are isomorphic', start, end)
                return {'start': start, 'period': end - start}
    return None


def is_perfect(x, horizon=None, seed=0):
    """Test whether a bounded-below complex is perfect.

    Returns:
        Proven with a finite-resolution (or acyclic) certificate when
        some image module im(d_n) past the top homology is projective;
        Refuted with a syzygy-period certificate for a stalk module with
        periodic non-projective syzygies; otherwise Inconclusive.

    """
    if horizon is None:
        horizon = config.default_horizon()
    if x.window_of_unbounded:
        raise UnboundedBelow('perfectness needs a bounded complex')
    top = _top_homology_degree(x)
    if top is None:
        return Verdict.proven('acyclic', {'degrees': [x.lo, x.hi]},
                              lambda: _top_homology_degree(x) is None,
                              horizon=horizon)
    if x.is_free:
        return Verdict.proven('finite-resolution',
                              {'degree': x.hi, 'length': x.hi - x.lo},
                              lambda: x.is_free, horizon=0)
    p, _ = resolve_complex(x, horizon)
    for n in range(top + 1, top + horizon + 1):
        image_span = Span.of_columns(p.differential(n))
        image, _ = submodule(p.term(n - 1), image_span)
        projective, splitting = is_projective(image)
        if projective:
            return Verdict.proven(
                'finite-resolution', {'degree': n, 'length': n - x.lo},
                lambda image=image: is_projective(image)[0],
                horizon=horizon)
    if x.is_stalk:
        nonzero = [i for i in x.degrees if x.dim(i)]
        module = x.term(nonzero[0])
        period = periodicity_certificate(module, horizon, seed)
        if period is not None:
            return Verdict.refuted(
                'syzygy-period', period,
                lambda: periodicity_certificate(module, horizon,
                                                seed) is not None,
                horizon=horizon)
    return Verdict.inconclusive(horizon, 'no projective image module '
                                'within the horizon')


# Injective resolutions.
class InjectiveResolution:
    """0 -> M -> I^0 -> I^1 -> ..., built by dualising a free resolution
    of the base dual over the opposite algebra.

    complex holds I^j in homological degree -j. terminated is True when
    the last term is injective and the sequence ends there.

    """
    def __init__(self, complex, coaugmentation, terminated, length):
        self.complex = complex
        self.coaugmentation = coaugmentation
        self.terminated = terminated
        self.length = length

    def verify(self):
        """Check that 0 -> M -> I^0 -> ... is exact where computed."""
        i = self.complex
        ring = i.ring
        if kernel_basis(self.coaugmentation).ncols:
            return False
        incoming = self.coaugmentation
        last = self.length if self.terminated else self.length - 1
        for j in range(0, last + 1):
            outgoing = i.differential(-j)
            if not (outgoing @ incoming).is_zero():
                return False
            cycles = Span.kernel(outgoing)
            boundaries = Span.of_columns(incoming)
            if _size(ring, cycles) != _size(ring, boundaries):
                return False
            incoming = outgoing
        return True


def _flip(module, algebra):
    """Read a right module over A^op as a left module over A (or the
    other way round) with the same matrices."""
    side = LEFT if module.side == RIGHT else RIGHT
    return ModuleRep(algebra, module.actions, side, check=False)


def injective_resolution(module, horizon=None):
    """An injective resolution of a module, by duality.

    Returns:
        An InjectiveResolution. It terminates at the first n within the
        horizon where Omega^n of the base dual is projective; otherwise
        it holds I^0..I^horizon and terminated is False.

    """
    if horizon is None:
        horizon = config.default_horizon()
    algebra = module.algebra
    side = module.side
    dual = dual_over_base(module)
    resolution = Resolution(dual)
    length, terminated = horizon, False
    for n in range(horizon + 1):
        if is_projective(resolution.syzygy(n))[0]:
            length, terminated = n, True
            break
    ring = module.ring

    def term(j):
        # The dual of a left module over the opposite algebra, read over
        # the original algebra on the original side.
        if terminated and j == length:
            source = resolution.syzygy(j)
        else:
            source = resolution.term(j)
        flipped = dual_over_base(source)
        return ModuleRep(algebra, flipped.actions, side, check=False)

    terms = [term(j) for j in range(length, -1, -1)]
    differentials = {}
    for j in range(length):
        # I^j -> I^{j+1}, from degree -j to -j-1.
        if terminated and j + 1 == length:
            d = resolution.inclusion(length).T
        else:
            d = resolution.differential(j + 1).T
        differentials[-j] = d
    if terminated and length == 0:
        # The base dual is already projective, so M is injective.
        coaugmentation = Matrix.identity(ring, module.dim)
    else:
        coaugmentation = resolution.augmentation.T
    complex = ComplexRep(algebra, -length, terms, differentials, side,
                         check=False)
    logger.debug('injective resolution of length %d (terminated: %s)',
                 length, terminated)
    return InjectiveResolution(complex, coaugmentation, terminated, length)
