#!/usr/bin/env python3

"""Modules and bimodules over finite-dimensional algebras."""

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

__all__ = ['ModuleRep', 'BimoduleRep', 'ModuleHom', 'Presentation',
           'TensorQuotient', 'Biduality', 'LEFT', 'RIGHT',
           'free_module', 'regular_module', 'bimodule_regular',
           'direct_sum', 'generated_span', 'submodule', 'quotient_module',
           'cyclic_module', 'hom_space', 'hom_matrices', 'hom_module',
           'tensor_over',
           'dual_over_base', 'restrict', 'is_projective', 'is_injective',
           'iso_search', 'biduality_map']

# Standard library imports.
from collections import namedtuple
from itertools import product as cartesian
import logging
from random import Random

# Local imports.
from . import config
from .algebra import base_algebra
from .errors import (ShapeMismatch, ModuleValidationError, SideMismatch,
                     NoResidualAction, NotFreeOverBase)
from .exactlin import Matrix, Span, kernel_basis, solve, is_invertible
from .verdict import Verdict

logger = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'


def _combine(ring, coefficients, matrices, nrows, ncols):
    """The linear combination sum(c * m) of equally shaped matrices."""
    acc = [[0] * ncols for _ in range(nrows)]
    for c, m in zip(coefficients, matrices):
        if not c:
            continue
        for i, row in enumerate(m):
            target = acc[i]
            for j, x in enumerate(row):
                if x:
                    target[j] += c * x
    return Matrix(ring, acc, ncols)


def _check_side(side):
    if side not in (LEFT, RIGHT):
        raise ValueError('side must be {!r} or {!r}, not {!r}'.format(
            LEFT, RIGHT, side))


def _validate_actions(algebra, actions, side):
    """Raise ModuleValidationError unless the matrices define a module."""
    if len(actions) != algebra.dim:
        raise ShapeMismatch('need one action matrix per basis element')
    sizes = set(m.shape for m in actions)
    if len(sizes) != 1 or actions[0].nrows != actions[0].ncols:
        raise ShapeMismatch('action matrices must be square and equal in '
                            'size')
    dim = actions[0].nrows
    ring = algebra.ring
    if _combine(ring, algebra.unit, actions, dim, dim) != Matrix.identity(
            ring, dim):
        raise ModuleValidationError('the unit does not act as the '
                                    'identity', ('unit',))
    for i, j in cartesian(range(algebra.dim), repeat=2):
        expected = _combine(ring, algebra.table[i][j], actions, dim, dim)
        if side == LEFT:
            composed = actions[i] @ actions[j]
        else:
            composed = actions[j] @ actions[i]
        if composed != expected:
            raise ModuleValidationError(
                'actions of {} and {} do not compose to their '
                'product'.format(algebra.names[i], algebra.names[j]), (i, j))


# Pythonic class for module representations.
class ModuleRep:
    """A finitely generated module given by one action matrix per basis
    element of the algebra.

    For a right module the matrix of a sends m to m*a, so the matrices
    compose in the reverse order of the algebra product.

    """
    def __init__(self, algebra, actions, side=LEFT, free_rank=None,
                 maps=None, check=True):
        """Construct a new module.

        Positional arguments:
            algebra -- the acting Algebra.
            actions -- a sequence of square Matrix instances, one per
                basis element of the algebra.

        Keyword arguments:
            side -- 'left' (the default) or 'right'.
            free_rank -- the rank, for modules built as free modules.
            maps -- for modules built as Hom spaces, the base matrices
                realising each basis vector.
            check -- validate the module axioms (default True).

        """
        _check_side(side)
        actions = tuple(actions)
        if check:
            _validate_actions(algebra, actions, side)
        self._algebra = algebra
        self._actions = actions
        self._side = side
        self._dim = actions[0].nrows if actions else 0
        self._free_rank = free_rank
        self._maps = tuple(maps) if maps is not None else None
        self._presentation = None

    @property
    def algebra(self):
        return self._algebra

    @property
    def ring(self):
        return self._algebra.ring

    @property
    def actions(self):
        return self._actions

    @property
    def side(self):
        return self._side

    @property
    def dim(self):
        return self._dim

    @property
    def free_rank(self):
        return self._free_rank

    @property
    def maps(self):
        return self._maps

    def action(self, a):
        """The matrix by which an algebra element acts."""
        return _combine(self.ring, a, self._actions, self._dim, self._dim)

    def act(self, a, vector):
        return self.action(a).apply(vector)

    def as_left(self):
        """The same data as a left module (over the opposite algebra when
        this is a right module)."""
        if self._side == LEFT:
            return self
        return ModuleRep(self._algebra.opposite(), self._actions, LEFT,
                         self._free_rank, self._maps, check=False)

    @property
    def presentation(self):
        if self._presentation is None:
            self._presentation = Presentation(self.as_left())
        return self._presentation

    def __eq__(self, other):
        return (isinstance(other, ModuleRep) and
                self._algebra == other._algebra and
                self._side == other._side and
                self._actions == other._actions)

    def __hash__(self):
        return hash((self._algebra, self._side, self._actions))

    def __repr__(self):
        return '<{} ModuleRep of dimension {} over {!r}>'.format(
            self._side, self._dim, self._algebra)


class BimoduleRep:
    """A module with commuting left and right actions."""
    def __init__(self, left_algebra, right_algebra, left_actions,
                 right_actions, maps=None, check=True):
        left_actions = tuple(left_actions)
        right_actions = tuple(right_actions)
        if check:
            _validate_actions(left_algebra, left_actions, LEFT)
            _validate_actions(right_algebra, right_actions, RIGHT)
            if left_actions[0].shape != right_actions[0].shape:
                raise ShapeMismatch('left and right actions differ in size')
            for i, j in cartesian(range(left_algebra.dim),
                                  range(right_algebra.dim)):
                if (left_actions[i] @ right_actions[j] !=
                        right_actions[j] @ left_actions[i]):
                    raise ModuleValidationError(
                        'left action of {} and right action of {} do not '
                        'commute'.format(left_algebra.names[i],
                                         right_algebra.names[j]), (i, j))
        self._left_algebra = left_algebra
        self._right_algebra = right_algebra
        self._left_actions = left_actions
        self._right_actions = right_actions
        self._maps = tuple(maps) if maps is not None else None

    left_algebra = property(lambda self: self._left_algebra)
    right_algebra = property(lambda self: self._right_algebra)
    left_actions = property(lambda self: self._left_actions)
    right_actions = property(lambda self: self._right_actions)
    maps = property(lambda self: self._maps)

    @property
    def ring(self):
        return self._left_algebra.ring

    @property
    def dim(self):
        return self._left_actions[0].nrows

    @property
    def left_module(self):
        return ModuleRep(self._left_algebra, self._left_actions, LEFT,
                         maps=self._maps, check=False)

    @property
    def right_module(self):
        return ModuleRep(self._right_algebra, self._right_actions, RIGHT,
                         maps=self._maps, check=False)

    def __eq__(self, other):
        return (isinstance(other, BimoduleRep) and
                self._left_algebra == other._left_algebra and
                self._right_algebra == other._right_algebra and
                self._left_actions == other._left_actions and
                self._right_actions == other._right_actions)

    def __hash__(self):
        return hash((self._left_actions, self._right_actions))

    def __repr__(self):
        return '<BimoduleRep of dimension {} over {!r} and {!r}>'.format(
            self.dim, self._left_algebra, self._right_algebra)


def _structures(module):
    if isinstance(module, BimoduleRep):
        return [(module.left_algebra, LEFT, module.left_actions),
                (module.right_algebra, RIGHT, module.right_actions)]
    return [(module.algebra, module.side, module.actions)]


class ModuleHom:
    """A base-linear map between modules that commutes with the actions."""
    def __init__(self, source, target, matrix, check=True):
        """Construct a new module homomorphism.

        Positional arguments:
            source, target -- ModuleRep (or BimoduleRep) instances with
                the same algebra(s) and side(s).
            matrix -- a Matrix of shape (target.dim, source.dim).

        Keyword arguments:
            check -- verify that the matrix intertwines every action.

        """
        src, tgt = _structures(source), _structures(target)
        if ([(a, s) for a, s, _ in src] != [(a, s) for a, s, _ in tgt]):
            raise SideMismatch('homomorphisms need modules over the same '
                               'algebra on the same side')
        if matrix.shape != (target.dim, source.dim):
            raise ShapeMismatch('expected a {} x {} matrix'.format(
                target.dim, source.dim))
        if check:
            for (algebra, _, s_acts), (_, _, t_acts) in zip(src, tgt):
                for i in range(algebra.dim):
                    if matrix @ s_acts[i] != t_acts[i] @ matrix:
                        raise ModuleValidationError(
                            'matrix does not commute with the action of '
                            '{}'.format(algebra.names[i]), (i,))
        self._source = source
        self._target = target
        self._matrix = matrix

    source = property(lambda self: self._source)
    target = property(lambda self: self._target)
    matrix = property(lambda self: self._matrix)

    @property
    def is_injective(self):
        return kernel_basis(self._matrix).ncols == 0

    @property
    def is_surjective(self):
        return solve(self._matrix, Matrix.identity(
            self._matrix.ring, self._target.dim)) is not None

    @property
    def is_bijective(self):
        return is_invertible(self._matrix)

    def compose(self, other):
        """The composite self after other."""
        return ModuleHom(other.source, self._target,
                         self._matrix @ other.matrix, check=False)

    def __repr__(self):
        return '<ModuleHom {!r} -> {!r}>'.format(self._source, self._target)


# Constructors.
def free_module(algebra, rank=1, side=LEFT):
    """The free module of the given rank, acting by multiplication."""
    _check_side(side)
    mults = (algebra.left_multiplications if side == LEFT
             else algebra.right_multiplications)
    actions = [Matrix.block_diagonal(algebra.ring, [m] * rank)
               for m in mults]
    if rank == 0:
        actions = [Matrix.zeros(algebra.ring, 0, 0)] * algebra.dim
    return ModuleRep(algebra, actions, side, free_rank=rank, check=False)


def regular_module(algebra, side=LEFT):
    return free_module(algebra, 1, side)


def bimodule_regular(algebra):
    """The algebra as a bimodule over itself."""
    return BimoduleRep(algebra, algebra, algebra.left_multiplications,
                       algebra.right_multiplications, check=False)


def direct_sum(m, n):
    if m.algebra != n.algebra or m.side != n.side:
        raise SideMismatch('direct sums need modules over the same algebra '
                           'on the same side')
    ring = m.ring
    actions = [Matrix.block_diagonal(ring, [a, b])
               for a, b in zip(m.actions, n.actions)]
    rank = (m.free_rank + n.free_rank
            if m.free_rank is not None and n.free_rank is not None else None)
    return ModuleRep(m.algebra, actions, m.side, free_rank=rank, check=False)


def generated_span(module, vectors, within=None):
    """The submodule generated by some vectors, as a Span.

    A*v is spanned by the images of v under the basis actions, so one
    pass suffices.

    Keyword arguments:
        within -- a Span already closed under the actions, to be grown
            by the new vectors (default: start from zero).

    """
    images = [act.apply(v) for v in vectors for act in module.actions]
    if within is None:
        return Span(module.ring, module.dim, images)
    return within.extend(images)


def submodule(module, span):
    """The module structure on a submodule.

    Positional arguments:
        module -- a ModuleRep.
        span -- a Span closed under the actions (or vectors generating
            the submodule).

    Returns:
        A pair (submodule, inclusion matrix).

    """
    if not isinstance(span, Span):
        span = generated_span(module, span)
    if not span.is_free:
        raise NotFreeOverBase('submodule is not free over '
                              '{}'.format(module.ring))
    basis = span.basis
    actions = [Matrix.from_columns(module.ring,
                                   (span.coordinates(act.apply(v))
                                    for v in basis), len(basis))
               for act in module.actions]
    if not basis:
        actions = [Matrix.zeros(module.ring, 0, 0)] * module.algebra.dim
    inclusion = Matrix.from_columns(module.ring, basis, module.dim)
    return (ModuleRep(module.algebra, actions, module.side, check=False),
            inclusion)


def quotient_module(module, span):
    """The quotient of a module by a submodule.

    Returns:
        A pair (quotient, projection matrix).

    """
    if not isinstance(span, Span):
        span = generated_span(module, span)
    if not span.is_free:
        raise NotFreeOverBase('quotient is not free over '
                              '{}'.format(module.ring))
    ring = module.ring
    keep = span.complement()
    actions = [Matrix.from_columns(ring,
                                   (span.quotient_coordinates(act.column(k))
                                    for k in keep), len(keep))
               for act in module.actions]
    if not keep:
        actions = [Matrix.zeros(ring, 0, 0)] * module.algebra.dim
    projection = Matrix.from_columns(
        ring, (span.quotient_coordinates(col)
               for col in Matrix.identity(ring, module.dim).columns()),
        len(keep))
    return (ModuleRep(module.algebra, actions, module.side, check=False),
            projection)


def cyclic_module(algebra, elements, side=LEFT):
    """The cyclic module A/(A x_1 + ... + A x_r) (or A/(x_1 A + ...) for
    a right module)."""
    regular = regular_module(algebra, side)
    quotient, _ = quotient_module(regular, [tuple(x) for x in elements])
    return quotient


# Free covers.
class Presentation:
    """A free cover A^s -> M of a left module, with its relations.

    Generators are taken greedily from the coordinate basis, skipping
    vectors already in the submodule generated so far.

    """
    def __init__(self, module, order=None):
        """Present a module.

        Keyword arguments:
            order -- the order in which coordinate vectors are offered as
                generators (default: the natural order).

        """
        if module.side != LEFT:
            module = module.as_left()
        self.module = module
        algebra = module.algebra
        ring = module.ring
        generators = []
        reached = Span(ring, module.dim)
        for k in (range(module.dim) if order is None else order):
            e = tuple(ring.one if i == k else ring.zero
                      for i in range(module.dim))
            if not reached.contains(e):
                generators.append(e)
                reached = generated_span(module, [e], reached)
        self.generators = generators
        self.rank = len(generators)
        d = algebra.dim
        columns = [act.apply(v) for v in generators for act in module.actions]
        self.cover = Matrix.from_columns(ring, columns, module.dim)
        self.free = free_module(algebra, self.rank)
        self.kernel = (Span.kernel(self.cover) if columns
                       else Span(ring, 0))
        relations = []
        reached = Span(ring, self.rank * d)
        for w in self.kernel.basis:
            if not reached.contains(w):
                relations.append(w)
                reached = generated_span(self.free, [w], reached)
        self.relations = relations
        self._lift = None
        logger.debug('presented module of dimension %d with %d generators '
                     'and %d relations', module.dim, self.rank,
                     len(relations))

    @property
    def lift(self):
        """A base-linear section of the cover."""
        if self._lift is None:
            ring = self.module.ring
            self._lift = solve(self.cover,
                               Matrix.identity(ring, self.module.dim))
        return self._lift

    def blocks(self, vector):
        """Split a vector of A^s into its s components in A."""
        d = self.module.algebra.dim
        return [vector[j * d:(j + 1) * d] for j in range(self.rank)]

    def relation_matrix(self, target):
        """The matrix of (n_j) -> (sum_j w_lj n_j) on target^s."""
        ring = target.ring
        n = target.dim
        rows = [Matrix.hstack(ring, (target.action(w_j)
                                     for w_j in self.blocks(w)), n)
                for w in self.relations]
        return Matrix.vstack(ring, rows, self.rank * n)

    def extend(self, target, images):
        """The base matrix of the module map sending generator j to the
        j-th block of images."""
        ring = target.ring
        n = target.dim
        columns = []
        for j in range(self.rank):
            image = images[j * n:(j + 1) * n]
            columns.extend(act.apply(image) for act in target.actions)
        psi = Matrix.from_columns(ring, columns, n)
        return psi @ self.lift


def hom_matrices(m, n):
    """Generators of Hom_A(M, N) for left modules, in echelon order.

    Returns:
        A pair (maps, span) where span holds the vectorised maps.

    """
    ring = m.ring
    span_size = n.dim * m.dim
    if m.dim == 0 or n.dim == 0:
        return [], Span(ring, span_size)
    pres = m.presentation
    system = pres.relation_matrix(n)
    solutions = kernel_basis(system).columns()
    maps = [pres.extend(n, sol) for sol in solutions]
    span = Span(ring, span_size, [x.entries for x in maps])
    maps = [Matrix.from_entries(ring, n.dim, m.dim, row)
            for row in span.basis]
    return maps, span


def _require_same(m, n):
    if m.algebra != n.algebra or m.side != n.side:
        raise SideMismatch('modules must be over the same algebra on the '
                           'same side')


def hom_space(m, n):
    """A basis of Hom_A(M, N).

    Positional arguments:
        m, n -- ModuleRep instances over the same algebra, same side.

    Returns:
        A list of ModuleHom instances spanning the Hom space (a basis
        over a field, generators over Z/n).

    """
    _require_same(m, n)
    maps, _ = hom_matrices(m.as_left(), n.as_left())
    return [ModuleHom(m, n, x, check=False) for x in maps]


def _hom_part(module, side):
    """Split a (bi)module into the part Hom is taken over, as a left
    module, and the residual action."""
    if isinstance(module, BimoduleRep):
        if side == LEFT:
            return module.left_module, (module.right_algebra,
                                        module.right_actions)
        return module.right_module.as_left(), (module.left_algebra,
                                                module.left_actions)
    if module.side != side:
        raise SideMismatch('expected a {} module'.format(side))
    return module.as_left(), None


def _induced_actions(span, maps, transform, actions):
    ring = span.ring
    h = len(maps)
    return [Matrix.from_columns(ring,
                                (span.coordinates(transform(x, act).entries)
                                 for x in maps), h)
            for act in actions]


def _zero_actions(ring, algebra):
    return [Matrix.zeros(ring, 0, 0)] * algebra.dim


def _assemble(ring, maps, span, before, after, before_side):
    """Build the Hom module from residual actions.

    before -- (algebra, actions) acting by precomposition, X -> X*act.
    after -- (algebra, actions) acting by postcomposition, X -> act*X.
    before_side -- the side on which precomposition acts.

    """
    if not span.is_free:
        raise NotFreeOverBase('Hom space is not free over {}'.format(ring))

    def actions_for(residual, transform):
        algebra, acts = residual
        if not maps:
            return _zero_actions(ring, algebra)
        return _induced_actions(span, maps, transform, acts)
    pre = lambda x, act: x @ act
    post = lambda x, act: act @ x
    after_side = RIGHT if before_side == LEFT else LEFT
    parts = {}
    if before is not None:
        parts[before_side] = (before[0], actions_for(before, pre))
    if after is not None:
        parts[after_side] = (after[0], actions_for(after, post))
    if not parts:
        raise NoResidualAction('Hom space carries no residual action')
    if len(parts) == 2:
        return BimoduleRep(parts[LEFT][0], parts[RIGHT][0], parts[LEFT][1],
                           parts[RIGHT][1], maps=maps, check=False)
    (side, (algebra, actions)), = parts.items()
    return ModuleRep(algebra, actions, side, maps=maps, check=False)


def hom_module(m, n, along=None, side=None):
    """The Hom space with its residual module structure.

    Positional arguments:
        m, n -- ModuleRep or BimoduleRep instances.

    Keyword arguments:
        along -- an AlgebraMorphism phi: R -> A. When given, the result
            is Hom_R(M, N) for an A-module (or A-A bimodule) M and an
            R-module N, with A acting through M:
            (a.f.a')(x) = f(a' x a).
        side -- the side of the action Hom is taken over; defaults to
            the side of m (left for bimodules).

    Returns:
        A ModuleRep or BimoduleRep whose maps attribute holds the base
        matrices of its basis. Precomposition with a right action of M
        gives a left action; postcomposition with a right action of N
        gives a right action (and symmetrically for right modules).

    """
    ring = m.ring
    if along is not None:
        if isinstance(m, BimoduleRep):
            left_acts, right_acts = m.left_actions, m.right_actions
        elif m.side == LEFT:
            left_acts, right_acts = m.actions, None
        else:
            left_acts, right_acts = None, m.actions
        # R is central, so either action of A restricts to the same
        # R-module.
        over_acts = left_acts if left_acts is not None else right_acts
        restricted = ModuleRep(along.source,
                               [_combine(ring, image, over_acts, m.dim,
                                         m.dim) for image in along.images],
                               check=False)
        target = n.as_left()
        if target.algebra != along.source:
            raise SideMismatch('Hom along a morphism needs a module over '
                               'its source')
        maps, span = hom_matrices(restricted, target)
        return _assemble_along(ring, maps, span, along.target, left_acts,
                               right_acts)

    if side is None:
        side = m.side if isinstance(m, ModuleRep) else LEFT
    m_part, m_res = _hom_part(m, side)
    n_part, n_res = _hom_part(n, side)
    if m_part.algebra != n_part.algebra:
        raise SideMismatch('Hom needs modules over the same algebra')
    maps, span = hom_matrices(m_part, n_part)
    return _assemble(ring, maps, span, m_res, n_res, side)


def _assemble_along(ring, maps, span, algebra, left_acts, right_acts):
    """Hom_R(M, N) with A acting by precomposition on both sides:
    M's right action gives a left action and M's left action a right
    one."""
    if not span.is_free:
        raise NotFreeOverBase('Hom space is not free over {}'.format(ring))

    def actions_for(acts):
        if not maps:
            return _zero_actions(ring, algebra)
        return _induced_actions(span, maps, lambda x, act: x @ act, acts)
    if left_acts is not None and right_acts is not None:
        return BimoduleRep(algebra, algebra, actions_for(right_acts),
                           actions_for(left_acts), maps=maps, check=False)
    if left_acts is not None:
        return ModuleRep(algebra, actions_for(left_acts), RIGHT, maps=maps,
                         check=False)
    return ModuleRep(algebra, actions_for(right_acts), LEFT, maps=maps,
                     check=False)


# Pythonic class for tensor quotients.
class TensorQuotient:
    """The base tensor product M (x) N modulo the balancing relations
    m.a (x) n - m (x) a.n."""
    def __init__(self, ring, right_actions, left_actions, m_dim, n_dim):
        self.ring = ring
        self.m_dim = m_dim
        self.n_dim = n_dim
        ambient = m_dim * n_dim
        eye_m = Matrix.identity(ring, m_dim)
        eye_n = Matrix.identity(ring, n_dim)
        columns = []
        for rho_m, rho_n in zip(right_actions, left_actions):
            relation = rho_m.kronecker(eye_n) - eye_m.kronecker(rho_n)
            columns.extend(relation.columns())
        self.relations = Span(ring, ambient, columns)
        if not self.relations.is_free:
            raise NotFreeOverBase('tensor product is not free over '
                                  '{}'.format(ring))
        self.complement = self.relations.complement()
        self.dim = len(self.complement)

    def project(self, vector):
        """Coordinates of the class of an ambient vector."""
        return self.relations.quotient_coordinates(vector)

    def representative(self, k):
        ring = self.ring
        position = self.complement[k]
        return tuple(ring.one if i == position else ring.zero
                     for i in range(self.m_dim * self.n_dim))

    def induced(self, matrix, target):
        """The map on quotients induced by a matrix on the ambient
        tensor products."""
        return Matrix.from_columns(
            self.ring, (target.project(matrix.apply(self.representative(k)))
                        for k in range(self.dim)), target.dim)


def tensor_over(m, n):
    """The tensor product M (x)_A N.

    Positional arguments:
        m -- a right A-module, or a B-A bimodule.
        n -- a left A-module, or an A-C bimodule.

    Returns:
        A ModuleRep (a left module over the base algebra when neither
        side leaves a residual action) or BimoduleRep, with its
        TensorQuotient available as the quotient attribute.

    """
    if isinstance(m, BimoduleRep):
        m_alg, m_acts, residual_left = (m.right_algebra, m.right_actions,
                                        (m.left_algebra, m.left_actions))
    else:
        if m.side != RIGHT:
            raise SideMismatch('the first tensor factor must be a right '
                               'module')
        m_alg, m_acts, residual_left = m.algebra, m.actions, None
    if isinstance(n, BimoduleRep):
        n_alg, n_acts, residual_right = (n.left_algebra, n.left_actions,
                                         (n.right_algebra, n.right_actions))
    else:
        if n.side != LEFT:
            raise SideMismatch('the second tensor factor must be a left '
                               'module')
        n_alg, n_acts, residual_right = n.algebra, n.actions, None
    if m_alg != n_alg:
        raise SideMismatch('tensor factors are over different algebras')
    ring = m_alg.ring
    quotient = TensorQuotient(ring, m_acts, n_acts, m.dim, n.dim)

    def induced(matrices):
        if not quotient.dim:
            return [Matrix.zeros(ring, 0, 0)] * len(matrices)
        return [quotient.induced(x, quotient) for x in matrices]
    eye_m = Matrix.identity(ring, m.dim)
    eye_n = Matrix.identity(ring, n.dim)
    left = right = None
    if residual_left is not None:
        left = (residual_left[0],
                induced([act.kronecker(eye_n) for act in residual_left[1]]))
    if residual_right is not None:
        right = (residual_right[0],
                 induced([eye_m.kronecker(act)
                          for act in residual_right[1]]))
    if left and right:
        result = BimoduleRep(left[0], right[0], left[1], right[1],
                             check=False)
    elif left:
        result = ModuleRep(left[0], left[1], LEFT, check=False)
    elif right:
        result = ModuleRep(right[0], right[1], RIGHT, check=False)
    else:
        result = ModuleRep(base_algebra(ring),
                           [Matrix.identity(ring, quotient.dim)],
                           check=False)
    result.quotient = quotient
    return result


def dual_over_base(m):
    """The base dual Hom_k(M, k), with transposed actions on the other
    side."""
    if isinstance(m, BimoduleRep):
        return BimoduleRep(m.right_algebra, m.left_algebra,
                           [act.T for act in m.right_actions],
                           [act.T for act in m.left_actions], check=False)
    side = RIGHT if m.side == LEFT else LEFT
    return ModuleRep(m.algebra, [act.T for act in m.actions], side,
                     check=False)


def restrict(phi, m, side=None):
    """Restriction of scalars along an algebra morphism phi: R -> A.

    Keyword arguments:
        side -- for a bimodule, which action to restrict (default
            'left').

    """
    ring = m.ring
    if isinstance(m, BimoduleRep):
        side = side or LEFT
        acts = m.left_actions if side == LEFT else m.right_actions
        algebra = m.left_algebra if side == LEFT else m.right_algebra
    else:
        side, acts, algebra = m.side, m.actions, m.algebra
    if algebra != phi.target:
        raise SideMismatch('module is not over the target of the morphism')
    actions = [_combine(ring, image, acts, m.dim, m.dim)
               for image in phi.images]
    return ModuleRep(phi.source, actions, side, check=False)


# Projectivity.
def is_projective(m):
    """Test projectivity by splitting a free cover.

    Returns:
        A pair (projective, splitting). The splitting is a ModuleHom
        sigma from M (as a left module) into the free cover with
        cover * sigma = identity, or None when no splitting exists.

    """
    left = m.as_left()
    if left.dim == 0:
        return True, None
    pres = left.presentation
    algebra = left.algebra
    ring = left.ring
    s, d = pres.rank, algebra.dim
    size = s * d
    free = pres.free

    # Unknowns are the images f_1, ..., f_s of the generators in A^s.
    blocks = []
    for w in pres.relations:
        row = [free.action(w_j) for w_j in pres.blocks(w)]
        blocks.append(Matrix.hstack(ring, row, size))
    for j in range(s):
        row = [pres.cover if i == j else Matrix.zeros(ring, left.dim, size)
               for i in range(s)]
        blocks.append(Matrix.hstack(ring, row, left.dim))
    system = Matrix.vstack(ring, blocks, s * size)
    zero = ring.zero
    rhs = [zero] * (len(pres.relations) * size)
    for v in pres.generators:
        rhs.extend(v)
    solution = solve(system, Matrix.from_columns(ring, [rhs], system.nrows))
    if solution is None:
        logger.debug('no splitting for %r', m)
        return False, None
    images = solution.column(0)
    columns = []
    for j in range(s):
        f_j = images[j * size:(j + 1) * size]
        columns.extend(act.apply(f_j) for act in free.actions)
    sigma = Matrix.from_columns(ring, columns, size) @ pres.lift
    return True, ModuleHom(left, free, sigma)


def is_injective(m):
    """M is injective exactly when its base dual is projective."""
    return is_projective(dual_over_base(m))


# Isomorphism search.
def _iso_recheck(m, n, matrix):
    def recheck():
        try:
            ModuleHom(m.as_left(), n.as_left(), matrix)
        except ModuleValidationError:
            return False
        return is_invertible(matrix)
    return recheck


def iso_search(m, n, seed=0, bound=None, trials=None):
    """Search for a module isomorphism M -> N.

    Keyword arguments:
        seed -- seed for the randomised combinations.
        bound -- the largest number of candidates for exhaustive search
            over a finite base (default config.ISO_SEARCH_BOUND).
        trials -- randomised attempts before giving up over the
            rationals (default config.ISO_SEARCH_TRIALS).

    Returns:
        A Verdict: Proven with an invertible intertwiner, Refuted on a
        dimension mismatch or an exhausted finite search, otherwise
        Inconclusive.

    """
    _require_same(m, n)
    bound = config.ISO_SEARCH_BOUND if bound is None else bound
    trials = config.ISO_SEARCH_TRIALS if trials is None else trials
    ring = m.ring
    if m.dim != n.dim:
        return Verdict.refuted('dimension-mismatch',
                               {'source': m.dim, 'target': n.dim},
                               lambda: m.dim != n.dim)
    if m.dim == 0:
        zero = Matrix.zeros(ring, 0, 0)
        return Verdict.proven('isomorphism', {'matrix': []},
                              _iso_recheck(m, n, zero))
    size = (lambda s: s.order) if ring.is_finite else (lambda s: s.rank)
    # An isomorphism conjugates each basis action, so their images have
    # equal size.
    for i, (a, b) in enumerate(zip(m.as_left().actions,
                                   n.as_left().actions)):
        left, right = (size(Span.of_columns(a)), size(Span.of_columns(b)))
        if left != right:
            return Verdict.refuted(
                'action-rank-mismatch',
                {'basis': i, 'source': left, 'target': right},
                lambda a=a, b=b: (size(Span.of_columns(a)) !=
                                  size(Span.of_columns(b))))
    maps, span = hom_matrices(m.as_left(), n.as_left())
    _, end_span = hom_matrices(m.as_left(), m.as_left())
    if size(span) != size(end_span):
        return Verdict.refuted('hom-dimension-mismatch',
                               {'hom': size(span), 'end': size(end_span)},
                               lambda: size(span) != size(end_span))

    def proven(x):
        return Verdict.proven('isomorphism',
                              {'matrix': [[str(v) for v in row]
                                          for row in x]},
                              _iso_recheck(m, n, x))
    shape = (n.dim, m.dim)

    def combination(coefficients):
        return _combine(ring, coefficients, maps, *shape)
    rng = Random(seed)
    for trial in range(trials):
        height = 1 + trial // 8
        x = combination([ring.random_element(rng, height) for _ in maps])
        if is_invertible(x):
            logger.debug('isomorphism found after %d random trials',
                         trial + 1)
            return proven(x)
    if ring.is_finite:
        count = ring.order ** len(maps)
        if count <= bound:
            for coefficients in cartesian(range(ring.order),
                                          repeat=len(maps)):
                x = combination(coefficients)
                if is_invertible(x):
                    return proven(x)
            return Verdict.refuted(
                'no-invertible-intertwiner', {'candidates': count},
                lambda: not any(is_invertible(combination(c)) for c in
                                cartesian(range(ring.order),
                                          repeat=len(maps))))
        logger.info('isomorphism search space %d exceeds bound %d', count,
                    bound)
    return Verdict.inconclusive(None, 'no isomorphism found in {} random '
                                'trials'.format(trials))


# Biduality.
Biduality = namedtuple('Biduality', ['map', 'bijective', 'dual', 'bidual'])
Biduality.__doc__ = """The evaluation map M -> Hom(Hom(M, A), A).

map -- the ModuleHom.
bijective -- whether it is an isomorphism.
dual -- Hom_A(M, A) as a right module.
bidual -- Hom_{A^op}(Hom_A(M, A), A) as a left module.
"""


def biduality_map(m):
    """The canonical evaluation map m -> (f -> f(m)) of a left module."""
    if m.side != LEFT:
        raise SideMismatch('biduality is defined here for left modules')
    algebra = m.algebra
    ring = m.ring
    regular = bimodule_regular(algebra)
    dual = hom_module(m, regular, side=LEFT)
    bidual = hom_module(dual, regular, side=RIGHT)
    h = dual.dim
    span = Span(ring, algebra.dim * h, [x.entries for x in bidual.maps])
    columns = []
    for k in range(m.dim):
        vector = tuple(ring.one if i == k else ring.zero
                       for i in range(m.dim))
        evaluation = Matrix.from_columns(ring, (f.apply(vector)
                                                for f in dual.maps),
                                         algebra.dim)
        columns.append(span.coordinates(evaluation.entries))
    matrix = Matrix.from_columns(ring, columns, bidual.dim)
    evaluation = ModuleHom(m, bidual, matrix)
    bijective = m.dim == bidual.dim and is_invertible(matrix)
    return Biduality(evaluation, bijective, dual, bidual)
