#!/usr/bin/env python3

"""Gorenstein decision procedures for finite algebra morphisms."""

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

__all__ = ['CheckReport', 'BimoduleComplex', 'Fibre',
           'is_totally_reflexive', 'gdim', 'is_iwanaga_gorenstein',
           'build_semidualizing', 'check_adfgd', 'check_adgp',
           'check_projective', 'check_injective', 'is_frobenius',
           'fibre_condition', 'check_fibre', 'cross_validate',
           'check_local_property', 'check_application', 'check_recover',
           'check_ascent_ig', 'check_evaluation', 'check_gdim_bound',
           'check_acyclic', 'check_tensor_acyclic', 'audit']

# Standard library imports.
from collections import namedtuple
from dataclasses import dataclass, field, replace
from functools import lru_cache
import logging
from time import perf_counter
from typing import Optional

# Local imports.
from . import config
from .algebra import local_decomposition, nilradical, centre_idempotent_block
from .errors import HorizonExceeded, UnsupportedBaseRing
from .exactlin import Matrix, Span
from .homalg import (ComplexRep, Resolution, ext, homology, hom_complex,
                     tensor_complex, is_perfect,
                     periodicity_certificate, injective_resolution)
from .modrep import (LEFT, RIGHT, regular_module, bimodule_regular,
                     hom_module, tensor_over, quotient_module, restrict,
                     dual_over_base, is_projective, is_injective, iso_search,
                     biduality_map)
from .verdict import Status, Verdict, meet

logger = logging.getLogger(__name__)


# Reports.
@dataclass
class CheckReport:
    """The outcome of a named check, with its sub-checks.

    The status of a combined report is the meet of its subs. Reports in
    context are supporting results that do not enter the meet.

    """
    name: str
    verdict: Verdict
    subs: list = field(default_factory=list)
    context: list = field(default_factory=list)
    horizon: Optional[int] = None
    elapsed: float = 0.0

    @classmethod
    def leaf(cls, name, verdict, start=None):
        elapsed = perf_counter() - start if start is not None else 0.0
        return cls(name, verdict, horizon=verdict.horizon, elapsed=elapsed)

    @classmethod
    def combine(cls, name, subs, horizon, start, context=(), value=None):
        """A report whose verdict is the meet of its subs."""
        subs = list(subs)
        status = meet(s.status for s in subs)
        names = [s.name for s in subs]
        if status == Status.PROVEN:
            verdict = Verdict.proven(
                'all-proven', {'subs': names},
                lambda: all(s.verdict.recheck() for s in subs),
                value=value, horizon=horizon)
        elif status == Status.REFUTED:
            failing = [s for s in subs if s.status == Status.REFUTED]
            verdict = Verdict.refuted(
                'sub-refuted', {'subs': [s.name for s in failing]},
                lambda: all(s.verdict.recheck() for s in failing),
                value=value, horizon=horizon)
        else:
            open_subs = [s.name for s in subs
                         if s.status == Status.INCONCLUSIVE]
            verdict = Verdict.inconclusive(
                horizon, 'undecided: {}'.format(', '.join(open_subs)), value)
        return cls(name, verdict, subs, list(context), horizon,
                   perf_counter() - start)

    @property
    def status(self):
        return self.verdict.status

    def sub(self, name):
        """The sub-report (or context report) with the given name."""
        for report in self.subs + self.context:
            if report.name == name:
                return report
        raise KeyError(name)

    def walk(self, prefix=''):
        """Yield (path, verdict) for this report and everything below."""
        path = prefix + self.name
        yield path, self.verdict
        for report in self.subs + self.context:
            yield from report.walk(path + '/')

    def as_dict(self):
        verdict = self.verdict
        evidence = None
        if verdict.evidence is not None:
            evidence = {'kind': verdict.evidence.kind,
                        'summary': verdict.evidence.summary}
        return {'name': self.name,
                'status': verdict.status.label,
                'evidence': evidence,
                'value': verdict.value,
                'note': verdict.note,
                'horizon': self.horizon,
                'subs': [s.as_dict() for s in self.subs],
                'context': [s.as_dict() for s in self.context]}


def _horizon(horizon):
    return config.default_horizon() if horizon is None else horizon


def _render(vector):
    return [str(x) for x in vector]


# Totally reflexive modules.
def _self_injective_now(algebra):
    return (is_injective(regular_module(algebra))[0] and
            is_injective(regular_module(algebra, RIGHT))[0])


@lru_cache(maxsize=32)
def _self_injective(algebra):
    return _self_injective_now(algebra)


def _ext_witness(m, n, degree, resolution, side, horizon):
    """Refuted when Ext^degree(m, n) is nonzero, else None."""
    data = ext(m, n, [degree], resolution)
    if data.is_zero_at(degree):
        return None
    return Verdict.refuted('ext-nonvanishing',
                           {'side': side, 'degree': degree,
                            'size': data[degree]},
                           lambda: not ext(m, n, [degree]).is_zero_at(degree),
                           horizon=horizon)


def is_totally_reflexive(m, horizon=None, seed=0):
    """Test whether a module is totally reflexive (Gorenstein projective).

    Ext^i(M, A) and Ext^i(Hom(M, A), A) are computed for 1 <= i <=
    horizon and the evaluation map into the bidual is tested. Vanishing
    is only promoted to Proven with a certificate covering every i > 0:
    M projective, A self-injective on both sides, or periodic syzygies
    of both M and its dual.

    Returns:
        A Verdict.

    """
    horizon = _horizon(horizon)
    m = m.as_left()
    algebra = m.algebra
    if m.dim == 0 or is_projective(m)[0]:
        return Verdict.proven('projective', {'dim': m.dim},
                              lambda: is_projective(m)[0], horizon=horizon)
    regular = regular_module(algebra)
    resolution = Resolution(m)
    if horizon >= 1:
        witness = _ext_witness(m, regular, 1, resolution, 'module', horizon)
        if witness is not None:
            return witness
    biduality = biduality_map(m)
    if not biduality.bijective:
        return Verdict.refuted('biduality',
                               {'dim': m.dim,
                                'bidual_dim': biduality.bidual.dim},
                               lambda: not biduality_map(m).bijective,
                               horizon=horizon)
    if _self_injective(algebra):
        return Verdict.proven(
            'self-injective', {'dim': m.dim},
            lambda: (_self_injective_now(algebra) and
                     biduality_map(m).bijective),
            horizon=horizon)

    dual = biduality.dual.as_left()
    dual_regular = regular_module(dual.algebra)
    dual_resolution = Resolution(dual)
    for i in range(1, horizon + 1):
        if i > 1:
            witness = _ext_witness(m, regular, i, resolution, 'module',
                                   horizon)
            if witness is not None:
                return witness
        witness = _ext_witness(dual, dual_regular, i, dual_resolution,
                               'dual', horizon)
        if witness is not None:
            return witness

    left = periodicity_certificate(m, horizon, seed)
    right = (periodicity_certificate(dual, horizon, seed)
             if left is not None else None)
    if left is not None and right is not None:
        def recheck():
            if not biduality_map(m).bijective:
                return False
            for module, certificate in ((m, left), (dual, right)):
                top = certificate['start'] + certificate['period']
                target = regular_module(module.algebra)
                if not all(ext(module, target, [i]).is_zero_at(i)
                           for i in range(1, top + 1)):
                    return False
                if periodicity_certificate(module, horizon, seed) is None:
                    return False
            return True
        return Verdict.proven('syzygy-period',
                              {'module': left, 'dual': right}, recheck,
                              horizon=horizon)
    return Verdict.inconclusive(horizon, 'Ext vanishes up to the horizon '
                                'but no certificate was found')


def gdim(m, horizon=None, seed=0, limit=None):
    """The Gorenstein dimension of a module, as the least n for which
    the n-th syzygy is provably totally reflexive.

    Keyword arguments:
        horizon -- the resolution depth: the n-th syzygy is tested for
            total reflexivity with horizon minus n (at least 1).
        seed -- seed for isomorphism searches.
        limit -- the largest syzygy tried (default: the horizon).

    Returns:
        A Verdict carrying n as its value when Proven. The summary flag
        exact is False when some lower syzygy was left undecided, so
        that n is only an upper bound. Never Refuted.

    """
    horizon = _horizon(horizon)
    limit = horizon if limit is None else limit
    module = m.as_left()
    resolution = Resolution(module)
    exact = True
    for n in range(limit + 1):
        omega = resolution.syzygy(n)
        depth = max(1, horizon - n)
        verdict = is_totally_reflexive(omega, depth, seed)
        if verdict.is_proven:
            if verdict.evidence.kind == 'projective':
                logger.debug('projective syzygy at %d bounds Gdim by pd', n)
            return Verdict.proven(
                'gorenstein-syzygy',
                {'length': n, 'certificate': verdict.evidence.kind,
                 'exact': exact},
                lambda: is_totally_reflexive(Resolution(module).syzygy(n),
                                             depth, seed).is_proven,
                value=n, horizon=horizon)
        if not verdict.is_refuted:
            exact = False
    return Verdict.inconclusive(horizon, 'no syzygy up to {} is provably '
                                'totally reflexive'.format(limit))


# Iwanaga-Gorenstein algebras.
def _injective_dimensions(algebra, horizon):
    left = injective_resolution(regular_module(algebra), horizon)
    right = injective_resolution(regular_module(algebra, RIGHT), horizon)
    return left, right


def _socle_rows(factors):
    return [{'socle_dim': f.socle_dim, 'residue_dim': f.residue_dim}
            for f in factors]


def is_iwanaga_gorenstein(algebra, horizon=None):
    """Test whether an algebra has finite self-injective dimension on
    both sides.

    A commutative algebra over a field is decided by its local factors:
    each must have socle dimension equal to its residue degree. Otherwise
    injective resolutions of A on both sides are built up to the
    horizon.

    Returns:
        A Verdict whose value is the injective dimension when Proven.

    """
    horizon = _horizon(horizon)
    if algebra.is_commutative and algebra.ring.is_field:
        factors = local_decomposition(algebra)
        if all(f.split_complete for f in factors):
            rows = _socle_rows(factors)
            failing = [k for k, f in enumerate(factors)
                       if not f.is_gorenstein]
            if failing:
                return Verdict.refuted(
                    'socle', {'factor': failing[0], 'factors': rows},
                    lambda: not all(f.is_gorenstein for f in
                                    local_decomposition(algebra)),
                    horizon=horizon)
            left, right = _injective_dimensions(algebra, horizon)
            value = left.length if left.terminated else None
            return Verdict.proven(
                'socle', {'factors': rows, 'injective_dimension': value},
                lambda: all(f.is_gorenstein for f in
                            local_decomposition(algebra)),
                value=value, horizon=horizon)
        logger.info('local factors of %r are not certified; falling back to '
                    'injective resolutions', algebra)

    left, right = _injective_dimensions(algebra, horizon)
    if left.terminated and right.terminated:
        if left.length != right.length:
            logger.warning('left and right injective dimensions differ: '
                           '%d and %d', left.length, right.length)

        def recheck():
            again = _injective_dimensions(algebra, horizon)
            return all(r.terminated and r.verify() for r in again)
        return Verdict.proven('finite-injective-dimension',
                              {'left': left.length, 'right': right.length,
                               'equal': left.length == right.length},
                              recheck, value=left.length, horizon=horizon)
    return Verdict.inconclusive(horizon, 'injective resolutions of the '
                                'algebra do not terminate within the '
                                'horizon')


# Semi-dualizing complexes.
class BimoduleComplex:
    """A complex of bimodules over one algebra, with its left and right
    module complexes."""
    def __init__(self, algebra, lo, terms, differentials):
        self.algebra = algebra
        self.lo = lo
        self.terms = list(terms)
        self.differentials = dict(differentials)
        self.left = ComplexRep(algebra, lo, [t.left_module for t in
                                             self.terms],
                               self.differentials, LEFT, check=False)
        self.right = ComplexRep(algebra, lo, [t.right_module for t in
                                              self.terms],
                                self.differentials, RIGHT, check=False)

    @property
    def hi(self):
        return self.lo + len(self.terms) - 1

    def term(self, i):
        return self.terms[i - self.lo]

    def over_opposite(self):
        """The right module complex, read as left modules over the
        opposite algebra."""
        return ComplexRep(self.algebra.opposite(), self.lo,
                          [t.right_module.as_left() for t in self.terms],
                          self.differentials, LEFT, check=False)

    @classmethod
    def stalk(cls, bimodule, degree=0):
        return cls(bimodule.left_algebra, degree, [bimodule], {})

    def __repr__(self):
        return '<BimoduleComplex over {!r} in degrees {}..{}>'.format(
            self.algebra, self.lo, self.hi)


def _hom_to_base(phi):
    """Hom_R(A, R) as an A-A bimodule."""
    return hom_module(bimodule_regular(phi.target),
                      regular_module(phi.source), along=phi)


def _map_span(ring, maps, size):
    return Span(ring, size, [x.entries for x in maps])


def _postcompose(ring, source, target, d):
    """The matrix of f -> d f between Hom spaces given by their maps."""
    size = len(target.maps[0].entries) if target.maps else 0
    span = _map_span(ring, target.maps, size)
    return Matrix.from_columns(ring, (span.coordinates((d @ f).entries)
                                      for f in source.maps), target.dim)


def _hom_into(phi, injective):
    """Hom_R(A, I) as a complex of A-A bimodules."""
    ring = phi.source.ring
    regular = bimodule_regular(phi.target)
    terms = [hom_module(regular, injective.term(n), along=phi)
             for n in injective.degrees]
    lo = injective.lo
    differentials = {}
    for n in range(lo + 1, injective.hi + 1):
        differentials[n] = _postcompose(ring, terms[n - lo],
                                        terms[n - 1 - lo],
                                        injective.differential(n))
    return BimoduleComplex(phi.target, lo, terms, differentials)


def _degree_zero_quasi_iso(hc, vectors, rank):
    """Whether the degree-0 vectors of a Hom complex induce a
    quasi-isomorphism from a free base module of the given rank.

    Returns:
        A pair (holds, summary).

    """
    ring = hc.ring
    h = homology(hc)
    others = [i for i in hc.degrees if i != 0 and not h.is_zero_at(i)]
    if others:
        return False, {'degree': others[0], 'size': h[others[0]]}
    d0 = hc.differential(0)
    if any(any(d0.apply(v)) for v in vectors):
        return False, {'degree': 0, 'reason': 'not a cycle'}
    boundaries = Span.of_columns(hc.differential(1))
    reached = boundaries.extend(vectors)
    if ring.is_finite and not ring.is_field:
        expected = ring.order ** rank
        gained = reached.order // boundaries.order
    else:
        expected = rank
        gained = reached.rank - boundaries.rank
    summary = {'degree': 0, 'homology': h[0], 'image': gained,
               'expected': expected}
    return gained == expected and h[0] == expected, summary


def _homothety(d, side):
    """The homothety A -> Hom_{A^op}(D, D) (side 'left') or
    A^op -> Hom_A(D, D) (side 'right')."""
    algebra = d.algebra
    if side == LEFT:
        x = d.right
        acting = [t.left_actions for t in d.terms]
    else:
        x = d.left
        acting = [t.right_actions for t in d.terms]
    hc = hom_complex(x, x)
    vectors = [hc.element(0, {d.lo + i: acts[k]
                              for i, acts in enumerate(acting)})
               for k in range(algebra.dim)]
    holds, summary = _degree_zero_quasi_iso(hc, vectors, algebra.dim)
    summary['side'] = side

    def recheck():
        return _degree_zero_quasi_iso(hom_complex(x, x), vectors,
                                      algebra.dim)[0] == holds
    if holds:
        return Verdict.proven('homothety-quasi-isomorphism', summary,
                              recheck)
    return Verdict.refuted('homothety', summary, recheck)


def _injective_terms(d):
    def failure():
        for i in range(d.lo, d.hi + 1):
            term = d.term(i)
            if not is_injective(term.left_module)[0]:
                return {'degree': i, 'side': LEFT}
            if not is_injective(term.right_module)[0]:
                return {'degree': i, 'side': RIGHT}
        return None
    found = failure()
    if found is None:
        return Verdict.proven('injective-terms',
                              {'degrees': [d.lo, d.hi]},
                              lambda: failure() is None)
    return Verdict.refuted('not-injective', found,
                           lambda: failure() is not None)


def build_semidualizing(phi, horizon=None, seed=0):
    """Build D = Hom_R(A, I) for an injective resolution I of R and
    verify that it is semi-dualizing.

    Returns:
        A pair (D, report): a BimoduleComplex and a CheckReport with the
        subs gdim-base, injective-terms, homothety-left and
        homothety-right.

    Raises HorizonExceeded when I does not terminate within the horizon.

    """
    horizon = _horizon(horizon)
    start = perf_counter()
    resolution = injective_resolution(regular_module(phi.source), horizon)
    if not resolution.terminated:
        raise HorizonExceeded('the injective resolution of {!r} does not '
                              'terminate within {} steps'.format(
                                  phi.source, horizon))
    d = _hom_into(phi, resolution.complex)
    subs = []
    for name, compute in (
            ('gdim-base', lambda: gdim(restrict(phi,
                                                regular_module(phi.target)),
                                       horizon, seed)),
            ('injective-terms', lambda: _injective_terms(d)),
            ('homothety-left', lambda: _homothety(d, LEFT)),
            ('homothety-right', lambda: _homothety(d, RIGHT))):
        begun = perf_counter()
        subs.append(CheckReport.leaf(name, compute(), begun))
    return d, CheckReport.combine('semidualizing', subs, horizon, start)


def _rhom(phi, horizon, seed, reflexive=None):
    """A bimodule complex representing RHom_R(A, R), or None."""
    if reflexive is None:
        reflexive = is_totally_reflexive(
            restrict(phi, regular_module(phi.target)), horizon, seed)
    if reflexive.is_proven:
        return BimoduleComplex.stalk(_hom_to_base(phi))
    resolution = injective_resolution(regular_module(phi.source), horizon)
    if resolution.terminated:
        return _hom_into(phi, resolution.complex)
    return None


# Ascent and descent.
def check_adfgd(phi, horizon=None, seed=0):
    """Ascent and descent of finite Gorenstein dimension.

    Subs: gdim (Gdim_R(A) finite), perfect-left and perfect-right
    (RHom_R(A, R) perfect over A and over A^op).

    """
    horizon = _horizon(horizon)
    start = perf_counter()
    a_over_r = restrict(phi, regular_module(phi.target))
    begun = perf_counter()
    dimension = gdim(a_over_r, horizon, seed)
    subs = [CheckReport.leaf('gdim', dimension, begun)]
    reflexive = None
    if dimension.is_proven and dimension.value == 0:
        reflexive = dimension
    d = _rhom(phi, horizon, seed, reflexive)
    for name, side in (('perfect-left', LEFT), ('perfect-right', RIGHT)):
        begun = perf_counter()
        if d is None:
            verdict = Verdict.inconclusive(horizon, 'RHom_R(A, R) is not '
                                           'bounded within the horizon')
        else:
            x = d.left if side == LEFT else d.over_opposite()
            verdict = is_perfect(x, horizon, seed)
        subs.append(CheckReport.leaf(name, verdict, begun))
    return CheckReport.combine('adfgd', subs, horizon, start)


def _projectivity(m, side):
    projective, splitting = is_projective(m)
    summary = {'side': side, 'dim': m.dim}
    if projective:
        def recheck():
            if splitting is None:
                return m.dim == 0
            left = m.as_left()
            composite = left.presentation.cover @ splitting.matrix
            return composite == Matrix.identity(m.ring, m.dim)
        return Verdict.proven('projective', summary, recheck)
    return Verdict.refuted('not-projective', summary,
                           lambda: not is_projective(m)[0])


def check_projective(m):
    """Projectivity of a module, certified by a splitting of its free
    cover."""
    start = perf_counter()
    return CheckReport.leaf('projective', _projectivity(m, m.side), start)


def check_injective(m):
    """Injectivity of a module, as projectivity of its base dual."""
    start = perf_counter()
    verdict = _projectivity(dual_over_base(m), m.side)
    kind = 'injective' if verdict.is_proven else 'not-injective'
    summary = dict(verdict.evidence.summary, via='base-dual')
    verdict = replace(verdict, evidence=replace(verdict.evidence, kind=kind,
                                                summary=summary))
    return CheckReport.leaf('injective', verdict, start)


def check_adgp(phi, horizon=None, seed=0):
    """Ascent and descent of the Gorenstein projective property.

    Subs: reflexive (A totally reflexive over R), projective-left and
    projective-right (Hom_R(A, R) projective on each side over A).

    """
    horizon = _horizon(horizon)
    start = perf_counter()
    hom = _hom_to_base(phi)
    subs = []
    for name, compute in (
            ('reflexive', lambda: is_totally_reflexive(
                restrict(phi, regular_module(phi.target)), horizon, seed)),
            ('projective-left', lambda: _projectivity(hom.left_module,
                                                      LEFT)),
            ('projective-right', lambda: _projectivity(hom.right_module,
                                                       RIGHT))):
        begun = perf_counter()
        subs.append(CheckReport.leaf(name, compute(), begun))
    return CheckReport.combine('adgp', subs, horizon, start)


def is_frobenius(phi, seed=0):
    """Test whether A is a Frobenius extension of R: A projective over R
    and A isomorphic to Hom_R(A, R), as left or as right A-modules.

    Returns:
        A Verdict with the semantics of the isomorphism search.

    """
    a, r = phi.target, phi.source
    a_over_r = restrict(phi, regular_module(a))
    if not is_projective(a_over_r)[0]:
        return Verdict.refuted('not-projective-over-base',
                               {'dim': a.dim, 'base_dim': r.dim},
                               lambda: not is_projective(a_over_r)[0])
    hom = _hom_to_base(phi)
    left = iso_search(regular_module(a), hom.left_module, seed)
    if left.is_proven:
        return left
    right = iso_search(regular_module(a, RIGHT), hom.right_module, seed)
    if right.is_proven:
        return right
    if left.is_refuted and right.is_refuted:
        return left
    return Verdict.inconclusive(None, 'no isomorphism A -> Hom_R(A, R) '
                                'found')


Fibre = namedtuple('Fibre', ['idempotent', 'residue_dim', 'dim'])
Fibre.__doc__ = """The fibre A (x)_R R/m at one maximal ideal of R.

idempotent -- the block idempotent of R belonging to m.
residue_dim -- the degree of R/m over the base field.
dim -- the dimension of the fibre over the base field.
"""


def fibre_condition(phi):
    """Compute the fibres of A over every maximal ideal of R.

    Returns:
        A list of Fibre tuples, one per local factor of R. The fibre
        condition holds when every dim is nonzero.

    """
    r, a = phi.source, phi.target
    if not r.ring.is_field:
        raise UnsupportedBaseRing('fibres need a base field, not '
                                  '{}'.format(r.ring))
    radical = nilradical(r)
    right_a = restrict(phi, regular_module(a, RIGHT))
    fibres = []
    for factor in local_decomposition(r):
        e = factor.idempotent
        complement = r.sub(r.unit, e)
        # The maximal ideal: everything off the block plus its radical.
        ideal = [r.multiply(complement, r.basis_vector(i))
                 for i in range(r.dim)]
        ideal.extend(r.multiply(e, v) for v in radical.basis)
        residue, _ = quotient_module(regular_module(r), ideal)
        fibre = tensor_over(right_a, residue)
        fibres.append(Fibre(tuple(e), factor.residue_dim, fibre.dim))
    return fibres


def _fibre_verdict(phi):
    if not phi.source.ring.is_field:
        return Verdict.inconclusive(None, 'fibres need a base field')
    fibres = fibre_condition(phi)
    dims = [f.dim for f in fibres]
    zero = [k for k, f in enumerate(fibres) if not f.dim]

    def dims_now():
        return [f.dim for f in fibre_condition(phi)]
    if zero:
        return Verdict.refuted('zero-fibre', {'dims': dims,
                                              'factor': zero[0]},
                               lambda: 0 in dims_now(), value=dims)
    return Verdict.proven('fibres-nonzero', {'dims': dims},
                          lambda: 0 not in dims_now(), value=dims)


def check_fibre(phi):
    """The fibre condition: A (x)_R k(m) is nonzero for every maximal
    ideal m of R."""
    start = perf_counter()
    return CheckReport.leaf('fibre', _fibre_verdict(phi), start)


def _sample_verdicts(phi, m, horizon, seed):
    base = restrict(phi, m)
    return (is_totally_reflexive(m, horizon, seed),
            is_totally_reflexive(base, horizon, seed),
            gdim(m, horizon, seed), gdim(base, horizon, seed))


def _mismatch(verdicts):
    reflexive_a, reflexive_r, gdim_a, gdim_r = verdicts
    decided = {reflexive_a.status, reflexive_r.status}
    if decided == {Status.PROVEN, Status.REFUTED}:
        return 'reflexive'
    if (gdim_a.is_proven and gdim_r.is_proven and
            gdim_a.evidence.summary['exact'] and
            gdim_r.evidence.summary['exact'] and
            gdim_a.value != gdim_r.value):
        return 'gdim'
    return None


def cross_validate(phi, samples, horizon=None, seed=0):
    """Compare total reflexivity and Gdim of sample A-modules over A
    and, by restriction, over R.

    Returns:
        A CheckReport with one sub per sample; its value is the number
        of mismatches.

    """
    horizon = _horizon(horizon)
    start = perf_counter()
    subs = []
    mismatches = 0
    for k, m in enumerate(samples):
        begun = perf_counter()
        verdicts = _sample_verdicts(phi, m, horizon, seed)
        labels = ['reflexive-algebra', 'reflexive-base', 'gdim-algebra',
                  'gdim-base']
        summary = {label: v.status.label for label, v in zip(labels,
                                                             verdicts)}
        summary['gdim'] = [verdicts[2].value, verdicts[3].value]
        kind = _mismatch(verdicts)

        def recheck(m=m, kind=kind):
            return _mismatch(_sample_verdicts(phi, m, horizon, seed)) == kind
        if kind is not None:
            mismatches += 1
            summary['mismatch'] = kind
            logger.warning('sample %d disagrees on %s over %r and its base',
                           k, kind, phi.target)
            verdict = Verdict.refuted('mismatch', summary, recheck,
                                      horizon=horizon)
        elif verdicts[0].status == verdicts[1].status != Status.INCONCLUSIVE:
            verdict = Verdict.proven('agreement', summary, recheck,
                                     horizon=horizon)
        else:
            verdict = Verdict.inconclusive(horizon, 'total reflexivity is '
                                           'undecided on one side')
        subs.append(CheckReport.leaf('sample-{}'.format(k), verdict, begun))
    return CheckReport.combine('cross-validate', subs, horizon, start,
                               value=mismatches)


def check_local_property(phi, horizon=None, seed=0):
    """Run check_adgp on every block R*e -> A*phi(e) and compare with the
    global verdict."""
    horizon = _horizon(horizon)
    start = perf_counter()
    blocks = []
    for k, factor in enumerate(local_decomposition(phi.source)):
        name = 'block-{}'.format(k)
        e = factor.idempotent
        begun = perf_counter()
        block = centre_idempotent_block(phi, e)
        if block is None:
            verdict = Verdict.proven(
                'empty-block', {'idempotent': _render(e)},
                lambda e=e: centre_idempotent_block(phi, e) is None)
            blocks.append(CheckReport.leaf(name, verdict, begun))
        else:
            blocks.append(replace(check_adgp(block, horizon, seed),
                                  name=name))
    whole = replace(check_adgp(phi, horizon, seed), name='global')
    local = meet(b.status for b in blocks)
    begun = perf_counter()
    summary = {'global': whole.status.label, 'local': local.label}

    def recheck():
        return (meet(b.status for b in blocks) == whole.status and
                whole.verdict.recheck() is not False)
    if whole.status == local:
        verdict = Verdict.proven('agreement', summary, recheck)
    elif Status.INCONCLUSIVE in (whole.status, local):
        verdict = Verdict.inconclusive(horizon, 'global and local checks '
                                       'are not both decided')
    else:
        verdict = Verdict.refuted('disagreement', summary,
                                  lambda: not recheck())
    subs = blocks + [whole, CheckReport.leaf('agreement', verdict, begun)]
    return CheckReport.combine('local-property', subs, horizon, start)


def _implication(name, premises, conclusion, horizon):
    """A report on "premises imply conclusion", with the verdicts
    involved kept as context.

    Positional arguments:
        premises -- (label, Verdict) pairs.
        conclusion -- a (label, Verdict) pair.

    """
    label, concluded = conclusion
    statuses = {l: v.status.label for l, v in premises}
    statuses[label] = concluded.status.label
    refuted = [(l, v) for l, v in premises if v.is_refuted]
    if concluded.is_proven:
        verdict = Verdict.proven('conclusion-holds', statuses,
                                 concluded.recheck, horizon=horizon)
    elif refuted:
        verdict = Verdict.proven('premise-fails', statuses,
                                 refuted[0][1].recheck, horizon=horizon)
    elif (concluded.is_refuted and
          all(v.is_proven for _, v in premises)):
        verdict = Verdict.refuted(
            'violation', statuses,
            lambda: (all(v.recheck() for _, v in premises) and
                     concluded.recheck()),
            horizon=horizon)
    else:
        verdict = Verdict.inconclusive(horizon, 'premises or conclusion '
                                       'undecided')
    context = [CheckReport.leaf(l, v) for l, v in premises]
    context.append(CheckReport.leaf(label, concluded))
    return CheckReport(name, verdict, context=context, horizon=horizon)


def check_application(phi, m, horizon=None, seed=0):
    """For commutative A: when RHom_R(A, R) is perfect over A and
    Gdim_R(A), Gdim_A(M) are finite, Gdim_R(M) is finite too."""
    horizon = _horizon(horizon)
    start = perf_counter()
    phi.target.require_commutative()
    a_over_r = restrict(phi, regular_module(phi.target))
    dimension = gdim(a_over_r, horizon, seed)
    reflexive = (dimension if dimension.is_proven and dimension.value == 0
                 else None)
    d = _rhom(phi, horizon, seed, reflexive)
    if d is None:
        perfect = Verdict.inconclusive(horizon, 'RHom_R(A, R) is not '
                                       'bounded within the horizon')
    else:
        perfect = is_perfect(d.left, horizon, seed)
    module = gdim(m, horizon, seed)
    premises = (perfect, dimension, module)
    if all(v.is_proven for v in premises):
        consequence = gdim(restrict(phi, m), horizon, seed)
        if not consequence.is_proven:
            consequence = Verdict.inconclusive(
                horizon, 'Gdim over the base is not established within the '
                'horizon')
    else:
        consequence = Verdict.inconclusive(horizon, 'premises not '
                                           'established')
    names = ('perfect', 'gdim-base-algebra', 'gdim-algebra-module',
             'gdim-base-module')
    subs = [CheckReport.leaf(name, v)
            for name, v in zip(names, premises + (consequence,))]
    return CheckReport.combine('application', subs, horizon, start)


def _is_local(algebra):
    return (algebra.is_commutative and algebra.ring.is_field and
            len(local_decomposition(algebra)) == 1)


def check_recover(phi, horizon=None, seed=0):
    """For commutative local R and A: A Gorenstein and Gdim_R(A) finite
    imply R Gorenstein."""
    horizon = _horizon(horizon)
    start = perf_counter()
    if not (_is_local(phi.source) and _is_local(phi.target)):
        verdict = Verdict.inconclusive(horizon, 'both algebras must be '
                                       'commutative and local')
        report = CheckReport('implication', verdict, horizon=horizon)
        return CheckReport.combine('recover', [report], horizon, start)
    premises = [
        ('algebra-gorenstein', is_iwanaga_gorenstein(phi.target, horizon)),
        ('gdim-finite', gdim(restrict(phi, regular_module(phi.target)),
                             horizon, seed))]
    conclusion = ('base-gorenstein', is_iwanaga_gorenstein(phi.source,
                                                           horizon))
    implication = _implication('implication', premises, conclusion, horizon)
    return CheckReport.combine('recover', [implication], horizon, start)


def check_ascent_ig(phi, horizon=None, seed=0):
    """Ascent of the Iwanaga-Gorenstein property along phi, and its
    converse under the fibre condition.

    Subs: forward (adfgd and IG(R) imply IG(A)) and converse (adfgd, the
    fibre condition and IG(A) imply IG(R)). The verdicts involved are
    kept as context.

    """
    horizon = _horizon(horizon)
    start = perf_counter()
    adfgd = check_adfgd(phi, horizon, seed)
    base = is_iwanaga_gorenstein(phi.source, horizon)
    algebra = is_iwanaga_gorenstein(phi.target, horizon)
    fibres = _fibre_verdict(phi)
    forward = _implication('forward', [('adfgd', adfgd.verdict),
                                       ('base', base)],
                           ('algebra', algebra), horizon)
    converse = _implication('converse', [('adfgd', adfgd.verdict),
                                         ('fibres', fibres),
                                         ('algebra', algebra)],
                            ('base', base), horizon)
    context = [adfgd, CheckReport.leaf('base', base),
               CheckReport.leaf('algebra', algebra),
               CheckReport.leaf('fibres', fibres)]
    return CheckReport.combine('ascent-ig', [forward, converse], horizon,
                               start, context)


def _hom_from_module(m, d):
    """Hom_A(M, D) as a complex of right A-modules."""
    ring = m.ring
    terms = [hom_module(m, d.term(n), side=LEFT)
             for n in range(d.lo, d.hi + 1)]
    differentials = {}
    for n in range(d.lo + 1, d.hi + 1):
        differentials[n] = _postcompose(ring, terms[n - d.lo],
                                        terms[n - 1 - d.lo],
                                        d.left.differential(n))
    return ComplexRep(d.algebra, d.lo, terms, differentials, RIGHT,
                      check=False)


def _evaluation(d, m):
    h = _hom_from_module(m, d)
    hc = hom_complex(h, d.right)
    ring = m.ring
    vectors = []
    for k in range(m.dim):
        x = tuple(ring.one if i == k else ring.zero for i in range(m.dim))
        family = {}
        for n in h.degrees:
            maps = h.term(n).maps or ()
            family[n] = Matrix.from_columns(ring, (f.apply(x) for f in maps),
                                            d.left.dim(n))
        vectors.append(hc.element(0, family))
    return _degree_zero_quasi_iso(hc, vectors, m.dim)


def check_evaluation(d, m, horizon=None, seed=0):
    """Verify that the evaluation M -> Hom_{A^op}(Hom_A(M, D), D) is a
    quasi-isomorphism, for M of finite Gdim and D perfect.

    Subs: gdim, perfect and evaluation.

    """
    horizon = _horizon(horizon)
    start = perf_counter()
    begun = perf_counter()
    subs = [CheckReport.leaf('gdim', gdim(m, horizon, seed), begun)]
    begun = perf_counter()
    subs.append(CheckReport.leaf('perfect', is_perfect(d.left, horizon,
                                                       seed), begun))
    begun = perf_counter()
    holds, summary = _evaluation(d, m)

    def recheck():
        return _evaluation(d, m)[0] == holds
    if holds:
        verdict = Verdict.proven('evaluation-quasi-isomorphism', summary,
                                 recheck)
    else:
        verdict = Verdict.refuted('evaluation', summary, recheck)
    subs.append(CheckReport.leaf('evaluation', verdict, begun))
    return CheckReport.combine('evaluation', subs, horizon, start)


def check_gdim_bound(algebra, m, horizon=None, seed=0):
    """Gdim_A(M) is at most the injective dimension of an
    Iwanaga-Gorenstein algebra A."""
    horizon = _horizon(horizon)
    start = perf_counter()
    ig = is_iwanaga_gorenstein(algebra, horizon)
    context = [CheckReport.leaf('ig', ig)]
    subs = []
    if ig.is_proven and ig.value is not None:
        bound = ig.value
        dimension = gdim(m, horizon, seed, limit=bound)
        if dimension.is_proven:
            verdict = Verdict.proven(
                'bound', {'gdim': dimension.value,
                          'injective_dimension': bound},
                lambda: (dimension.value <= bound and
                         dimension.recheck() is True),
                horizon=horizon)
        else:
            verdict = Verdict.inconclusive(horizon, 'no totally reflexive '
                                           'syzygy up to the bound')
        subs.append(CheckReport.leaf('gdim', dimension))
    else:
        verdict = Verdict.inconclusive(horizon, 'the algebra is not proven '
                                       'Iwanaga-Gorenstein')
    subs.append(CheckReport.leaf('bound', verdict))
    return CheckReport.combine('gdim-bound', subs, horizon, start, context)


# Complexes.
def _acyclicity(x):
    h = homology(x)
    first, last = x.interior
    if first > last:
        return Verdict.inconclusive(None, 'no determinate degrees')
    nonzero = h.nonzero_degrees()
    if not nonzero:
        return Verdict.proven('acyclic', {'degrees': [first, last]},
                              lambda: not homology(x).nonzero_degrees())
    i = nonzero[0]
    z = h.representatives[i][0]

    def recheck():
        boundaries = Span.of_columns(x.differential(i + 1))
        return (not any(x.differential(i).apply(z)) and
                not boundaries.contains(z))
    return Verdict.refuted('cycle-not-boundary',
                           {'degree': i, 'representative': _render(z),
                            'nonzero': nonzero,
                            'sizes': [h[j] for j in nonzero]},
                           recheck)


def check_acyclic(x):
    """Acyclicity of a complex in its determinate degrees."""
    start = perf_counter()
    return CheckReport.leaf('acyclic', _acyclicity(x), start)


def check_tensor_acyclic(x, y):
    """Acyclicity of X (x)_A Y in its determinate degrees."""
    start = perf_counter()
    return CheckReport.leaf('tensor-acyclic',
                            _acyclicity(tensor_complex(x, y)), start)


# Soundness.
def audit(item):
    """Re-verify the certificates and witnesses of a Verdict or of every
    verdict in a CheckReport.

    Returns:
        The paths of decided verdicts whose evidence did not re-verify
        (empty when everything checks out).

    """
    if isinstance(item, Verdict):
        pairs = [('', item)]
    else:
        pairs = item.walk()
    failures = []
    for path, verdict in pairs:
        if verdict.status == Status.INCONCLUSIVE:
            continue
        if verdict.recheck() is not True:
            logger.error('evidence at %r did not re-verify', path)
            failures.append(path)
    return failures
