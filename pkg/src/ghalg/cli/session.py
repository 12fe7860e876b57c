#!/usr/bin/env python3

"""Reading session documents."""

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

__all__ = ['SessionDocument', 'Directive', 'PROPERTIES', 'HEADER',
           'parse_session']

# Standard library imports.
from dataclasses import dataclass, field
from fractions import Fraction
import logging
import re
from typing import Optional

# Local imports.
from .. import config
from ..algebra import (Algebra, AlgebraMorphism, base_algebra, truncated_poly,
                       group_algebra, opposite, product, tensor,
                       trivial_extension, quotient_algebra)
from ..errors import GhalgError, SessionParseError, SessionResolutionError
from ..exactlin import BaseRing, Matrix, Span
from ..homalg import ComplexRep, stalk, free_resolution, syzygy
from ..modrep import (LEFT, RIGHT, ModuleRep, free_module, regular_module,
                      cyclic_module, submodule, direct_sum, dual_over_base,
                      restrict)
from ..verdict import Status

logger = logging.getLogger(__name__)

HEADER = 'ghalg-session'

# Subject kinds taken by each check; a trailing '+' takes one or more.
PROPERTIES = {
    'totally-reflexive': ('module',),
    'gdim': ('module',),
    'projective': ('module',),
    'injective': ('module',),
    'iso': ('module', 'module'),
    'ig': ('algebra',),
    'perfect': ('complex',),
    'acyclic': ('complex',),
    'tensor-acyclic': ('complex', 'complex'),
    'semidualizing': ('morphism',),
    'adfgd': ('morphism',),
    'adgp': ('morphism',),
    'frobenius': ('morphism',),
    'fibre': ('morphism',),
    'local-property': ('morphism',),
    'recover': ('morphism',),
    'ascent-ig': ('morphism',),
    'cross-validate': ('morphism', 'module+'),
    'application': ('morphism', 'module'),
    'evaluation': ('morphism', 'module'),
    'gdim-bound': ('algebra', 'module'),
}


@dataclass
class Directive:
    """One check to run."""
    id: str
    property: str
    subjects: tuple
    horizon: Optional[int] = None
    seed: Optional[int] = None
    line: int = 0


@dataclass
class SessionDocument:
    """A parsed and validated session."""
    version: int = config.SESSION_VERSION
    ring: Optional[BaseRing] = None
    algebras: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    complexes: dict = field(default_factory=dict)
    directives: list = field(default_factory=list)
    expectations: dict = field(default_factory=dict)
    text: str = ''

    def lookup(self, kind, name, line=None):
        table = {'algebra': self.algebras, 'morphism': self.morphisms,
                 'module': self.modules, 'complex': self.complexes}[kind]
        try:
            return table[name]
        except KeyError:
            raise SessionResolutionError('undefined {} {!r}'.format(
                kind, name), name, line) from None

    def defined(self, name):
        return any(name in table for table in (self.algebras, self.morphisms,
                                               self.modules, self.complexes))


# Lines and blocks.
_COMMENT = re.compile(r'(?:^|\s)#.*$')


def _strip(raw):
    """Drop a comment: '#' at the start of a line or after a space."""
    return _COMMENT.sub('', raw).strip()


def _column(raw, token):
    found = raw.find(token)
    return found + 1 if found >= 0 else 1


class _Lines:
    """Numbered, comment-stripped lines with one step of lookahead."""
    def __init__(self, text):
        self._lines = [(n, raw, _strip(raw))
                       for n, raw in enumerate(text.splitlines(), start=1)]
        self._lines = [entry for entry in self._lines if entry[2]]
        self._index = 0

    def __iter__(self):
        return self

    def __next__(self):
        if self._index >= len(self._lines):
            raise StopIteration
        entry = self._lines[self._index]
        self._index += 1
        return entry

    def block(self, opening):
        """Lines up to the closing 'end'."""
        body = []
        for entry in self:
            if entry[2] == 'end':
                return body
            body.append(entry)
        raise SessionParseError('block opened here is never closed with '
                                "'end'", opening, 1)


# Numbers, vectors and matrices.
def _number(text, line, raw):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SessionParseError('expected a number, not {!r}'.format(text),
                                line, _column(raw, text)) from None


def _matrix(ring, text, line, raw, shape=None):
    rows = [[ring.normalize(_number(x, line, raw)) for x in row.split()]
            for row in text.split(';')]
    if any(len(row) != len(rows[0]) for row in rows):
        raise SessionParseError('matrix rows differ in length', line,
                                _column(raw, text))
    m = Matrix(ring, rows, len(rows[0]))
    if shape is not None and m.shape != shape:
        raise SessionParseError('expected a {} x {} matrix'.format(*shape),
                                line, _column(raw, text))
    return m


_EXPRESSION_TOKEN = re.compile(r'[+-]|[^\s+-]+')


def _element(algebra, text, line, raw):
    """A linear combination of basis names, such as '2*x - 1/2*w + 1'."""
    ring = algebra.ring
    names = algebra.names
    vector = [Fraction(0)] * algebra.dim
    sign = 1
    expecting_term = True
    for token in _EXPRESSION_TOKEN.findall(text):
        if token in '+-':
            if token == '-':
                sign = -sign
            expecting_term = True
            continue
        if not expecting_term:
            raise SessionParseError('missing + or - before {!r}'.format(
                token), line, _column(raw, token))
        if '*' in token:
            coefficient, name = token.split('*', 1)
            coefficient = _number(coefficient, line, raw)
        elif token in names:
            coefficient, name = Fraction(1), token
        else:
            coefficient, name = _number(token, line, raw), None
        if name is None:
            unit = algebra.unit
            for i in range(algebra.dim):
                vector[i] += sign * coefficient * Fraction(unit[i])
        elif name in names:
            vector[names.index(name)] += sign * coefficient
        else:
            raise SessionResolutionError('{!r} is not a basis element of '
                                         'the algebra'.format(name), name,
                                         line)
        sign = 1
        expecting_term = False
    if expecting_term and text.strip():
        raise SessionParseError('expression ends with a sign', line,
                                _column(raw, text))
    return tuple(ring.normalize(x) for x in vector)


def _elements(algebra, text, line, raw):
    return [_element(algebra, part, line, raw) for part in text.split(',')]


def _at_line(exc, line):
    """Prefix the line number to an engine validation error."""
    if exc.args:
        exc.args = ('line {}: {}'.format(line, exc.args[0]),) + exc.args[1:]
    exc.line = line
    return exc


# Statement parsers.
class _Parser:
    def __init__(self, text):
        self.doc = SessionDocument(text=text)
        self.lines = _Lines(text)

    def parse(self):
        header_seen = False
        for line, raw, text in self.lines:
            words = text.split()
            keyword = words[0]
            if not header_seen:
                if keyword != HEADER:
                    raise SessionParseError('expected the header {!r}'.format(
                        HEADER), line, 1)
                self._header(words, line, raw)
                header_seen = True
                continue
            handler = getattr(self, '_' + keyword, None)
            if keyword.startswith('_') or handler is None:
                raise SessionParseError('unknown statement {!r}'.format(
                    keyword), line, _column(raw, keyword))
            try:
                handler(words[1:], line, raw, text)
            except (SessionParseError, SessionResolutionError):
                raise
            except GhalgError as exc:
                raise _at_line(exc, line)
            except (ValueError, ZeroDivisionError) as exc:
                raise SessionParseError(str(exc), line, 1) from None
        return self.doc

    def _header(self, words, line, raw):
        if len(words) != 2 or not words[1].isdigit():
            raise SessionParseError('the header needs a version number',
                                    line, len(HEADER) + 2)
        version = int(words[1])
        if version > config.SESSION_VERSION:
            raise SessionParseError('session version {} is newer than this '
                                    'engine supports ({})'.format(
                                        version, config.SESSION_VERSION),
                                    line, _column(raw, words[1]))
        self.doc.version = version

    def _name(self, name, line, raw):
        if self.doc.defined(name):
            raise SessionParseError('{!r} is already defined'.format(name),
                                    line, _column(raw, name))
        if not re.fullmatch(r'[A-Za-z_][A-Za-z0-9_]*', name):
            raise SessionParseError('{!r} is not a valid name'.format(name),
                                    line, _column(raw, name))
        return name

    def _need_ring(self, line):
        if self.doc.ring is None:
            raise SessionParseError("declare the base ring with 'ring' "
                                    'first', line, 1)
        return self.doc.ring

    def _ring(self, args, line, raw, text):
        if self.doc.ring is not None:
            raise SessionParseError('the base ring is already declared',
                                    line, 1)
        if len(args) != 1:
            raise SessionParseError('expected: ring QQ | GF(p) | Z/n', line,
                                    1)
        try:
            self.doc.ring = BaseRing.parse(args[0])
        except ValueError as exc:
            raise SessionParseError(str(exc), line,
                                    _column(raw, args[0])) from None

    # algebra NAME = COMBINATOR ... | algebra NAME basis B1 B2 ...
    def _algebra(self, args, line, raw, text):
        ring = self._need_ring(line)
        if len(args) < 2:
            raise SessionParseError('expected: algebra NAME = ... or '
                                    'algebra NAME basis ...', line, 1)
        name = self._name(args[0], line, raw)
        if args[1] == 'basis':
            algebra = self._table(ring, args[2:], line, raw)
        elif args[1] == '=' and len(args) > 2:
            algebra = self._combinator(ring, args[2], args[3:], line, raw)
        else:
            raise SessionParseError("expected '=' or 'basis'", line,
                                    _column(raw, args[1]))
        self.doc.algebras[name] = algebra

    def _table(self, ring, names, line, raw):
        if not names:
            raise SessionParseError('an algebra needs basis names', line, 1)
        if len(set(names)) != len(names):
            raise SessionParseError('basis names repeat', line, 1)
        dim = len(names)
        unit_name = names[0]
        products = {}
        body = self.lines.block(line)
        for at, body_raw, body_text in body:
            if body_text.startswith('unit '):
                unit_name = body_text.split(None, 1)[1].strip()
                if unit_name not in names:
                    raise SessionResolutionError(
                        'unit {!r} is not a basis name'.format(unit_name),
                        unit_name, at)
                continue
            left, eq, right = body_text.partition('=')
            factors = left.split('*')
            if not eq or len(factors) != 2:
                raise SessionParseError('expected: a*b = expression', at, 1)
            a, b = (f.strip() for f in factors)
            for factor in (a, b):
                if factor not in names:
                    raise SessionResolutionError(
                        '{!r} is not a basis name'.format(factor), factor, at)
            products[a, b] = (right, at, body_raw)
        # Read expressions against a provisional algebra that only knows
        # the names and the unit.
        u = names.index(unit_name)
        unit = tuple(ring.one if i == u else ring.zero for i in range(dim))
        shell = _NameShell(ring, names, unit)
        zero = tuple(ring.zero for _ in range(dim))
        table = []
        for i, a in enumerate(names):
            row = []
            for j, b in enumerate(names):
                if (a, b) in products:
                    expression, at, body_raw = products[a, b]
                    row.append(_element(shell, expression, at, body_raw))
                elif i == u:
                    row.append(tuple(ring.one if k == j else ring.zero
                                     for k in range(dim)))
                elif j == u:
                    row.append(tuple(ring.one if k == i else ring.zero
                                     for k in range(dim)))
                else:
                    row.append(zero)
            table.append(row)
        return Algebra(ring, dim, table, unit, names)

    def _combinator(self, ring, kind, args, line, raw):
        def algebra(name):
            return self.doc.lookup('algebra', name, line)

        def count(expected):
            if len(args) != expected:
                raise SessionParseError('{} takes {} argument(s)'.format(
                    kind, expected), line, _column(raw, kind))
        if kind == 'base':
            count(0)
            return base_algebra(ring)
        if kind == 'truncated':
            count(2)
            return truncated_poly(ring, int(_number(args[1], line, raw)),
                                  args[0])
        if kind == 'group':
            if not args:
                raise SessionParseError('group needs the cyclic orders',
                                        line, _column(raw, kind))
            return group_algebra(ring, [int(_number(a, line, raw))
                                        for a in args])
        if kind in ('product', 'tensor'):
            count(2)
            build = product if kind == 'product' else tensor
            return build(algebra(args[0]), algebra(args[1]))
        if kind == 'opposite':
            count(1)
            return opposite(algebra(args[0]))
        if kind == 'trivial':
            count(1)
            return trivial_extension(self.doc.lookup('module', args[0], line))
        if kind == 'quotient':
            if len(args) < 3 or args[1] != 'by':
                raise SessionParseError('expected: quotient ALGEBRA by '
                                        'EXPRESSION, ...', line,
                                        _column(raw, kind))
            a = algebra(args[0])
            rest = re.split(r'\bby\b', _strip(raw), 1)[1]
            generators = _elements(a, rest, line, raw)
            quotient, _ = quotient_algebra(a, _two_sided_ideal(a, generators))
            return quotient
        raise SessionParseError('unknown algebra constructor {!r}'.format(
            kind), line, _column(raw, kind))

    # morphism NAME : SOURCE -> TARGET [= identity]
    def _morphism(self, args, line, raw, text):
        self._need_ring(line)
        if len(args) < 5 or args[1] != ':' or args[3] != '->':
            raise SessionParseError('expected: morphism NAME : SOURCE -> '
                                    'TARGET', line, 1)
        name = self._name(args[0], line, raw)
        source = self.doc.lookup('algebra', args[2], line)
        target = self.doc.lookup('algebra', args[4], line)
        if args[5:] == ['=', 'identity']:
            if source != target:
                raise SessionParseError('identity needs equal source and '
                                        'target', line, _column(raw,
                                                                'identity'))
            self.doc.morphisms[name] = AlgebraMorphism.identity(source)
            return
        if args[5:]:
            raise SessionParseError('unexpected {!r}'.format(args[5]), line,
                                    _column(raw, args[5]))
        images = {}
        for at, body_raw, body_text in self.lines.block(line):
            left, arrow, right = body_text.partition('->')
            basis = left.strip()
            if not arrow:
                raise SessionParseError('expected: BASIS -> EXPRESSION', at,
                                        1)
            if basis not in source.names:
                raise SessionResolutionError('{!r} is not a basis element '
                                             'of the source'.format(basis),
                                             basis, at)
            images[basis] = _element(target, right, at, body_raw)
        columns = []
        zero = target.zero_vector()
        for i, basis in enumerate(source.names):
            if basis in images:
                columns.append(images[basis])
            elif source.basis_vector(i) == tuple(source.unit):
                columns.append(tuple(target.unit))
            else:
                columns.append(zero)
        self.doc.morphisms[name] = AlgebraMorphism.from_images(
            source, target, columns)

    # module NAME over ALGEBRA = CONSTRUCTOR ... | module NAME over
    # ALGEBRA dim N [side]
    def _module(self, args, line, raw, text):
        self._need_ring(line)
        if len(args) < 4 or args[1] != 'over':
            raise SessionParseError('expected: module NAME over ALGEBRA ...',
                                    line, 1)
        name = self._name(args[0], line, raw)
        algebra = self.doc.lookup('algebra', args[2], line)
        if args[3] == 'dim':
            module = self._actions(algebra, args[4:], line, raw)
        elif args[3] == '=' and len(args) > 4:
            module = self._module_constructor(algebra, args[4], args[5:],
                                              line, raw)
        else:
            raise SessionParseError("expected '=' or 'dim'", line,
                                    _column(raw, args[3]))
        if module.algebra != algebra:
            raise SessionParseError('module is not over {}'.format(args[2]),
                                    line, _column(raw, args[2]))
        self.doc.modules[name] = module

    def _side(self, words, line, raw):
        if not words:
            return LEFT
        if len(words) == 1 and words[0] in (LEFT, RIGHT):
            return words[0]
        raise SessionParseError("expected 'left' or 'right'", line,
                                _column(raw, words[0]))

    def _actions(self, algebra, args, line, raw):
        if not args:
            raise SessionParseError('dim needs a number', line, 1)
        dim = int(_number(args[0], line, raw))
        side = self._side(args[1:], line, raw)
        ring = algebra.ring
        given = {}
        for at, body_raw, body_text in self.lines.block(line):
            basis, colon, matrix = body_text.partition(':')
            basis = basis.strip()
            if not colon:
                raise SessionParseError('expected: BASIS : ROW ; ROW ...', at,
                                        1)
            if basis not in algebra.names:
                raise SessionResolutionError('{!r} is not a basis element'
                                             .format(basis), basis, at)
            given[basis] = _matrix(ring, matrix, at, body_raw, (dim, dim))
        actions = []
        for i, basis in enumerate(algebra.names):
            if basis in given:
                actions.append(given[basis])
            elif algebra.basis_vector(i) == tuple(algebra.unit):
                actions.append(Matrix.identity(ring, dim))
            else:
                actions.append(Matrix.zeros(ring, dim, dim))
        return ModuleRep(algebra, actions, side)

    def _module_constructor(self, algebra, kind, args, line, raw):
        def module(name):
            return self.doc.lookup('module', name, line)
        if kind in ('regular', 'free'):
            rank = 1
            if kind == 'free':
                if not args:
                    raise SessionParseError('free needs a rank', line,
                                            _column(raw, kind))
                rank = int(_number(args[0], line, raw))
                args = args[1:]
            return free_module(algebra, rank, self._side(args, line, raw))
        if kind in ('cyclic', 'ideal'):
            side = LEFT
            rest = _strip(raw).split('=', 1)[1].strip()[len(kind):].strip()
            for word in (LEFT, RIGHT):
                if rest.endswith(' ' + word):
                    side = word
                    rest = rest[:-len(word)]
            elements = _elements(algebra, rest, line, raw)
            if kind == 'cyclic':
                return cyclic_module(algebra, elements, side)
            ideal, _ = submodule(regular_module(algebra, side), elements)
            return ideal
        if kind == 'sum':
            if len(args) != 2:
                raise SessionParseError('sum takes two modules', line,
                                        _column(raw, kind))
            return direct_sum(module(args[0]), module(args[1]))
        if kind == 'dual':
            if len(args) != 1:
                raise SessionParseError('dual takes one module', line,
                                        _column(raw, kind))
            return dual_over_base(module(args[0]))
        if kind == 'restrict':
            if len(args) != 2:
                raise SessionParseError('expected: restrict MORPHISM MODULE',
                                        line, _column(raw, kind))
            phi = self.doc.lookup('morphism', args[0], line)
            return restrict(phi, module(args[1]))
        if kind == 'syzygy':
            if len(args) != 2:
                raise SessionParseError('expected: syzygy MODULE N', line,
                                        _column(raw, kind))
            return syzygy(module(args[0]), int(_number(args[1], line, raw)))
        raise SessionParseError('unknown module constructor {!r}'.format(kind),
                                line, _column(raw, kind))

    # complex NAME over ALGEBRA from LO [cut] ... end
    # complex NAME over ALGEBRA = stalk MODULE [DEGREE]
    # complex NAME over ALGEBRA = resolution MODULE LENGTH
    def _complex(self, args, line, raw, text):
        self._need_ring(line)
        if len(args) < 4 or args[1] != 'over':
            raise SessionParseError('expected: complex NAME over ALGEBRA ...',
                                    line, 1)
        name = self._name(args[0], line, raw)
        algebra = self.doc.lookup('algebra', args[2], line)
        if args[3] == '=' and len(args) >= 6:
            kind, module = args[4], self.doc.lookup('module', args[5], line)
            if kind == 'stalk':
                degree = int(_number(args[6], line, raw)) if args[6:] else 0
                x = stalk(module, degree)
            elif kind == 'resolution' and len(args) == 7:
                x, _ = free_resolution(module, int(_number(args[6], line,
                                                           raw)))
            else:
                raise SessionParseError('unknown complex constructor '
                                        '{!r}'.format(kind), line,
                                        _column(raw, kind))
        elif args[3] == 'from' and len(args) in (5, 6):
            lo = int(_number(args[4], line, raw))
            cut = args[5:] == ['cut']
            if args[5:] and not cut:
                raise SessionParseError("expected 'cut'", line,
                                        _column(raw, args[5]))
            x = self._complex_body(algebra, lo, cut, line)
        else:
            raise SessionParseError("expected '= stalk', '= resolution' or "
                                    "'from'", line, _column(raw, args[3]))
        if x.algebra != algebra:
            raise SessionParseError('complex is not over {}'.format(args[2]),
                                    line, _column(raw, args[2]))
        self.doc.complexes[name] = x

    def _complex_body(self, algebra, lo, cut, line):
        terms = None
        given = {}
        every = None
        for at, body_raw, body_text in self.lines.block(line):
            words = body_text.split()
            if words[0] == 'terms':
                terms = [self.doc.lookup('module', w, at) for w in words[1:]]
            elif words[0] == 'd' and len(words) >= 3 and words[2] == '=':
                matrix = body_text.split('=', 1)[1]
                if words[1] == 'all':
                    every = (matrix, at, body_raw)
                else:
                    degree = int(_number(words[1], at, body_raw))
                    given[degree] = (matrix, at, body_raw)
            else:
                raise SessionParseError("expected 'terms ...' or 'd DEGREE = "
                                        "MATRIX'", at, 1)
        if not terms:
            raise SessionParseError('a complex needs its terms', line, 1)
        ring = algebra.ring
        differentials = {}
        for i in range(lo + 1, lo + len(terms)):
            entry = given.get(i, every)
            if entry is None:
                continue
            shape = (terms[i - 1 - lo].dim, terms[i - lo].dim)
            differentials[i] = _matrix(ring, entry[0], entry[1], entry[2],
                                       shape)
        side = terms[0].side
        return ComplexRep(algebra, lo, terms, differentials, side,
                          window_of_unbounded=cut)

    # check PROPERTY SUBJECT ... [horizon N] [seed S]
    def _check(self, args, line, raw, text):
        if not args:
            raise SessionParseError('check needs a property', line, 1)
        prop = args[0]
        if prop not in PROPERTIES:
            raise SessionParseError('unknown property {!r}'.format(prop),
                                    line, _column(raw, prop))
        subjects, options = [], {}
        words = args[1:]
        while words:
            word = words.pop(0)
            if word in ('horizon', 'seed'):
                if not words:
                    raise SessionParseError('{} needs a value'.format(word),
                                            line, _column(raw, word))
                value = words.pop(0)
                if not value.isdigit():
                    raise SessionParseError('{} must be a non-negative '
                                            'integer'.format(word), line,
                                            _column(raw, value))
                options[word] = int(value)
            else:
                subjects.append(word)
        kinds = PROPERTIES[prop]
        variadic = kinds[-1].endswith('+')
        if (len(subjects) < len(kinds) or
                (not variadic and len(subjects) != len(kinds))):
            raise SessionParseError('{} takes {} subject(s)'.format(
                prop, ' '.join(kinds)), line, _column(raw, prop))
        for k, subject in enumerate(subjects):
            kind = kinds[min(k, len(kinds) - 1)].rstrip('+')
            self.doc.lookup(kind, subject, line)
        base_id = '{}:{}'.format(prop, ','.join(subjects))
        ids = {d.id for d in self.doc.directives}
        directive_id, k = base_id, 1
        while directive_id in ids:
            k += 1
            directive_id = '{}#{}'.format(base_id, k)
        self.doc.directives.append(Directive(
            directive_id, prop, tuple(subjects), options.get('horizon'),
            options.get('seed'), line))

    # expect ... end, one 'ID STATUS' per line.
    def _expect(self, args, line, raw, text):
        if args:
            raise SessionParseError("'expect' opens a block", line,
                                    _column(raw, args[0]))
        for at, body_raw, body_text in self.lines.block(line):
            words = body_text.split()
            if len(words) != 2:
                raise SessionParseError('expected: CHECK-ID STATUS', at, 1)
            try:
                self.doc.expectations[words[0]] = Status.parse(words[1])
            except ValueError as exc:
                raise SessionParseError(str(exc), at,
                                        _column(body_raw, words[1])) from None


class _NameShell:
    """Just enough of an algebra to read expressions in its basis."""
    def __init__(self, ring, names, unit):
        self.ring = ring
        self.names = list(names)
        self.dim = len(names)
        self.unit = unit


def _two_sided_ideal(a, generators):
    span = Span(a.ring, a.dim, generators)
    while True:
        images = []
        for v in span.basis:
            for i in range(a.dim):
                x = a.basis_vector(i)
                images.append(a.multiply(x, v))
                images.append(a.multiply(v, x))
        grown = span.extend(images)
        if grown == span:
            return span
        span = grown


def parse_session(text):
    """Parse and validate a session document.

    Every algebra, morphism, module and complex is built (and so
    validated) as soon as it is read.

    Returns:
        A SessionDocument.

    Raises SessionParseError (with line and column) for malformed text,
    SessionResolutionError for undefined names, and the engine's
    validation errors, prefixed with the line, for invalid definitions.

    """
    document = _Parser(text).parse()
    for key in document.expectations:
        if key not in {d.id for d in document.directives}:
            logger.warning('expectation for unknown check %r', key)
    logger.debug('session with %d directives', len(document.directives))
    return document
