#!/usr/bin/env python3

"""Error conditions for python-ghalg."""

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

__all__ = ['GhalgError', 'ShapeMismatch', 'NotFreeOverBase',
           'UnsupportedBaseRing', 'AssociativityViolation', 'UnitViolation',
           'NonCommutativeSource', 'NonCommutative', 'NotRingHom',
           'NotCentral', 'ModuleValidationError', 'SideMismatch',
           'NoResidualAction', 'WindowOverflow', 'UnboundedBelow',
           'HorizonExceeded', 'IdempotentSplittingFailure',
           'SessionParseError', 'SessionResolutionError',
           'error_kinds', 'exception_kind']


# Every error raised by python-ghalg derives from GhalgError and from the
# closest built-in exception, so callers may catch either one.
class GhalgError(Exception):
    """Base class for all python-ghalg errors."""


class ShapeMismatch(GhalgError, ValueError):
    """Matrix or module shapes are incompatible."""


class NotFreeOverBase(GhalgError, ArithmeticError):
    """A submodule or quotient over Z/n is not free over the base."""


class UnsupportedBaseRing(GhalgError, TypeError):
    """The operation is not available over this base ring."""


class AssociativityViolation(GhalgError, ValueError):
    """A multiplication table is not associative.

    The offending basis triple (i, j, k) is kept in the witness
    attribute.

    """
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class UnitViolation(GhalgError, ValueError):
    """The declared unit does not act as an identity."""


class _WitnessError(GhalgError, ValueError):
    """An error carrying a pair of basis indices as its witness."""
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonCommutativeSource(_WitnessError):
    """The source of an algebra morphism is not commutative."""


class NonCommutative(_WitnessError):
    """A commutative algebra was required."""


class NotRingHom(_WitnessError):
    """A linear map fails to be a unital ring homomorphism."""


class NotCentral(_WitnessError):
    """The image of a morphism is not in the centre of the target."""


class ModuleValidationError(_WitnessError):
    """Action matrices do not define a module."""


class SideMismatch(GhalgError, ValueError):
    """Modules act on the wrong sides or over different algebras."""


class NoResidualAction(GhalgError, TypeError):
    """A Hom or tensor space has no module structure left over."""


class WindowOverflow(GhalgError, OverflowError):
    """A complex window would grow beyond the configured limit."""


class UnboundedBelow(GhalgError, ValueError):
    """A complex must be bounded below for this operation."""


class HorizonExceeded(GhalgError, RuntimeError):
    """A construction did not finish within the requested horizon."""


class IdempotentSplittingFailure(GhalgError, ArithmeticError):
    """Idempotents could not be split or lifted."""


class SessionParseError(GhalgError, SyntaxError):
    """A session document is malformed.

    The line and column (both counted from 1) are kept as attributes
    and included in the message.

    """
    def __init__(self, message, line, column=1):
        super().__init__('line {}, column {}: {}'.format(line, column,
                                                         message))
        self.line = line
        self.column = column


class SessionResolutionError(GhalgError, NameError):
    """A session document refers to an undefined name."""
    def __init__(self, message, name, line=None):
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super().__init__(message)
        self.name = name
        self.line = line


# Stable short names for reports. Ordered from most to least specific, so
# the first match wins.
error_kinds = [(SessionParseError, 'parse-error'),
               (SessionResolutionError, 'resolution-error'),
               (AssociativityViolation, 'associativity-violation'),
               (UnitViolation, 'unit-violation'),
               (NonCommutativeSource, 'non-commutative-source'),
               (NonCommutative, 'non-commutative'),
               (NotRingHom, 'not-ring-hom'),
               (NotCentral, 'not-central'),
               (ModuleValidationError, 'module-validation'),
               (SideMismatch, 'side-mismatch'),
               (NoResidualAction, 'no-residual-action'),
               (ShapeMismatch, 'shape-mismatch'),
               (NotFreeOverBase, 'not-free-over-base'),
               (UnsupportedBaseRing, 'unsupported-base-ring'),
               (WindowOverflow, 'window-overflow'),
               (UnboundedBelow, 'unbounded-below'),
               (HorizonExceeded, 'horizon-exceeded'),
               (IdempotentSplittingFailure, 'idempotent-splitting'),
               (GhalgError, 'engine-error')]


def exception_kind(exc):
    """Get the report name for an exception instance."""
    for exception_class, kind in error_kinds:
        if isinstance(exc, exception_class):
            return kind
    return 'internal-error'
