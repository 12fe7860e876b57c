#!/usr/bin/env python3

"""Exact Gorenstein homological algebra for finite-dimensional algebras."""

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

__all__ = ['exactlin', 'algebra', 'modrep', 'homalg', 'gorenstein',
           'verdict', 'errors', 'config', 'cli',
           'BaseRing', 'Matrix', 'Span', 'Algebra', 'AlgebraMorphism',
           'ModuleRep', 'BimoduleRep', 'ComplexRep', 'Status', 'Verdict',
           'GhalgError', '__version__']

# Import objects from submodules that are to be available at the package level.
from .config import ENGINE_VERSION as __version__
from .errors import GhalgError
from .exactlin import BaseRing, Matrix, Span
from .algebra import Algebra, AlgebraMorphism
from .modrep import ModuleRep, BimoduleRep
from .homalg import ComplexRep
from .verdict import Status, Verdict
