#!/usr/bin/env python3

"""Allow running python-ghalg as python -m ghalg."""

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
import sys

# Local imports.
from .cli import main

sys.exit(main())
