#!/usr/bin/env python3

"""Default settings for python-ghalg."""

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

__all__ = ['ENGINE_VERSION', 'SESSION_VERSION', 'DEFAULT_HORIZON',
           'ISO_SEARCH_BOUND', 'ISO_SEARCH_TRIALS', 'MAX_WINDOW',
           'HORIZON_VARIABLE', 'default_horizon']

# Standard library imports.
import logging
import os

logger = logging.getLogger(__name__)

ENGINE_VERSION = '0.1'
SESSION_VERSION = 1

# Resolution length and Ext range used when a caller gives none.
DEFAULT_HORIZON = 8

# Largest number of candidates tried by exhaustive isomorphism search.
ISO_SEARCH_BOUND = 2 ** 20

# Random combinations tried by isomorphism search over the rationals.
ISO_SEARCH_TRIALS = 64

# Largest number of degrees in a Hom or tensor complex.
MAX_WINDOW = 64

HORIZON_VARIABLE = 'GHALG_DEFAULT_HORIZON'


def default_horizon():
    """Get the default horizon, honouring the environment override."""
    override = os.environ.get(HORIZON_VARIABLE)
    if override is None:
        return DEFAULT_HORIZON
    try:
        value = int(override)
    except ValueError:
        value = 0
    if value <= 0:
        logger.warning('ignoring %s=%r: not a positive integer',
                       HORIZON_VARIABLE, override)
        return DEFAULT_HORIZON
    return value
