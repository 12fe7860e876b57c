#!/usr/bin/env python3

"""Three-valued verdicts with checkable evidence."""

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

__all__ = ['Status', 'Evidence', 'Verdict', 'meet']

# Standard library imports.
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Callable, Optional


class Status(IntEnum):
    """Outcome of a check, ordered so that the weakest is smallest."""
    REFUTED = 0
    INCONCLUSIVE = 1
    PROVEN = 2

    @property
    def label(self):
        return self.name.lower()

    @classmethod
    def parse(cls, text):
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError('unknown status {!r}'.format(text)) from None

    def __str__(self):
        return self.label


def meet(statuses):
    """Combine statuses: any Refuted wins, then any Inconclusive."""
    statuses = list(statuses)
    return min(statuses) if statuses else Status.PROVEN


@dataclass(frozen=True)
class Evidence:
    """A certificate (for Proven) or a witness (for Refuted).

    summary must hold JSON-ready values only. recheck, when given,
    re-verifies the claim from scratch and returns a bool.

    """
    kind: str
    summary: dict = field(default_factory=dict)
    recheck: Optional[Callable[[], bool]] = field(default=None,
                                                  compare=False, repr=False)


@dataclass(frozen=True)
class Verdict:
    status: Status
    evidence: Optional[Evidence] = None
    horizon: Optional[int] = None
    value: Any = None
    note: str = ''

    def __post_init__(self):
        if self.status != Status.INCONCLUSIVE and self.evidence is None:
            raise ValueError('a {} verdict needs evidence'.format(
                self.status.label))

    @classmethod
    def proven(cls, kind, summary=None, recheck=None, value=None,
               horizon=None):
        return cls(Status.PROVEN, Evidence(kind, summary or {}, recheck),
                   horizon, value)

    @classmethod
    def refuted(cls, kind, summary=None, recheck=None, value=None,
                horizon=None):
        return cls(Status.REFUTED, Evidence(kind, summary or {}, recheck),
                   horizon, value)

    @classmethod
    def inconclusive(cls, horizon, note='', value=None):
        return cls(Status.INCONCLUSIVE, None, horizon, value, note)

    @property
    def is_proven(self):
        return self.status == Status.PROVEN

    @property
    def is_refuted(self):
        return self.status == Status.REFUTED

    def recheck(self):
        """Re-run the evidence check; None when there is nothing to run."""
        if self.evidence is None or self.evidence.recheck is None:
            return None
        return bool(self.evidence.recheck())
