#!/usr/bin/env python3

"""Report records and their human and machine renderings."""

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

__all__ = ['ReportRecord', 'FIELDS', 'HUMAN', 'MACHINE', 'emit_report',
           'read_report']

# Standard library imports.
from dataclasses import dataclass
import json
from typing import Optional

# Local imports.
from .. import config
from ..verdict import Status

HUMAN = 'human'
MACHINE = 'machine'

# Field order of a machine record. elapsed is only written on request,
# so that reruns are byte-identical.
FIELDS = ('id', 'property', 'subjects', 'status', 'horizon', 'seed',
          'engine', 'report', 'error', 'elapsed')


@dataclass
class ReportRecord:
    """The result of one check directive.

    status is None when the check raised; error then holds the stable
    exception kind and the message.

    """
    id: str
    property: str
    subjects: tuple
    status: Optional[Status]
    report: Optional[dict] = None
    horizon: Optional[int] = None
    seed: int = 0
    engine: str = config.ENGINE_VERSION
    error: Optional[dict] = None
    elapsed: float = 0.0

    @property
    def label(self):
        return 'error' if self.status is None else self.status.label

    def as_dict(self, timings=False):
        record = {'id': self.id,
                  'property': self.property,
                  'subjects': list(self.subjects),
                  'status': None if self.status is None else self.label,
                  'horizon': self.horizon,
                  'seed': self.seed,
                  'engine': self.engine,
                  'report': self.report,
                  'error': self.error}
        if timings:
            record['elapsed'] = self.elapsed
        return record

    @classmethod
    def from_dict(cls, record):
        unknown = set(record) - set(FIELDS)
        if unknown:
            raise ValueError('unknown report fields: {}'.format(
                ', '.join(sorted(unknown))))
        status = record.get('status')
        return cls(record['id'], record['property'],
                   tuple(record.get('subjects', ())),
                   None if status is None else Status.parse(status),
                   record.get('report'), record.get('horizon'),
                   record.get('seed', 0),
                   record.get('engine', config.ENGINE_VERSION),
                   record.get('error'), record.get('elapsed', 0.0))


def _machine(record, timings):
    return json.dumps(record.as_dict(timings), ensure_ascii=False,
                      separators=(',', ':'), default=str)


def _summary(summary):
    if not summary:
        return ''
    return ' ' + json.dumps(summary, ensure_ascii=False, sort_keys=True,
                            default=str)


def _human_tree(report, depth, marker=''):
    indent = '    ' * depth
    line = '{}{}{}: {}'.format(indent, marker, report['name'],
                                report['status'])
    evidence = report.get('evidence')
    if evidence is not None:
        line += ' [{}]{}'.format(evidence['kind'],
                                 _summary(evidence['summary']))
    elif report.get('note'):
        line += ' ({})'.format(report['note'])
    if report.get('value') is not None:
        line += ' value={}'.format(report['value'])
    yield line
    for sub in report.get('subs', ()):
        yield from _human_tree(sub, depth + 1)
    # Context reports support the verdict without entering it.
    for sub in report.get('context', ()):
        yield from _human_tree(sub, depth + 1, 'given ')


def _human(record, timings):
    heading = '{} {}'.format(record.id, record.label.upper())
    if record.horizon is not None:
        heading += ' (horizon {})'.format(record.horizon)
    if timings:
        heading += ' {:.3f}s'.format(record.elapsed)
    lines = [heading]
    if record.error is not None:
        lines.append('    {}: {}'.format(record.error['kind'],
                                         record.error['message']))
    elif record.report is not None:
        lines.extend(_human_tree(record.report, 1))
    return '\n'.join(lines)


def emit_report(records, format=HUMAN, timings=False):
    """Render report records as text.

    Positional arguments:
        records -- an iterable of ReportRecord instances.

    Keyword arguments:
        format -- 'human' for an indented tree of verdicts with their
            certificates and witnesses, or 'machine' for one JSON object
            per line in a stable field order.
        timings -- include elapsed times (default False).

    Returns:
        The text, ending in a newline unless there are no records.

    """
    if format == MACHINE:
        render = _machine
    elif format == HUMAN:
        render = _human
    else:
        raise ValueError('unknown report format {!r}'.format(format))
    lines = [render(record, timings) for record in records]
    return ''.join(line + '\n' for line in lines)


def read_report(text):
    """Read a machine report back into ReportRecord instances."""
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError('line {}: {}'.format(number, exc)) from None
        records.append(ReportRecord.from_dict(record))
    return records
