#!/usr/bin/env python3

"""Running the check directives of a session."""

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

__all__ = ['CHECKS', 'run_directive', 'run_checks', 'contradictions']

# Standard library imports.
from concurrent.futures import ProcessPoolExecutor
import logging
from time import perf_counter

# Local imports.
from .. import config
from .. import gorenstein as g
from ..errors import HorizonExceeded, exception_kind
from ..homalg import is_perfect
from ..modrep import iso_search
from ..verdict import Status, Verdict
from .report import ReportRecord
from .session import PROPERTIES, parse_session

logger = logging.getLogger(__name__)


def _leaf(name, verdict):
    return g.CheckReport.leaf(name, verdict)


def _evaluation(phi, m, horizon, seed):
    d, _ = g.build_semidualizing(phi, horizon, seed)
    return g.check_evaluation(d, m, horizon, seed)


# Each check takes its resolved subjects, then the horizon and the seed,
# and returns a CheckReport.
CHECKS = {
    'totally-reflexive': lambda m, h, s: _leaf(
        'totally-reflexive', g.is_totally_reflexive(m, h, s)),
    'gdim': lambda m, h, s: _leaf('gdim', g.gdim(m, h, s)),
    'projective': lambda m, h, s: g.check_projective(m),
    'injective': lambda m, h, s: g.check_injective(m),
    'iso': lambda m, n, h, s: _leaf('iso', iso_search(m, n, seed=s)),
    'ig': lambda a, h, s: _leaf('ig', g.is_iwanaga_gorenstein(a, h)),
    'perfect': lambda x, h, s: _leaf('perfect', is_perfect(x, h, s)),
    'acyclic': lambda x, h, s: g.check_acyclic(x),
    'tensor-acyclic': lambda x, y, h, s: g.check_tensor_acyclic(x, y),
    'semidualizing': lambda phi, h, s: g.build_semidualizing(phi, h, s)[1],
    'adfgd': g.check_adfgd,
    'adgp': g.check_adgp,
    'frobenius': lambda phi, h, s: _leaf('frobenius',
                                         g.is_frobenius(phi, s)),
    'fibre': lambda phi, h, s: g.check_fibre(phi),
    'cross-validate': lambda phi, *rest: g.cross_validate(
        phi, rest[:-2], rest[-2], rest[-1]),
    'local-property': g.check_local_property,
    'application': g.check_application,
    'recover': g.check_recover,
    'ascent-ig': g.check_ascent_ig,
    'evaluation': _evaluation,
    'gdim-bound': g.check_gdim_bound,
}


def _resolve(document, directive):
    kinds = PROPERTIES[directive.property]
    subjects = []
    for k, name in enumerate(directive.subjects):
        kind = kinds[min(k, len(kinds) - 1)].rstrip('+')
        subjects.append(document.lookup(kind, name, directive.line))
    return subjects


def run_directive(document, directive, horizon=None, seed=0):
    """Run one directive, recording rather than raising any failure.

    The directive's own horizon and seed take precedence over the ones
    given here.

    Returns:
        A ReportRecord.

    """
    if directive.horizon is not None:
        horizon = directive.horizon
    elif horizon is None:
        horizon = config.default_horizon()
    if directive.seed is not None:
        seed = directive.seed
    record = ReportRecord(directive.id, directive.property,
                          directive.subjects, None, horizon=horizon,
                          seed=seed)
    start = perf_counter()
    try:
        report = CHECKS[directive.property](*_resolve(document, directive),
                                            horizon, seed)
    except HorizonExceeded as exc:
        logger.info('%s: %s', directive.id, exc)
        report = _leaf(directive.property, Verdict.inconclusive(
            horizon, str(exc)))
    except Exception as exc:
        logger.warning('%s failed: %s', directive.id, exc)
        logger.debug('traceback for %s', directive.id, exc_info=True)
        record.error = {'kind': exception_kind(exc), 'message': str(exc)}
        record.elapsed = perf_counter() - start
        return record
    record.status = report.status
    record.report = report.as_dict()
    record.elapsed = perf_counter() - start
    logger.debug('%s: %s in %.3fs', directive.id, record.label,
                 record.elapsed)
    return record


def _run_in_worker(text, index, horizon, seed):
    document = parse_session(text)
    return run_directive(document, document.directives[index], horizon,
                         seed)


def run_checks(document, parallelism=1, horizon=None, seed=0):
    """Run every directive of a session.

    Positional arguments:
        document -- a SessionDocument.

    Keyword arguments:
        parallelism -- the number of worker processes (default 1, run in
            this process). Workers re-read the session text, so results
            do not depend on the number of workers.
        horizon -- the horizon for directives that name none (default
            config.default_horizon()).
        seed -- the seed for directives that name none (default 0).

    Returns:
        A list of ReportRecord instances, in directive order.

    """
    directives = document.directives
    logger.info('running %d checks with %d worker(s)', len(directives),
                parallelism)
    if parallelism <= 1 or len(directives) <= 1:
        return [run_directive(document, d, horizon, seed)
                for d in directives]
    count = len(directives)
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_run_in_worker, [document.text] * count,
                             range(count), [horizon] * count,
                             [seed] * count))


def contradictions(records, expectations):
    """Compare records with a session's expectation block.

    Only a check expected Proven and found Refuted contradicts. Other
    mismatches, including errors, are logged as warnings.

    Returns:
        A list of (id, expected, found) for every contradiction. found
        is the record's status label.

    """
    found = []
    for record in records:
        expected = expectations.get(record.id)
        if expected is None:
            continue
        if expected == Status.PROVEN and record.status == Status.REFUTED:
            found.append((record.id, expected.label, record.label))
        elif expected != record.status:
            logger.warning('%s: expected %s, found %s', record.id,
                           expected.label, record.label)
    return found
