#!/usr/bin/env python3

"""Tests for sessions, reports and the command line of python-ghalg."""

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
from contextlib import redirect_stderr, redirect_stdout
import io
import os
from pathlib import Path
import tempfile
import unittest
from unittest import mock

# Local utility module.
from utils import corpus_session, golden_path

# Library to be tested.
from ghalg import config
from ghalg.cli import (ReportRecord, corpus_names, emit_report, main,
                       parse_session, read_report, run_checks)
from ghalg.cli.runner import contradictions, run_directive
from ghalg.errors import (AssociativityViolation, SessionParseError,
                          SessionResolutionError)
from ghalg.verdict import Status

SESSION = '''ghalg-session 1
# The residue field of the dual numbers.
ring GF(2)
algebra A2 = truncated x 2
module k over A2 = cyclic x
check totally-reflexive k horizon 1
check totally-reflexive k seed 3
check ig A2
check projective k
expect
  ig:A2 proven
  totally-reflexive:k refuted
  projective:k proven
end
'''

NONCOMMUTATIVE = '''ghalg-session 1
ring QQ
algebra k = base
algebra T basis 1 e a
  e*e = e
  e*a = a
end
morphism s : k -> T
end
module M over T = regular
check application s M
expect
  application:s,M proven
end
'''


def write_session(test, text):
    """Write a session to a temporary file removed after the test."""
    handle, name = tempfile.mkstemp(suffix='.gsession')
    with os.fdopen(handle, 'w', encoding='utf-8') as f:
        f.write(text)
    test.addCleanup(os.remove, name)
    return name


def stable(record):
    """The fields of a record that do not depend on the engine's
    internals."""
    return (record.id, record.property, tuple(record.subjects),
            record.status)


def run_main(argv):
    """Run the command line, returning (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(argv)
    return status, out.getvalue(), err.getvalue()


# Test cases.
class TestParse(unittest.TestCase):
    """Test reading session documents."""
    def test_corpus(self):
        """Test that every bundled session parses."""
        self.assertIn('converse_fro', corpus_names())
        for name in corpus_names():
            document = corpus_session(name)
            self.assertTrue(document.directives, name)
            ids = {d.id for d in document.directives}
            self.assertLessEqual(set(document.expectations), ids)

    def test_converse_fro(self):
        """Test the directives and expectations of one session."""
        document = corpus_session('converse_fro')
        self.assertEqual([d.id for d in document.directives],
                         ['adgp:phi', 'frobenius:phi', 'ig:R2', 'ig:A5'])
        self.assertEqual(document.expectations['frobenius:phi'],
                         Status.REFUTED)
        self.assertEqual(document.algebras['A5'].dim, 5)

    def test_options(self):
        """Test horizons, seeds and repeated checks."""
        document = parse_session(SESSION)
        first, second, third = document.directives
        self.assertEqual((first.id, first.horizon, first.seed),
                         ('totally-reflexive:k', 1, None))
        self.assertEqual((second.id, second.horizon, second.seed),
                         ('totally-reflexive:k#2', None, 3))
        self.assertEqual(third.subjects, ('A2',))
        self.assertEqual(document.modules['k'].dim, 1)

    def test_empty(self):
        """Test that a blank document has nothing to run."""
        document = parse_session('# nothing here\n')
        self.assertEqual(document.directives, [])
        self.assertEqual(run_checks(document), [])

    def test_header(self):
        """Test that the header is required and versioned."""
        with self.assertRaises(SessionParseError) as caught:
            parse_session('ring QQ\n')
        self.assertEqual(caught.exception.line, 1)
        with self.assertRaises(SessionParseError):
            parse_session('ghalg-session 99\n')

    def test_unknown_property(self):
        """Test that an unknown property is located by column."""
        text = ('ghalg-session 1\nring QQ\nalgebra Q = base\n'
                'check nonsense Q\n')
        with self.assertRaises(SessionParseError) as caught:
            parse_session(text)
        self.assertEqual((caught.exception.line, caught.exception.column),
                         (4, 7))

    def test_undefined_name(self):
        """Test that checks must name defined subjects."""
        text = 'ghalg-session 1\nring QQ\ncheck ig A\n'
        with self.assertRaises(SessionResolutionError) as caught:
            parse_session(text)
        self.assertEqual(caught.exception.name, 'A')
        self.assertEqual(caught.exception.line, 3)

    def test_subject_count(self):
        """Test that a check takes the right number of subjects."""
        text = ('ghalg-session 1\nring QQ\nalgebra Q = base\n'
                'module M over Q = regular\ncheck iso M\n')
        with self.assertRaises(SessionParseError):
            parse_session(text)

    def test_invalid_algebra(self):
        """Test that validation errors carry the defining line."""
        text = ('ghalg-session 1\nring QQ\nalgebra B basis 1 a b\n'
                '  a*a = b\n  a*b = a\nend\n')
        with self.assertRaises(AssociativityViolation) as caught:
            parse_session(text)
        self.assertTrue(str(caught.exception).startswith('line 3'))

    def test_unclosed_block(self):
        """Test that a block must be closed."""
        with self.assertRaises(SessionParseError):
            parse_session('ghalg-session 1\nring QQ\nalgebra B basis 1 a\n')


class TestRun(unittest.TestCase):
    """Test running the checks of a session."""
    def test_golden(self):
        """Test every bundled session against its recorded report."""
        for name in corpus_names():
            with self.subTest(session=name):
                document = corpus_session(name)
                records = run_checks(document)
                golden = read_report(golden_path(name).read_text(
                    encoding='utf-8'))
                self.assertEqual([stable(r) for r in records],
                                 [stable(r) for r in golden])
                self.assertEqual(contradictions(records,
                                                document.expectations), [])

    def test_directive_options(self):
        """Test that a directive's horizon wins over the run's."""
        document = parse_session(SESSION)
        records = run_checks(document, horizon=4)
        self.assertEqual([r.horizon for r in records], [1, 4, 4, 4])
        self.assertEqual([r.seed for r in records], [0, 3, 0, 0])
        self.assertEqual(records[0].status, Status.PROVEN)

    def test_contradiction(self):
        """Test that only Refuted where Proven was expected contradicts."""
        document = parse_session(SESSION)
        records = run_checks(document)
        with self.assertLogs('ghalg.cli.runner', 'WARNING') as logs:
            found = contradictions(records, document.expectations)
        self.assertEqual(found, [('projective:k', 'proven', 'refuted')])
        self.assertIn('totally-reflexive:k: expected refuted, found proven',
                      logs.output[0])

    def test_inconclusive_is_not_a_contradiction(self):
        """Test that an undecided check never contradicts."""
        record = ReportRecord('ig:A', 'ig', ('A',), Status.INCONCLUSIVE)
        self.assertEqual(contradictions([record], {'ig:A': Status.PROVEN}),
                         [])

    def test_error_record(self):
        """Test that a failing check is recorded with its error kind."""
        document = parse_session(NONCOMMUTATIVE)
        record = run_directive(document, document.directives[0], 1)
        self.assertIsNone(record.status)
        self.assertEqual(record.label, 'error')
        self.assertEqual(record.error['kind'], 'non-commutative')
        with self.assertLogs('ghalg.cli.runner', 'WARNING'):
            self.assertEqual(contradictions([record],
                                            document.expectations), [])

    def test_horizon_exceeded(self):
        """Test that running out of horizon is inconclusive, not an
        error."""
        text = ('ghalg-session 1\nring GF(3)\nalgebra S3 basis 1 x y\nend\n'
                'morphism id : S3 -> S3 = identity\n'
                'check semidualizing id horizon 2\n')
        record, = run_checks(parse_session(text))
        self.assertEqual(record.status, Status.INCONCLUSIVE)
        self.assertIsNone(record.error)

    def test_workers(self):
        """Test that worker processes give the same records."""
        document = corpus_session('z4_complex')
        serial = run_checks(document, 1, 3)
        parallel = run_checks(document, 2, 3)
        self.assertEqual(emit_report(serial, 'machine'),
                         emit_report(parallel, 'machine'))


class TestReport(unittest.TestCase):
    """Test rendering and reading reports."""
    def setUp(self):
        self.records = run_checks(corpus_session('z4_complex'), horizon=3)

    def test_human(self):
        """Test the indented human report."""
        lines = emit_report(self.records).splitlines()
        self.assertEqual(lines[0], 'acyclic:X PROVEN (horizon 3)')
        self.assertEqual(lines[1],
                         '    acyclic: proven [acyclic] {"degrees": [-2, 2]}')
        self.assertIn('tensor-acyclic:X,X REFUTED (horizon 3)', lines)

    def test_machine_round_trip(self):
        """Test that a machine report reads back and re-renders the same."""
        text = emit_report(self.records, 'machine')
        self.assertEqual(len(text.splitlines()), 2)
        back = read_report(text)
        self.assertEqual([(r.id, r.status, r.horizon) for r in back],
                         [(r.id, r.status, r.horizon) for r in self.records])
        self.assertEqual(emit_report(back, 'machine'), text)

    def test_deterministic(self):
        """Test that reruns without timings are byte-identical."""
        again = run_checks(corpus_session('z4_complex'), horizon=3)
        self.assertEqual(emit_report(again, 'machine'),
                         emit_report(self.records, 'machine'))

    def test_timings(self):
        """Test that elapsed times are only written on request."""
        self.assertNotIn('"elapsed"', emit_report(self.records, 'machine'))
        self.assertIn('"elapsed"', emit_report(self.records, 'machine',
                                               timings=True))

    def test_bad_records(self):
        """Test that unknown fields and formats are rejected."""
        with self.assertRaises(ValueError):
            ReportRecord.from_dict({'id': 'x', 'property': 'ig',
                                    'bogus': 1})
        with self.assertRaises(ValueError):
            read_report('{not json\n')
        with self.assertRaises(ValueError):
            emit_report(self.records, 'xml')


class TestMain(unittest.TestCase):
    """Test the command line."""
    def test_corpus_list(self):
        """Test listing the bundled sessions."""
        status, out, _ = run_main(['corpus', 'list'])
        self.assertEqual(status, 0)
        self.assertEqual(out.split(), corpus_names())

    def test_corpus_run(self):
        """Test running a bundled session in machine format."""
        status, out, _ = run_main(['corpus', 'run', 'z4_complex',
                                   '--horizon', '2', '--format', 'machine'])
        self.assertEqual(status, 0)
        self.assertEqual([r.status for r in read_report(out)],
                         [Status.PROVEN, Status.REFUTED])

    def test_validate(self):
        """Test validating a session file."""
        path = write_session(self, SESSION)
        status, out, _ = run_main(['validate', path])
        self.assertEqual(status, 0)
        self.assertIn('valid, 4 check(s)', out)

    def test_contradicted(self):
        """Test the exit status when an expectation is contradicted."""
        path = write_session(self, SESSION)
        status, _, err = run_main(['run', path])
        self.assertEqual(status, 1)
        self.assertIn('projective:k: expected proven, found refuted', err)

    def test_mismatch_without_contradiction(self):
        """Test that errors and unexpected proofs exit with status 0."""
        path = write_session(self, NONCOMMUTATIVE)
        self.assertEqual(run_main(['run', path])[0], 0)
        proven = SESSION.replace('check projective k\n', '').replace(
            '  projective:k proven\n', '')
        path = write_session(self, proven)
        self.assertEqual(run_main(['run', path])[0], 0)

    def test_invalid(self):
        """Test the exit status for malformed or missing input."""
        path = write_session(self, 'ghalg-session 1\ncheck ig\n')
        status, _, err = run_main(['validate', path])
        self.assertEqual(status, 2)
        self.assertIn('line 2', err)
        missing = str(Path(path).with_name('missing.gsession'))
        self.assertEqual(run_main(['run', missing])[0], 2)
        self.assertEqual(run_main(['corpus', 'run', 'no_such_session'])[0],
                         2)

    def test_bad_option(self):
        """Test that argument errors exit with status 2."""
        with self.assertRaises(SystemExit) as caught:
            run_main(['corpus', 'run', 'z4_complex', '--horizon', '0'])
        self.assertEqual(caught.exception.code, 2)


class TestConfig(unittest.TestCase):
    """Test the default horizon."""
    def test_default(self):
        """Test the built-in default."""
        with mock.patch.dict(os.environ, clear=False):
            os.environ.pop(config.HORIZON_VARIABLE, None)
            self.assertEqual(config.default_horizon(),
                             config.DEFAULT_HORIZON)

    def test_override(self):
        """Test the environment override."""
        with mock.patch.dict(os.environ, {config.HORIZON_VARIABLE: '3'}):
            self.assertEqual(config.default_horizon(), 3)
            record, = run_checks(parse_session(
                'ghalg-session 1\nring QQ\nalgebra Q = base\ncheck ig Q\n'))
            self.assertEqual(record.horizon, 3)

    def test_invalid_override(self):
        """Test that a bad override is logged and ignored."""
        with mock.patch.dict(os.environ, {config.HORIZON_VARIABLE: 'x'}):
            with self.assertLogs('ghalg.config', 'WARNING'):
                self.assertEqual(config.default_horizon(),
                                 config.DEFAULT_HORIZON)


if __name__ == '__main__':
    unittest.main()
