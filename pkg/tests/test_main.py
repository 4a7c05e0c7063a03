import io
import json
import os
import sys
import tempfile
import unittest

from shv.__main__ import EXIT_INPUT, EXIT_OK, main
from shv.logger import INFO, log

CLOSED_UNIT = {'summands': [{'lo': '0', 'lo_closed': True, 'hi': '1', 'hi_closed': True}]}


class TestMain(unittest.TestCase):

    def setUp(self) -> None:
        self.records = io.StringIO()
        self.output = io.StringIO()
        log.redirect(self.records, self.output)
        self.workdir = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        log.redirect(sys.stderr, sys.stdout)
        log.set_verbosity(INFO)
        self.workdir.cleanup()

    def write(self, name: str, document: object) -> str:
        path = os.path.join(self.workdir.name, name)
        with open(path, 'w') as fp:
            fp.write(document if isinstance(document, str) else json.dumps(document))
        return path

    def run_json(self, *argv: str) -> object:
        self.assertEqual(main([*argv, '--json']), EXIT_OK, self.records.getvalue())
        return json.loads(self.output.getvalue())

    def test_cohomology(self) -> None:
        self.assertEqual(self.run_json('cohomology', '--input', self.write('f.json', CLOSED_UNIT)), {'0': 1})

    def test_microsupport(self) -> None:
        path = self.write('f.json', {'summands': [{'lo': '0', 'lo_closed': True, 'hi': '1'}]})
        found = self.run_json('ss', '--input', path)
        self.assertEqual([(c['base'], c['sign']) for c in found], [('0', '+'), ('1', '+')])

    def test_decompose(self) -> None:
        rep = {'kind': 'line', 'points': ['0', '1'], 'spaces': {'stalks': [1, 1], 'arcs': [0, 1, 0]},
               'arrows': [[], [['1']], [['1']], []]}
        found = self.run_json('decompose', '--input', self.write('rep.json', rep))
        self.assertEqual(found['summands'][0]['lo'], '0')
        self.assertTrue(found['summands'][0]['lo_closed'] and found['summands'][0]['hi_closed'])

    def test_hom(self) -> None:
        a = self.write('a.json', CLOSED_UNIT)
        self.assertEqual(self.run_json('hom', '--input', a, '--input', a), 1)

    def test_twist(self) -> None:
        path = self.write('k.json', {'local': [{'alpha': '1'}]})
        found = self.run_json('twist', '--input', path, '--lambda', '2')
        self.assertEqual(found, {'wrapped': [], 'local': [{'alpha': '2', 'r': 1, 'deg': 0, 'mult': 1}]})

    def test_twist_along_a_path(self) -> None:
        sheaf = self.write('k.json', {'local': [{'alpha': '1'}]})
        loop = self.write('loop.json', [{'component': 0}, {'component': 1}])
        self.assertEqual(self.run_json('twist', '--input', sheaf, '--lambda', '2', '--path', loop), '2')
        back = self.write('back.json', [{'component': 0, 'sign': -1}])
        self.output.truncate(0)
        self.output.seek(0)
        self.assertEqual(self.run_json('twist', '--input', sheaf, '--lambda', '2', '--path', back), '1/2')

    def test_twist_path_errors(self) -> None:
        sheaf = self.write('k.json', {'local': [{'alpha': '1'}]})
        for name, steps in (('sign', [{'component': 0, 'sign': 2}]), ('component', [{'component': 2}]),
                            ('summand', [{'component': 0, 'summand': 1}])):
            with self.subTest(problem=name):
                path = self.write(f'{name}.json', steps)
                self.assertEqual(main(['twist', '--input', sheaf, '--path', path]), EXIT_INPUT)

    def test_invariant(self) -> None:
        path = self.write('l.json', {'local': [{'alpha': '2', 'r': 3}]})
        self.assertEqual(self.run_json('invariant', '--input', path, '--alpha', '2', '--r', '3'), 1)

    def test_linked(self) -> None:
        path = self.write('f.json', CLOSED_UNIT)
        found = self.run_json('linked', '--input', path, '--covector', '0:+', '--covector', '1:-')
        self.assertEqual(found, {'linked': True, 'criterion': True, 'shift_difference': '0'})

    def test_verify(self) -> None:
        self.assertEqual(main(['verify-lemmas', '--suite', 'microsupport', '--grid-size', '1']), EXIT_OK)
        self.assertIn('microsupport: pass', self.output.getvalue())

    def test_text_output(self) -> None:
        self.assertEqual(main(['cohomology', '--input', self.write('f.json', CLOSED_UNIT)]), EXIT_OK)
        self.assertEqual(self.output.getvalue(), 'H^0 = 1\n')

    def test_bad_inputs(self) -> None:
        cases = [
            ['cohomology', '--input', self.write('broken.json', '{"summands": [')],
            ['cohomology', '--input', self.write('invalid.json', {'summands': [{'mult': 0}]})],
            ['cohomology', '--input', os.path.join(self.workdir.name, 'missing.json')],
            ['cohomology'],
            ['invariant', '--input', self.write('line.json', CLOSED_UNIT)],
            ['linked', '--input', self.write('f.json', CLOSED_UNIT), '--covector', '0:+'],
        ]
        for argv in cases:
            with self.subTest(argv=argv):
                self.assertEqual(main(argv), EXIT_INPUT)
        self.assertEqual(self.output.getvalue(), '')

    def test_bad_arguments(self) -> None:
        with self.assertRaises(SystemExit) as ctx:
            main(['linked', '--covector', '0:x'])
        self.assertEqual(ctx.exception.code, 2)


if __name__ == '__main__':
    unittest.main()
