# cli/tests.py

import os
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.formats import dump_graph
from core.models import WeightedGraph
from gridtiling.curated import CURATED_UNSAT
from gridtiling.formats import dump_gt, load_gt
from gridtiling.generator import gen_gt
from reduction.builder import build_reduction
from structure.doubling import doubling_samples

from .base import PROPERTY_VIOLATION, LabCommand
from .checks import CheckResult
from .serializers import RationalField, SolveSerializer


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)

    def path(self, name, text=None):
        path = os.path.join(self._tmp.name, name)
        if text is not None:
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(text)
        return path

    def call(self, *args):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO())
        return out.getvalue()

    def fails(self, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as raised:
            call_command(*args, stdout=out, stderr=StringIO())
        return raised.exception.returncode, out.getvalue()

    def reduce(self, gt, prefix='red'):
        graph, labels = self.path(f'{prefix}-graph.txt'), self.path(f'{prefix}-labels.txt')
        source = self.path(f'{prefix}-gt.txt', dump_gt(gt))
        self.call('reduce', source, '--graph-out', graph, '--labels-out', labels)
        return graph, labels


def line_graph(count):
    return WeightedGraph.from_edges(count, [(v, v + 1, 1) for v in range(count - 1)])


# ============================
# OPTION VALIDATION
# ============================
class SerializerTests(SimpleTestCase):

    def test_rational_field_is_exact(self):
        field = RationalField()
        self.assertEqual(str(field.to_internal_value("0.1")), "1/10")
        self.assertEqual(field.to_representation(field.to_internal_value("6/4")), "3/2")

    def test_epas_needs_positive_epsilon(self):
        data = {'graph': 'g', 'algo': 'epas', 'k': 2, 'epsilon': '0'}
        self.assertFalse(SolveSerializer(data=data).is_valid())
        data['epsilon'] = '0.5'
        self.assertTrue(SolveSerializer(data=data).is_valid())

    def test_radius_only_for_exact(self):
        serializer = SolveSerializer(data={'graph': 'g', 'algo': 'greedy', 'k': 2, 'radius': '1'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('radius', serializer.errors)

    def test_check_line(self):
        self.assertEqual(CheckResult('pathdec', True, 'width=8').line(), "CHECK pathdec PASS width=8")
        self.assertEqual(CheckResult('hubs', False).line(), "CHECK hubs FAIL")

    def test_failed_check_exits_with_two(self):
        out = StringIO()
        command = LabCommand(stdout=out, stderr=StringIO())
        with self.assertRaises(CommandError) as raised:
            command.finish([CheckResult('pathdec', True), CheckResult('hubs', False, 'violations=3')])
        self.assertEqual(raised.exception.returncode, PROPERTY_VIOLATION)
        self.assertEqual(out.getvalue().splitlines(), ["CHECK pathdec PASS", "CHECK hubs FAIL violations=3"])

    def test_passing_checks_return_normally(self):
        out = StringIO()
        LabCommand(stdout=out, stderr=StringIO()).finish([CheckResult('claims-x', True)])
        self.assertEqual(out.getvalue().strip(), "CHECK claims-x PASS")


# ============================
# GENERATION AND REDUCTION
# ============================
class GenGTCommandTests(CommandTestCase):

    def test_stdout_matches_generator(self):
        text = self.call('gen_gt', '--kappa', '2', '--n', '3', '--set-size', '2', '--planted', '--seed', '5')
        self.assertEqual(load_gt(text), gen_gt(2, 3, 2, True, 5))

    def test_output_file_is_byte_identical(self):
        first, second = self.path('a.txt'), self.path('b.txt')
        for target in (first, second):
            self.call('gen_gt', '--kappa', '2', '--n', '2', '--set-size', '2', '--seed', '9', '--output', target)
        with open(first) as a, open(second) as b:
            self.assertEqual(a.read(), b.read())

    def test_set_size_too_large(self):
        code, _ = self.fails('gen_gt', '--kappa', '1', '--n', '2', '--set-size', '5', '--seed', '1')
        self.assertEqual(code, 1)

    def test_unknown_flag(self):
        code, _ = self.fails('gen_gt', '--kappa', '1', '--n', '2', '--set-size', '1', '--seed', '1', '--bogus')
        self.assertEqual(code, 1)


class ReduceCommandTests(CommandTestCase):

    def test_single_gadget(self):
        gt = load_gt("gt 1 2\nset 1 1 : 1,1\n")
        out = self.call('reduce', self.path('gt.txt', dump_gt(gt)), '--graph-out', self.path('g.txt'),
                        '--labels-out', self.path('l.txt'))
        self.assertEqual(out.strip(), "REDUCED vertices=73 edges=76 k=5 threshold=8/1")
        with open(self.path('l.txt')) as handle:
            self.assertEqual(handle.readline().strip(), "labels 1 2 73")

    def test_malformed_gt(self):
        code, _ = self.fails('reduce', self.path('gt.txt', "gt 2\n"), '--graph-out', self.path('g.txt'),
                             '--labels-out', self.path('l.txt'))
        self.assertEqual(code, 1)

    def test_missing_file(self):
        code, _ = self.fails('reduce', self.path('nope.txt'), '--graph-out', self.path('g.txt'),
                             '--labels-out', self.path('l.txt'))
        self.assertEqual(code, 1)


# ============================
# SOLVING
# ============================
class SolveCommandTests(CommandTestCase):

    def setUp(self):
        super().setUp()
        self.graph = self.path('line.txt', dump_graph(line_graph(4)))

    def test_exact(self):
        out = self.call('solve', self.graph, '--algo', 'exact', '--k', '2')
        self.assertEqual(out.strip(), "OPTIMAL cost=1/1 centers=1,2")

    def test_greedy(self):
        out = self.call('solve', self.graph, '--algo', 'greedy', '--k', '2')
        self.assertEqual(out.strip(), "SAT cost=1/1 centers=0,3")

    def test_epas(self):
        out = self.call('solve', self.graph, '--algo', 'epas', '--k', '2', '--epsilon', '1/2')
        self.assertTrue(out.startswith("SAT cost=1/1"))

    def test_radius(self):
        self.assertEqual(
            self.call('solve', self.graph, '--algo', 'exact', '--k', '2', '--radius', '0.5').strip(),
            "UNSAT radius=1/2",
        )
        self.assertTrue(self.call('solve', self.graph, '--algo', 'exact', '--k', '2', '--radius', '1').startswith("SAT"))

    def test_disconnected_graph(self):
        graph = self.path('split.txt', dump_graph(WeightedGraph.from_edges(3, [(0, 1, 1)])))
        code, _ = self.fails('solve', graph, '--algo', 'exact', '--k', '1')
        self.assertEqual(code, 1)

    def test_bad_choice(self):
        code, _ = self.fails('solve', self.graph, '--algo', 'quantum', '--k', '1')
        self.assertEqual(code, 1)

    def test_budget_exceeded(self):
        graph = self.path('long.txt', dump_graph(line_graph(80)))
        code, _ = self.fails('solve', graph, '--algo', 'epas', '--k', '2', '--epsilon', '1/1000')
        self.assertEqual(code, 1)


# ============================
# VERIFICATION
# ============================
class VerifyCommandTests(CommandTestCase):

    def test_claims(self):
        graph, labels = self.reduce(gen_gt(2, 2, 2, True, 3))
        lines = self.call('verify', graph, labels, '--check', 'claims').splitlines()
        self.assertEqual([line.split()[1] for line in lines], ['claims-x', 'claims-y', 'claims-radii'])
        self.assertTrue(all(line.split()[2] == 'PASS' for line in lines))

    def test_pathdec(self):
        graph, labels = self.reduce(gen_gt(3, 2, 2, True, 3))
        out = self.call('verify', graph, labels, '--check', 'pathdec')
        self.assertTrue(out.startswith("CHECK pathdec PASS width="))
        width = int(out.split('width=')[1].split()[0])
        self.assertLessEqual(width, 9)

    def test_hubs(self):
        graph, labels = self.reduce(load_gt("gt 1 2\nset 1 1 : 1,1\n"))
        out = self.call('verify', graph, labels, '--check', 'hubs', '--r', '35/1')
        self.assertTrue(out.startswith("CHECK hubs PASS r=35/1 c=4/1 regime=connectors hubs=5 violations=0"))

    def test_doubling(self):
        gt = gen_gt(2, 2, 2, True, 3)
        graph, labels = self.reduce(gt)
        lines = self.call('verify', graph, labels, '--check', 'doubling').splitlines()
        self.assertEqual(len(lines), len(doubling_samples(build_reduction(gt))))
        self.assertTrue(all(line.startswith("CHECK doubling PASS v=") for line in lines))

    def test_equivalence(self):
        graph, labels = self.reduce(load_gt("gt 1 2\nset 1 1 : 1,1\n"))
        out = self.call('verify', graph, labels, '--check', 'equivalence')
        self.assertEqual(out.strip(), "CHECK equivalence PASS sat=true")

    def test_hubs_need_a_scale(self):
        graph, labels = self.reduce(load_gt("gt 1 2\nset 1 1 : 1,1\n"))
        code, _ = self.fails('verify', graph, labels, '--check', 'hubs')
        self.assertEqual(code, 1)

    def test_labels_of_another_instance(self):
        graph, _ = self.reduce(load_gt("gt 1 2\nset 1 1 : 1,1\n"))
        _, labels = self.reduce(load_gt("gt 1 3\nset 1 1 : 1,1\n"), prefix="other")
        code, _ = self.fails('verify', graph, labels, '--check', 'claims')
        self.assertEqual(code, 1)


# ============================
# EQUIVALENCE
# ============================
class EquivalenceCommandTests(CommandTestCase):

    def test_planted(self):
        gt_file = self.path('gt.txt', dump_gt(gen_gt(2, 2, 2, True, 11)))
        self.assertEqual(self.call('equivalence', gt_file).strip(), "EQUIV OK sat=true")

    def test_curated_unsat(self):
        gt_file = self.path('gt.txt', dump_gt(CURATED_UNSAT[0]))
        self.assertEqual(self.call('equivalence', gt_file).strip(), "EQUIV OK sat=false")

    def test_mismatch_exits_with_two(self):
        gt_file = self.path('gt.txt', dump_gt(gen_gt(1, 2, 1, True, 4)))
        with mock.patch(
            'cli.management.commands.equivalence.equivalence_verdicts', return_value=(True, False)
        ):
            code, out = self.fails('equivalence', gt_file)
        self.assertEqual(code, PROPERTY_VIOLATION)
        self.assertEqual(out.strip(), "EQUIV MISMATCH gt=true kcenter=false")

    def test_malformed(self):
        code, _ = self.fails('equivalence', self.path('gt.txt', "not a gt file\n"))
        self.assertEqual(code, 1)


class ReportCommandTests(CommandTestCase):

    def test_small_battery_passes(self):
        lines = self.call('report', '--seed', '7', '--instances', '1').splitlines()
        names = [line.split()[1] for line in lines]
        self.assertEqual(names[:3], ['equivalence', 'forward', 'gap'])
        self.assertEqual(names[-3:], ['pathdec-k1', 'pathdec-k2', 'pathdec-k3'])
        self.assertTrue(all(line.split()[2] == 'PASS' for line in lines))
