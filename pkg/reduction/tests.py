# reduction/tests.py

from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import FormatError
from core.formats import dump_graph, load_graph
from core.models import WeightedGraph
from core.paths import metric_of, shortest_paths
from gridtiling.exceptions import IndexOutOfRange
from gridtiling.generator import gen_gt
from gridtiling.models import GTAssignment, GTInstance
from gridtiling.solver import check_gt_assignment, solve_gt
from kcenter.models import CenterSet
from kcenter.solvers import cost

from .builder import build_reduction, closed_form_counts, element_lengths
from .exceptions import (
    CycleCenterCountMismatch,
    MissingYCenter,
    NoMatchingElement,
    NonEquidistantCycleCenters,
    StrayCenter,
)
from .formats import dump_labels, load_labels, load_reduction
from .models import LabelMap
from .translate import assignment_from_centers, centers_from_assignment, gap_witnesses


def single(pair=(1, 1), n=2):
    return GTInstance.from_lists(1, n, [[[pair]]])


def two_by_two(s11, s12, s21, s22, n=2):
    return GTInstance.from_lists(2, n, [[s11, s12], [s21, s22]])


ONES = GTAssignment.from_lists([[1, 1], [1, 1]])


# ============================
# CONSTRUCTION
# ============================
class BuildReductionTests(SimpleTestCase):

    def test_single_gadget_counts(self):
        inst = build_reduction(single())
        self.assertEqual(inst.graph.vertex_count, 73)
        self.assertEqual(inst.graph.edge_count, 76)
        self.assertEqual(inst.k, 5)
        self.assertEqual(inst.threshold, Fraction(8))

    def test_budget_grows_with_the_grid(self):
        gt = GTInstance.from_lists(3, 2, [[[(1, 1)]] * 3] * 3)
        self.assertEqual(build_reduction(gt).k, 45)

    def test_element_edge_lengths(self):
        self.assertEqual(
            element_lengths(2, (1, 2)),
            (Fraction(23, 3), Fraction(23, 3), Fraction(22, 3), Fraction(22, 3)),
        )
        inst = build_reduction(single((1, 2)))
        edges = {(u, v): length for u, v, length in inst.graph.edges}
        labels = inst.labels
        for q, position in zip(range(1, 5), (1, 18, 35, 52)):
            x, v = labels.x(q, 1, 1), labels.cycle_vertex(1, 1, position)
            self.assertEqual(edges[(min(x, v), max(x, v))], element_lengths(2, (1, 2))[q - 1])

    def test_edge_lengths(self):
        inst = build_reduction(two_by_two([(1, 1)], [(2, 1)], [(1, 2), (2, 2)], [(2, 2)]))
        labels = inst.labels
        edges = {(u, v): length for u, v, length in inst.graph.edges}
        ring = labels.cycle(2, 1)
        for p in range(len(ring)):
            u, v = ring[p], ring[(p + 1) % len(ring)]
            self.assertEqual(edges[(min(u, v), max(u, v))], 1)
        y = labels.y(2, 1)
        for position in (1, 18, 35, 52):
            v = labels.cycle_vertex(2, 1, position)
            self.assertEqual(edges[(min(y, v), max(y, v))], 9)
        path = labels.path_p(1, 1)
        self.assertEqual(len(path), 5)
        for u, v in zip(path, path[1:]):
            self.assertEqual(edges[(min(u, v), max(u, v))], Fraction(1, 4))

    def test_closed_form_counts(self):
        for kappa in (1, 2, 3):
            for n in (2, 3, 4):
                gt = gen_gt(kappa, n, set_size=2, planted=False, seed=kappa * 10 + n)
                inst = build_reduction(gt)
                self.assertEqual((inst.graph.vertex_count, inst.graph.edge_count), closed_form_counts(gt))
                self.assertLessEqual(inst.graph.edge_count, 3 * inst.graph.vertex_count - 6)

    def test_hub_to_connector_distance(self):
        inst = build_reduction(single())
        dist = shortest_paths(inst.graph, inst.labels.y(1, 1))
        self.assertEqual(dist[inst.labels.x(1, 1, 1)], Fraction(50, 3))

    def test_vertex_names(self):
        graph = build_reduction(single()).graph
        self.assertEqual(graph.label(0), 'O1.1:1')
        self.assertEqual(graph.label(68), 'x1.1.1')
        self.assertEqual(graph.label(72), 'y1.1')

    def test_path_endpoints(self):
        labels = LabelMap.standard(2, 2)
        self.assertEqual(labels.path_p(1, 1)[0], labels.x(2, 1, 1))
        self.assertEqual(labels.path_p(1, 1)[-1], labels.x(4, 1, 2))
        self.assertEqual(labels.path_pprime(1, 2)[0], labels.x(3, 1, 2))
        self.assertEqual(labels.path_pprime(1, 2)[-1], labels.x(1, 2, 2))
        self.assertEqual(labels.cycle_vertex(1, 1, 69), labels.cycle_vertex(1, 1, 1))


# ============================
# TRANSLATION
# ============================
class CentersFromAssignmentTests(SimpleTestCase):

    def test_first_element(self):
        inst = build_reduction(single())
        centers = centers_from_assignment(inst, GTAssignment.from_lists([[1]]))
        self.assertEqual(centers.ids(), [0, 17, 34, 51, 72])

    def test_size(self):
        gt = gen_gt(3, 2, set_size=2, planted=True, seed=4)
        inst = build_reduction(gt)
        self.assertEqual(len(centers_from_assignment(inst, solve_gt(gt))), 45)

    def test_bad_tau(self):
        inst = build_reduction(single())
        with self.assertRaises(IndexOutOfRange):
            centers_from_assignment(inst, GTAssignment.from_lists([[2]]))

    def test_forward_cost_bound(self):
        for seed in (1, 2):
            gt = gen_gt(2, 2, set_size=2, planted=True, seed=seed)
            inst = build_reduction(gt)
            assignment = solve_gt(gt)
            self.assertTrue(check_gt_assignment(gt, assignment))
            metric = metric_of(inst.graph)
            self.assertLessEqual(cost(metric, centers_from_assignment(inst, assignment)), inst.threshold)


class AssignmentFromCentersTests(SimpleTestCase):

    def setUp(self):
        self.gt = two_by_two([(1, 1), (2, 2)], [(1, 2)], [(2, 1)], [(2, 2), (1, 1)])
        self.inst = build_reduction(self.gt)
        self.centers = set(centers_from_assignment(self.inst, ONES).centers)

    def test_round_trip(self):
        for seed in range(6):
            gt = gen_gt(2, 3, set_size=3, planted=True, seed=seed)
            inst = build_reduction(gt)
            assignment = solve_gt(gt)
            recovered = assignment_from_centers(inst, centers_from_assignment(inst, assignment))
            self.assertEqual(recovered, assignment)
            self.assertTrue(check_gt_assignment(gt, recovered))

    def test_missing_y(self):
        centers = self.centers - {self.inst.labels.y(1, 1)}
        with self.assertRaises(MissingYCenter) as raised:
            assignment_from_centers(self.inst, CenterSet.of(centers))
        self.assertEqual(raised.exception.cell, (1, 1))

    def test_five_and_three(self):
        labels = self.inst.labels
        centers = (self.centers - {labels.cycle_vertex(1, 2, 1)}) | {labels.cycle_vertex(1, 1, 2)}
        with self.assertRaises(CycleCenterCountMismatch):
            assignment_from_centers(self.inst, CenterSet.of(centers))

    def test_uneven_spacing(self):
        labels = self.inst.labels
        centers = (self.centers - {labels.cycle_vertex(2, 2, 18)}) | {labels.cycle_vertex(2, 2, 19)}
        with self.assertRaises(NonEquidistantCycleCenters) as raised:
            assignment_from_centers(self.inst, CenterSet.of(centers))
        self.assertEqual(raised.exception.cell, (2, 2))

    def test_no_matching_element(self):
        labels = self.inst.labels
        shifted = {labels.cycle_vertex(1, 2, p) for p in (2, 19, 36, 53)}
        original = {labels.cycle_vertex(1, 2, p) for p in (1, 18, 35, 52)}
        with self.assertRaises(NoMatchingElement):
            assignment_from_centers(self.inst, CenterSet.of((self.centers - original) | shifted))

    def test_second_element_is_fine(self):
        labels = self.inst.labels
        shifted = {labels.cycle_vertex(1, 1, p) for p in (2, 19, 36, 53)}
        original = {labels.cycle_vertex(1, 1, p) for p in (1, 18, 35, 52)}
        recovered = assignment_from_centers(self.inst, CenterSet.of((self.centers - original) | shifted))
        self.assertEqual(recovered.tau(1, 1), 2)

    def test_stray_center(self):
        centers = self.centers | {self.inst.labels.x(1, 2, 1)}
        with self.assertRaises(StrayCenter) as raised:
            assignment_from_centers(self.inst, CenterSet.of(centers))
        self.assertEqual(raised.exception.cell, (2, 1))


class GapWitnessTests(SimpleTestCase):

    def test_broken_row(self):
        gt = two_by_two([(1, 2)], [(1, 1)], [(2, 2)], [(2, 2)])
        inst = build_reduction(gt)
        witnesses = gap_witnesses(inst, metric_of(inst.graph), ONES)
        self.assertEqual(len(witnesses), 1)
        witness = witnesses[0]
        self.assertEqual((witness.direction, witness.cell, witness.neighbour), ('row', (1, 1), (1, 2)))
        self.assertGreaterEqual(witness.distance, 16 + Fraction(1, 3))
        self.assertEqual(witness.uncovered, (inst.labels.path_p(1, 1)[2],))

    def test_broken_column(self):
        gt = two_by_two([(2, 1)], [(2, 2)], [(1, 1)], [(2, 2)])
        inst = build_reduction(gt)
        witnesses = gap_witnesses(inst, metric_of(inst.graph), ONES)
        self.assertEqual([(w.direction, w.cell) for w in witnesses], [('column', (1, 1))])
        self.assertTrue(witnesses[0].uncovered)

    def test_consistent_picks_have_none(self):
        gt = two_by_two([(1, 1)], [(1, 2)], [(2, 1)], [(2, 2)])
        inst = build_reduction(gt)
        self.assertEqual(gap_witnesses(inst, metric_of(inst.graph), ONES), [])


# ============================
# SIDECAR FORMAT
# ============================
class LabelFormatTests(SimpleTestCase):

    def setUp(self):
        self.inst = build_reduction(two_by_two([(1, 1), (2, 2)], [(1, 2)], [(2, 1)], [(2, 2)]))

    def test_layout(self):
        text = dump_labels(self.inst.labels)
        lines = text.splitlines()
        self.assertEqual(lines[0], f"labels 2 2 {self.inst.graph.vertex_count}")
        self.assertEqual(lines[1], "role 0 cycle 1 1 1")
        self.assertIn(f"role {self.inst.labels.y(1, 1)} y 1 1", lines)
        self.assertIn(f"role {self.inst.labels.path_p(1, 1)[1]} pathP 1 1 1", lines)

    def test_reload(self):
        graph = load_graph(dump_graph(self.inst.graph))
        reloaded = load_reduction(graph, dump_labels(self.inst.labels))
        self.assertEqual(reloaded.source, self.inst.source)
        self.assertEqual(reloaded.graph, self.inst.graph)
        self.assertEqual(load_labels(dump_labels(self.inst.labels)), self.inst.labels)

    def test_tampered_graph_is_rejected(self):
        u, v, length = self.inst.graph.edges[0]
        edges = ((u, v, length + 1),) + self.inst.graph.edges[1:]
        tampered = WeightedGraph(self.inst.graph.vertex_count, edges, self.inst.graph.labels)
        with self.assertRaises(FormatError):
            load_reduction(tampered, dump_labels(self.inst.labels))

    def test_malformed_labels(self):
        text = dump_labels(self.inst.labels).replace("role 0 cycle 1 1 1", "role 0 cycle 1 1")
        with self.assertRaises(FormatError) as raised:
            load_labels(text)
        self.assertEqual(raised.exception.line, 2)
        with self.assertRaises(FormatError):
            load_labels("labels 1 2 73\n")
