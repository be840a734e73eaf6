# structure/tests.py

from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from core.models import Metric, WeightedGraph
from core.paths import metric_of
from gridtiling.generator import gen_gt
from gridtiling.models import GTInstance
from reduction.builder import build_reduction

from .claims import check_gadget_distances, check_neighbourhood_radii, neighbourhood
from .doubling import (
    DOUBLING_BOUND,
    ball_cover_number,
    check_doubling,
    doubling_case_bound,
    doubling_samples,
)
from .exceptions import BallTooLarge, InvalidScale
from .hubs import CYCLE_STEPS, LARGE, PATH_STEPS, build_hub_set, path_step, validate_hub_set
from .models import PathDecomposition
from .pathdecomposition import build_path_decomposition, validate_path_decomposition


def single(n=2):
    return build_reduction(GTInstance.from_lists(1, n, [[[(1, 1)]]]))


def planted(kappa=2, n=2, seed=7):
    return build_reduction(gen_gt(kappa, n, set_size=2, planted=True, seed=seed))


def path_graph(count):
    return WeightedGraph.from_edges(count, [(v, v + 1, 1) for v in range(count - 1)])


# ============================
# PATH DECOMPOSITION
# ============================
class ValidatePathDecompositionTests(SimpleTestCase):

    def test_triangle_in_one_bag(self):
        triangle = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
        report = validate_path_decomposition(triangle, PathDecomposition((frozenset({0, 1, 2}),)))
        self.assertTrue(report.valid)
        self.assertEqual(report.width, 2)

    def test_path(self):
        bags = (frozenset({0, 1}), frozenset({1, 2}))
        report = validate_path_decomposition(path_graph(3), PathDecomposition(bags))
        self.assertTrue(report.valid)
        self.assertEqual(report.width, 1)

    def test_missing_edge(self):
        bags = (frozenset({0, 1}), frozenset({2}))
        report = validate_path_decomposition(path_graph(3), PathDecomposition(bags))
        self.assertFalse(report.valid)
        self.assertEqual(report.violations, ("edge {1,2} is in no bag",))

    def test_gap_in_occurrences(self):
        bags = (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2}))
        report = validate_path_decomposition(path_graph(3), PathDecomposition(bags))
        self.assertIn("bags holding vertex 0 are not consecutive", report.violations)


class BuildPathDecompositionTests(SimpleTestCase):

    def test_first_bag(self):
        inst = planted()
        labels = inst.labels
        first = build_path_decomposition(inst).bags[0]
        expected = {
            labels.y(1, 1), labels.x(1, 1, 1), labels.x(3, 1, 1),
            labels.x(2, 1, 1), labels.x(4, 1, 1), labels.x(4, 2, 1),
        }
        self.assertEqual(first, frozenset(expected))
        self.assertEqual(len(first), 6)

    def test_single_gadget(self):
        inst = single()
        bags = build_path_decomposition(inst).bags
        self.assertEqual(len(bags), 1 + 67)
        self.assertEqual(len(bags[0]), 5)

    def test_valid_and_narrow(self):
        for kappa in (1, 2, 3):
            for n in (2, 3):
                inst = planted(kappa, n, seed=kappa + n)
                report = validate_path_decomposition(inst.graph, build_path_decomposition(inst))
                self.assertEqual(report.violations, ())
                self.assertLessEqual(report.width, kappa + 6)


# ============================
# HUB SETS
# ============================
class BuildHubSetTests(SimpleTestCase):

    def test_large_scale_is_the_connectors(self):
        hubs = build_hub_set(single(), Fraction(35))
        self.assertEqual(len(hubs), 5)
        self.assertEqual(hubs.hubs, single().labels.connectors())

    def test_middle_scale_adds_every_fifth_cycle_vertex(self):
        inst = single()
        hubs = build_hub_set(inst, Fraction(5)).hubs
        cycle = set(hubs) - inst.labels.connectors()
        expected = {inst.labels.cycle_vertex(1, 1, pos) for pos in range(1, 69, 5)}
        self.assertEqual(cycle, expected)
        self.assertEqual(len(cycle), 14)

    def test_small_scale_step(self):
        self.assertEqual(path_step(2, Fraction(1, 2)), 2)
        self.assertEqual(path_step(2, Fraction(1, 5)), 1)
        inst = planted()
        hubs = build_hub_set(inst, Fraction(1, 2)).hubs
        path = inst.labels.path_p(1, 1)
        self.assertEqual([v in hubs for v in path], [True, False, True, False, True])

    def test_bad_scale(self):
        with self.assertRaises(InvalidScale):
            build_hub_set(single(), 0)
        with self.assertRaises(InvalidScale):
            build_hub_set(single(), 1, c=3)


class ValidateHubSetTests(SimpleTestCase):

    def test_every_vertex_a_hub(self):
        graph = path_graph(5)
        self.assertEqual(validate_hub_set(graph, 1, range(5), c=4).violations, ())

    def test_no_hubs(self):
        report = validate_hub_set(path_graph(5), 1, [], c=4)
        self.assertIn((0, 2), report.violations)
        self.assertEqual(report.max_hubs_in_ball, 0)

    def test_built_hub_sets_hit_every_long_path(self):
        inst = planted()
        scales = [Fraction(1, 5), Fraction(1, 2), Fraction(9, 10), Fraction(1), Fraction(3, 2),
                  Fraction(5), Fraction(33, 2), Fraction(20), Fraction(34), Fraction(35), Fraction(100)]
        for r in scales:
            with self.subTest(r=r):
                hub_set = build_hub_set(inst, r, c=4)
                report = validate_hub_set(inst.graph, r, hub_set.hubs, c=4)
                self.assertEqual(report.violations, ())
                if r > 34:
                    self.assertLessEqual(report.max_hubs_in_ball, 5 * inst.kappa ** 2)

    def test_threads_do_not_change_the_audit(self):
        inst = planted()
        hubs = build_hub_set(inst, Fraction(5)).hubs
        with override_settings(KCLAB={'THREADS': '1'}):
            serial = validate_hub_set(inst.graph, Fraction(5), hubs, c=4)
        with override_settings(KCLAB={'THREADS': '4'}):
            threaded = validate_hub_set(inst.graph, Fraction(5), hubs, c=4)
        self.assertEqual(serial, threaded)
        self.assertEqual(threaded.violations, ())

    def test_regime_boundaries(self):
        inst = planted()
        self.assertEqual(build_hub_set(inst, Fraction(9, 10)).regime, PATH_STEPS)
        self.assertEqual(build_hub_set(inst, Fraction(1)).regime, CYCLE_STEPS)
        self.assertEqual(build_hub_set(inst, Fraction(34)).regime, CYCLE_STEPS)
        self.assertEqual(build_hub_set(inst, Fraction(341, 10)).regime, LARGE)


# ============================
# DOUBLING
# ============================
class DoublingTests(SimpleTestCase):

    def test_case_bounds(self):
        self.assertEqual(doubling_case_bound(2, 53), 121)
        self.assertEqual(doubling_case_bound(2, 52), 324)
        self.assertEqual(doubling_case_bound(2, 9), 324)
        self.assertEqual(doubling_case_bound(2, 3), 159)
        self.assertEqual(doubling_case_bound(2, Fraction(5, 2)), 3)

    def test_single_point(self):
        metric = Metric.from_rows([[0]])
        self.assertEqual(ball_cover_number(metric, 0, 1).cover_count, 1)

    def test_uniform(self):
        metric = Metric.from_rows([[0 if u == v else 1 for v in range(6)] for u in range(6)])
        report = ball_cover_number(metric, 2, 1)
        self.assertEqual((report.ball_size, report.cover_count, report.exact), (6, 1, True))

    def test_line_needs_two(self):
        metric = Metric.from_points_l1([(x,) for x in range(9)])
        self.assertEqual(ball_cover_number(metric, 4, 2).cover_count, 2)
        self.assertEqual(ball_cover_number(metric, 0, 1).cover_count, 1)

    def test_cap(self):
        metric = Metric.from_points_l1([(x,) for x in range(9)])
        with self.assertRaises(BallTooLarge):
            ball_cover_number(metric, 4, 10, cap=5)
        self.assertFalse(ball_cover_number(metric, 4, 10, mode='greedy').exact)

    def test_greedy_never_beats_exact(self):
        metric = metric_of(single().graph)
        for vertex, r in doubling_samples(single())[:6]:
            exact = ball_cover_number(metric, vertex, r, 'exact', cap=80)
            greedy = ball_cover_number(metric, vertex, r, 'greedy')
            self.assertGreaterEqual(greedy.cover_count, exact.cover_count)

    def test_samples(self):
        inst = planted()
        samples = doubling_samples(inst)
        self.assertEqual(len(samples), 4 * 9)
        self.assertEqual(samples[0], (inst.labels.cycle_vertex(1, 1, 1), Fraction(1, 2)))

    def test_reports_stay_under_the_bound(self):
        inst = single()
        metric = metric_of(inst.graph)
        for report in check_doubling(inst, metric, cap=40):
            self.assertLessEqual(report.cover_count, DOUBLING_BOUND)
            self.assertIsNotNone(report.case_bound)


# ============================
# GADGET DISTANCES
# ============================
class ClaimTests(SimpleTestCase):

    def test_two_by_two(self):
        inst = planted()
        report = check_gadget_distances(inst, metric_of(inst.graph))
        self.assertEqual(report.violations, ())
        self.assertGreaterEqual(report.x_min, 27)
        self.assertLessEqual(report.x_max, 34)

    def test_n_three(self):
        inst = single(n=3)
        report = check_gadget_distances(inst, metric_of(inst.graph))
        self.assertEqual(report.violations, ())
        self.assertGreaterEqual(report.x_min, 62)
        self.assertLessEqual(report.x_max, 74)

    def test_hub_is_isolated(self):
        inst = single()
        self.assertEqual(check_gadget_distances(inst, metric_of(inst.graph)).y_min, 9)

    def test_neighbourhood_radii(self):
        inst = build_reduction(gen_gt(3, 2, set_size=2, planted=True, seed=2))
        metric = metric_of(inst.graph)
        for a in (0, 1):
            report = check_neighbourhood_radii(inst, metric, 2, 2, a)
            self.assertEqual(report.violations, ())
        self.assertIsNone(check_neighbourhood_radii(inst, metric, 2, 2, 2).inradius)

    def test_neighbourhood_members(self):
        inst = planted()
        members = neighbourhood(inst, 1, 1, 0)
        labels = inst.labels
        self.assertIn(labels.x(4, 1, 2), members)
        self.assertIn(labels.x(1, 2, 1), members)
        self.assertNotIn(labels.y(1, 2), members)
