# kcenter/tests.py

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from core.models import Metric, WeightedGraph
from core.paths import metric_of

from .epas import epas_doubling
from .exceptions import BudgetExceeded, EmptyCenterSet
from .generators import random_graph_metric, random_planar_metric
from .models import CenterSet, Net, Status
from .nets import aspect_ratio, check_net, greedy_net, net_ball_profile
from .setcover import cover_within_budget, greedy_cover, minimum_cover, reduce_dominated
from .solvers import cost, decide_cover, farthest_first, solve_bruteforce, solve_exact, uncovered


def line(count):
    return Metric.from_points_l1([(x,) for x in range(count)])


def uniform(count):
    return Metric.from_rows([[0 if u == v else 1 for v in range(count)] for u in range(count)])


def unit_cycle(length):
    return metric_of(WeightedGraph.from_edges(length, [(v, (v + 1) % length, 1) for v in range(length)]))


small_metrics = st.builds(
    random_graph_metric,
    points=st.integers(min_value=1, max_value=9),
    seed=st.integers(min_value=0, max_value=10 ** 6),
)


# ============================
# COST
# ============================
class CostTests(SimpleTestCase):

    def test_line_examples(self):
        metric = line(4)
        self.assertEqual(cost(metric, CenterSet.of(range(4))), 0)
        self.assertEqual(cost(metric, CenterSet.of([1])), 2)
        self.assertEqual(cost(metric, CenterSet.of([0, 3])), 1)

    def test_empty_center_set(self):
        with self.assertRaises(EmptyCenterSet):
            cost(line(3), CenterSet.of([]))

    def test_uncovered(self):
        self.assertEqual(uncovered(line(4), [0], Fraction(1)), [2, 3])
        self.assertEqual(uncovered(line(4), [0, 3], Fraction(1)), [])


# ============================
# SET COVER ENGINE
# ============================
class SetCoverTests(SimpleTestCase):

    def test_dominated_candidates_are_dropped(self):
        universe = frozenset({1, 2, 3})
        kept = reduce_dominated(universe, {0: {1}, 1: {1, 2}, 2: {1, 2}, 3: {3}, 4: {9}})
        self.assertEqual(sorted(kept), [1, 3])

    def test_minimum_beats_greedy(self):
        # greedy grabs the widest set first and then needs two more
        universe = frozenset(range(6))
        candidates = {0: {0, 1, 2}, 1: {3, 4, 5}, 2: {1, 2, 3, 4}, 3: {0}, 4: {5}}
        self.assertEqual(greedy_cover(universe, candidates), (0, 1, 2))
        self.assertEqual(minimum_cover(universe, candidates), (0, 1))

    def test_budget(self):
        universe = frozenset(range(4))
        candidates = {0: {0, 1}, 1: {2}, 2: {3}}
        self.assertIsNone(cover_within_budget(universe, candidates, 2))
        self.assertEqual(cover_within_budget(universe, candidates, 3), (0, 1, 2))

    def test_uncoverable_element(self):
        self.assertIsNone(cover_within_budget(frozenset({0, 1}), {0: {0}}, 5))
        self.assertIsNone(minimum_cover(frozenset({0, 1}), {0: {0}}))


# ============================
# EXACT SOLVERS
# ============================
class DecideCoverTests(SimpleTestCase):

    def test_cycle_of_twenty_radius_two(self):
        metric = unit_cycle(20)
        centers = decide_cover(metric, 4, Fraction(2))
        self.assertIsNotNone(centers)
        ids = centers.ids()
        self.assertEqual(len(ids), 4)
        gaps = [(ids[(t + 1) % 4] - ids[t]) % 20 for t in range(4)]
        self.assertEqual(gaps, [5, 5, 5, 5])

    def test_cycle_of_twenty_radius_one(self):
        self.assertIsNone(decide_cover(unit_cycle(20), 4, Fraction(1)))

    def test_every_point_at_radius_zero(self):
        metric = line(5)
        self.assertEqual(decide_cover(metric, 5, Fraction(0)).ids(), [0, 1, 2, 3, 4])
        self.assertIsNone(decide_cover(metric, 4, Fraction(0)))

    def test_zero_budget(self):
        self.assertIsNone(decide_cover(line(2), 0, Fraction(10)))

    @settings(max_examples=40, deadline=None)
    @given(small_metrics, st.integers(min_value=1, max_value=4))
    def test_matches_subset_enumeration(self, metric, k):
        optimum = solve_bruteforce(metric, k).cost
        for radius in metric.candidate_radii():
            found = decide_cover(metric, k, radius)
            self.assertEqual(found is not None, optimum <= radius)
            if found is not None:
                self.assertLessEqual(len(found), k)
                self.assertLessEqual(cost(metric, found), radius)


class SolveExactTests(SimpleTestCase):

    def test_line(self):
        outcome = solve_exact(line(4), 2)
        self.assertEqual(outcome.status, Status.OPTIMAL)
        self.assertEqual(outcome.cost, 1)

    def test_enough_centers_for_everyone(self):
        self.assertEqual(solve_exact(line(4), 4).cost, 0)
        self.assertEqual(solve_exact(line(4), 9).cost, 0)

    def test_outcome_line(self):
        self.assertEqual(solve_exact(line(4), 2).line(), "OPTIMAL cost=1/1 centers=1,2")

    @settings(max_examples=40, deadline=None)
    @given(small_metrics, st.integers(min_value=1, max_value=4))
    def test_optimal(self, metric, k):
        self.assertEqual(solve_exact(metric, k).cost, solve_bruteforce(metric, k).cost)


# ============================
# FARTHEST FIRST
# ============================
class FarthestFirstTests(SimpleTestCase):

    def test_line_trace(self):
        centers = farthest_first(line(4), 2)
        self.assertEqual(centers.ids(), [0, 3])
        self.assertEqual(cost(line(4), centers), 1)

    def test_uniform(self):
        for k in range(1, 5):
            self.assertEqual(cost(uniform(5), farthest_first(uniform(5), k)), 1)

    def test_all_points(self):
        self.assertEqual(cost(line(4), farthest_first(line(4), 4)), 0)

    def test_ties_go_to_smaller_id(self):
        self.assertEqual(farthest_first(uniform(4), 3).ids(), [0, 1, 2])

    @settings(max_examples=40, deadline=None)
    @given(small_metrics, st.integers(min_value=1, max_value=4))
    def test_two_approximation(self, metric, k):
        optimum = solve_exact(metric, k).cost
        self.assertLessEqual(cost(metric, farthest_first(metric, k)), 2 * optimum)


# ============================
# NETS
# ============================
class NetTests(SimpleTestCase):

    def test_small_delta_keeps_everything(self):
        self.assertEqual(greedy_net(line(4), Fraction(1, 2)).points, (0, 1, 2, 3))

    def test_line_unit_delta(self):
        self.assertEqual(greedy_net(line(4), 1).points, (0, 2))

    def test_single_point(self):
        self.assertEqual(greedy_net(line(1), 100).points, (0,))

    def test_check_net_reports_both_laws(self):
        bad = Net((0, 1), Fraction(1))
        violations = check_net(line(4), bad)
        self.assertTrue(any(v.startswith('cover') for v in violations))
        self.assertTrue(any(v.startswith('packing') for v in violations))

    def test_aspect_ratio(self):
        self.assertEqual(aspect_ratio(line(5), [0, 1, 4]), 4)
        self.assertEqual(aspect_ratio(line(5), [3]), 1)

    def test_ball_profile(self):
        metric = line(8)
        net = greedy_net(metric, 1)
        profile = net_ball_profile(metric, net, [0, 7], Fraction(3))
        self.assertEqual([(b.center, b.net_points) for b in profile], [(0, 2), (7, 2)])

    @settings(max_examples=40, deadline=None)
    @given(small_metrics, st.fractions(min_value=0, max_value=12, max_denominator=4))
    def test_net_laws(self, metric, delta):
        self.assertEqual(check_net(metric, greedy_net(metric, delta)), [])


# ============================
# EPAS
# ============================
class EpasTests(SimpleTestCase):

    def test_line(self):
        outcome = epas_doubling(line(4), 2, Fraction(1, 2))
        self.assertEqual(outcome.status, Status.SAT)
        self.assertLessEqual(outcome.cost, Fraction(3, 2))

    def test_tiny_epsilon_is_exact(self):
        self.assertEqual(epas_doubling(line(4), 2, Fraction(1, 100)).cost, 1)

    def test_single_point(self):
        self.assertEqual(epas_doubling(line(1), 1, Fraction(1)).cost, 0)

    def test_enough_centers_for_everyone(self):
        self.assertEqual(epas_doubling(line(3), 3, Fraction(1)).cost, 0)

    def test_budget_exceeded(self):
        with self.assertRaises(BudgetExceeded):
            epas_doubling(line(12), 2, Fraction(1, 100), net_cap=4)

    def test_collects_every_net_it_builds(self):
        nets = []
        outcome = epas_doubling(line(9), 2, Fraction(1, 2), nets=nets)
        self.assertTrue(nets)
        for net in nets:
            self.assertEqual(check_net(line(9), net), [])
        accepted = nets[-1]
        self.assertLessEqual(outcome.cost, (1 + Fraction(1, 2)) * accepted.delta * 4)
        self.assertTrue(set(outcome.centers.ids()) <= set(accepted.points))

    def test_no_nets_when_cost_zero(self):
        nets = []
        epas_doubling(line(3), 3, Fraction(1), nets=nets)
        self.assertEqual(nets, [])

    def test_logs_ball_profile(self):
        with self.assertLogs('kcenter.epas', level='INFO') as logs:
            epas_doubling(line(6), 2, Fraction(1, 2))
        self.assertIn('ball net points max=', logs.output[-1])
        self.assertIn('aspect max=', logs.output[-1])

    @settings(max_examples=30, deadline=None)
    @given(
        st.builds(random_planar_metric, points=st.integers(1, 8), seed=st.integers(0, 10 ** 6)),
        st.integers(min_value=1, max_value=3),
        st.sampled_from([Fraction(1, 4), Fraction(1, 2), Fraction(1)]),
    )
    def test_within_one_plus_epsilon(self, metric, k, epsilon):
        optimum = solve_exact(metric, k).cost
        nets = []
        self.assertLessEqual(epas_doubling(metric, k, epsilon, nets=nets).cost, (1 + epsilon) * optimum)
        for net in nets:
            self.assertEqual(check_net(metric, net), [])


# ============================
# GENERATORS
# ============================
class GeneratorTests(SimpleTestCase):

    def test_seeded(self):
        self.assertEqual(random_graph_metric(7, seed=3), random_graph_metric(7, seed=3))
        self.assertEqual(random_planar_metric(7, seed=3), random_planar_metric(7, seed=3))

    def test_planar_points_are_distinct(self):
        metric = random_planar_metric(10, seed=11)
        for u in range(10):
            for v in range(u + 1, 10):
                self.assertGreater(metric.distance(u, v), 0)

    def test_graph_metric_is_a_metric(self):
        self.assertEqual(random_graph_metric(8, seed=5).triangle_violations(), [])
