# core/tests.py

from fractions import Fraction
from unittest import mock

from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from .exceptions import DisconnectedGraph, FormatError, InvalidGraph, InvalidVertex, RationalParseError
from .conf import lab_setting
from .formats import dump_graph, load_graph
from .models import Metric, WeightedGraph
from .parallel import map_ordered
from .paths import metric_of, shortest_paths, shortest_paths_avoiding
from .rationals import INFINITY, format_rational, parse_length, rational


def cycle_graph(length):
    return WeightedGraph.from_edges(length, [(v, (v + 1) % length, 1) for v in range(length)])


@st.composite
def connected_graphs(draw, max_vertices=9):
    """ Random spanning tree plus extra edges, positive rational lengths. """
    count = draw(st.integers(min_value=1, max_value=max_vertices))
    lengths = st.fractions(min_value=Fraction(1, 7), max_value=5, max_denominator=7)
    edges = {}
    for v in range(1, count):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges[(parent, v)] = draw(lengths)
    extra = draw(st.lists(st.tuples(st.integers(0, count - 1), st.integers(0, count - 1)), max_size=12))
    for u, v in extra:
        if u != v:
            edges.setdefault((min(u, v), max(u, v)), draw(lengths))
    return WeightedGraph.from_edges(count, [(u, v, w) for (u, v), w in edges.items()])


# ============================
# RATIONALS
# ============================
class RationalTests(SimpleTestCase):

    def test_decimal_text_is_exact(self):
        self.assertEqual(rational("0.1"), Fraction(1, 10))
        self.assertEqual(rational(" 3/6 "), Fraction(1, 2))
        self.assertEqual(rational(7), Fraction(7))

    def test_floats_and_garbage_are_refused(self):
        with self.assertRaises(RationalParseError):
            rational(0.1)
        with self.assertRaises(RationalParseError):
            rational("a/b")
        with self.assertRaises(RationalParseError):
            rational("1/0")

    def test_format_always_has_denominator(self):
        self.assertEqual(format_rational(Fraction(2)), "2/1")
        self.assertEqual(format_rational(Fraction(23, 3)), "23/3")
        self.assertEqual(format_rational(INFINITY), "inf")

    def test_parse_length_requires_lowest_terms(self):
        self.assertEqual(parse_length("22/3"), Fraction(22, 3))
        with self.assertRaises(RationalParseError):
            parse_length("2/4")
        with self.assertRaises(RationalParseError):
            parse_length("3")

    def test_infinity_orders_above_everything(self):
        self.assertGreater(INFINITY, Fraction(10 ** 30))
        self.assertLess(Fraction(10 ** 30), INFINITY)
        self.assertEqual(INFINITY + 1, INFINITY)
        self.assertEqual(max(Fraction(3), INFINITY), INFINITY)

    @given(st.fractions(), st.fractions(), st.fractions())
    def test_addition_is_associative(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))


# ============================
# GRAPHS AND SHORTEST PATHS
# ============================
class WeightedGraphTests(SimpleTestCase):

    def test_rejects_self_loops_parallel_edges_and_bad_lengths(self):
        with self.assertRaises(InvalidGraph):
            WeightedGraph.from_edges(2, [(1, 1, 1)])
        with self.assertRaises(InvalidGraph):
            WeightedGraph.from_edges(2, [(0, 1, 1), (1, 0, 2)])
        with self.assertRaises(InvalidGraph):
            WeightedGraph.from_edges(2, [(0, 1, 0)])
        with self.assertRaises(InvalidVertex):
            WeightedGraph.from_edges(2, [(0, 2, 1)])

    def test_edges_are_stored_low_id_first(self):
        graph = WeightedGraph.from_edges(3, [(2, 0, Fraction(1, 2))])
        self.assertEqual(graph.edges, ((0, 2, Fraction(1, 2)),))


class ShortestPathTests(SimpleTestCase):

    def test_unit_path(self):
        graph = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
        self.assertEqual(shortest_paths(graph, 0), {0: 0, 1: 1, 2: 2})

    def test_unreachable_vertices_are_infinite(self):
        graph = WeightedGraph.from_edges(3, [(0, 1, Fraction(1, 3))])
        dist = shortest_paths(graph, 0)
        self.assertEqual(dist[1], Fraction(1, 3))
        self.assertIs(dist[2], INFINITY)

    def test_invalid_source(self):
        graph = cycle_graph(4)
        with self.assertRaises(InvalidVertex):
            shortest_paths(graph, 4)

    def test_blocked_vertices_force_detours(self):
        graph = cycle_graph(6)
        self.assertEqual(shortest_paths(graph, 0)[2], 2)
        self.assertEqual(shortest_paths_avoiding(graph, 0, {1})[2], 4)
        self.assertIs(shortest_paths_avoiding(graph, 0, {1, 5})[3], INFINITY)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs())
    def test_source_distance_is_zero(self, graph):
        for source in range(graph.vertex_count):
            self.assertEqual(shortest_paths(graph, source)[source], 0)


class MetricTests(SimpleTestCase):

    def test_single_vertex(self):
        metric = metric_of(WeightedGraph.from_edges(1, []))
        self.assertEqual(metric.dist, ((0,),))

    def test_unit_triangle(self):
        metric = metric_of(WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]))
        for u in range(3):
            for v in range(3):
                self.assertEqual(metric.distance(u, v), 0 if u == v else 1)

    def test_antipodal_on_even_cycle(self):
        metric = metric_of(cycle_graph(20))
        self.assertEqual(metric.distance(0, 10), 10)
        self.assertEqual(max(metric.dist[0]), 10)

    def test_disconnected_graph(self):
        with self.assertRaises(DisconnectedGraph):
            metric_of(WeightedGraph.from_edges(3, [(0, 1, 1)]))

    def test_ball_and_candidate_radii(self):
        metric = Metric.from_points_l1([(0,), (1,), (2,), (3,)])
        self.assertEqual(metric.ball(1, 1), [0, 1, 2])
        self.assertEqual(metric.candidate_radii(), [0, 1, 2, 3])

    def test_l1_points(self):
        metric = Metric.from_points_l1([(0, 0), (Fraction(1, 2), 2)])
        self.assertEqual(metric.distance(0, 1), Fraction(5, 2))

    @override_settings(DEBUG=True)
    def test_debug_audit_passes_real_metrics(self):
        self.assertEqual(metric_of(cycle_graph(6)).distance(0, 3), 3)

    @override_settings(DEBUG=True)
    def test_debug_audit_rejects_triangle_violations(self):
        with mock.patch.object(Metric, 'triangle_violations', return_value=[(0, 1, 2)]):
            with self.assertRaises(InvalidGraph):
                metric_of(cycle_graph(4))

    def test_audit_is_off_without_debug(self):
        with mock.patch.object(Metric, 'triangle_violations', return_value=[(0, 1, 2)]) as audit:
            metric_of(cycle_graph(4))
        audit.assert_not_called()

    def test_asymmetric_matrix_is_rejected(self):
        with self.assertRaises(InvalidGraph):
            Metric.from_rows([[0, 1], [2, 0]])

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs())
    def test_metric_laws_and_row_agreement(self, graph):
        metric = metric_of(graph)
        self.assertEqual(metric.triangle_violations(), [])
        for source in range(graph.vertex_count):
            row = shortest_paths(graph, source)
            self.assertEqual(tuple(row[v] for v in range(graph.vertex_count)), metric.dist[source])


# ============================
# TEXT FORMAT
# ============================
class GraphFormatTests(SimpleTestCase):

    def test_round_trip_is_bit_exact(self):
        graph = WeightedGraph.from_edges(
            3, [(0, 1, Fraction(23, 3)), (1, 2, Fraction(1, 4))], labels=['a', 'b', 'c'],
        )
        text = dump_graph(graph)
        self.assertEqual(text, "graph 3 2\nvertex 0 a\nvertex 1 b\nvertex 2 c\nedge 0 1 23/3\nedge 1 2 1/4\n")
        self.assertEqual(load_graph(text), graph)
        self.assertEqual(dump_graph(load_graph(text)), text)

    def test_unlabelled_vertices(self):
        graph = cycle_graph(3)
        self.assertIn("vertex 0 -", dump_graph(graph))
        self.assertEqual(load_graph(dump_graph(graph)), graph)

    def test_malformed_files_name_the_line(self):
        with self.assertRaises(FormatError):
            load_graph("")
        with self.assertRaises(FormatError) as ctx:
            load_graph("graph 2 1\nvertex 0 a\nvertex 1 b\nedge 0 1 2/4\n")
        self.assertEqual(ctx.exception.line, 4)
        with self.assertRaises(FormatError):
            load_graph("graph 2 1\nvertex 0 a\nvertex 1 b\nedge 0 0 1/1\n")


# ============================
# SETTINGS AND THREADS
# ============================
class LabSettingTests(SimpleTestCase):

    def test_defaults(self):
        self.assertEqual(lab_setting('EPAS_NET_CAP'), 64)
        self.assertEqual(lab_setting('HUB_C'), 4)

    @override_settings(KCLAB={'THREADS': '4', 'HUB_C': '9/2'})
    def test_overrides_are_typed(self):
        self.assertEqual(lab_setting('THREADS'), 4)
        self.assertEqual(lab_setting('HUB_C'), Fraction(9, 2))
        self.assertEqual(lab_setting('EXACT_BALL_CAP'), 200)

    @override_settings(KCLAB={'THREADS': 'abc'})
    def test_non_integer_threads(self):
        with self.assertRaises(ImproperlyConfigured):
            lab_setting('THREADS')

    @override_settings(KCLAB={'EPAS_NET_CAP': '0'})
    def test_non_positive_cap(self):
        with self.assertRaises(ImproperlyConfigured):
            lab_setting('EPAS_NET_CAP')

    @override_settings(KCLAB={'HUB_C': 'four'})
    def test_non_rational_constant(self):
        with self.assertRaises(ImproperlyConfigured):
            lab_setting('HUB_C')


class MapOrderedTests(SimpleTestCase):

    def test_threads_keep_input_order(self):
        items = list(range(40))
        self.assertEqual(map_ordered(lambda x: x * x, items, threads=4), [x * x for x in items])

    def test_metric_is_the_same_with_threads(self):
        graph = cycle_graph(15)
        with override_settings(KCLAB={'THREADS': '1'}):
            serial = metric_of(graph)
        with override_settings(KCLAB={'THREADS': '4'}):
            threaded = metric_of(graph)
        self.assertEqual(serial, threaded)
