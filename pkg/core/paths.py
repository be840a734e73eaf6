# core/paths.py

import logging
from fractions import Fraction

import networkx as nx
from django.conf import settings

from .exceptions import DisconnectedGraph, InvalidGraph
from .models import Metric
from .parallel import map_ordered
from .rationals import INFINITY

logger = logging.getLogger(__name__)

# Above this many points the DEBUG triangle audit is skipped.
TRIANGLE_AUDIT_LIMIT = 200


def shortest_paths(graph, source):
    """
    Exact single-source distances {vertex: Fraction}; vertices that cannot be
    reached map to INFINITY.
    """
    graph.check_vertex(source)
    reached = nx.single_source_dijkstra_path_length(graph.nx_graph, source, weight='length')
    return {
        v: Fraction(reached[v]) if v in reached else INFINITY
        for v in range(graph.vertex_count)
    }


def shortest_paths_avoiding(graph, source, blocked):
    """
    Distances from `source` in the graph with the `blocked` vertices deleted
    (source itself is never deleted). Unreachable or blocked vertices are INFINITY.
    """
    graph.check_vertex(source)
    blocked = set(blocked) - {source}
    view = nx.restricted_view(graph.nx_graph, blocked, [])
    reached = nx.single_source_dijkstra_path_length(view, source, weight='length')
    return {
        v: Fraction(reached[v]) if v in reached else INFINITY
        for v in range(graph.vertex_count)
    }


def metric_of(graph):
    """
    All-pairs shortest-path metric of a connected graph. With DEBUG on, small
    metrics are also audited against the triangle inequality.
    """
    if not nx.is_connected(graph.nx_graph):
        components = nx.number_connected_components(graph.nx_graph)
        raise DisconnectedGraph(f"graph has {components} connected components")

    def row(source):
        dist = shortest_paths(graph, source)
        return tuple(dist[v] for v in range(graph.vertex_count))

    logger.debug(f"metric_of: {graph.vertex_count} vertices, {graph.edge_count} edges")
    metric = Metric(tuple(map_ordered(row, range(graph.vertex_count))))
    if settings.configured and settings.DEBUG and metric.point_count <= TRIANGLE_AUDIT_LIMIT:
        broken = metric.triangle_violations()
        if broken:
            raise InvalidGraph(f"dist(u,w) > dist(u,v) + dist(v,w) at (u, v, w) = {broken[0]}")
    return metric
