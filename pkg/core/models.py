# core/models.py

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import networkx as nx

from .exceptions import InvalidGraph, InvalidVertex


# ============================
# WEIGHTED GRAPH
# ============================
@dataclass(frozen=True)
class WeightedGraph:
    """
    Undirected graph on dense ids 0..vertex_count-1 with positive rational
    edge lengths. Each edge is stored once as (u, v, length) with u < v.
    """
    vertex_count: int
    edges: tuple
    labels: tuple = field(default=())

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidGraph("a graph needs at least one vertex")
        if self.labels and len(self.labels) != self.vertex_count:
            raise InvalidGraph(f"{len(self.labels)} labels for {self.vertex_count} vertices")

        seen = set()
        for u, v, length in self.edges:
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    raise InvalidVertex(w, self.vertex_count)
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if u > v:
                raise InvalidGraph(f"edge ({u}, {v}) must be stored with u < v")
            if (u, v) in seen:
                raise InvalidGraph(f"parallel edge ({u}, {v})")
            if not isinstance(length, Fraction) or length <= 0:
                raise InvalidGraph(f"edge ({u}, {v}) needs a positive rational length, got {length!r}")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, vertex_count, edges, labels=None):
        """ Accepts edges in either orientation and int/Fraction lengths. """
        normalized = tuple(
            (min(u, v), max(u, v), Fraction(length))
            for u, v, length in edges
        )
        labels = tuple(labels or ())
        if all(label is None for label in labels):
            labels = ()
        return cls(vertex_count, normalized, labels)

    @property
    def edge_count(self):
        return len(self.edges)

    def label(self, vertex):
        self.check_vertex(vertex)
        return self.labels[vertex] if self.labels else None

    def check_vertex(self, vertex):
        if not isinstance(vertex, int) or not 0 <= vertex < self.vertex_count:
            raise InvalidVertex(vertex, self.vertex_count)

    @cached_property
    def nx_graph(self):
        """ networkx view used for Dijkstra; edge attribute `length`. """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_weighted_edges_from(self.edges, weight='length')
        return graph


# ============================
# METRIC
# ============================
@dataclass(frozen=True)
class Metric:
    """ Finite metric as a full symmetric distance matrix of Fractions. """
    dist: tuple

    def __post_init__(self):
        size = len(self.dist)
        if size < 1:
            raise InvalidGraph("a metric needs at least one point")
        for u, row in enumerate(self.dist):
            if len(row) != size:
                raise InvalidGraph(f"row {u} has {len(row)} entries, expected {size}")
            if row[u] != 0:
                raise InvalidGraph(f"dist({u},{u}) = {row[u]} is not zero")
            for v in range(u):
                if row[v] != self.dist[v][u]:
                    raise InvalidGraph(f"dist({u},{v}) != dist({v},{u})")

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(Fraction(d) for d in row) for row in rows))

    @classmethod
    def from_points_l1(cls, points):
        """ Exact L1 metric of rational points (any dimension). """
        points = [tuple(Fraction(c) for c in p) for p in points]
        return cls(tuple(
            tuple(sum(abs(a - b) for a, b in zip(p, q)) for q in points)
            for p in points
        ))

    @property
    def point_count(self):
        return len(self.dist)

    def distance(self, u, v):
        return self.dist[u][v]

    def check_point(self, point):
        if not isinstance(point, int) or not 0 <= point < self.point_count:
            raise InvalidVertex(point, self.point_count)

    def ball(self, center, radius):
        """ B_center(radius) in ascending id order. """
        row = self.dist[center]
        return [u for u in range(self.point_count) if row[u] <= radius]

    def candidate_radii(self):
        """ 0 plus every distinct pairwise distance, ascending. """
        values = {Fraction(0)}
        for u, row in enumerate(self.dist):
            values.update(row[u + 1:])
        return sorted(values)

    def triangle_violations(self):
        violations = []
        size = self.point_count
        for u in range(size):
            row_u = self.dist[u]
            for v in range(size):
                via = row_u[v]
                row_v = self.dist[v]
                for w in range(size):
                    if row_u[w] > via + row_v[w]:
                        violations.append((u, v, w))
        return violations
