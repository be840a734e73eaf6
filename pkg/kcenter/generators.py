# kcenter/generators.py
#
# Seeded random metrics for the oracle and EPAS batteries.

from fractions import Fraction

import numpy as np

from core.models import Metric, WeightedGraph
from core.paths import metric_of


def random_graph_metric(points, seed, extra_edges=None, max_length=9):
    """
    Shortest-path metric of a random connected graph: a random spanning tree
    plus `extra_edges` chords, integer lengths in 1..max_length.
    """
    rng = np.random.default_rng(seed)
    if points < 1:
        raise ValueError(f"need at least one point, got {points}")
    order = rng.permutation(points)
    edges = {}
    for index in range(1, points):
        parent = order[rng.integers(0, index)]
        u, v = sorted((int(order[index]), int(parent)))
        edges[(u, v)] = Fraction(int(rng.integers(1, max_length + 1)))

    extra_edges = points // 2 if extra_edges is None else extra_edges
    for _ in range(extra_edges):
        u, v = (int(x) for x in rng.choice(points, size=2, replace=False)) if points > 1 else (0, 0)
        if u != v:
            edges.setdefault((min(u, v), max(u, v)), Fraction(int(rng.integers(1, max_length + 1))))

    graph = WeightedGraph.from_edges(points, [(u, v, length) for (u, v), length in sorted(edges.items())])
    return metric_of(graph)


def random_planar_metric(points, seed, side=None, denominators=(1, 2, 3)):
    """
    Exact L1 metric of `points` distinct rational points in the plane; the
    coordinates are grid cells of a side x side board scaled by a random
    denominator.
    """
    rng = np.random.default_rng(seed)
    side = side or max(2, 2 * points)
    cells = rng.choice(side * side, size=points, replace=False)
    scale = Fraction(1, int(rng.choice(denominators)))
    coordinates = [(int(cell) // side * scale, int(cell) % side * scale) for cell in cells]
    return Metric.from_points_l1(coordinates)
