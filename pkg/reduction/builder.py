# reduction/builder.py

import logging
from fractions import Fraction

from core.models import WeightedGraph
from gridtiling.exceptions import InvalidInstance
from gridtiling.models import GTInstance

from .models import LabelMap, ReductionInstance, cycle_length, quarter

logger = logging.getLogger(__name__)


def element_lengths(n, pair):
    """ Lengths of the x1..x4 edges for an element s = (a, b). """
    a, b = pair
    two_n_sq = Fraction(2 * n * n)
    return (
        two_n_sq - Fraction(a, n + 1),
        two_n_sq + Fraction(b, n + 1) - 1,
        two_n_sq + Fraction(a, n + 1) - 1,
        two_n_sq - Fraction(b, n + 1),
    )


def closed_form_counts(gt):
    """ (|V|, |E|) of G_I computed from the instance alone. """
    kappa, n = gt.kappa, gt.n
    sigma = sum(len(gt.cell(i, j)) for i, j in gt.cells())
    paths = 2 * kappa * (kappa - 1)
    vertices = kappa * kappa * (16 * n * n + 9) + paths * (n + 1)
    edges = kappa * kappa * (16 * n * n + 8) + 4 * sigma + paths * (n + 2)
    return vertices, edges


def build_reduction(gt):
    """
    Compiles a GT instance into G_I. Every gadget G_{i,j} is a unit cycle of
    length 16n^2+4 with the hub y_{i,j} wired to four equidistant positions and
    one rational edge per element and connector; connectors of neighbouring
    gadgets are joined by paths of n+2 edges of length 1/(n+2).
    """
    if not isinstance(gt, GTInstance):
        raise InvalidInstance(f"expected a GTInstance, got {type(gt).__name__}")
    kappa, n = gt.kappa, gt.n
    labels = LabelMap.standard(kappa, n)
    length = cycle_length(n)
    step = quarter(n)
    hub_length = Fraction(2 * n * n + 1)
    path_length = Fraction(1, n + 2)

    edges = []
    for i, j in labels.cells():
        ring = labels.cycle(i, j)
        edges.extend((ring[p], ring[(p + 1) % length], Fraction(1)) for p in range(length))

        y = labels.y(i, j)
        for offset in range(4):
            edges.append((y, labels.cycle_vertex(i, j, 1 + offset * step), hub_length))

        for tau, pair in enumerate(gt.cell(i, j), start=1):
            for q, element_length in enumerate(element_lengths(n, pair), start=1):
                target = labels.cycle_vertex(i, j, tau + (q - 1) * step)
                edges.append((labels.x(q, i, j), target, element_length))

    for i, j in labels.cells():
        if j < kappa:
            edges.extend(_path_edges(labels.path_p(i, j), path_length))
    for i, j in labels.cells():
        if i < kappa:
            edges.extend(_path_edges(labels.path_pprime(i, j), path_length))

    graph = WeightedGraph.from_edges(
        labels.vertex_count,
        edges,
        labels=[role.name for role in labels.roles],
    )

    assert (graph.vertex_count, graph.edge_count) == closed_form_counts(gt), "G_I size drifted from the closed form"
    assert graph.edge_count <= 3 * graph.vertex_count - 6, "G_I has too many edges to be planar"

    logger.info(
        f"build_reduction: kappa={kappa} n={n} -> {graph.vertex_count} vertices, {graph.edge_count} edges"
    )
    return ReductionInstance(
        graph=graph,
        labels=labels,
        k=5 * kappa * kappa,
        threshold=Fraction(2 * n * n),
        source=gt,
    )


def _path_edges(path, length):
    return [(path[t], path[t + 1], length) for t in range(len(path) - 1)]
