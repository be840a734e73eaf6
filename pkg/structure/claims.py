# structure/claims.py

import itertools
import logging
from fractions import Fraction

from .models import ClaimReport, RadiiReport

logger = logging.getLogger(__name__)


def check_gadget_distances(inst, metric):
    """
    Inside every gadget the four connectors are pairwise between 7n^2-1 and
    8n^2+2 apart, and y_{i,j} is more than 2n^2 from every other vertex.
    """
    labels, n = inst.labels, inst.n
    low, high = Fraction(7 * n * n - 1), Fraction(8 * n * n + 2)
    violations = []
    x_values = []
    y_values = []

    for i, j in labels.cells():
        connectors = [labels.x(q, i, j) for q in range(1, 5)]
        for (q, u), (q2, v) in itertools.combinations(enumerate(connectors, start=1), 2):
            d = metric.distance(u, v)
            x_values.append(d)
            if not low <= d <= high:
                violations.append(f"dist(x{q}_{i},{j}, x{q2}_{i},{j}) = {d} outside [{low}, {high}]")

        y = labels.y(i, j)
        nearest = min(metric.distance(y, v) for v in range(metric.point_count) if v != y)
        y_values.append(nearest)
        if nearest <= inst.threshold:
            violations.append(f"y_{i},{j} is within {nearest} of another vertex")

    report = ClaimReport(
        x_min=min(x_values), x_max=max(x_values), y_min=min(y_values), violations=tuple(violations)
    )
    logger.info(f"check_gadget_distances: x in [{report.x_min}, {report.x_max}], y >= {report.y_min}")
    return report


def neighbourhood(inst, i, j, a):
    """
    V_{i,j}(a): the gadgets within grid L1 distance a of (i, j), every
    connecting path with an end in one of them, and the far ends of those paths.
    """
    labels = inst.labels
    inside = {cell for cell in labels.cells() if abs(cell[0] - i) + abs(cell[1] - j) <= a}
    members = set()
    for cell in inside:
        members |= labels.gadget_vertices(*cell)
    for row, col in labels.cells():
        if col < labels.kappa and ({(row, col), (row, col + 1)} & inside):
            members.update(labels.path_p(row, col))
        if row < labels.kappa and ({(row, col), (row + 1, col)} & inside):
            members.update(labels.path_pprime(row, col))
    return frozenset(members)


def check_neighbourhood_radii(inst, metric, i, j, a):
    """
    Circumradius (farthest member) and inradius (nearest non-member) of
    V_{i,j}(a), both seen from y_{i,j}, against (8n^2+3)a + 4n^2 + 2 and
    7n^2 a + 6n^2.
    """
    n = inst.n
    members = neighbourhood(inst, i, j, a)
    y = inst.labels.y(i, j)
    row = metric.dist[y]
    circumradius = max(row[v] for v in members)
    outside = [row[v] for v in range(metric.point_count) if v not in members]
    inradius = min(outside) if outside else None

    circumradius_bound = Fraction((8 * n * n + 3) * a + 4 * n * n + 2)
    inradius_bound = Fraction(7 * n * n * a + 6 * n * n)
    violations = []
    if not circumradius < circumradius_bound:
        violations.append(f"circumradius {circumradius} >= {circumradius_bound}")
    if inradius is not None and not inradius > inradius_bound:
        violations.append(f"inradius {inradius} <= {inradius_bound}")
    return RadiiReport(
        cell=(i, j),
        a=a,
        circumradius=circumradius,
        inradius=inradius,
        circumradius_bound=circumradius_bound,
        inradius_bound=inradius_bound,
        violations=tuple(violations),
    )
