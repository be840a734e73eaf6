# structure/pathdecomposition.py

import logging

from .models import PathDecomposition, PathDecompositionReport

logger = logging.getLogger(__name__)


def build_path_decomposition(inst):
    """
    Explicit path decomposition of G_I of width at most kappa + 6.

    Columns are swept left to right. Inside column j every gadget is entered
    through K_{i,j} = {y, x1, x3}_{i,j} + {x2_{i',j} : i' <= i} + {x4_{i',j} : i' >= i},
    its cycle is walked with K_{i,j} + {v_1, v_t, v_t+1}, and P'_{i,j} is walked
    down to the next row. At the bottom of the column the horizontal paths
    P_{i,j} are walked from row kappa back up to row 1.
    """
    labels = inst.labels
    kappa = labels.kappa
    length = labels.cycle_length

    def x2_upto(i, j):
        return {labels.x(2, row, j) for row in range(1, i + 1)}

    def x4_from(i, j):
        return {labels.x(4, row, j) for row in range(i, kappa + 1)}

    def gadget_bag(i, j):
        return {labels.y(i, j), labels.x(1, i, j), labels.x(3, i, j)} | x2_upto(i, j) | x4_from(i, j)

    def crossing_bag(i, j):
        return x2_upto(i, j) | x4_from(i, j + 1)

    def walk(base, path):
        return [base | {path[t - 1], path[t]} for t in range(1, len(path))]

    bags = []
    for j in range(1, kappa + 1):
        for i in range(1, kappa + 1):
            base = gadget_bag(i, j)
            bags.append(base)
            first = labels.cycle_vertex(i, j, 1)
            for tau in range(1, length):
                bags.append(base | {first, labels.cycle_vertex(i, j, tau), labels.cycle_vertex(i, j, tau + 1)})
            if i < kappa:
                bags.extend(walk(base, labels.path_pprime(i, j)))
        if j < kappa:
            for i in range(kappa, 0, -1):
                bags.extend(walk(crossing_bag(i, j), labels.path_p(i, j)))
                bags.append(crossing_bag(i, j))

    decomposition = PathDecomposition(tuple(frozenset(bag) for bag in bags))
    logger.info(f"build_path_decomposition: {len(bags)} bags, width {decomposition.width}")
    return decomposition


def validate_path_decomposition(graph, pd):
    """
    Checks that the bags cover every vertex and every edge, and that the bags
    holding any one vertex are consecutive. Violations come back as strings.
    """
    occurrences = {v: [] for v in range(graph.vertex_count)}
    violations = []
    for index, bag in enumerate(pd.bags):
        for v in bag:
            if v not in occurrences:
                violations.append(f"bag {index} holds unknown vertex {v}")
                continue
            occurrences[v].append(index)

    for v, seen in occurrences.items():
        if not seen:
            violations.append(f"vertex {v} is in no bag")
        elif seen[-1] - seen[0] + 1 != len(seen):
            violations.append(f"bags holding vertex {v} are not consecutive")

    for u, v, _ in graph.edges:
        if not set(occurrences[u]) & set(occurrences[v]):
            violations.append(f"edge {{{u},{v}}} is in no bag")

    report = PathDecompositionReport(valid=not violations, width=pd.width, violations=tuple(violations))
    logger.debug(f"validate_path_decomposition: width {report.width}, {len(violations)} violations")
    return report
