# structure/hubs.py

import logging
import math
from fractions import Fraction

from core.conf import lab_setting
from core.parallel import map_ordered
from core.paths import shortest_paths, shortest_paths_avoiding

from .exceptions import InvalidScale
from .models import HubReport, HubSet

logger = logging.getLogger(__name__)

LARGE, CYCLE_STEPS, PATH_STEPS = 'connectors', 'cycle-steps', 'path-steps'


def path_step(n, r):
    """ Index gap between consecutive path hubs at scale r < 1; never below 1. """
    return max(1, math.floor(r * (n + 2)))


def build_hub_set(inst, r, c=None):
    """
    H_r for G_I at scale r:
      r > 8n^2+2        the connector set X (every y and x^q),
      1 <= r <= 8n^2+2  X plus every floor(r)-th cycle vertex from v_1,
      r < 1             every gadget vertex plus every path vertex whose
                        index is a multiple of floor(r(n+2)).
    """
    r = Fraction(r)
    c = Fraction(lab_setting('HUB_C') if c is None else c)
    if r <= 0:
        raise InvalidScale(f"scale r must be positive, got {r}")
    if c < 4:
        raise InvalidScale(f"constant c must be at least 4, got {c}")

    labels = inst.labels
    n = labels.n
    hubs = set(labels.connectors())

    if r > 8 * n * n + 2:
        regime = LARGE
    elif r >= 1:
        regime = CYCLE_STEPS
        step = math.floor(r)
        for i, j in labels.cells():
            hubs.update(labels.cycle_vertex(i, j, pos) for pos in range(1, labels.cycle_length + 1, step))
    else:
        regime = PATH_STEPS
        step = path_step(n, r)
        for i, j in labels.cells():
            hubs |= labels.gadget_vertices(i, j)
        paths = [labels.path_p(i, j) for i, j in labels.cells() if j < labels.kappa]
        paths += [labels.path_pprime(i, j) for i, j in labels.cells() if i < labels.kappa]
        for path in paths:
            hubs.update(path[t] for t in range(0, len(path), step))

    logger.info(f"build_hub_set: r={r} regime={regime} |H|={len(hubs)}")
    return HubSet(scale=r, constant_c=c, hubs=frozenset(hubs), regime=regime)


def validate_hub_set(graph, r, hubs, c=None):
    """
    Hub-deletion test: a pair u, v of non-hubs with dist(u, v) > r is a
    violation when deleting every hub leaves dist(u, v) unchanged, i.e. some
    shortest path between them avoids H. Also finds the c*r ball holding the
    most hubs.
    """
    r = Fraction(r)
    c = Fraction(lab_setting('HUB_C') if c is None else c)
    hubs = frozenset(hubs)
    reach = c * r

    def audit(u):
        dist = shortest_paths(graph, u)
        in_ball = sum(1 for h in hubs if dist[h] <= reach)
        if u in hubs:
            return in_ball, []
        avoiding = shortest_paths_avoiding(graph, u, hubs)
        broken = [
            (u, v) for v in range(u + 1, graph.vertex_count)
            if v not in hubs and dist[v] > r and avoiding[v] == dist[v]
        ]
        return in_ball, broken

    results = map_ordered(audit, range(graph.vertex_count))
    violations = tuple(pair for _, broken in results for pair in broken)
    counts = [in_ball for in_ball, _ in results]
    densest = max(range(len(counts)), key=lambda v: (counts[v], -v))
    logger.debug(f"validate_hub_set: r={r} |H|={len(hubs)} violations={len(violations)} max ball={counts[densest]}")
    return HubReport(violations=violations, max_hubs_in_ball=counts[densest], densest_center=densest)
