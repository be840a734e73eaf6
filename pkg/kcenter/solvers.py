# kcenter/solvers.py

import itertools
import logging

from .exceptions import EmptyCenterSet
from .models import CenterSet, SolveOutcome, Status
from .setcover import cover_within_budget

logger = logging.getLogger(__name__)


# ============================
# COST
# ============================
def cost(metric, centers):
    """ max over points of the distance to the nearest center, exactly. """
    ids = list(centers)
    if not ids:
        raise EmptyCenterSet("cost of an empty center set is undefined")
    for center in ids:
        metric.check_point(center)
    rows = [metric.dist[center] for center in ids]
    return max(min(row[u] for row in rows) for u in range(metric.point_count))


def uncovered(metric, centers, radius):
    """ Points farther than `radius` from every center, ascending. """
    rows = [metric.dist[center] for center in centers]
    return [u for u in range(metric.point_count) if all(row[u] > radius for row in rows)]


# ============================
# EXACT SOLVERS
# ============================
def decide_cover(metric, k, radius):
    """
    A CenterSet of at most k centers with cost <= radius, or None when no such
    set exists. Candidates are all points; ties resolve by ascending id.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    universe = frozenset(range(metric.point_count))
    balls = {center: frozenset(metric.ball(center, radius)) for center in range(metric.point_count)}
    found = cover_within_budget(universe, balls, k)
    if found is None:
        logger.debug(f"decide_cover: UNSAT k={k} radius={radius}")
        return None
    centers = CenterSet.of(found)
    assert cost(metric, centers) <= radius
    return centers


def solve_exact(metric, k):
    """
    Binary search over candidate_radii (the optimum is always one of them)
    with decide_cover as the oracle.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    radii = metric.candidate_radii()
    low, high = 0, len(radii) - 1
    witness = decide_cover(metric, k, radii[high])
    while low < high:
        middle = (low + high) // 2
        attempt = decide_cover(metric, k, radii[middle])
        if attempt is None:
            low = middle + 1
        else:
            high, witness = middle, attempt

    optimum = cost(metric, witness)
    assert optimum == radii[high]
    logger.info(f"solve_exact: k={k} points={metric.point_count} rho*={optimum}")
    return SolveOutcome(Status.OPTIMAL, centers=witness, cost=optimum)


def solve_bruteforce(metric, k):
    """ Enumerates every min(k, |V|)-subset; the first subset of least cost wins. """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    size = min(k, metric.point_count)
    best, best_cost = None, None
    for subset in itertools.combinations(range(metric.point_count), size):
        value = cost(metric, subset)
        if best_cost is None or value < best_cost:
            best, best_cost = subset, value
    return SolveOutcome(Status.OPTIMAL, centers=CenterSet.of(best), cost=best_cost)


# ============================
# FARTHEST FIRST
# ============================
def farthest_first(metric, k):
    """
    Starts at point 0 and keeps adding the point farthest from the chosen set
    (ties to the smaller id). Stops early once every point is at distance 0
    from a chosen center.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    chosen = [0]
    nearest = list(metric.dist[0])
    while len(chosen) < k:
        farthest = max(range(metric.point_count), key=lambda u: (nearest[u], -u))
        if nearest[farthest] == 0:
            break
        chosen.append(farthest)
        row = metric.dist[farthest]
        nearest = [min(current, row[u]) for u, current in enumerate(nearest)]
    return CenterSet.of(chosen)
