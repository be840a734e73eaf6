# kcenter/nets.py

import logging
from dataclasses import dataclass
from fractions import Fraction

from .models import Net

logger = logging.getLogger(__name__)


def greedy_net(metric, delta):
    """ Scan ids ascending; keep a point iff it is more than delta from every kept point. """
    delta = Fraction(delta)
    if delta < 0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    points = []
    for u in range(metric.point_count):
        row = metric.dist[u]
        if all(row[p] > delta for p in points):
            points.append(u)
    return Net(tuple(points), delta)


def check_net(metric, net):
    """ Cover and packing violations of `net`, as readable strings (empty when valid). """
    violations = []
    for u in range(metric.point_count):
        row = metric.dist[u]
        if not any(row[p] <= net.delta for p in net.points):
            violations.append(f"cover: point {u} is farther than {net.delta} from the net")
    for index, p in enumerate(net.points):
        for q in net.points[index + 1:]:
            if metric.distance(p, q) <= net.delta:
                violations.append(f"packing: net points {p} and {q} are within {net.delta}")
    return violations


def aspect_ratio(metric, points):
    """ Largest over smallest positive pairwise distance; 1 for fewer than two distinct points. """
    distances = [
        metric.distance(p, q)
        for index, p in enumerate(points) for q in points[index + 1:]
        if metric.distance(p, q) > 0
    ]
    if not distances:
        return Fraction(1)
    return max(distances) / min(distances)


@dataclass(frozen=True)
class BallProfile:
    center: int
    net_points: int
    aspect_ratio: Fraction


def net_ball_profile(metric, net, centers, rho):
    """
    For each center c, how many net points fall in B_c(rho) and their aspect
    ratio. These are the per-ball quantities the net size bound in doubling
    metrics is stated in; they are reported, never asserted.
    """
    profile = []
    for center in centers:
        row = metric.dist[center]
        inside = [p for p in net.points if row[p] <= rho]
        profile.append(BallProfile(center, len(inside), aspect_ratio(metric, inside)))
    logger.debug(f"net_ball_profile: {len(profile)} balls, max {max((b.net_points for b in profile), default=0)} net points")
    return profile
