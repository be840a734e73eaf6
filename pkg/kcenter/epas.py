# kcenter/epas.py

import itertools
import logging
from fractions import Fraction

from core.conf import lab_setting

from .exceptions import BudgetExceeded
from .models import CenterSet, SolveOutcome, Status
from .nets import greedy_net, net_ball_profile
from .solvers import cost, farthest_first

logger = logging.getLogger(__name__)


def epas_doubling(metric, k, epsilon, net_cap=None, nets=None):
    """
    (1+epsilon)-approximation for k-Center in doubling metrics.

    Candidate radii rho are tried ascending. For each, an (epsilon*rho/2)-net Y
    is built greedily and the min(k, |Y|)-subsets of Y are enumerated in
    lexicographic order; the first subset of cost <= (1+epsilon)*rho is
    returned. Radii below half the farthest-first cost cannot reach the
    optimum and are skipped.

    When `nets` is a list, every net built along the way is appended to it.
    """
    epsilon = Fraction(epsilon)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    net_cap = net_cap or lab_setting('EPAS_NET_CAP')

    seeds = farthest_first(metric, k)
    lower = cost(metric, seeds) / 2
    if lower == 0:
        # rho = 0 is feasible exactly when farthest-first already reaches cost 0
        return SolveOutcome(Status.SAT, centers=seeds, cost=Fraction(0))

    tried = 0
    for rho in metric.candidate_radii():
        if rho < lower:
            continue
        tried += 1
        net = greedy_net(metric, epsilon * rho / 2)
        if nets is not None:
            nets.append(net)
        if len(net) > net_cap:
            raise BudgetExceeded(len(net), net_cap, rho)

        limit = (1 + epsilon) * rho
        for subset in itertools.combinations(net.points, min(k, len(net))):
            value = cost(metric, subset)
            if value <= limit:
                profile = net_ball_profile(metric, net, subset, rho)
                logger.info(
                    f"epas_doubling: rho={rho} |Y|={len(net)} cost={value} after {tried} radii, "
                    f"ball net points max={max(b.net_points for b in profile)} "
                    f"aspect max={max(b.aspect_ratio for b in profile)}"
                )
                return SolveOutcome(Status.SAT, centers=CenterSet.of(subset), cost=value)
        logger.debug(f"epas_doubling: rho={rho} rejected, |Y|={len(net)}")

    raise AssertionError("epas_doubling: no radius accepted, the diameter always should be")
