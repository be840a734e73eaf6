# structure/doubling.py

import logging
from dataclasses import replace
from fractions import Fraction

from core.conf import lab_setting
from kcenter.setcover import greedy_cover, minimum_cover

from .exceptions import BallTooLarge, InvalidScale
from .models import CoverReport

logger = logging.getLogger(__name__)

EXACT, GREEDY = 'exact', 'greedy'
DOUBLING_BOUND = 324


def doubling_case_bound(n, r):
    """ Balls of radius r needed for a 2r-ball of G_I, by the case r falls in. """
    r, n_sq = Fraction(r), n * n
    if r >= 12 * n_sq + 5:
        return 121
    if r >= 2 * n_sq + 1:
        return 324
    if r >= n_sq - 1:
        return 159
    return 3


def ball_cover_number(metric, center, r, mode=EXACT, cap=None):
    """
    How many radius-r balls (centered anywhere) cover B_center(2r).
    `exact` solves the set cover exactly and refuses balls above the cap;
    `greedy` reports the greedy count, an upper bound on the minimum.
    """
    r = Fraction(r)
    if r <= 0:
        raise InvalidScale(f"radius must be positive, got {r}")
    metric.check_point(center)
    ball = frozenset(metric.ball(center, 2 * r))

    if mode == EXACT:
        cap = cap or lab_setting('EXACT_BALL_CAP')
        if len(ball) > cap:
            raise BallTooLarge(len(ball), cap)

    candidates = {}
    for p in range(metric.point_count):
        covered = frozenset(metric.ball(p, r)) & ball
        if covered:
            candidates[p] = covered

    chosen = minimum_cover(ball, candidates) if mode == EXACT else greedy_cover(ball, candidates)
    return CoverReport(
        center=center,
        radius=r,
        ball_size=len(ball),
        cover_count=len(chosen),
        exact=mode == EXACT,
    )


def doubling_samples(inst):
    """
    One vertex of each kind (cycle, connector, hub, path interior) paired with
    radii on both sides of every case boundary, in a fixed order.
    """
    labels, n = inst.labels, inst.n
    n_sq = n * n
    vertices = [labels.cycle_vertex(1, 1, 1), labels.x(1, 1, 1), labels.y(1, 1)]
    if labels.kappa > 1:
        vertices.append(labels.path_p(1, 1)[1])
    radii = [
        Fraction(1, 2), Fraction(1), Fraction(n_sq - 1), Fraction(n_sq), Fraction(2 * n_sq),
        Fraction(2 * n_sq + 1), Fraction(6 * n_sq), Fraction(12 * n_sq + 4), Fraction(12 * n_sq + 5),
    ]
    return [(v, r) for v in vertices for r in radii if r > 0]


def check_doubling(inst, metric, samples=None, cap=None):
    """
    Cover count for each sample, exact where the ball fits under the cap and
    greedy otherwise; every report carries the case bound for its radius.
    """
    cap = cap or lab_setting('EXACT_BALL_CAP')
    reports = []
    for vertex, r in samples or doubling_samples(inst):
        try:
            report = ball_cover_number(metric, vertex, r, EXACT, cap=cap)
        except BallTooLarge:
            report = ball_cover_number(metric, vertex, r, GREEDY)
        reports.append(replace(report, case_bound=doubling_case_bound(inst.n, r)))
        logger.debug(
            f"check_doubling: v={vertex} r={r} |B|={report.ball_size} count={report.cover_count} "
            f"exact={report.exact}"
        )
    return reports
