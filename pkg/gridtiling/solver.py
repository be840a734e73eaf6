# gridtiling/solver.py

import itertools
import logging

from .exceptions import IndexOutOfRange
from .models import GTAssignment

logger = logging.getLogger(__name__)


def check_gt_assignment(instance, assignment):
    """
    True iff the picks satisfy a <= a' going down every column and b <= b'
    going right along every row.
    """
    kappa = instance.kappa
    if len(assignment.picks) != kappa or any(len(row) != kappa for row in assignment.picks):
        raise IndexOutOfRange(f"assignment is not a {kappa}x{kappa} grid")

    chosen = {
        (i, j): instance.pair(i, j, assignment.tau(i, j))
        for i, j in instance.cells()
    }
    for i, j in instance.cells():
        a, b = chosen[(i, j)]
        if i < kappa and a > chosen[(i + 1, j)][0]:
            return False
        if j < kappa and b > chosen[(i, j + 1)][1]:
            return False
    return True


def solve_gt(instance):
    """
    Depth-first search over cells in (i, j) order, trying tau ascending and
    abandoning a partial grid as soon as a pick clashes with the filled cell
    above or to the left. Returns a GTAssignment or None (UNSAT).
    """
    kappa = instance.kappa
    order = instance.cells()
    chosen = {}
    picks = {}
    nodes = 0

    def fits(i, j, pair):
        a, b = pair
        if i > 1 and chosen[(i - 1, j)][0] > a:
            return False
        if j > 1 and chosen[(i, j - 1)][1] > b:
            return False
        return True

    def extend(position):
        nonlocal nodes
        if position == len(order):
            return True
        i, j = order[position]
        for tau, pair in enumerate(instance.cell(i, j), start=1):
            nodes += 1
            if not fits(i, j, pair):
                continue
            chosen[(i, j)], picks[(i, j)] = pair, tau
            if extend(position + 1):
                return True
        chosen.pop((i, j), None)
        picks.pop((i, j), None)
        return False

    if not extend(0):
        logger.info(f"solve_gt: UNSAT after {nodes} nodes (kappa={kappa}, n={instance.n})")
        return None

    assignment = GTAssignment(tuple(
        tuple(picks[(i, j)] for j in range(1, kappa + 1)) for i in range(1, kappa + 1)
    ))
    assert check_gt_assignment(instance, assignment), "solve_gt produced an invalid assignment"
    logger.info(f"solve_gt: SAT after {nodes} nodes (kappa={kappa}, n={instance.n})")
    return assignment


def solve_gt_bruteforce(instance):
    """ Every combination of picks, no pruning. Oracle for solve_gt. """
    kappa = instance.kappa
    ranges = [range(1, len(instance.cell(i, j)) + 1) for i, j in instance.cells()]
    for combo in itertools.product(*ranges):
        assignment = GTAssignment(tuple(
            tuple(combo[(i - 1) * kappa + (j - 1)] for j in range(1, kappa + 1))
            for i in range(1, kappa + 1)
        ))
        if check_gt_assignment(instance, assignment):
            return assignment
    return None
