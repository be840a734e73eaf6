# reduction/translate.py

import logging

from gridtiling.exceptions import IndexOutOfRange
from gridtiling.models import GTAssignment
from kcenter.models import CenterSet
from kcenter.solvers import uncovered

from .exceptions import (
    CycleCenterCountMismatch,
    MissingYCenter,
    NoMatchingElement,
    NonEquidistantCycleCenters,
    StrayCenter,
)
from .models import CYCLE, Y, GapWitness, quarter

logger = logging.getLogger(__name__)


def element_positions(n, tau):
    """ Cycle positions of the four centers that represent s_tau. """
    step = quarter(n)
    return tuple(tau + q * step for q in range(4))


# ============================
# FORWARD: ASSIGNMENT -> CENTERS
# ============================
def centers_from_assignment(inst, assignment):
    gt, labels = inst.source, inst.labels
    if len(assignment.picks) != gt.kappa or any(len(row) != gt.kappa for row in assignment.picks):
        raise IndexOutOfRange(f"assignment is not a {gt.kappa}x{gt.kappa} grid")

    chosen = set()
    for i, j in gt.cells():
        tau = assignment.tau(i, j)
        gt.pair(i, j, tau)
        chosen.update(labels.cycle_vertex(i, j, pos) for pos in element_positions(gt.n, tau))
        chosen.add(labels.y(i, j))

    centers = CenterSet.of(chosen)
    assert len(centers) == inst.k
    return centers


# ============================
# BACKWARD: CENTERS -> ASSIGNMENT
# ============================
def assignment_from_centers(inst, centers):
    """
    Reads the picks back out of a center set, rejecting any set that does not
    have the shape a cost-2n^2 solution is forced into: y_{i,j} in every
    gadget, then exactly four centers per cycle, then equal spacing 4n^2+1
    starting at some tau that indexes S_{i,j}, and nothing else.
    """
    gt, labels = inst.source, inst.labels
    ids = set(centers.centers if isinstance(centers, CenterSet) else centers)
    for vertex in ids:
        inst.graph.check_vertex(vertex)

    for i, j in gt.cells():
        if labels.y(i, j) not in ids:
            raise MissingYCenter(f"y_{i},{j} is not a center", cell=(i, j))

    on_cycle = {cell: [] for cell in gt.cells()}
    for vertex in ids:
        role = labels.role(vertex)
        if role.kind == CYCLE:
            on_cycle[role.cell].append(role.pos)

    for cell, positions in on_cycle.items():
        if len(positions) != 4:
            raise CycleCenterCountMismatch(
                f"cycle O_{cell[0]},{cell[1]} holds {len(positions)} centers, expected 4", cell=cell
            )

    picks = {}
    for cell, positions in on_cycle.items():
        positions = tuple(sorted(positions))
        tau = positions[0]
        if tau > quarter(gt.n) or positions != element_positions(gt.n, tau):
            raise NonEquidistantCycleCenters(
                f"centers on O_{cell[0]},{cell[1]} sit at {positions}, not 4n^2+1 apart", cell=cell
            )
        picks[cell] = tau

    for (i, j), tau in picks.items():
        if tau > len(gt.cell(i, j)):
            raise NoMatchingElement(
                f"centers on O_{i},{j} start at {tau} but S_{i},{j} has {len(gt.cell(i, j))} elements",
                cell=(i, j),
            )

    for vertex in sorted(ids):
        role = labels.role(vertex)
        if role.kind not in (CYCLE, Y):
            raise StrayCenter(f"center {role.name} is neither a cycle vertex nor a hub", cell=role.cell)

    return GTAssignment(tuple(
        tuple(picks[(i, j)] for j in range(1, gt.kappa + 1)) for i in range(1, gt.kappa + 1)
    ))


# ============================
# GAP WITNESSES
# ============================
def gap_witnesses(inst, metric, assignment):
    """
    One witness per neighbouring pair whose picks break the order. Each
    witness lists the interior path vertices left uncovered at radius 2n^2 by
    the centers built from `assignment`.
    """
    gt, labels = inst.source, inst.labels
    centers = centers_from_assignment(inst, assignment)
    loose = set(uncovered(metric, centers, inst.threshold))
    chosen_on = {
        (i, j): [labels.cycle_vertex(i, j, pos) for pos in element_positions(gt.n, assignment.tau(i, j))]
        for i, j in gt.cells()
    }

    witnesses = []
    for i, j in gt.cells():
        a, b = gt.pair(i, j, assignment.tau(i, j))
        if j < gt.kappa and b > gt.pair(i, j + 1, assignment.tau(i, j + 1))[1]:
            witnesses.append(_witness(
                metric, 'row', (i, j), (i, j + 1), chosen_on, labels.path_p(i, j), loose
            ))
        if i < gt.kappa and a > gt.pair(i + 1, j, assignment.tau(i + 1, j))[0]:
            witnesses.append(_witness(
                metric, 'column', (i, j), (i + 1, j), chosen_on, labels.path_pprime(i, j), loose
            ))

    logger.debug(f"gap_witnesses: {len(witnesses)} broken neighbour pairs")
    return witnesses


def _witness(metric, direction, cell, neighbour, chosen_on, path, loose):
    distance = min(
        metric.distance(u, v) for u in chosen_on[cell] for v in chosen_on[neighbour]
    )
    interior = path[1:-1]
    return GapWitness(
        direction=direction,
        cell=cell,
        neighbour=neighbour,
        distance=distance,
        uncovered=tuple(v for v in interior if v in loose),
    )
