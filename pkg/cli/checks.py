# cli/checks.py
#
# Check runners shared by `verify` and `report`. Each returns CheckResult
# objects that print as `CHECK <name> PASS|FAIL <details>`.

import logging
from dataclasses import dataclass

from core.paths import metric_of
from core.rationals import format_rational
from gridtiling.solver import check_gt_assignment, solve_gt
from kcenter.solvers import cost, decide_cover
from reduction.builder import build_reduction
from reduction.translate import assignment_from_centers, centers_from_assignment
from structure.claims import check_gadget_distances, check_neighbourhood_radii
from structure.doubling import DOUBLING_BOUND, check_doubling
from structure.hubs import build_hub_set, validate_hub_set
from structure.pathdecomposition import build_path_decomposition, validate_path_decomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ''

    def line(self):
        verdict = 'PASS' if self.passed else 'FAIL'
        return f"CHECK {self.name} {verdict} {self.details}".rstrip()


def flag(value):
    return 'true' if value else 'false'


# ============================
# EQUIVALENCE
# ============================
def equivalence_verdicts(gt, inst=None, metric=None):
    """ (GT verdict, k-Center verdict at 5 kappa^2 centers and radius 2n^2). """
    inst = inst or build_reduction(gt)
    metric = metric or metric_of(inst.graph)
    gt_sat = solve_gt(gt) is not None
    kcenter_sat = decide_cover(metric, inst.k, inst.threshold) is not None
    logger.info(f"equivalence: kappa={gt.kappa} n={gt.n} gt={gt_sat} kcenter={kcenter_sat}")
    return gt_sat, kcenter_sat


def check_equivalence(gt, name='equivalence', inst=None, metric=None):
    gt_sat, kcenter_sat = equivalence_verdicts(gt, inst, metric)
    if gt_sat == kcenter_sat:
        return CheckResult(name, True, f"sat={flag(gt_sat)}")
    return CheckResult(name, False, f"gt={flag(gt_sat)} kcenter={flag(kcenter_sat)}")


def check_forward(inst, metric, name='forward'):
    """ The centers of a GT solution cost at most 2n^2 and translate back to it. """
    assignment = solve_gt(inst.source)
    if assignment is None:
        return CheckResult(name, True, "skipped=unsat")
    centers = centers_from_assignment(inst, assignment)
    value = cost(metric, centers)
    recovered = assignment_from_centers(inst, centers)
    passed = value <= inst.threshold and recovered == assignment and check_gt_assignment(inst.source, recovered)
    return CheckResult(
        name, passed, f"cost={format_rational(value)} threshold={format_rational(inst.threshold)}"
    )


# ============================
# STRUCTURE
# ============================
def check_pathdec(inst, name='pathdec'):
    pd = build_path_decomposition(inst)
    report = validate_path_decomposition(inst.graph, pd)
    limit = inst.kappa + 6
    passed = report.valid and report.width <= limit
    details = f"width={report.width} limit={limit} bags={len(pd.bags)}"
    if report.violations:
        details += f" first={report.violations[0]!r}"
    return CheckResult(name, passed, details)


def check_hubs(inst, r, c=None, name='hubs'):
    hub_set = build_hub_set(inst, r, c)
    report = validate_hub_set(inst.graph, r, hub_set.hubs, hub_set.constant_c)
    passed = not report.violations
    if r > 8 * inst.n ** 2 + 2:
        passed = passed and report.max_hubs_in_ball <= 5 * inst.kappa ** 2
    return CheckResult(name, passed, (
        f"r={format_rational(hub_set.scale)} c={format_rational(hub_set.constant_c)} "
        f"regime={hub_set.regime} hubs={len(hub_set)} violations={len(report.violations)} "
        f"max_ball={report.max_hubs_in_ball}"
    ))


def check_doubling_samples(inst, metric, name='doubling', cap=None):
    results = []
    for report in check_doubling(inst, metric, cap=cap):
        results.append(CheckResult(name, report.cover_count <= DOUBLING_BOUND, (
            f"v={report.center} r={format_rational(report.radius)} ball={report.ball_size} "
            f"count={report.cover_count} case_bound={report.case_bound} "
            f"mode={'exact' if report.exact else 'greedy'}"
        )))
    return results


def check_claims(inst, metric):
    distances = check_gadget_distances(inst, metric)
    x_violations = [v for v in distances.violations if v.startswith('dist')]
    y_violations = [v for v in distances.violations if v.startswith('y_')]
    results = [
        CheckResult('claims-x', not x_violations, (
            f"min={format_rational(distances.x_min)} max={format_rational(distances.x_max)} "
            f"bounds=[{7 * inst.n ** 2 - 1},{8 * inst.n ** 2 + 2}]"
        )),
        CheckResult('claims-y', not y_violations, (
            f"min={format_rational(distances.y_min)} threshold={format_rational(inst.threshold)}"
        )),
    ]

    radii_violations, checked = [], 0
    for i, j in inst.labels.cells():
        for a in range(0, 2):
            report = check_neighbourhood_radii(inst, metric, i, j, a)
            checked += 1
            radii_violations.extend(report.violations)
    results.append(CheckResult('claims-radii', not radii_violations, f"checked={checked} violations={len(radii_violations)}"))
    return results
